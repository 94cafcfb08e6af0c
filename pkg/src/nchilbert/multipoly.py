"""Multivariate polynomials over Q(t), univariate polynomials over Q(t), and
Gaussian elimination over the rational function field."""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError, SingularSystemError
from .ratfunc import QPoly, RationalFunction, RF_ONE, RF_ZERO, format_qpoly


class MultiPolynomial:
    """Terms map exponent vectors (one slot per variable) to Q(t) coefficients."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        self.variables = tuple(variables)
        clean = {}
        for exps, c in (terms or {}).items():
            if not isinstance(c, RationalFunction):
                c = RationalFunction(c)
            if len(exps) != len(self.variables):
                raise InputError("exponent vector length mismatch")
            if c:
                clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def zero(cls, variables):
        return cls(variables)

    @classmethod
    def const(cls, variables, c):
        exps = (0,) * len(variables)
        return cls(variables, {exps: RationalFunction(c) if not isinstance(c, RationalFunction) else c})

    @classmethod
    def var(cls, variables, name, coeff=None):
        exps = [0] * len(variables)
        exps[list(variables).index(name)] = 1
        return cls(variables, {tuple(exps): coeff if coeff is not None else RF_ONE})

    @classmethod
    def monomial(cls, variables, exps, coeff):
        return cls(variables, {tuple(exps): coeff})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, MultiPolynomial)
            and self.variables == other.variables
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def _check(self, other):
        if self.variables != other.variables:
            raise InputError("polynomials over different variable lists")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, QPoly, RationalFunction)):
            other = MultiPolynomial.const(self.variables, other)
        self._check(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps, RF_ZERO) + c
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        return MultiPolynomial(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPolynomial(
            self.variables, {e: -c for e, c in self.terms.items()}
        )

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, QPoly, RationalFunction)):
            other = MultiPolynomial.const(self.variables, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QPoly, RationalFunction)):
            if not isinstance(other, RationalFunction):
                other = RationalFunction(other)
            return MultiPolynomial(
                self.variables, {e: c * other for e, c in self.terms.items()}
            )
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, RF_ZERO) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return MultiPolynomial(self.variables, terms)

    __rmul__ = __mul__

    def scale(self, c):
        return self * c

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name):
        i = self.variables.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def involved(self):
        out = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    out.add(self.variables[i])
        return out

    def restrict_univariate(self, name):
        """View as a RatPoly in one variable; fails if others occur."""
        i = self.variables.index(name)
        coeffs = {}
        for e, c in self.terms.items():
            if any(k for j, k in enumerate(e) if j != i):
                raise InputError("polynomial is not univariate in %s" % name)
            coeffs[e[i]] = c
        deg = max(coeffs, default=0)
        return RatPoly(name, [coeffs.get(k, RF_ZERO) for k in range(deg + 1)])

    def eval_series(self, assignment, d):
        """Substitute a truncated series for every variable."""
        from .ratfunc import TruncatedSeries

        out = TruncatedSeries([0] * (d + 1), d)
        for e, c in self.terms.items():
            term = c.series(d)
            for i, k in enumerate(e):
                for _ in range(k):
                    term = term * assignment[self.variables[i]]
            out = out + term
        return out

    def rename(self, mapping, variables):
        """New variable list; exponents moved through the name mapping."""
        idx = {name: i for i, name in enumerate(variables)}
        terms = {}
        for e, c in self.terms.items():
            new = [0] * len(variables)
            for i, k in enumerate(e):
                if k:
                    new[idx[mapping.get(self.variables[i], self.variables[i])]] += k
            key = tuple(new)
            s = terms.get(key, RF_ZERO) + c
            if s:
                terms[key] = s
            else:
                terms.pop(key, None)
        return MultiPolynomial(variables, terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.terms[e]
            mono = "*".join(
                "%s^%d" % (v, k) if k > 1 else v
                for v, k in zip(self.variables, e)
                if k
            )
            cs = "(%r)" % c
            parts.append(cs + ("*" + mono if mono else ""))
        return " + ".join(parts)


class RatPoly:
    """Univariate polynomial in a named unknown with Q(t) coefficients."""

    __slots__ = ("var", "coeffs")

    def __init__(self, var, coeffs):
        coeffs = [
            c if isinstance(c, RationalFunction) else RationalFunction(c)
            for c in coeffs
        ]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.var = var
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, RatPoly)
            and self.var == other.var
            and self.coeffs == other.coeffs
        )

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else RF_ZERO

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(self.var, [self[i] + other[i] for i in range(n)])

    def __neg__(self):
        return RatPoly(self.var, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QPoly, RationalFunction)):
            return RatPoly(self.var, [c * other for c in self.coeffs])
        if not self or not other:
            return RatPoly(self.var, [])
        out = [RF_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return RatPoly(self.var, out)

    __rmul__ = __mul__

    def divmod(self, other):
        if not other:
            raise ZeroDivisionError
        rem = list(self.coeffs)
        q = [RF_ZERO] * max(len(rem) - len(other.coeffs) + 1, 0)
        dn = len(other.coeffs)
        while len(rem) >= dn:
            c = rem[-1] / other.coeffs[-1]
            k = len(rem) - dn
            q[k] = c
            for i, b in enumerate(other.coeffs):
                rem[k + i] = rem[k + i] - c * b
            while rem and not rem[-1]:
                rem.pop()
        return RatPoly(self.var, q), RatPoly(self.var, rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self):
        if not self:
            return self
        inv = self.coeffs[-1].inverse()
        return RatPoly(self.var, [c * inv for c in self.coeffs])

    def gcd(self, other):
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def derivative(self):
        return RatPoly(
            self.var, [i * self.coeffs[i] for i in range(1, len(self.coeffs))]
        )

    def eval_rational(self, x):
        acc = RF_ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_series(self, h, d):
        """Evaluate at a truncated series argument (coefficients expanded)."""
        from .ratfunc import TruncatedSeries

        acc = TruncatedSeries([0] * (d + 1), d)
        for c in reversed(self.coeffs):
            acc = acc * h + c.series(d)
        return acc

    def squarefree_part(self):
        if self.degree <= 1:
            return self
        g = self.gcd(self.derivative())
        if g.degree <= 0:
            return self
        return (self // g).monic()

    def cleared(self):
        """Scale by an element of Q(t) so coefficients are primitive Z[t]
        polynomials with no common polynomial factor, lex-leading one positive."""
        if not self:
            return self
        den = QPoly.const(1)
        for c in self.coeffs:
            den = den * (c.den // c.den.gcd(den))
        polys = [(c * RationalFunction(den)).num for c in self.coeffs]
        g = QPoly()
        for p in polys:
            g = g.gcd(p) if g else p
        if g and g.degree >= 0 and g != QPoly.const(1):
            polys = [p // g for p in polys]
        # scalar content
        from math import gcd as int_gcd

        denom = 1
        for p in polys:
            for c in p.coeffs:
                denom = denom * c.denominator // int_gcd(denom, c.denominator)
        content = 0
        for p in polys:
            for c in p.coeffs:
                content = int_gcd(content, abs(int(c * denom)))
        if content == 0:
            content = 1
        lead = polys[-1]
        if lead.coeffs[-1] < 0:
            content = -content
        factor = Fraction(denom, content)
        return RatPoly(
            self.var, [RationalFunction(p * factor) for p in polys]
        )

    def proportional_to(self, other):
        """Equal up to a nonzero scalar in Q(t)."""
        if self.degree != other.degree:
            return False
        if not self:
            return not other
        ratio = None
        for a, b in zip(self.coeffs, other.coeffs):
            if bool(a) != bool(b):
                return False
            if a:
                r = a / b
                if ratio is None:
                    ratio = r
                elif r != ratio:
                    return False
        return True

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self[k]
            if not c:
                continue
            if c.is_polynomial():
                cs = format_qpoly(c.num)
                if ("+" in cs[1:]) or ("-" in cs[1:]) or " " in cs:
                    cs = "(%s)" % cs
            else:
                cs = "(%r)" % c
            if k == 0:
                parts.append(cs)
            else:
                vp = self.var if k == 1 else "%s^%d" % (self.var, k)
                parts.append(vp if cs == "1" else "%s*%s" % (cs, vp))
        return " + ".join(parts)


def gaussian_solve(matrix, rhs):
    """Solve M x = b exactly over Q(t); raises on singular systems."""
    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise InputError("gaussian_solve needs a square system")
    m = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            raise SingularSystemError("singular system over Q(t)")
        m[col], m[pivot] = m[pivot], m[col]
        inv = m[col][col].inverse()
        m[col] = [c * inv for c in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]
