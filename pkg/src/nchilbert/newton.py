"""Power-series roots of univariate polynomials over Q(t).

The quadratics arising from Euler-characteristic systems routinely have a
double root at t = 0 (both branches start at 1), so plain Newton from the
constant seed stalls.  We lift coefficient by coefficient instead, tracking
the valuation of the derivative: with h agreeing with a root up to t^k and
v = val(q'(h)), the next coefficient is read off at t^(k+v).  A seed prefix
long enough to separate the branches makes the lift unique.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import RootMismatchError
from .multipoly import RatPoly
from .ratfunc import TruncatedSeries


def reciprocal_poly(p, var="H"):
    """q(H) = H^deg(p) * p(1/H): coefficient reversal."""
    if not p:
        raise RootMismatchError("reciprocal of the zero polynomial")
    return RatPoly(var, list(reversed(p.coeffs)))


def _as_prefix(seed):
    if isinstance(seed, TruncatedSeries):
        return list(seed.coeffs)
    return [Fraction(c) for c in seed]


def newton_series(q, seed, d):
    """The unique power-series root of q agreeing with the seed prefix, to
    degree d.  Falls back to the squarefree part before giving up."""
    try:
        return _lift(q, seed, d)
    except RootMismatchError:
        sf = q.squarefree_part()
        if sf.degree == q.degree:
            raise
        return _lift(sf, seed, d)


def _lift(q, seed, d):
    # monic coefficients may carry poles at t = 0; clearing fixes the roots
    q = q.cleared()
    prefix = _as_prefix(seed)[: d + 1]
    if not prefix:
        raise RootMismatchError("empty seed")
    if q.degree < 1:
        raise RootMismatchError("polynomial has no root")
    if q.degree == 1:
        # h = -c0/c1 exactly; the seed only selects/confirms
        h = ((-1) * q[0] / q[1]).series(d)
        for i, c in enumerate(prefix[: d + 1]):
            if h[i] != c:
                raise RootMismatchError("seed does not match the linear root")
        return h

    qd = q.derivative()
    # derivative valuation at the seed sets how far ahead we must evaluate
    probe = TruncatedSeries(prefix + [0] * max(0, d + 1 - len(prefix)), d)
    vd = qd.eval_series(probe, d).valuation()
    if vd is None:
        raise RootMismatchError("derivative vanishes identically at the seed")
    big = d + vd + 2

    coeffs = prefix + [Fraction(0)] * (big + 1 - len(prefix))
    start = len(prefix)
    for k in range(start, d + 1):
        h = TruncatedSeries(coeffs, big)
        qv = q.eval_series(h, big)
        dv = qd.eval_series(h, big)
        v = dv.valuation()
        if v is None or k + v > big:
            raise RootMismatchError("derivative degenerates during lifting")
        for i in range(k + v):
            if i <= big and qv[i] != 0:
                raise RootMismatchError(
                    "seed is not a root prefix (residual at degree %d)" % i
                )
        coeffs[k] = -qv[k + v] / dv[v]
    out = TruncatedSeries(coeffs[: d + 1], d)
    res = q.eval_series(out, d)
    if any(res[i] != 0 for i in range(d + 1)):
        raise RootMismatchError("lifted series fails to annihilate q")
    return out
