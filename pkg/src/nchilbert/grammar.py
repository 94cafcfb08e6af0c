"""Context-free grammars: validation, bounded enumeration, derivation counting,
bounded unambiguity certificates and membership tests.

Symbols on production right-hand sides are ints: ``0..n-1`` are terminal
positions, ``n+j`` is variable ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DivergenceError, InputError, ResourceCapError
from .words import EMPTY, Alphabet, TruncatedLanguage, WORD_KEY

DEFAULT_WORD_CAP = 10**7


class CFGrammar:
    """Productions over disjoint terminal and variable alphabets."""

    def __init__(self, terminals, variables, start, productions):
        if set(terminals.symbols) & set(variables.symbols):
            raise InputError("terminals and variables must be disjoint")
        if not 0 <= start < variables.size:
            raise InputError("start variable out of range")
        prods = []
        seen = set()
        n = terminals.size
        for var, rhs in productions:
            rhs = tuple(rhs)
            if not 0 <= var < variables.size:
                raise InputError("production for unknown variable")
            if any(not 0 <= s < n + variables.size for s in rhs):
                raise InputError("bad symbol in production body")
            if (var, rhs) in seen:
                raise InputError("duplicate production")
            seen.add((var, rhs))
            prods.append((var, rhs))
        have = {v for v, _ in prods}
        missing = set(range(variables.size)) - have
        if missing:
            raise InputError(
                "variables without productions: %s"
                % " ".join(variables.symbols[j] for j in sorted(missing))
            )
        self.terminals = terminals
        self.variables = variables
        self.start = start
        self.productions = tuple(prods)

    @property
    def n(self):
        return self.terminals.size

    def is_var(self, sym):
        return sym >= self.n

    def var_of(self, sym):
        return sym - self.n

    def sym_text(self, sym):
        if self.is_var(sym):
            return self.variables.symbols[sym - self.n]
        return self.terminals.symbols[sym]

    def rhs_text(self, rhs):
        if not rhs:
            return "eps"
        return " ".join(self.sym_text(s) for s in rhs)

    def by_variable(self):
        out = {j: [] for j in range(self.variables.size)}
        for var, rhs in self.productions:
            out[var].append(rhs)
        return out

    def __repr__(self):
        return "CFGrammar(start=%s, %d productions)" % (
            self.variables.symbols[self.start],
            len(self.productions),
        )


@dataclass(frozen=True)
class GrammarReport:
    productive: frozenset
    reachable: frozenset
    nullable: frozenset
    has_unit_or_epsilon_cycle: bool
    is_right_linear: bool


def _nullable(g):
    nullable = set()
    changed = True
    while changed:
        changed = False
        for var, rhs in g.productions:
            if var in nullable:
                continue
            if all(g.is_var(s) and g.var_of(s) in nullable for s in rhs):
                nullable.add(var)
                changed = True
    return nullable


def _cycle_graph(g, nullable):
    """Edges A -> B where A => alpha rewrites back to bare B erasing the rest."""
    edges = {j: set() for j in range(g.variables.size)}
    for var, rhs in g.productions:
        if any(not g.is_var(s) for s in rhs):
            continue
        vs = [g.var_of(s) for s in rhs]
        for i, b in enumerate(vs):
            rest = vs[:i] + vs[i + 1 :]
            if all(v in nullable for v in rest):
                edges[var].add(b)
    return edges

def _has_cycle(edges, restrict=None):
    nodes = set(edges) if restrict is None else set(restrict)
    color = {}

    def dfs(u):
        color[u] = 1
        for v in edges.get(u, ()):
            if v not in nodes:
                continue
            c = color.get(v)
            if c == 1:
                return True
            if c is None and dfs(v):
                return True
        color[u] = 2
        return False

    return any(color.get(u) is None and dfs(u) for u in nodes)


def validate(g):
    """Fixpoint computation of productive/reachable/nullable sets plus flags."""
    nullable = _nullable(g)

    productive = set()
    changed = True
    while changed:
        changed = False
        for var, rhs in g.productions:
            if var in productive:
                continue
            if all(not g.is_var(s) or g.var_of(s) in productive for s in rhs):
                productive.add(var)
                changed = True

    reachable = {g.start}
    stack = [g.start]
    by_var = g.by_variable()
    while stack:
        v = stack.pop()
        for rhs in by_var[v]:
            for s in rhs:
                if g.is_var(s) and g.var_of(s) not in reachable:
                    reachable.add(g.var_of(s))
                    stack.append(g.var_of(s))

    right_linear = all(
        rhs == ()
        or (len(rhs) == 2 and not g.is_var(rhs[0]) and g.is_var(rhs[1]))
        for _, rhs in g.productions
    )

    cyclic = _has_cycle(_cycle_graph(g, nullable))
    return GrammarReport(
        frozenset(productive),
        frozenset(reachable),
        frozenset(nullable),
        cyclic,
        right_linear,
    )


def _check_counting_safe(g):
    report = validate(g)
    live = report.productive & report.reachable
    if _has_cycle(_cycle_graph(g, report.nullable), restrict=live):
        raise DivergenceError("unit/epsilon cycle among live variables")
    return report


def enumerate_words(g, d, cap=DEFAULT_WORD_CAP):
    """Distinct generated words of length <= d (bottom-up fixpoint)."""
    _check_counting_safe(g)
    by_var = g.by_variable()
    sets = {j: set() for j in by_var}
    changed = True
    while changed:
        changed = False
        for var, rhss in by_var.items():
            for rhs in rhss:
                acc = {EMPTY}
                for s in rhs:
                    if not g.is_var(s):
                        acc = {w + bytes([s]) for w in acc if len(w) < d}
                    else:
                        sub = sets[g.var_of(s)]
                        acc = {
                            w + u
                            for w in acc
                            for u in sub
                            if len(w) + len(u) <= d
                        }
                    if not acc:
                        break
                new = acc - sets[var]
                if new:
                    sets[var] |= new
                    changed = True
                    if sum(len(s) for s in sets.values()) > cap:
                        raise ResourceCapError("enumeration exceeded word cap")
    return TruncatedLanguage(g.terminals, d, frozenset(sets[g.start]))


def _convolve(a, b, d):
    out = [0] * (d + 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y and i + j <= d:
                    out[i + j] += x * y
    return out


def count_derivations(g, d):
    """c[A][k] = number of leftmost derivations (= parse trees) from A of words
    of length k, for k <= d."""
    _check_counting_safe(g)
    by_var = g.by_variable()
    m = g.variables.size
    c = {j: [0] * (d + 1) for j in range(m)}
    term_vec = [0, 1] + [0] * (d - 1) if d >= 1 else [0]
    for _ in range(m * (d + 1) + 2):
        new = {}
        for var, rhss in by_var.items():
            total = [0] * (d + 1)
            for rhs in rhss:
                acc = [1] + [0] * d
                for s in rhs:
                    vec = term_vec if not g.is_var(s) else c[g.var_of(s)]
                    acc = _convolve(acc, vec, d)
                total = [x + y for x, y in zip(total, acc)]
            new[var] = total
        if new == c:
            return c
        c = new
    raise DivergenceError("derivation counting did not stabilize")


def _parse_counts(g, d):
    """word -> number of parse trees, per variable, words of length <= d."""
    by_var = g.by_variable()
    counts = {j: {} for j in by_var}
    changed = True
    while changed:
        changed = False
        for var, rhss in by_var.items():
            total = {}
            for rhs in rhss:
                acc = {EMPTY: 1}
                for s in rhs:
                    if not g.is_var(s):
                        acc = {
                            w + bytes([s]): c for w, c in acc.items() if len(w) < d
                        }
                    else:
                        sub = counts[g.var_of(s)]
                        nxt = {}
                        for w, c in acc.items():
                            for u, cu in sub.items():
                                if len(w) + len(u) <= d:
                                    key = w + u
                                    nxt[key] = nxt.get(key, 0) + c * cu
                        acc = nxt
                    if not acc:
                        break
                for w, c in acc.items():
                    total[w] = total.get(w, 0) + c
            if total != counts[var]:
                counts[var] = total
                changed = True
    return counts


def certify_unambiguous(g, d):
    """True iff derivation counts match distinct-word counts for all k <= d.

    On failure also returns a minimal-length word with >= 2 parse trees.
    """
    derivations = count_derivations(g, d)[g.start]
    lang = enumerate_words(g, d)
    per_len = lang.counts()
    if derivations == per_len:
        return True, None
    parse_counts = _parse_counts(g, d)[g.start]
    bad = [w for w, c in parse_counts.items() if c >= 2]
    if not bad:
        raise DivergenceError("count mismatch without a multi-parse word")
    return False, min(bad, key=WORD_KEY)


def _to_cnf(g):
    """Binary/terminal normal form (eps and unit productions removed)."""
    nullable = _nullable(g)
    prods = set()
    for var, rhs in g.productions:
        null_pos = [
            i for i, s in enumerate(rhs) if g.is_var(s) and g.var_of(s) in nullable
        ]
        for mask in range(1 << len(null_pos)):
            drop = {null_pos[i] for i in range(len(null_pos)) if mask >> i & 1}
            new = tuple(s for i, s in enumerate(rhs) if i not in drop)
            if new:
                prods.add((var, new))

    # unit closure over single-variable bodies
    unit = {j: {j} for j in range(g.variables.size)}
    changed = True
    while changed:
        changed = False
        for var, rhs in prods:
            if len(rhs) == 1 and g.is_var(rhs[0]):
                tgt = g.var_of(rhs[0])
                for a in list(unit):
                    if var in unit[a] and not unit[a] >= unit[tgt]:
                        unit[a] |= unit[tgt]
                        changed = True
    base = [(var, rhs) for var, rhs in prods if not (len(rhs) == 1 and g.is_var(rhs[0]))]
    expanded = set()
    for a, members in unit.items():
        for var, rhs in base:
            if var in members:
                expanded.add((a, rhs))

    # binarize; fresh nonterminals get negative ids
    fresh = {}
    binary = []
    unary = []

    def fresh_for(seq):
        if seq not in fresh:
            fresh[seq] = -(len(fresh) + 1)
        return fresh[seq]

    def var_for_terminal(t):
        return fresh_for(("T", t))

    todo = []
    for var, rhs in expanded:
        if len(rhs) == 1:
            unary.append((var, rhs[0]))  # rhs[0] is a terminal here
        else:
            todo.append((var, rhs))
    seen_fresh = set()
    while todo:
        var, rhs = todo.pop()
        parts = [
            g.var_of(s) if g.is_var(s) else var_for_terminal(s) for s in rhs
        ]
        for t, s in zip(parts, rhs):
            if not g.is_var(s) and t not in seen_fresh:
                seen_fresh.add(t)
                unary.append((t, s))
        while len(parts) > 2:
            tail = tuple(parts[-2:])
            tv = fresh_for(("B", tail))
            if tv not in seen_fresh:
                seen_fresh.add(tv)
                binary.append((tv, tail[0], tail[1]))
            parts = parts[:-2] + [tv]
        binary.append((var, parts[0], parts[1]))
    return unary, binary, g.start in nullable


def cyk_member(g, w):
    """True iff w is generated by g (CYK on an internal normal form)."""
    if w == EMPTY:
        return g.start in _nullable(g)
    unary, binary, _ = _to_cnf(g)
    n = len(w)
    table = [[set() for _ in range(n + 1)] for _ in range(n)]
    for i in range(n):
        for var, t in unary:
            if t == w[i]:
                table[i][i + 1].add(var)
    for span in range(2, n + 1):
        for i in range(n - span + 1):
            j = i + span
            cell = table[i][j]
            for k in range(i + 1, j):
                left, right = table[i][k], table[k][j]
                if left and right:
                    for var, b, c in binary:
                        if b in left and c in right:
                            cell.add(var)
    return g.start in table[0][n]


def parse_grammar(text):
    """Parse the grammar file format.

    ::

        terminals: x y
        variables: S T
        start: S
        S -> eps | x S y S
    """
    terminals = variables = start_name = None
    rules = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("terminals:"):
            terminals = Alphabet(line.split(":", 1)[1].split())
        elif line.startswith("variables:"):
            variables = Alphabet(line.split(":", 1)[1].split())
        elif line.startswith("start:"):
            start_name = line.split(":", 1)[1].strip()
        elif "->" in line:
            lhs, rhs = line.split("->", 1)
            rules.append((lhs.strip(), rhs))
        else:
            raise InputError("bad grammar line: %r" % line)
    if terminals is None or variables is None or start_name is None:
        raise InputError("grammar file needs terminals:, variables: and start:")
    n = terminals.size

    def sym(tok):
        if tok in terminals._index:
            return terminals.index(tok)
        if tok in variables._index:
            return n + variables.index(tok)
        raise InputError("unknown symbol %r in grammar" % tok)

    productions = []
    for lhs, rhs in rules:
        var = variables.index(lhs)
        for alt in rhs.split("|"):
            toks = alt.split()
            if toks == ["eps"]:
                productions.append((var, ()))
            else:
                productions.append((var, tuple(sym(t) for t in toks)))
    return CFGrammar(terminals, variables, variables.index(start_name), productions)


def format_grammar(g):
    lines = [
        "terminals: " + " ".join(g.terminals.symbols),
        "variables: " + " ".join(g.variables.symbols),
        "start: " + g.variables.symbols[g.start],
    ]
    by_var = g.by_variable()
    for j in range(g.variables.size):
        alts = [g.rhs_text(rhs) for rhs in by_var[j]]
        lines.append("%s -> %s" % (g.variables.symbols[j], " | ".join(alts)))
    return "\n".join(lines) + "\n"
