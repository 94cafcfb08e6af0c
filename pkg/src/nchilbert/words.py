"""Exact combinatorics of words and finite/truncated languages.

Words are stored as ``bytes``: each byte is the position of a symbol in the
owning :class:`Alphabet`.  The empty word is ``b""`` and its text form is
``eps``.  Canonical word order is length first, then position-lexicographic,
which for equal lengths coincides with the natural byte order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BoundError, InputError

Word = bytes

EMPTY: Word = b""

WORD_KEY = lambda w: (len(w), w)  # noqa: E731  - canonical order, used everywhere


class Alphabet:
    """Ordered list of distinct symbol names; order fixes all tie-breaking."""

    def __init__(self, symbols):
        symbols = list(symbols)
        if len(set(symbols)) != len(symbols):
            raise InputError("duplicate symbols in alphabet: %r" % (symbols,))
        for s in symbols:
            if not s or any(c.isspace() for c in s):
                raise InputError("bad symbol name: %r" % (s,))
        if len(symbols) > 255:
            raise InputError("alphabet too large (max 255 symbols)")
        self.symbols = tuple(symbols)
        self._index = {s: i for i, s in enumerate(symbols)}

    @property
    def size(self):
        return len(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self):
        return hash(self.symbols)

    def __repr__(self):
        return "Alphabet(%s)" % " ".join(self.symbols)

    def index(self, symbol):
        try:
            return self._index[symbol]
        except KeyError:
            raise InputError("unknown symbol %r" % (symbol,)) from None

    def word(self, text):
        """Parse a word from its text form (symbols split on whitespace)."""
        text = text.strip()
        if text == "eps" or not text:
            return EMPTY
        return bytes(self.index(tok) for tok in text.split())

    def text(self, word):
        """Text form of a word; the empty word prints as ``eps``."""
        if not word:
            return "eps"
        return " ".join(self.symbols[b] for b in word)

    def all_words(self, length):
        """All words of exactly the given length, in canonical order."""
        if length == 0:
            return [EMPTY]
        prev = self.all_words(length - 1)
        return [w + bytes([i]) for w in prev for i in range(self.size)]

    def union(self, other):
        """Disjoint union; rejects symbol-name collisions."""
        common = set(self.symbols) & set(other.symbols)
        if common:
            raise InputError("alphabets overlap on %s" % sorted(common))
        return Alphabet(self.symbols + other.symbols)


def contains_factor(word, factor):
    """True iff factor occurs contiguously inside word (eps is a factor of all)."""
    return factor in word


@dataclass(frozen=True)
class FiniteLanguage:
    """Finite set of words with deterministic canonical iteration order."""

    alphabet: Alphabet
    words: frozenset = field(default_factory=frozenset)

    @classmethod
    def from_texts(cls, alphabet, texts):
        return cls(alphabet, frozenset(alphabet.word(s) for s in texts))

    def sorted_words(self):
        return sorted(self.words, key=WORD_KEY)

    def texts(self):
        return [self.alphabet.text(w) for w in self.sorted_words()]

    def __contains__(self, word):
        return word in self.words

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.sorted_words())

    def min_length(self):
        """Length of the shortest word; None when empty."""
        return min((len(w) for w in self.words), default=None)

    def truncate(self, d):
        return TruncatedLanguage(
            self.alphabet, d, frozenset(w for w in self.words if len(w) <= d)
        )


@dataclass(frozen=True)
class TruncatedLanguage:
    """Window of a (possibly infinite) language: all its words of length <= d.

    The bound ``d`` is a promise of exactness: every word of the underlying
    language with length <= d is present, and nothing else is.
    """

    alphabet: Alphabet
    d: int
    words: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.d < 0:
            raise InputError("negative degree bound")
        if any(len(w) > self.d for w in self.words):
            raise InputError("word longer than the declared bound")

    def sorted_words(self):
        return sorted(self.words, key=WORD_KEY)

    def __contains__(self, word):
        return word in self.words

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.sorted_words())

    def finite(self):
        return FiniteLanguage(self.alphabet, self.words)

    def by_length(self):
        buckets = {}
        for w in self.words:
            buckets.setdefault(len(w), set()).add(w)
        return buckets

    def counts(self, d=None):
        """Number of words per length, indices 0..d."""
        d = self.d if d is None else d
        if d > self.d:
            raise BoundError("counts requested beyond the exactness bound")
        out = [0] * (d + 1)
        for w in self.words:
            if len(w) <= d:
                out[len(w)] += 1
        return out

    def min_length_bound(self):
        """Lower bound for the minimum word length of the underlying language.

        Exact when the window is nonempty (truncation keeps all short words);
        otherwise every word is longer than d, so d+1 is a valid bound.
        """
        return min((len(w) for w in self.words), default=self.d + 1)


def minimize_antichain(lang):
    """Drop every word containing another (distinct) word of the set as a factor.

    The result is the unique minimal monomial basis of the ideal generated by
    the input.
    """
    kept = set()
    for w in lang.sorted_words():  # shorter words first: they can only survive
        if not any(contains_factor(w, v) for v in kept):
            kept.add(w)
    return FiniteLanguage(lang.alphabet, frozenset(kept))


def is_antichain(lang):
    words = list(lang.words)
    for i, w in enumerate(words):
        for v in words:
            if v is not w and contains_factor(w, v):
                return False
    return True


def is_normal(word, basis):
    """True iff no basis element occurs as a contiguous factor of word."""
    return not any(contains_factor(word, v) for v in basis.words)


def full_language(alphabet, d, min_length=0):
    """All words of length min_length..d, as a truncated language."""
    words = set()
    for k in range(min_length, d + 1):
        words.update(alphabet.all_words(k))
    return TruncatedLanguage(alphabet, d, frozenset(words))


def trunc_product(a, b, d, min_a=None, min_b=None):
    """Bounded concatenation {uv : u in a, v in b, |uv| <= d}, exact to d.

    Exactness demands that no word of the true product of length <= d needs a
    factor longer than the operand's window: we require a.d >= d - min_b and
    b.d >= d - min_a, where min_a/min_b are minimum word lengths of the true
    factor languages (derived from the windows when not supplied).
    """
    if a.alphabet != b.alphabet:
        raise InputError("product of languages over different alphabets")
    if min_a is None:
        min_a = a.min_length_bound()
    if min_b is None:
        min_b = b.min_length_bound()
    if a.d < d - min_b or b.d < d - min_a:
        raise BoundError(
            "product to degree %d needs factor windows of at least %d and %d "
            "(got %d and %d)" % (d, d - min_b, d - min_a, a.d, b.d)
        )
    buckets_a = a.by_length()
    buckets_b = b.by_length()
    out = set()
    for la, words_a in buckets_a.items():
        if la > d:
            continue
        for lb, words_b in buckets_b.items():
            if la + lb > d:
                continue
            out.update(u + v for u in words_a for v in words_b)
    return TruncatedLanguage(a.alphabet, d, frozenset(out))


def trunc_power(base, k, d):
    """Bounded k-th concatenation power; base**0 is {eps}."""
    acc = TruncatedLanguage(base.alphabet, d, frozenset([EMPTY]))
    for _ in range(k):
        acc = trunc_product(acc, base, d)
    return acc


def trunc_ideal(basis, d):
    """All words of length <= d containing some basis element as a factor.

    Layered construction: a word is in the ideal iff its longest proper prefix
    is, or some basis word is one of its suffixes.
    """
    if basis.d < d:
        raise BoundError("ideal to degree %d from a basis window of %d" % (d, basis.d))
    alphabet = basis.alphabet
    n = alphabet.size
    bwords = basis.words
    maxb = max((len(w) for w in bwords), default=0)
    out = set()
    layer = {EMPTY: False}  # word -> already absorbed
    if EMPTY in bwords:
        layer = {EMPTY: True}
        out.add(EMPTY)
    for _ in range(d):
        nxt = {}
        for w, absorbed in layer.items():
            for i in range(n):
                v = w + bytes([i])
                if absorbed:
                    nxt[v] = True
                else:
                    hit = any(
                        v[-k:] in bwords for k in range(1, min(len(v), maxb) + 1)
                    )
                    nxt[v] = hit
                if nxt[v]:
                    out.add(v)
        layer = nxt
    return TruncatedLanguage(alphabet, d, frozenset(out))


def trunc_boolean(a, b, op):
    """Set-theoretic union/intersection/difference, exact to the common bound."""
    if a.alphabet != b.alphabet:
        raise InputError("boolean operation over different alphabets")
    d = min(a.d, b.d)
    wa = {w for w in a.words if len(w) <= d}
    wb = {w for w in b.words if len(w) <= d}
    if op == "union":
        res = wa | wb
    elif op == "intersection":
        res = wa & wb
    elif op == "difference":
        res = wa - wb
    else:
        raise InputError("unknown boolean op %r" % (op,))
    return TruncatedLanguage(a.alphabet, d, frozenset(res))


def parse_language_file(alphabet, text):
    """One word per line; ``#`` starts a comment; ``eps`` is the empty word."""
    words = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        words.add(alphabet.word(line))
    return FiniteLanguage(alphabet, frozenset(words))


def format_language(lang):
    return "\n".join(lang.texts()) + "\n"
