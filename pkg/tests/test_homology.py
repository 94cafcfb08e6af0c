"""Chain languages, oracle counting, and the assembled series pipelines."""

from fractions import Fraction

import pytest

from nchilbert.errors import InputError
from nchilbert.homology import (
    HomologySpec,
    PatternFamily,
    RelationSet,
    chains_finite,
    govorov_chains_trunc,
    hilbert_from_homology,
    hilbert_oracle,
    overlap_language,
    parse_homology_spec,
    parse_qpoly,
    parse_rational,
    parse_relation_file,
)
from nchilbert.grammar import parse_grammar
from nchilbert.ratfunc import QPoly, RationalFunction
from nchilbert.regular import RegularLanguageHandle
from nchilbert.words import Alphabet, FiniteLanguage, TruncatedLanguage

XY = Alphabet(["x", "y"])


def flang(*texts):
    return FiniteLanguage.from_texts(XY, texts)


def test_chains_xy_combinatorially_free():
    levels, gldim = chains_finite(flang("x y"), 5)
    assert [l.texts() for l in levels] == [["x y"]]
    assert gldim == 2


def test_chains_xx_powers():
    levels, gldim = chains_finite(flang("x x"), 5)
    assert gldim is None
    for i, lang in enumerate(levels, start=1):
        assert lang.texts() == [" ".join(["x"] * (i + 1))]


def test_chains_rejects_non_antichain():
    with pytest.raises(InputError):
        chains_finite(flang("x x", "x x y"), 3)


def test_govorov_k1_recovers_basis():
    basis = flang("x x", "x y")
    l1 = TruncatedLanguage(XY, 8, basis.words)
    out = govorov_chains_trunc(l1, 1, 8)
    assert set(out.words) == set(basis.words)


def test_govorov_matches_chains_xx():
    basis = flang("x x")
    levels, _ = chains_finite(basis, 4)
    l1 = TruncatedLanguage(XY, 8, basis.words)
    for i, lang in enumerate(levels, start=1):
        got = govorov_chains_trunc(l1, i, 8)
        want = {w for w in lang.words if len(w) <= 8}
        assert set(got.words) == want


def test_oracle_fibonacci():
    rels = RelationSet(XY, flang("x x"))
    series = hilbert_oracle(rels, 6)
    assert list(series.coeffs) == [1, 2, 3, 5, 8, 13, 21]


def test_oracle_free_algebra():
    z = Alphabet(["x", "y", "z"])
    rels = RelationSet(z, FiniteLanguage(z, frozenset()))
    assert list(hilbert_oracle(rels, 3).coeffs) == [1, 3, 9, 27]


def test_trivial_spec_free_on_one_letter():
    spec = HomologySpec(1, (("finite", FiniteLanguage(Alphabet(["x"]), frozenset())),),
                        gldim=2)
    res = hilbert_from_homology(spec, 8)
    assert list(res.series.coeffs) == [1] * 9


def test_pattern_family_words():
    dyck = parse_grammar(
        "terminals: x a b\nvariables: S\nstart: S\nS -> eps | a S b S"
    )
    fam = PatternFamily((("word", bytes([0])), ("grammar", dyck), ("word", bytes([0]))))
    got = {dyck.terminals.text(w) for w in fam.words_upto(dyck.terminals, 4)}
    assert got == {"x x", "x a b x"}


def test_overlap_language_single_letter():
    x = Alphabet(["x"])
    r = RegularLanguageHandle.from_finite(FiniteLanguage.from_texts(x, ["x"]))
    q = overlap_language(r, r)
    # (xX* cap X*x) \ xX*x = {x}
    assert q.accepts(bytes([0]))
    assert not q.accepts(bytes([0, 0]))
    assert not q.accepts(b"")


def test_parse_qpoly():
    assert parse_qpoly("2*t^3 - t + 1") == QPoly(
        (Fraction(1), Fraction(-1), Fraction(0), Fraction(2))
    )
    assert parse_qpoly("-t") == QPoly((Fraction(0), Fraction(-1)))
    with pytest.raises(InputError):
        parse_qpoly("t^")


def test_parse_rational():
    f = parse_rational("1 + 2*t / 1 - 2*t^2")
    assert f == RationalFunction(QPoly((1, 2)), QPoly((1, 0, -2)))


def test_parse_homology_spec(tmp_path):
    (tmp_path / "c1.lang").write_text("x x\n")
    spec_text = "n: x y\nchain 1: finite c1.lang\ngldim: 2\n"
    spec = parse_homology_spec(
        spec_text, lambda p: (tmp_path / p).read_text()
    )
    assert spec.n == 2
    assert spec.gldim == 2
    kind, payload = spec.descriptors[0]
    assert kind == "finite" and payload.texts() == ["x x"]


def test_parse_relation_file(tmp_path):
    (tmp_path / "dyck.gf").write_text(
        "terminals: x a b\nvariables: S\nstart: S\nS -> eps | a S b S\n"
    )
    text = "alphabet: x a b\nx x\nfamily: x @dyck.gf x\n"
    rels = parse_relation_file(text, lambda p: (tmp_path / p).read_text())
    got = {rels.alphabet.text(w) for w in rels.words_upto(4)}
    assert got == {"x x", "x a b x"}


def test_spec_rejects_gapped_chains(tmp_path):
    (tmp_path / "c.lang").write_text("x x\n")
    text = "n: x y\nchain 2: finite c.lang\n"
    with pytest.raises(InputError):
        parse_homology_spec(text, lambda p: (tmp_path / p).read_text())
