"""Truncated Groebner-Shirshov completion in the free algebra."""

import random

import pytest

from nchilbert.errors import InputError
from nchilbert.examples import FP_FAMILY, FP_FINITE, FP_PRESENTATION
from nchilbert.grammar import parse_grammar
from nchilbert.gsb import (
    MonomialOrder,
    NCPolynomial,
    compare_leading,
    gs_complete,
    leading_language,
    nc_reduce,
    parse_presentation,
)
from nchilbert.homology import PatternFamily, RelationSet
from nchilbert.words import FiniteLanguage


def poly(alphabet, *signed_texts):
    terms = {}
    for coeff, text in signed_texts:
        terms[alphabet.word(text)] = coeff
    return NCPolynomial(alphabet, terms)


def fp_setup():
    return parse_presentation(FP_PRESENTATION)


def test_order_key():
    alphabet, order, _ = fp_setup()
    # grad first, then priority: a' beats y at equal length
    assert order.max_word([alphabet.word("y"), alphabet.word("a'")]) == alphabet.word("a'")
    assert order.max_word([alphabet.word("y y"), alphabet.word("a'")]) == alphabet.word("y y")


def test_nc_reduce_commuting_relation():
    alphabet, order, _ = fp_setup()
    basis = [poly(alphabet, (1, "a' x"), (-1, "x a'"))]
    out = nc_reduce(poly(alphabet, (1, "a' x")), basis, order)
    assert out == poly(alphabet, (1, "x a'"))
    irred = poly(alphabet, (1, "x a'"))
    assert nc_reduce(irred, basis, order) == irred


def test_nc_reduce_two_steps():
    alphabet, order, _ = fp_setup()
    basis = [
        poly(alphabet, (1, "b' x"), (-1, "x e")),
        poly(alphabet, (1, "x y e")),
    ]
    out = nc_reduce(poly(alphabet, (1, "b' x y")), basis, order)
    assert out == poly(alphabet, (1, "x e y"))


def test_commutative_toy_stays_put():
    alphabet, order, rels = parse_presentation("alphabet: x y\nx y - y x\n")
    basis = gs_complete(rels, order, 5)
    assert len(basis) == 1
    assert basis[0] == poly(alphabet, (1, "x y"), (-1, "y x"))


def test_rejects_inhomogeneous():
    _, order, rels = parse_presentation("alphabet: x y\nx y - x\n")
    with pytest.raises(InputError):
        gs_complete(rels, order, 4)


def test_fp_leading_monomials_degree_4():
    alphabet, order, rels = fp_setup()
    basis = gs_complete(rels, order, 4)
    lead = {alphabet.text(w) for w in leading_language(basis, order).words}
    for text in FP_FINITE:
        assert text in lead
    assert "x y" in lead
    assert "x e y" in lead


def test_fp_negative_control_drop_xey():
    alphabet, order, rels = fp_setup()
    basis = gs_complete(rels, order, 4)
    computed = leading_language(basis, order)
    finite = FiniteLanguage(
        alphabet,
        frozenset(alphabet.word(s) for s in FP_FINITE + ["x y", "x e e y"]),
    )
    predicted = RelationSet(alphabet, finite)
    report = compare_leading(predicted, computed, 4)
    assert not report.ok
    assert [alphabet.text(w) for w in report.extra] == ["x e y"]


def test_fp_prediction_confirmed_degree_5():
    alphabet, order, rels = fp_setup()
    basis = gs_complete(rels, order, 5)
    computed = leading_language(basis, order)
    finite = FiniteLanguage(
        alphabet, frozenset(alphabet.word(s) for s in FP_FINITE)
    )
    family = PatternFamily((("grammar", parse_grammar(FP_FAMILY)),))
    predicted = RelationSet(alphabet, finite, (family,))
    assert compare_leading(predicted, computed, 5).ok


def test_completion_order_independent():
    alphabet, order, rels = fp_setup()
    reference = gs_complete(list(rels), order, 5)
    ref_set = {frozenset(g.terms.items()) for g in reference}
    shuffled = list(rels)
    random.Random(7).shuffle(shuffled)
    again = gs_complete(shuffled, order, 5)
    assert {frozenset(g.terms.items()) for g in again} == ref_set


def test_spoly_remainders_vanish():
    alphabet, order, rels = fp_setup()
    basis = gs_complete(rels, order, 5)
    from nchilbert.gsb import _overlaps

    for i, gi in enumerate(basis):
        for gj in basis[: i + 1]:
            wi, wj = gi.lm(order), gj.lm(order)
            for o in _overlaps(wi, wj):
                if len(wi) + len(wj) - o > 5:
                    continue
                s = gi.sandwich(b"", wj[o:]) - gj.sandwich(wi[: len(wi) - o], b"")
                assert not nc_reduce(s, basis, order)
