"""Exact kernel: Q[t] polynomials, Q(t) fractions, truncated series."""

from fractions import Fraction

import pytest

from nchilbert.errors import InputError
from nchilbert.ratfunc import (
    QPoly,
    RationalFunction,
    TruncatedSeries,
    rational_eval_series,
    series_arith,
)


def qp(*cs):
    return QPoly(tuple(Fraction(c) for c in cs))


def test_geometric_series():
    f = RationalFunction(qp(1), qp(1, -2))
    assert list(f.series(4).coeffs) == [1, 2, 4, 8, 16]


def test_free_algebra_series():
    f = RationalFunction(qp(1), qp(1, -4))
    assert list(f.series(3).coeffs) == [1, 4, 16, 64]


def test_palindrome_series():
    f = RationalFunction(qp(1, 2), qp(1, 0, -2))
    assert list(f.series(5).coeffs) == [1, 2, 2, 4, 4, 8]


def test_rational_eval_series_pole():
    f = RationalFunction(qp(1), qp(0, 1))
    with pytest.raises(InputError):
        rational_eval_series(f, 3)


def test_rational_reduction_and_monic_denominator():
    f = RationalFunction(qp(0, 2, 2), qp(0, 4))  # (2t + 2t^2) / 4t
    assert f == RationalFunction(qp(1, 1), qp(2))
    assert f.den.coeffs[-1] == 1


def test_series_arith_div():
    one = TruncatedSeries.one(6)
    g = RationalFunction(qp(1), qp(1, -2)).series(6)
    assert series_arith(one, g, "div") == RationalFunction(qp(1, -2)).series(6)


def test_series_div_by_zero_constant_term():
    a = TruncatedSeries.one(4)
    b = TruncatedSeries((0, 1, 0, 0, 0), 4)
    with pytest.raises(InputError):
        series_arith(a, b, "div")


def test_series_inverse_roundtrip():
    s = TruncatedSeries((1, 3, 8, 22, 59), 4)
    prod = s * s.inverse()
    assert prod == TruncatedSeries.one(4)


def test_series_valuation():
    assert TruncatedSeries((0, 0, 5, 1), 3).valuation() == 2
    assert TruncatedSeries((0, 0, 0, 0), 3).valuation() is None


def test_qpoly_gcd():
    a = qp(-1, 0, 1)  # t^2 - 1
    b = qp(1, 1)      # t + 1
    g = a.gcd(b)
    assert g.monic() == b.monic()


def test_rational_arith():
    t = RationalFunction.t_power(1)
    f = 1 / (1 - t)
    assert isinstance(f, RationalFunction)
    assert list(f.series(3).coeffs) == [1, 1, 1, 1]
    assert (f - f) == RationalFunction.const(0)
