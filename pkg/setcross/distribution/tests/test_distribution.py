# -*- coding: utf-8 -*-
"""Test the four distribution polynomial methods and derived distributions."""
from fractions import Fraction

import pytest

from setcross.config import config_context
from setcross.distribution import (
    BruteForceMethod,
    DistPoly,
    JRMethod,
    KSZMethod,
    Pmf,
    SeriesMethod,
    get_method,
    lemma_series_identities,
    pmf_block,
    pmf_global,
    t_poly,
    t_poly_brute,
    t_poly_brute_circular,
    t_poly_global,
    t_poly_jr,
    t_poly_ksz,
    t_table_series,
)
from setcross.exactnum import bell, catalan, narayana, stirling2
from setcross.exceptions import (
    CapacityError,
    FormulaVerificationError,
    PreconditionError,
)
from setcross.extremal import max_block
from setcross.qpoly import LaurentPoly


@pytest.fixture(scope="module")
def series_table():
    """Series extraction up to n = 9."""
    return t_table_series(9)


@pytest.mark.parametrize("n", range(1, 10))
def test_four_methods_agree(n, series_table):
    """Verify ksz, jr, series extraction and enumeration give equal polynomials."""
    for k in range(1, n + 1):
        brute = t_poly_brute(n, k).coeffs
        for name, value in [
            ("ksz", t_poly_ksz(n, k).coeffs),
            ("jr", t_poly_jr(n, k).coeffs),
            ("series", series_table[(n, k)].coeffs),
        ]:
            msg = f"{name} disagrees with enumeration at n={n}, k={k}. "
            msg += f"Expected {brute}, but returned {value}."
            assert value == brute, msg


def test_worked_polynomials(series_table):
    """Verify small polynomials from every method."""
    assert t_poly_ksz(4, 2).coeffs == [6, 1]
    assert t_poly_jr(4, 2).coeffs == [6, 1]
    assert series_table[(4, 2)].coeffs == [6, 1]
    assert series_table[(3, 2)].coeffs == [3]
    assert t_poly_brute_circular(4, 2).coeffs == [6, 1]
    for n in range(1, 10):
        assert series_table[(n, 0)].coeffs == []
        assert t_poly_ksz(n, 1).coeffs == [1]
        assert t_poly_jr(n, n).coeffs == [1]
    for n in range(1, 9):
        assert t_poly_brute_circular(n, 1).coeffs == [1]
    assert t_poly_ksz(5, 3).total == 25


def test_noncrossing_counts_and_degrees():
    """Verify constant terms are Narayana numbers and degrees are the maxima."""
    for n in range(1, 31):
        for k in range(1, n + 1):
            poly = t_poly_jr(n, k)
            assert poly.coeffs[0] == narayana(n, k)
            assert poly.total == stirling2(n, k)
            msg = f"Degree of T_({n},{k}). "
            msg += f"Expected {max_block(n, k)}, but returned {poly.degree}."
            assert poly.degree == max_block(n, k), msg


def test_global_polynomial_constant_term():
    """Verify the noncrossing share of Pi_n is C_n / B_n."""
    for n in range(1, 13):
        assert t_poly_global(n).coefficient(0) == catalan(n)
        assert pmf_global(n).prob(0) == Fraction(catalan(n), bell(n))
    for n in range(1, 31):
        assert t_poly_global(n).coefficient(0) == catalan(n)


def test_pmfs():
    """Verify worked probability mass functions."""
    assert pmf_block(4, 2).as_dict() == {0: Fraction(6, 7), 1: Fraction(1, 7)}
    assert pmf_global(4).as_dict() == {0: Fraction(14, 15), 1: Fraction(1, 15)}
    assert pmf_block(4, 2, "circular").as_dict() == pmf_block(4, 2).as_dict()
    for n in range(1, 8):
        assert pmf_block(n, n) == Pmf.point_mass(0)
        assert pmf_block(n, n, "circular") == Pmf.point_mass(0)
    assert pmf_global(6, "circular").mean() > pmf_global(6).mean()


def test_dist_poly_rejects_invalid_polynomials():
    """Verify DistPoly checks the Stirling total and the coefficient signs."""
    with pytest.raises(FormulaVerificationError):
        DistPoly(4, 2, LaurentPoly([5, 1]), "brute")
    with pytest.raises(FormulaVerificationError):
        DistPoly(4, 2, LaurentPoly([8, -1]), "brute")
    with pytest.raises(FormulaVerificationError):
        DistPoly(4, 2, LaurentPoly([6, 1], -1), "brute")


def test_pmf_rejects_invalid_input():
    """Verify Pmf checks its probabilities."""
    with pytest.raises(PreconditionError):
        Pmf((0, 1), (Fraction(1, 2), Fraction(1, 3)))
    with pytest.raises(PreconditionError):
        Pmf.from_counts({0: 0})


def test_capacity_limits():
    """Verify the configured limits bound every method."""
    with config_context(enumeration_limit=5):
        with pytest.raises(CapacityError):
            t_poly_brute(6, 2)
        assert t_poly_brute(5, 2).total == 15
    with config_context(polynomial_limit=10):
        with pytest.raises(CapacityError):
            t_poly_jr(11, 3)
    with config_context(series_limit=6):
        with pytest.raises(CapacityError):
            t_table_series(7)


def test_method_objects():
    """Verify method tags, parameters and dispatch."""
    assert KSZMethod().get_tag("method") == "ksz"
    assert JRMethod().get_tag("capacity_config") == "polynomial_limit"
    assert SeriesMethod().get_tag("capacity_config") == "series_limit"
    assert BruteForceMethod().get_params() == {"stat": "linear"}
    assert isinstance(get_method("brute", "circular"), BruteForceMethod)
    assert get_method("brute", "circular").stat == "circular"
    with pytest.raises(PreconditionError):
        get_method("ksz", "circular")
    with pytest.raises(PreconditionError):
        get_method("nope")
    with pytest.raises(PreconditionError):
        t_poly(3, 4)
    assert t_poly(4, 2, stat="circular").method == "brute"
    assert t_poly(4, 2).method == "jr"
    assert t_poly(4, 2).to_json() == {
        "n": 4,
        "k": 2,
        "stat": "linear",
        "method": "jr",
        "coeffs": ["6", "1"],
    }


def test_lemma_series_identities():
    """Verify the Stirling generating-series identities to order 10."""
    results = lemma_series_identities(10)
    assert results == {"stirling": True, "n_stirling": True, "n_n1_stirling": True}
