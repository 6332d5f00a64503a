"""Unit tests for truncated power series and continued fractions."""

from fractions import Fraction

import pytest

from cfenum.mpoly import MultiPoly, as_poly, var
from cfenum.series import (InsufficientOrder, JFractionSpec,
                           NonUnitConstantTerm, PowerSeries, RationalSeries,
                           SFractionSpec, TerminatedFraction,
                           attach_component_weight, contract_s_to_j,
                           expand_jfraction, expand_sfraction,
                           indecomposable_series, jfraction_from_series)


def _ints(series):
    return [c.constant_term() for c in series.coeffs]


def test_series_arithmetic_and_shift():
    s = PowerSeries([1, 2, 3], 5)
    t = PowerSeries([1, 1], 5)
    assert _ints(s + t) == [2, 3, 3, 0, 0, 0]
    assert _ints(s - t) == [0, 1, 3, 0, 0, 0]
    assert _ints(s * t) == [1, 3, 5, 3, 0, 0]
    assert _ints(s.shift(2)) == [0, 0, 1, 2, 3, 0]
    assert _ints(s * 2) == [2, 4, 6, 0, 0, 0]


def test_reciprocal_geometric():
    s = PowerSeries([1, -1], 6)
    assert _ints(s.reciprocal()) == [1] * 7
    assert s.reciprocal() * s == PowerSeries.one(6)


def test_reciprocal_requires_unit_constant():
    with pytest.raises(NonUnitConstantTerm):
        PowerSeries([2, 1], 3).reciprocal()


def test_sfraction_all_ones_is_catalan():
    # alpha_n = 1 gives the Catalan generating function.
    f = expand_sfraction(SFractionSpec(lambda n: 1), 8)
    assert _ints(f) == [1, 1, 2, 5, 14, 42, 132, 429, 1430]


def test_sfraction_double_factorials_and_factorials():
    # alpha_n = n gives the odd double factorials (2n-1)!!.
    f = expand_sfraction(SFractionSpec(lambda n: n), 6)
    assert _ints(f) == [1, 1, 3, 15, 105, 945, 10395]
    # alpha_n = ceil(n/2) gives n!.
    f = expand_sfraction(SFractionSpec(lambda n: (n + 1) // 2), 7)
    assert _ints(f) == [1, 1, 2, 6, 24, 120, 720, 5040]


def test_jfraction_motzkin_and_bell():
    # gamma_n = 1, beta_n = 1: Motzkin numbers.
    f = expand_jfraction(JFractionSpec(lambda n: 1, lambda n: 1), 7)
    assert _ints(f) == [1, 1, 2, 4, 9, 21, 51, 127]
    # gamma_n = n+1, beta_n = n: Bell numbers.
    f = expand_jfraction(JFractionSpec(lambda n: n + 1, lambda n: n), 7)
    assert _ints(f) == [1, 1, 2, 5, 15, 52, 203, 877]


def test_contraction_matches_direct_expansion():
    x, y = var("x"), var("y")
    spec = SFractionSpec(lambda n: x + n * y)
    f = expand_sfraction(spec, 8)
    g = expand_jfraction(contract_s_to_j(spec), 8)
    assert f == g


def test_contraction_formulas():
    spec = SFractionSpec(lambda n: as_poly(10 * n))
    j = contract_s_to_j(spec)
    assert j.gamma(0) == as_poly(10)
    assert j.gamma(2) == as_poly(40 + 50)
    assert j.beta(2) == as_poly(30 * 40)


def test_attach_component_weight():
    z = var("z")
    # Each connected component weighted by z; at z=1 nothing changes.
    spec = SFractionSpec(lambda n: n)
    f = expand_sfraction(attach_component_weight(spec, z), 6)
    assert [c.substitute({"z": 1}) for c in f.coeffs] \
        == expand_sfraction(spec, 6).coeffs
    jspec = JFractionSpec(lambda n: n + 1, lambda n: n)
    g = expand_jfraction(attach_component_weight(jspec, z), 6)
    assert [c.substitute({"z": 1}) for c in g.coeffs] \
        == expand_jfraction(jspec, 6).coeffs
    # z=0 kills every nonempty object.
    assert [c.substitute({"z": 0}) for c in g.coeffs[1:]] \
        == [MultiPoly.zero()] * 6


def test_indecomposable_series():
    # For factorials, indecomposable counts are 1,1,3,13,71,461,...
    f = expand_sfraction(SFractionSpec(lambda n: (n + 1) // 2), 6)
    g = indecomposable_series(f)
    assert _ints(g) == [0, 1, 1, 3, 13, 71, 461]


def test_rational_series_reciprocal():
    s = RationalSeries([1, Fraction(1, 2)], 4)
    r = s.reciprocal()
    assert r.coeffs == [Fraction(1), Fraction(-1, 2), Fraction(1, 4),
                        Fraction(-1, 8), Fraction(1, 16)]
    with pytest.raises(NonUnitConstantTerm):
        RationalSeries([0, 1], 2).reciprocal()


def test_jfraction_from_series_round_trip():
    gam = [3, 1, 4, 1, 5, 9]
    bet = [0, 2, 7, 1, 8, 2]  # bet[0] unused
    spec = JFractionSpec(lambda n: gam[n], lambda n: bet[n])
    f = expand_jfraction(spec, 9)
    s = RationalSeries(_ints(f), 9)
    gammas, betas = jfraction_from_series(s, 4)
    assert gammas == gam[:5]
    assert betas == bet[1:5]


def test_jfraction_from_series_errors():
    s = RationalSeries([1, 1, 2, 5, 15], 4)
    with pytest.raises(InsufficientOrder):
        jfraction_from_series(s, 2)
    with pytest.raises(NonUnitConstantTerm):
        jfraction_from_series(RationalSeries([2, 1], 3), 0)
    # 1/(1-t) has beta_1 = 0: the fraction terminates.
    with pytest.raises(TerminatedFraction):
        jfraction_from_series(RationalSeries([1, 1, 1, 1, 1, 1], 5), 2)


def test_jfraction_from_series_rational_values():
    order = 7
    gam = lambda n: Fraction(1, n + 1)
    bet = lambda n: Fraction(n, 2)
    # Expand the fraction with exact rational arithmetic, innermost-first.
    coeffs = [Fraction(1)] + [Fraction(0)] * order
    for k in range(order // 2, -1, -1):
        inner = [Fraction(1)] + [Fraction(0)] * order
        inner[1] -= gam(k)
        for j in range(order - 1):
            inner[j + 2] -= bet(k + 1) * coeffs[j]
        coeffs = RationalSeries(inner, order).reciprocal().coeffs
    gammas, betas = jfraction_from_series(RationalSeries(coeffs, order), 3)
    assert gammas == [gam(k) for k in range(4)]
    assert betas == [bet(k) for k in range(1, 4)]
