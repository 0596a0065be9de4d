from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from besselmodels.algebra import RationalFn, SatakeNumeric, eval_rational, substitute
from besselmodels.waldspurger import (
    GL2,
    GL2Params,
    RegionError,
    casselman_relation_holds,
    macdonald_rank1,
    oracle_wa_integral,
    wa_normalizer,
    wa_region,
    wa_value,
    whittaker_gl2,
)

from oracles import wa_normalized_numeric, wa_normalizer_numeric, wa_two_series_k0

g1, g2, t, v = GL2.gens()


def at(point: SatakeNumeric) -> dict:
    return point.as_point()


def test_value_at_identity_is_one():
    assert wa_value(0).value == 1


def test_value_symmetric_in_gammas():
    swap = {"g1": g2, "g2": g1}
    for k in range(7):
        val = wa_value(k)
        assert substitute(val.poly, swap) == val.poly


def test_value_k1_closed_form():
    # first nontrivial value, expanded by hand from the two-term bracket
    expected = v * (g1 + g2 - t * v - g1 * g2 * t**-1 * v)
    assert wa_value(1).poly == expected


def test_value_rejects_negative():
    with pytest.raises(ValueError):
        wa_value(-1)


def test_normalizer_at_trivial_parameters():
    n = wa_normalizer()
    got = substitute(n.num, {"g1": 1, "g2": 1, "t": 1}) / substitute(n.den, {"g1": 1, "g2": 1, "t": 1})
    vt = got.num.table.var("v")
    assert got == (1 - vt) / (1 + vt)


def test_normalizer_numerator_vanishes_on_boundary():
    # t = g1 q**(-1/2) kills the first factor, t = g2 q**(1/2) the second
    for tau in (Fraction(2, 3), Fraction(15)):
        pt = {"g1": Fraction(2), "g2": Fraction(5), "t": tau, "v": Fraction(1, 3)}
        assert eval_rational(wa_normalizer().num, pt) == 0


def test_whittaker_examples():
    assert whittaker_gl2(-1).is_zero()
    assert whittaker_gl2(0) == 1 - g1 * g2**-1 * v**2
    assert whittaker_gl2(0, normalized=True) == 1
    assert whittaker_gl2(2, normalized=True) == v**2 * (g1**2 + g1 * g2 + g2**2)


def test_whittaker_symmetric():
    for k in range(5):
        w = whittaker_gl2(k, normalized=True)
        assert substitute(w, {"g1": g2, "g2": g1}) == w


def test_macdonald_examples():
    assert macdonald_rank1(0).value == 1
    m1 = macdonald_rank1(1)
    a, vv = m1.poly.table.gens()
    assert m1.value == RationalFn(vv * (a + a**-1), 1 + vv**2)


def test_macdonald_inversion_symmetry():
    for k in range(6):
        m = macdonald_rank1(k).poly
        a = m.table.var("a1")
        assert substitute(m, {"a1": a**-1}) == m


def test_region_examples():
    assert wa_region(GL2Params(Fraction(9), Fraction(2), Fraction(1, 2)).numeric())
    assert not wa_region(GL2Params(Fraction(9), Fraction(2), Fraction(1, 3)).numeric())
    assert not wa_region(GL2Params(Fraction(4), Fraction(2), Fraction(1), Fraction(1)).numeric())


def test_oracle_refuses_outside_region():
    with pytest.raises(RegionError):
        oracle_wa_integral(0, GL2Params(Fraction(9), Fraction(2), Fraction(1, 3)).numeric())


def test_identity_value_closed_form():
    # q = 9, g = (2, 1/2), t = 1: the raw integral is 5 and the normalizer 1/5
    v3 = Fraction(1, 3)
    assert wa_two_series_k0(Fraction(2), Fraction(1, 2), Fraction(1), v3) == 5
    assert wa_normalizer_numeric(Fraction(2), Fraction(1, 2), Fraction(1), v3) == Fraction(1, 5)
    pt = GL2Params(Fraction(9), Fraction(2), Fraction(1, 2)).numeric()
    assert oracle_wa_integral(0, pt) == 5


def test_spot_value_k3():
    pt = GL2Params(Fraction(9), Fraction(2), Fraction(1, 2)).numeric()
    want = wa_normalized_numeric(3, Fraction(2), Fraction(1, 2), Fraction(1), Fraction(1, 3))
    assert wa_value(3).eval(at(pt)) == want == Fraction(533, 1728)
    assert oracle_wa_integral(3, pt) * wa_normalizer_numeric(
        Fraction(2), Fraction(1, 2), Fraction(1), Fraction(1, 3)
    ) == want


roots = st.sampled_from([2, 3, 4, 5])
params = st.fractions(min_value=Fraction(-7), max_value=Fraction(7), max_denominator=6).filter(bool)


@given(st.integers(0, 6), roots, params, params, params)
def test_shell_sum_matches_formula(k, root, a, b, c):
    pt = SatakeNumeric(root * root, {"g1": a, "g2": b, "t": c})
    assume(wa_region(pt) and a != b)
    norm = wa_normalizer_numeric(a, b, c, pt.v)
    assume(norm != 0)
    assert oracle_wa_integral(k, pt) * norm == wa_value(k).eval(at(pt))
    assert wa_value(k).eval(at(pt)) == wa_normalized_numeric(k, a, b, c, pt.v)


@pytest.mark.parametrize("k", range(1, 7))
def test_casselman_relation(k):
    assert casselman_relation_holds(k)


def test_casselman_relation_needs_positive_k():
    with pytest.raises(ValueError):
        casselman_relation_holds(0)
