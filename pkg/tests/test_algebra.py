from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from besselmodels.algebra import (
    LaurentPoly,
    NotDivisible,
    PoleAtSubstitution,
    RationalFn,
    SatakeNumeric,
    Scaled,
    VarTable,
    VarTableMismatch,
    div_one_minus_monomial,
    eval_rational,
    exact_div,
    substitute,
)

T = VarTable(("a1", "b", "v"))
a1, b, v = T.gens()
ONE_VAR = VarTable(("a1",))


def polys(table=T, max_terms=5, lo=-3, hi=3):
    exps = st.tuples(*[st.integers(lo, hi)] * len(table))
    coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(lambda d: LaurentPoly(table, d))


nonzero_polys = polys(max_terms=3).filter(lambda p: not p.is_zero())
points = st.fixed_dictionaries({
    name: st.fractions(min_value=-6, max_value=6, max_denominator=5).filter(bool) for name in T.names
})


# -- worked examples -------------------------------------------------------------

def test_add_identity_and_cancellation():
    p = 1 - a1 * v
    assert p + 0 == p
    assert v + (-v) == 0
    assert (1 - a1 * v) + a1 * v == 1


def test_mul_examples():
    p = a1**2 - 3 * b
    assert p * 1 == p
    assert (a1 - a1**-1) * (a1 + a1**-1) == a1**2 - a1**-2
    assert (1 - a1**2) * a1**-1 == a1**-1 - a1


def test_exact_div_examples():
    assert exact_div(a1**2 - a1**-2, a1 - a1**-1) == a1 + a1**-1
    # two-element alternant of a1^-1 (1 - a1^2 v^2), divided by a1^-1 - a1
    body = a1**-1 * (1 - a1**2 * v**2)
    flipped = a1 * (1 - a1**-2 * v**2)
    assert exact_div(body - flipped, a1**-1 - a1) == 1 + v**2


def test_exact_div_rejects():
    with pytest.raises(NotDivisible):
        exact_div(a1 + 1, a1 - 1)
    with pytest.raises(NotDivisible):
        exact_div(a1, 1 - a1**3)
    with pytest.raises(ZeroDivisionError):
        exact_div(a1, T.zero())


def test_table_mismatch():
    with pytest.raises(VarTableMismatch):
        a1 + ONE_VAR.var("a1")
    with pytest.raises(VarTableMismatch):
        exact_div(a1, ONE_VAR.var("a1"))


def test_substitute_examples():
    x = ONE_VAR.var("a1")
    assert substitute(x, {"a1": 1}) == 1
    assert substitute(x**-1 - x, {"a1": x**-1}) == x - x**-1
    assert substitute(1 - a1 * b * v, {"b": 1}) == 1 - a1 * v


def test_substitute_rational_binding():
    r = RationalFn(a1, 1 - v)
    got = substitute(a1**2 + a1**-1, {"a1": r})
    assert got == r * r + RationalFn(1 - v, a1)


def test_substitute_pole():
    with pytest.raises(PoleAtSubstitution):
        substitute(a1**-1, {"a1": 0})


def test_eval_examples():
    x = ONE_VAR.var("a1")
    assert eval_rational(x - x**-1, {"a1": 2}) == Fraction(3, 2)
    assert eval_rational(T.zero(), {"a1": 5, "b": 1, "v": 1}) == 0
    assert eval_rational(1 - a1**2 * v**2, {"a1": 2, "b": 1, "v": Fraction(1, 3)}) == Fraction(5, 9)
    with pytest.raises(PoleAtSubstitution):
        eval_rational(a1**-1, {"a1": 0, "b": 1, "v": 1})


def test_satake_numeric_requires_square_q():
    assert SatakeNumeric(9, {}).v == Fraction(1, 3)
    assert SatakeNumeric(Fraction(25, 4), {}).v == Fraction(2, 5)
    with pytest.raises(ValueError):
        SatakeNumeric(8, {})
    with pytest.raises(ValueError):
        SatakeNumeric(1, {})


def test_rational_fn_reduces_and_compares():
    r = RationalFn(a1**2 - 1, a1 - 1)
    assert r.is_laurent() and r.as_laurent() == a1 + 1
    assert RationalFn(a1, 1 - v) == RationalFn(2 * a1, 2 - 2 * v)
    assert RationalFn(a1, 1 - v) != RationalFn(a1, 1 + v)
    assert RationalFn(1 - v**2, 1 - v) == 1 + v


def test_rational_fn_arithmetic():
    x, y = RationalFn(a1, 1 - v), RationalFn(b, 1 + v)
    assert (x + y) * (1 - v**2) == a1 * (1 + v) + b * (1 - v)
    assert (x / y) * y == x
    assert x - x == 0
    assert x**-1 == RationalFn(1 - v, a1)


def test_scaled_simplifies():
    s = Scaled(1 - v**2, RationalFn(T.one(), 1 - v**2))
    assert s.value == 1
    assert s.simplified().scalar == 1
    kept = Scaled(a1, RationalFn(T.one(), 1 + v**2))
    assert kept.simplified().scalar != 1


def test_json_format():
    p = Fraction(-3, 4) * a1**-1 * v**2 + 2
    d = p.to_dict()
    assert d["vars"] == ["a1", "b", "v"]
    assert d["terms"] == [
        {"exp": [-1, 0, 2], "num": "-3", "den": "4"},
        {"exp": [0, 0, 0], "num": "2", "den": "1"},
    ]
    assert LaurentPoly.from_json(p.to_json()) == p


def test_div_one_minus_monomial():
    r = (1, -1, 0)
    d = 1 - a1 * b**-1
    p = (a1**3 - v) * d
    assert div_one_minus_monomial(p, r) == a1**3 - v
    with pytest.raises(NotDivisible):
        div_one_minus_monomial(a1 + 1, r)


# -- properties ------------------------------------------------------------------

@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q == q + p
    assert p * q == q * p
    assert p - p == 0


@given(polys(), nonzero_polys)
def test_exact_div_round_trip(p, d):
    assert exact_div(p * d, d) == p


@given(polys(), st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2)))
def test_binomial_division_round_trip(p, r):
    assume(any(r))
    d = 1 - T.monomial(dict(zip(T.names, r)))
    assert div_one_minus_monomial(p * d, r) == p
    assert div_one_minus_monomial(p * d, r) == exact_div(p * d, d)


@given(polys(), polys(), points)
def test_eval_is_ring_homomorphism(p, q, pt):
    assert eval_rational(p * q, pt) == eval_rational(p, pt) * eval_rational(q, pt)
    assert eval_rational(p + q, pt) == eval_rational(p, pt) + eval_rational(q, pt)


@given(polys())
def test_json_round_trip(p):
    assert LaurentPoly.from_json(p.to_json()) == p
    exps = [t["exp"] for t in p.to_dict()["terms"]]
    assert exps == sorted(exps)


@given(polys(), points)
def test_substitution_agrees_with_evaluation(p, pt):
    bound = substitute(p, {"a1": pt["a1"], "b": pt["b"], "v": pt["v"]})
    assert bound.eval({}) == eval_rational(p, pt)
