import pytest

from besselmodels.algebra import RationalFn
from besselmodels.euler import (
    EulerInput,
    euler_table,
    h_at_identity,
    h_from_norm_factor,
    local_euler_factor,
    norm_factor_check,
    ratio_check,
    unfolding_prefactor,
    verify_local_identity,
)

CASES = [(n, eta) for n in (1, 2, 3) for eta in (1, -1)]


def test_input_validation():
    with pytest.raises(ValueError):
        EulerInput(0)
    with pytest.raises(ValueError):
        EulerInput(2, eta=0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_inert_factor_is_a_square_product(n):
    t = euler_table(n)
    u = t.var("u")
    den = t.one()
    for i in range(n):
        den = den * (1 - t.var(f"a{i + 1}") ** 2 * u**2)
    assert local_euler_factor(EulerInput(n, -1)) == RationalFn(t.one(), den)


def test_rank_one_examples():
    t = euler_table(1)
    a, u, v = t.gens()
    assert local_euler_factor(EulerInput(1, 1)) == RationalFn(t.one(), (1 - a * u) ** 2)
    assert h_at_identity(EulerInput(1, 1)) == RationalFn(1 + a * u, 1 - a * u)
    assert h_at_identity(EulerInput(1, -1)) == 1
    assert unfolding_prefactor(EulerInput(1, 1)) == RationalFn(t.one(), 1 - a**2 * u**2)


@pytest.mark.parametrize("n,eta", CASES)
def test_local_identity(n, eta):
    inp = EulerInput(n, eta)
    assert verify_local_identity(inp)
    assert ratio_check(inp)


@pytest.mark.parametrize("n,eta", CASES)
def test_identity_value_from_norm_factor(n, eta):
    assert norm_factor_check(EulerInput(n, eta))


def test_wrong_torus_fails():
    # the inert value does not come from the split factor
    inp = EulerInput(2, -1)
    assert h_from_norm_factor(EulerInput(2, 1)) != h_at_identity(inp)


def test_off_diagonal_prefactor_alone_fails():
    inp = EulerInput(2, 1)
    t = euler_table(2)
    a1, a2, u, v = t.gens()
    partial = RationalFn(t.one(), (1 - a1 * a2 * u**2) * (1 - a1 * a2**-1 * v**2))
    assert partial * h_at_identity(inp) != local_euler_factor(inp)
