"""Local Euler factor of the Bessel period of a Siegel-type Eisenstein series.

Variables are ``a1..an``, ``u`` and ``v``.  Here ``v = q**(-1/2)`` and
``u = q**(-n(s-1/2)-1/2)``, so ``u**2 = q**(-1-2n(s-1/2))`` and the L-function
arguments become plain powers of ``u``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import RationalFn, VarTable, substitute
from .bessel import NONSPLIT, SPLIT, norm_factor_nonsplit, norm_factor_split
from .weyl import alpha_names


@lru_cache(maxsize=None)
def euler_table(n: int) -> VarTable:
    return VarTable(alpha_names(n) + ("u", "v"))


@dataclass(frozen=True)
class EulerInput:
    n: int
    eta: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("rank must be at least 1")
        if self.eta not in (1, -1):
            raise ValueError("eta must be +1 (split place) or -1 (inert place)")


def _vars(n: int):
    t = euler_table(n)
    return t, [t.var(x) for x in alpha_names(n)], t.var("u"), t.var("v")


def local_euler_factor(inp: EulerInput) -> RationalFn:
    """L(., pi) L(., pi x eta) = prod_i (1 - a_i u)^-1 (1 - eta a_i u)^-1."""
    t, a, u, v = _vars(inp.n)
    den = t.one()
    for ai in a:
        den = den * (1 - ai * u) * (1 - inp.eta * ai * u)
    return RationalFn(t.one(), den)


def h_at_identity(inp: EulerInput) -> RationalFn:
    """H(1) at the substituted parameters, in closed form."""
    t, a, u, v = _vars(inp.n)
    num, den = t.one(), t.one()
    for i in range(inp.n):
        for j in range(i + 1, inp.n):
            num = num * (1 - a[i] * a[j] * u**2) * (1 - a[i] * a[j] ** -1 * v**2)
        num = num * (1 + inp.eta * a[i] * u)
        den = den * (1 - a[i] * u)
    return RationalFn(num, den)


def unfolding_prefactor(inp: EulerInput) -> RationalFn:
    t, a, u, v = _vars(inp.n)
    den = t.one()
    for i in range(inp.n):
        for j in range(i, inp.n):
            den = den * (1 - a[i] * a[j] * u**2)
            if j > i:
                den = den * (1 - a[i] * a[j] ** -1 * v**2)
    return RationalFn(t.one(), den)


def verify_local_identity(inp: EulerInput) -> bool:
    return unfolding_prefactor(inp) * h_at_identity(inp) == local_euler_factor(inp)


def ratio_check(inp: EulerInput) -> bool:
    """(local factor) / (prefactor) == H(1), checked directly as a quotient."""
    return local_euler_factor(inp) / unfolding_prefactor(inp) == h_at_identity(inp)


def h_from_norm_factor(inp: EulerInput) -> RationalFn:
    """H(1) = 1 / F, with F the SO(2n+1) normalizing factor at a_i -> a_i u / v, beta -> 1.

    A split place (eta = +1) uses the split-torus factor and an inert place the
    nonsplit one.
    """
    t, a, u, v = _vars(inp.n)
    case = SPLIT if inp.eta == 1 else NONSPLIT
    factor = norm_factor_split(inp.n) if case == SPLIT else norm_factor_nonsplit(inp.n)
    bindings = {f"a{i + 1}": a[i] * u * v**-1 for i in range(inp.n)}
    bindings["v"] = v
    if case == SPLIT:
        bindings["b"] = t.one()
    f = substitute(factor.num, bindings, t) / substitute(factor.den, bindings, t)
    return RationalFn(t.one()) / f


def norm_factor_check(inp: EulerInput) -> bool:
    return h_from_norm_factor(inp) == h_at_identity(inp)
