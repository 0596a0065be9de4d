"""GL(2): split Waldspurger values, Whittaker values, rank-one spherical values.

Variables: ``g1, g2`` for gamma_i = xi_i(varpi), ``t`` for tau = sigma(varpi)
and ``v`` for q**(-1/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import (
    LaurentPoly,
    RationalFn,
    SatakeNumeric,
    Scaled,
    VarTable,
    exact_div,
)

GL2 = VarTable(("g1", "g2", "t", "v"))


class RegionError(ValueError):
    """Numeric point outside the region where the defining integral converges."""


@dataclass(frozen=True)
class GL2Params:
    """A numeric GL(2) point; ``q`` must be a rational square."""

    q: Fraction
    g1: Fraction
    g2: Fraction
    t: Fraction = Fraction(1)

    def numeric(self) -> SatakeNumeric:
        return SatakeNumeric(self.q, {"g1": self.g1, "g2": self.g2, "t": self.t})


def _gens(table=GL2):
    return (table.var(x) for x in ("g1", "g2", "t", "v"))


def wa_normalizer() -> RationalFn:
    """Factor N with  normalized Wa = N * Wa."""
    g1, g2, t, v = _gens()
    return (1 - g1 * t**-1 * v) * (1 - g2**-1 * t * v) / (1 - g1 * g2**-1 * v**2)


@lru_cache(maxsize=None)
def wa_value(k: int) -> Scaled:
    """Normalized split Waldspurger value at eta_k, as (1-v**2)**-1 * polynomial.

    The two-term bracket is put over the common denominator
    (1 - g2/g1)(1 - g1/g2) and divided exactly, so the value also makes sense
    on the diagonal g1 == g2.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    g1, g2, t, v = _gens()
    first = g1**k * (1 - g2 * t**-1 * v) * (1 - g1**-1 * t * v)
    second = g2**k * (1 - g1 * t**-1 * v) * (1 - g2**-1 * t * v)
    d1, d2 = 1 - g1**-1 * g2, 1 - g1 * g2**-1
    bracket = exact_div(first * d2 + second * d1, d1 * d2)
    return Scaled(v**k * bracket, RationalFn(GL2.one(), 1 - v**2))


def whittaker_gl2(k: int, normalized: bool = False) -> LaurentPoly:
    """Spherical Whittaker value at diag(varpi**k, 1); zero for k < 0.

    With ``normalized`` the factor (1 - g1/g2 * v**2) is removed, giving a
    polynomial symmetric in g1, g2.
    """
    g1, g2, t, v = _gens()
    if k < 0:
        return GL2.zero()
    h = exact_div(g1 ** (k + 1) - g2 ** (k + 1), g1 - g2)
    if normalized:
        return v**k * h
    return v**k * (1 - g1 * g2**-1 * v**2) * h


@lru_cache(maxsize=None)
def _macdonald_table(alpha: str) -> VarTable:
    return VarTable((alpha, "v"))


def macdonald_rank1(k: int, alpha: str = "a1", v: str = "v", table: VarTable | None = None) -> Scaled:
    """Rank-one spherical function (1+q**-1)**-1 q**(-k/2) [...] / (g - 1/g)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if table is None:
        table = _macdonald_table(alpha) if v == "v" else VarTable((alpha, v))
    g, vv = table.var(alpha), table.var(v)
    num = (g - g**-1 * vv**2) * g**k - (g**-1 - g * vv**2) * g ** (-k)
    body = exact_div(num, g - g**-1)
    return Scaled(vv**k * body, RationalFn(table.one(), 1 + vv**2))


def wa_region(point: SatakeNumeric) -> bool:
    """|g1/t| < q**(1/2) and |t/g2| < q**(1/2), strictly."""
    g1, g2, t = point["g1"], point["g2"], point["t"]
    return (g1 / t) ** 2 < point.q and (t / g2) ** 2 < point.q


# Multiplicative Haar measure with vol(O^x) = 1.  On the unit shell, with
# i = val(a + 1): i = 0 is O^x minus (-1 + varpi O), additive volume
# 1 - 2/q; i >= 1 has additive volume q**-i (1 - 1/q).  Dividing by
# vol_additive(O^x) = 1 - 1/q gives the constants below.

def _unit_shell_measure(q: Fraction, i: int) -> Fraction:
    if i == 0:
        return (1 - 2 / q) / (1 - 1 / q)
    return q ** (-i)


def _unit_shell_tail(q: Fraction, i0: int) -> Fraction:
    """Measure of {a in O^x : val(a+1) >= i0}."""
    if i0 == 0:
        return Fraction(1)
    return q ** (-i0) / (1 - 1 / q)


def _phi(g1, g2, v, d: int, m: int) -> Fraction:
    # spherical vector at a matrix with det valuation d, bottom-row valuation m
    return g1 ** (d - m) * g2**m * v ** (d - 2 * m)


def oracle_wa_integral(k: int, point: SatakeNumeric) -> Fraction:
    """Un-normalized Wa(eta_k) by summing the defining integral shell by shell.

    The integrand is phi([[0, 1], [a varpi**k, a + 1]]) * sigma(a)**-1.  On the
    shell val(a) = j it depends only on j, val(a + 1) and k, and each infinite
    family of shells is a geometric series summed in closed form.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if not wa_region(point):
        raise RegionError("point violates |g1/t| < q^(1/2), |t/g2| < q^(1/2)")
    q, v = point.q, point.v
    g1, g2, t = point["g1"], point["g2"], point["t"]

    # val(a) = j >= 1: val(a+1) = 0, m = 0, d = j + k
    x = g1 / t * v
    outer_small = _phi(g1, g2, v, k, 0) * x / (1 - x)
    # val(a) = j <= -1: val(a+1) = j, m = j, d = j + k
    y = t / g2 * v
    outer_large = g1**k * v**k * y / (1 - y)
    # val(a) = 0: split by i = val(a+1); m = min(k, i), d = k
    unit = sum(
        (_unit_shell_measure(q, i) * _phi(g1, g2, v, k, i) for i in range(k)),
        Fraction(0),
    )
    unit += _unit_shell_tail(q, k) * _phi(g1, g2, v, k, k)
    return outer_small + outer_large + unit


# -- Casselman basis relations ------------------------------------------------

def w_f_w0() -> RationalFn:
    """Functional on the long-element Casselman vector: (1 - v t/g2)**-1."""
    g1, g2, t, v = _gens()
    return RationalFn(GL2.one(), 1 - v * t * g2**-1)


def _t_w0_coefficient() -> RationalFn:
    g1, g2, t, v = _gens()
    return (1 - v**2 * g1 * g2**-1) / (1 - g1 * g2**-1)


def w_f_1() -> RationalFn:
    """Functional on the identity Casselman vector, pinned by normalized Wa(1) = 1."""
    g1, g2, t, v = _gens()
    wa1 = RationalFn(GL2.one()) / wa_normalizer()
    lhs = (1 - v**2) * wa1
    return (lhs - _t_w0_coefficient() * w_f_w0() * (1 - v * t * g2**-1)) / (1 - v * t * g1**-1)


def w_F(k: int) -> RationalFn:
    """W(F_k) from the Casselman-basis expansion of F_k."""
    g1, g2, t, v = _gens()
    return w_f_1() * v**k * g1**k + _t_w0_coefficient() * v**k * g2**k * w_f_w0()


def w_zeta(k: int) -> RationalFn:
    """W(zeta_k) = Wa(eta_k), un-normalized."""
    return wa_value(k).value / wa_normalizer()


def casselman_relation_holds(k: int) -> bool:
    """(1 - 1/q) W(zeta_k) == W(F_k) - q**-1 t W(F_{k-1}) for k >= 1."""
    if k < 1:
        raise ValueError("the relation needs k >= 1")
    g1, g2, t, v = _gens()
    return (1 - v**2) * w_zeta(k) == w_F(k) - v**2 * t * w_F(k - 1)
