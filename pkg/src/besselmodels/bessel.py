"""SO(2n+1): explicit spherical Bessel values for nonsplit and split tori.

Variables are ``a1..an`` (alpha_i = chi_i(varpi)), ``b`` (beta =
lambda(varpi), split case only) and ``v`` (q**(-1/2)).  Values are returned
as :class:`~besselmodels.algebra.Scaled`: a Laurent polynomial in all
variables times a scalar 1, 1/(1 + v**2) or 1/(1 - v**2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .algebra import LaurentPoly, RationalFn, SatakeNumeric, Scaled, VarTable
from .weyl import (
    SignedPerm,
    act,
    alpha_names,
    alternator,
    divide_by_weyl_denominator,
    positive_roots,
)

SPLIT = "split"
NONSPLIT = "nonsplit"


@lru_cache(maxsize=None)
def table_for(n: int, case: str = NONSPLIT) -> VarTable:
    if case == NONSPLIT:
        return VarTable(alpha_names(n) + ("v",))
    if case == SPLIT:
        return VarTable(alpha_names(n) + ("b", "v"))
    raise ValueError(f"unknown torus kind {case!r}")


@dataclass(frozen=True)
class BesselIndex:
    """Coset index k = (k_1, ..., k_n), all entries nonnegative."""

    k: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "k", tuple(int(x) for x in self.k))
        if not self.k:
            raise ValueError("empty index")
        if any(x < 0 for x in self.k):
            raise ValueError(f"index {self.k} has a negative entry; the value is zero there")

    @property
    def n(self) -> int:
        return len(self.k)

    @property
    def kprime(self) -> tuple[int, ...]:
        out, s = [], 0
        for x in self.k:
            s += x
            out.append(s)
        return tuple(out)

    def shifted(self) -> BesselIndex:
        """(k_1 - 1, k_2 + 1, k_3, ..., k_n)."""
        k = list(self.k)
        k[0] -= 1
        if len(k) > 1:
            k[1] += 1
        return BesselIndex(tuple(k))


def _index(k) -> BesselIndex:
    return k if isinstance(k, BesselIndex) else BesselIndex(tuple(k))


def e_exponent(k) -> int:
    """Exponent of v encoding q**e_k, i.e. sum_i (n**2 - (i-1)**2) k_i."""
    k = _index(k)
    n = k.n
    return sum((n * n - i * i) * ki for i, ki in enumerate(k.k))


def _vars(n: int, case: str):
    t = table_for(n, case)
    a = [t.var(x) for x in alpha_names(n)]
    v = t.var("v")
    b = t.var("b") if case == SPLIT else None
    return t, a, b, v


def _beta_pair(a_i, b, v):
    return (1 - a_i * b * v) * (1 - a_i * b**-1 * v)


def _quotient(n: int, numerator: LaurentPoly) -> LaurentPoly:
    return divide_by_weyl_denominator(n, alternator(n, numerator))


@lru_cache(maxsize=None)
def h_nonsplit(k) -> Scaled:
    k = _index(k)
    n = k.n
    t, a, _, v = _vars(n, NONSPLIT)
    kp = k.kprime
    body = t.one()
    for i in range(1, n + 1):
        body = body * a[n - i] ** (-kp[i - 1] - i) * (1 - a[i - 1] ** 2 * v**2)
    poly = v ** e_exponent(k) * _quotient(n, body)
    return Scaled(poly, RationalFn(t.one(), 1 + v**2))


def _split_k1_zero_body(k: BesselIndex, with_dropped_factor: bool) -> LaurentPoly:
    n = k.n
    t, a, b, v = _vars(n, SPLIT)
    kp = k.kprime
    body = a[n - 1] ** -1
    if with_dropped_factor:
        body = body * (1 - a[n - 1] * b**-1 * v)
    for i in range(1, n):
        body = body * a[i - 1] ** (-kp[n - i] - n - 1 + i) * _beta_pair(a[i - 1], b, v)
    return body


@lru_cache(maxsize=None)
def h_split(k) -> Scaled:
    k = _index(k)
    n = k.n
    t, a, b, v = _vars(n, SPLIT)
    if k.k[0] == 0:
        poly = v ** e_exponent(k) * _quotient(n, _split_k1_zero_body(k, False))
        return Scaled.plain(poly)
    kp = k.kprime
    body = t.one()
    for i in range(1, n + 1):
        body = body * a[n - i] ** (-kp[i - 1] - i) * _beta_pair(a[i - 1], b, v)
    poly = v ** e_exponent(k) * _quotient(n, body)
    return Scaled(poly, RationalFn(t.one(), 1 - v**2))


def h_value(k, case: str) -> Scaled:
    if case == NONSPLIT:
        return h_nonsplit(k)
    if case == SPLIT:
        return h_split(k)
    raise ValueError(f"unknown torus kind {case!r}")


def k1_zero_dropped_term(k) -> LaurentPoly:
    """Alternator of the extra term in the k_1 = 0 split formula.

    It is independent of a_n, so the result is identically zero.
    """
    k = _index(k)
    if k.k[0] != 0:
        raise ValueError("only meaningful for k_1 = 0")
    n = k.n
    t, a, b, v = _vars(n, SPLIT)
    kp = k.kprime
    body = a[n - 1] ** -1 * (-a[n - 1] * b**-1 * v)
    for i in range(1, n):
        body = body * a[i - 1] ** (-kp[n - i] - n - 1 + i) * _beta_pair(a[i - 1], b, v)
    return alternator(n, body)


@lru_cache(maxsize=None)
def b_symmetrized(k) -> LaurentPoly:
    """Normalized B(k) from the symmetrized Casselman-Shalika expansion."""
    k = _index(k)
    n = k.n
    t, a, b, v = _vars(n, SPLIT)
    kp = k.kprime
    body = (1 - a[n - 1] * b**-1 * v) * a[0] ** (-kp[n - 1] - n)
    for i in range(1, n):
        body = body * a[n - i] ** (-kp[i - 1] - i) * _beta_pair(a[i - 1], b, v)
    return v ** e_exponent(k) * _quotient(n, body)


def recursion_check(k) -> bool:
    """H(k) == (1 - 1/q)**-1 (B(k) - q**-1 b B(k_1 - 1, k_2 + 1, ...)) for k_1 > 0."""
    k = _index(k)
    if k.k[0] <= 0:
        raise ValueError("the recursion needs k_1 > 0")
    t, _, b, v = _vars(k.n, SPLIT)
    rhs = (b_symmetrized(k) - v**2 * b * b_symmetrized(k.shifted())) / (1 - v**2)
    return h_split(k).value == rhs


def norm_factor_nonsplit(n: int) -> RationalFn:
    """Factor F with normalized H = F * H (nonsplit torus)."""
    t, a, _, v = _vars(n, NONSPLIT)
    den = t.one()
    for i in range(n):
        for j in range(i + 1, n):
            den = den * (1 - a[i] * a[j] * v**2) * (1 - a[i] * a[j] ** -1 * v**2)
    return RationalFn(t.one(), den)


def norm_factor_split(n: int) -> RationalFn:
    t, a, b, v = _vars(n, SPLIT)
    num = t.one()
    den = t.one()
    for i in range(n):
        num = num * _beta_pair(a[i], b, v)
        den = den * (1 - a[i] ** 2 * v**2)
        for j in range(i + 1, n):
            den = den * (1 - a[i] * a[j] * v**2) * (1 - a[i] * a[j] ** -1 * v**2)
    return RationalFn(num, den)


def c_w(w: SignedPerm, table: VarTable | None = None) -> RationalFn:
    """Gindikin-Karpelevich coefficient: prod over r > 0, w r < 0 of (1 - v^2 x_r)/(1 - x_r)."""
    n = w.n
    if table is None:
        table = table_for(n, NONSPLIT)
    v = table.var("v")
    names = alpha_names(n)
    out = RationalFn(table.one())
    for r in positive_roots(n):
        wr = w.apply(r)
        if next(x for x in wr if x) < 0:
            x = table.monomial(dict(zip(names, r)))
            out = out * RationalFn(1 - v**2 * x, 1 - x)
    return out


def twisted_c_w(w: SignedPerm, twist: SignedPerm, table: VarTable | None = None) -> RationalFn:
    """c_w evaluated at the character twisted by ``twist``."""
    return act(twist.inverse(), c_w(w, table))


def long_element(n: int) -> SignedPerm:
    return SignedPerm(tuple(range(n)), (-1,) * n)


def w1_element(n: int) -> SignedPerm:
    """Inverts a_1 .. a_{n-1} and fixes a_n."""
    return SignedPerm(tuple(range(n)), (-1,) * (n - 1) + (1,))


# -- convergence regions --------------------------------------------------------

def _alphas(point: SatakeNumeric, n: int) -> list:
    return [abs(point[x]) for x in alpha_names(n)]


def nonsplit_region(point: SatakeNumeric, n: int) -> bool:
    """|a_1| < ... < |a_{n-1}| < min(|a_n|, |a_n|**-1)."""
    a = _alphas(point, n)
    chain = a[:-1] + [min(a[-1], 1 / a[-1])]
    return all(x < y for x, y in zip(chain, chain[1:]))


def split_region(point: SatakeNumeric, n: int) -> bool:
    """The nonsplit chain plus |a_n| < q**(1/2) min(|b|, |b|**-1)."""
    if not nonsplit_region(point, n):
        return False
    an = abs(point[f"a{n}"])
    b = abs(point["b"])
    return an**2 < point.q * min(b, 1 / b) ** 2


def rank1_dictionary(table: VarTable) -> dict[str, LaurentPoly]:
    """(g1, g2, t) -> (a1, 1/a1, b): the SO(3) = PGL(2) identification."""
    a1 = table.var("a1")
    return {"g1": a1, "g2": a1**-1, "t": table.var("b")}


def _as_index(seq: Sequence[int]) -> BesselIndex:
    return BesselIndex(tuple(seq))
