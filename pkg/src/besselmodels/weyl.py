"""The hyperoctahedral group (Weyl group of type C_n) acting on Satake parameters.

A signed permutation ``w`` acts on exponent vectors by
``w . e_i = signs[i] * e_{perm[i]}``, and on Laurent polynomials in the
parameters ``a1..an`` through their exponent vectors, so the generators are
the transpositions of the ``a_i`` and the inversion ``a_n -> a_n**-1``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

from .algebra import LaurentPoly, RationalFn, VarTable, div_one_minus_monomial


def alpha_names(n: int) -> tuple[str, ...]:
    return tuple(f"a{i}" for i in range(1, n + 1))


@lru_cache(maxsize=None)
def positive_roots(n: int) -> tuple[tuple[int, ...], ...]:
    """Positive roots of type C_n as exponent vectors of the monomials chi(a_r).

    ``e_i - e_j`` and ``e_i + e_j`` (i < j) give ``a_i/a_j`` and ``a_i*a_j``;
    ``2 e_i`` gives ``a_i**2``.  A vector is positive iff its first nonzero
    entry is positive.
    """
    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            r = [0] * n
            r[i], r[j] = 1, -1
            roots.append(tuple(r))
            r = [0] * n
            r[i], r[j] = 1, 1
            roots.append(tuple(r))
        r = [0] * n
        r[i] = 2
        roots.append(tuple(r))
    return tuple(roots)


def is_positive(vec: Sequence[int]) -> bool:
    for x in vec:
        if x:
            return x > 0
    raise ValueError("zero vector has no sign")


@dataclass(frozen=True)
class SignedPerm:
    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"{self.perm} is not a permutation of 0..n-1")
        if len(self.signs) != len(self.perm) or any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"bad sign vector {self.signs}")

    @classmethod
    def identity(cls, n: int) -> SignedPerm:
        return cls(tuple(range(n)), (1,) * n)

    @classmethod
    def transposition(cls, n: int, i: int) -> SignedPerm:
        """Swap slots ``i`` and ``i+1`` (0-based)."""
        p = list(range(n))
        p[i], p[i + 1] = p[i + 1], p[i]
        return cls(tuple(p), (1,) * n)

    @classmethod
    def flip(cls, n: int, i: int) -> SignedPerm:
        s = [1] * n
        s[i] = -1
        return cls(tuple(range(n)), tuple(s))

    @property
    def n(self) -> int:
        return len(self.perm)

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        out = [0] * self.n
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            out[p] = s * vec[i]
        return tuple(out)

    def __mul__(self, other: SignedPerm) -> SignedPerm:
        # (self * other) . x == self . (other . x)
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
        signs = tuple(other.signs[i] * self.signs[other.perm[i]] for i in range(self.n))
        return SignedPerm(perm, signs)

    def inverse(self) -> SignedPerm:
        perm = [0] * self.n
        signs = [1] * self.n
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            perm[p] = i
            signs[p] = s
        return SignedPerm(tuple(perm), tuple(signs))

    def is_identity(self) -> bool:
        return self == SignedPerm.identity(self.n)

    @cached_property
    def length(self) -> int:
        """Number of positive roots sent to negative roots."""
        return sum(1 for r in positive_roots(self.n) if not is_positive(self.apply(r)))

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def __str__(self):
        body = ", ".join(f"{'-' if s < 0 else ''}{p + 1}" for p, s in zip(self.perm, self.signs))
        return f"[{body}]"


@lru_cache(maxsize=None)
def enumerate_omega(n: int) -> tuple[SignedPerm, ...]:
    """All ``2**n * n!`` elements, in a fixed order (identity first)."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    out = []
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            w = SignedPerm(perm, signs)
            w.length  # fill the cache once
            out.append(w)
    return tuple(out)


def generators(n: int) -> tuple[SignedPerm, ...]:
    return tuple(SignedPerm.transposition(n, i) for i in range(n - 1)) + (SignedPerm.flip(n, n - 1),)


def _alpha_positions(table: VarTable, alphas: Sequence[str]) -> list[int]:
    return [table.index(a) for a in alphas]


def _exponent_map(w: SignedPerm, pos: list[int]):
    pairs = [(pos[i], pos[p], s) for i, (p, s) in enumerate(zip(w.perm, w.signs))]

    def f(e):
        ne = list(e)
        for src, dst, s in pairs:
            ne[dst] = s * e[src]
        return tuple(ne)

    return f


def act(w: SignedPerm, p, alphas: Sequence[str] | None = None):
    """Apply ``w`` to the parameters ``alphas`` of a polynomial or rational function."""
    if alphas is None:
        alphas = alpha_names(w.n)
    if isinstance(p, RationalFn):
        return RationalFn(act(w, p.num, alphas), act(w, p.den, alphas))
    return p.map_exponents(_exponent_map(w, _alpha_positions(p.table, alphas)))


def alternator(n: int, p: LaurentPoly, alphas: Sequence[str] | None = None) -> LaurentPoly:
    """Signed sum of ``w . p`` over the whole group."""
    if alphas is None:
        alphas = alpha_names(n)
    pos = _alpha_positions(p.table, alphas)
    out: dict[tuple, object] = {}
    for w in enumerate_omega(n):
        f = _exponent_map(w, pos)
        s = w.sign
        for e, c in p.terms.items():
            ne = f(e)
            out[ne] = out.get(ne, 0) + s * c
    return LaurentPoly(p.table, out)


def is_invariant(n: int, p, alphas: Sequence[str] | None = None) -> bool:
    return all(act(w, p, alphas) == p for w in generators(n))


def weyl_denominator_forms(n: int, table: VarTable | None = None) -> tuple[LaurentPoly, LaurentPoly]:
    """(alternator form, product form) of the type C_n Weyl denominator."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    if table is None:
        table = VarTable(alpha_names(n))
    a = [table.var(x) for x in alpha_names(n)]
    rho = {f"a{i}": n + 1 - i for i in range(1, n + 1)}
    alt = alternator(n, table.monomial(rho)) * (-1) ** n
    prod = table.one()
    for i in range(1, n + 1):
        prod = prod * table.monomial({f"a{i}": -1 + i - n}) * (1 - a[i - 1] ** 2)
    for i in range(n):
        for j in range(i + 1, n):
            prod = prod * (1 - a[i] * a[j]) * (1 - a[i] * a[j] ** -1)
    return alt, prod


@lru_cache(maxsize=None)
def weyl_denominator(n: int, table: VarTable | None = None) -> LaurentPoly:
    alt, prod = weyl_denominator_forms(n, table)
    if alt != prod:
        raise AssertionError(f"Weyl denominator identity fails at rank {n}")
    return alt


def divide_by_weyl_denominator(n: int, p: LaurentPoly, alphas: Sequence[str] | None = None) -> LaurentPoly:
    """Exact quotient p / Delta, one root factor (1 - x_r) at a time.

    Raises NotDivisible when p is not a multiple of Delta.
    """
    if alphas is None:
        alphas = alpha_names(n)
    pos = _alpha_positions(p.table, alphas)
    width = len(p.table)

    def embed(vec):
        e = [0] * width
        for i, x in zip(pos, vec):
            e[i] = x
        return e

    # Delta = a1^-n a2^(1-n) ... an^-1 * prod_r (1 - x_r); undo the monomial first
    shift = embed([n - i for i in range(n)])
    out = p.map_exponents(lambda e: tuple(a + b for a, b in zip(e, shift)))
    for r in positive_roots(n):
        out = div_one_minus_monomial(out, embed(r))
    return out


# -- the rank-2 group acting on the four GSp(4) parameters ------------------
#
# The parameters a1..a4 are the weights (1/2,1/2), (1/2,-1/2), (-1/2,-1/2),
# (-1/2,1/2) of the four-dimensional representation; the relation
# a1*a3 == a2*a4 is built in by eliminating a4 = a1*a3/a2.

GSP4_ALPHAS = ("a1", "a2", "a3")
_A4_COORDS = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, -1, 1))


@dataclass(frozen=True)
class Omega4Elem:
    """Permutation ``a_i -> a_{images[i]}`` (0-based) of the four parameters."""

    images: tuple[int, int, int, int]
    length: int

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def __str__(self):
        return "(" + " ".join(f"a{i + 1}->a{j + 1}" for i, j in enumerate(self.images)) + ")"


OMEGA4_GENERATORS = ((0, 3, 2, 1), (1, 0, 3, 2))  # (a2 a4), (a1 a2)(a3 a4)


@lru_cache(maxsize=None)
def omega4_elements() -> tuple[Omega4Elem, ...]:
    """The 8 elements, with Coxeter length from the simple generators."""
    ident = (0, 1, 2, 3)
    dist = {ident: 0}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in OMEGA4_GENERATORS:
            y = tuple(g[x[i]] for i in range(4))
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    for x in dist:
        if not _preserves_relation(x):
            raise AssertionError(f"{x} breaks a1*a3 == a2*a4")
    return tuple(Omega4Elem(x, d) for x, d in sorted(dist.items(), key=lambda kv: (kv[1], kv[0])))


def _preserves_relation(images) -> bool:
    return {frozenset((images[0], images[2])), frozenset((images[1], images[3]))} == {
        frozenset((0, 2)), frozenset((1, 3))}


def act4(w: Omega4Elem, p, alphas: Sequence[str] = GSP4_ALPHAS):
    if isinstance(p, RationalFn):
        return RationalFn(act4(w, p.num, alphas), act4(w, p.den, alphas))
    pos = _alpha_positions(p.table, alphas)
    images = [_A4_COORDS[w.images[i]] for i in range(3)]

    def f(e):
        ne = list(e)
        for j in pos:
            ne[j] = 0
        for i in range(3):
            k = e[pos[i]]
            if k:
                for j in range(3):
                    ne[pos[j]] += k * images[i][j]
        return tuple(ne)

    return p.map_exponents(f)


def alternator4(p: LaurentPoly, alphas: Sequence[str] = GSP4_ALPHAS) -> LaurentPoly:
    out = p.table.zero()
    for w in omega4_elements():
        out = out + act4(w, p, alphas) * w.sign
    return out


def is_invariant4(p, alphas: Sequence[str] = GSP4_ALPHAS) -> bool:
    gens = [w for w in omega4_elements() if w.length == 1]
    return all(act4(w, p, alphas) == p for w in gens)


def alpha4(table: VarTable) -> LaurentPoly:
    """a4 expressed through a1*a3/a2."""
    return table.monomial({"a1": 1, "a2": -1, "a3": 1})
