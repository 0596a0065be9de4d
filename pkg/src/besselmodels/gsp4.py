"""GSp(4): explicit Bessel values in the four-parameter presentation.

The relations a1*a3 == a2*a4 and a1*a3 == b1*b2 are imposed by eliminating
a4 and b2, so the variable tables are (a1, a2, a3, v) in the nonsplit case and
(a1, a2, a3, b1, v) in the split case.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import LaurentPoly, RationalFn, SatakeNumeric, Scaled, VarTable, exact_div, substitute
from .bessel import NONSPLIT, SPLIT, h_value, table_for
from .weyl import alpha4, alternator4

GSP4_NONSPLIT = VarTable(("a1", "a2", "a3", "v"))
GSP4_SPLIT = VarTable(("a1", "a2", "a3", "b1", "v"))


def gsp4_table(case: str) -> VarTable:
    if case == NONSPLIT:
        return GSP4_NONSPLIT
    if case == SPLIT:
        return GSP4_SPLIT
    raise ValueError(f"unknown torus kind {case!r}")


def _params(case: str):
    t = gsp4_table(case)
    a1, a2, a3, v = (t.var(x) for x in ("a1", "a2", "a3", "v"))
    a4 = alpha4(t)
    if case == SPLIT:
        b1 = t.var("b1")
        b2 = a1 * a3 * b1**-1
        return t, (a1, a2, a3, a4), (b1, b2), v
    return t, (a1, a2, a3, a4), None, v


@lru_cache(maxsize=None)
def gsp4_denominator(case: str) -> LaurentPoly:
    t, (a1, a2, a3, a4), _, _ = _params(case)
    return alternator4(a3**2 * a4**-1)


def _check_kl(k: int, l: int):
    if k < 0 or l < 0:
        raise ValueError("k and l must be nonnegative")


@lru_cache(maxsize=None)
def h_gsp4_nonsplit(k: int, l: int) -> Scaled:
    _check_kl(k, l)
    t, (a1, a2, a3, a4), _, v = _params(NONSPLIT)
    body = a3 ** (k + l + 2) * a2**l * a4**-1 * (1 - a1 * a3**-1 * v**2) * (1 - a4 * a2**-1 * v**2)
    poly = v ** (3 * k + 4 * l) * exact_div(alternator4(body), gsp4_denominator(NONSPLIT))
    return Scaled(poly, RationalFn(t.one(), 1 + v**2))


@lru_cache(maxsize=None)
def h_gsp4_split(k: int, l: int) -> Scaled:
    _check_kl(k, l)
    t, (a1, a2, a3, a4), (b1, b2), v = _params(SPLIT)
    if l == 0:
        body = a3 ** (k + 2) * a4**-1 * (1 - a1 * b1**-1 * v) * (1 - a1 * b2**-1 * v)
        poly = v ** (3 * k) * exact_div(alternator4(body), gsp4_denominator(SPLIT))
        return Scaled.plain(poly)
    body = a3 ** (k + l + 2) * a2**l * a4**-1
    for ai in (a1, a4):
        for bj in (b1, b2):
            body = body * (1 - ai * bj**-1 * v)
    poly = v ** (3 * k + 4 * l) * exact_div(alternator4(body), gsp4_denominator(SPLIT))
    return Scaled(poly, RationalFn(t.one(), 1 - v**2))


def h_gsp4(k: int, l: int, case: str) -> Scaled:
    if case == NONSPLIT:
        return h_gsp4_nonsplit(k, l)
    if case == SPLIT:
        return h_gsp4_split(k, l)
    raise ValueError(f"unknown torus kind {case!r}")


def gsp4_norm_factors(case: str) -> RationalFn:
    """Factor F with normalized H = F * H."""
    t, (a1, a2, a3, a4), b, v = _params(case)
    if case == NONSPLIT:
        return RationalFn(t.one(), (1 - a1 * a2**-1 * v**2) * (1 - a2 * a3**-1 * v**2))
    b1, b2 = b
    num = t.one()
    for ai in (a1, a2):
        for bj in (b1, b2):
            num = num * (1 - ai * bj**-1 * v)
    den = (
        (1 - a1 * a2**-1 * v**2)
        * (1 - a1 * a3**-1 * v**2)
        * (1 - a2 * a3**-1 * v**2)
        * (1 - a2 * a4**-1 * v**2)
    )
    return RationalFn(num, den)


# -- SO(5) <-> GSp(4) parameter dictionary search ---------------------------

_EXPONENTS = (-1, 0, 1)


@dataclass(frozen=True)
class Candidate:
    """a_i = alpha1**x_i * alpha2**y_i; SO(5) index (k1, k2) read off (k, l)."""

    a_exps: tuple[tuple[int, int], tuple[int, int], tuple[int, int]]
    swap_index: bool
    beta_sign: int = 1

    def so5_index(self, k: int, l: int) -> tuple[int, int]:
        return (l, k) if self.swap_index else (k, l)

    def describe(self) -> dict:
        def mono(x, y):
            parts = [f"alpha{i}" if e == 1 else f"alpha{i}^{e}" for i, e in ((1, x), (2, y)) if e]
            return "*".join(parts) or "1"

        out = {f"a{i + 1}": mono(*e) for i, e in enumerate(self.a_exps)}
        central = [x + y for x, y in zip(self.a_exps[0], self.a_exps[2])]
        out["a4"] = mono(self.a_exps[0][0] + self.a_exps[2][0] - self.a_exps[1][0],
                         self.a_exps[0][1] + self.a_exps[2][1] - self.a_exps[1][1])
        out["index"] = "(k1, k2) = (l, k)" if self.swap_index else "(k1, k2) = (k, l)"
        if central != [0, 0]:
            out["note"] = "a1*a3 != 1"
        out["b1"] = "beta" if self.beta_sign > 0 else "beta^-1"
        return out


def _random_point(rng: random.Random, case: str) -> dict[str, Fraction]:
    pool = [Fraction(p, r) for p in range(1, 8) for r in range(1, 8) if Fraction(p, r) != 1]
    pt = {"a1": rng.choice(pool), "a2": rng.choice(pool)}
    if case == SPLIT:
        pt["b"] = rng.choice(pool)
    return pt


def find_dictionary(case: str = NONSPLIT, seed: int = 0, points: int = 3,
                    q: Fraction = Fraction(9),
                    indices=((0, 1), (1, 0), (1, 1), (2, 1))) -> list[Candidate]:
    """Monomial dictionaries under which the GSp(4) and SO(5) values agree.

    Each a_i ranges over alpha1**x alpha2**y with x, y in {-1, 0, 1}; in the
    split case b1 is beta or beta**-1 and b2 = a1*a3/b1.  A candidate survives
    when the values agree exactly at every sampled point and index.
    """
    rng = random.Random(seed)
    v = SatakeNumeric(Fraction(q), {}).v
    pts = [_random_point(rng, case) for _ in range(points)]
    so5_vals = {}
    for pt in pts:
        for kl in indices:
            for swap in (False, True):
                idx = (kl[1], kl[0]) if swap else kl
                so5_pt = {**pt, "v": v}
                so5_vals[(tuple(pt.items()), kl, swap)] = h_value(idx, case).eval(so5_pt)
    gvals = {kl: h_gsp4(kl[0], kl[1], case) for kl in indices}
    exps = list(itertools.product(_EXPONENTS, repeat=2))
    found = []
    for a_exps in itertools.product(exps, repeat=3):
        for swap in (False, True):
            for bsign in ((1, -1) if case == SPLIT else (1,)):
                cand = Candidate(a_exps, swap, bsign)
                if _candidate_matches(cand, pts, gvals, so5_vals, v, case):
                    found.append(cand)
    return found


def _candidate_matches(cand, pts, gvals, so5_vals, v, case) -> bool:
    for pt in pts:
        x1, x2 = pt["a1"], pt["a2"]
        gp = {f"a{i + 1}": x1**e[0] * x2**e[1] for i, e in enumerate(cand.a_exps)}
        gp["v"] = v
        if case == SPLIT:
            gp["b1"] = pt["b"] ** cand.beta_sign
        for kl, val in gvals.items():
            try:
                lhs = val.eval(gp)
            except ZeroDivisionError:
                return False
            if lhs != so5_vals[(tuple(pt.items()), kl, cand.swap_index)]:
                return False
    return True


def pull_back(cand: Candidate, f, case: str) -> RationalFn:
    """Rewrite a GSp(4) value or factor in the SO(5) variables via ``cand``."""
    target = table_for(2, case)
    x1, x2 = target.var("a1"), target.var("a2")
    bindings = {f"a{i + 1}": x1**e[0] * x2**e[1] for i, e in enumerate(cand.a_exps)}
    bindings["v"] = target.var("v")
    if case == SPLIT:
        bindings["b1"] = target.var("b") ** cand.beta_sign
    if isinstance(f, Scaled):
        f = f.value
    if isinstance(f, LaurentPoly):
        f = RationalFn(f)
    return substitute(f.num, bindings, target) / substitute(f.den, bindings, target)
