"""Exact sparse multivariate Laurent polynomials and rational functions over Q.

Every explicit formula in the package is a Laurent polynomial in a fixed set
of named variables.  The half-integral powers of ``q`` are handled by the
single variable ``v`` standing for ``q**(-1/2)``, so ``q**(-k/2) == v**k``.
"""

from __future__ import annotations

import heapq
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Number = Union[int, Fraction]


class AlgebraError(Exception):
    """Base class for algebra failures."""


class VarTableMismatch(AlgebraError, ValueError):
    pass


class NotDivisible(AlgebraError):
    pass


class PoleAtSubstitution(AlgebraError, ZeroDivisionError):
    pass


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as an exact coefficient")


@dataclass(frozen=True)
class VarTable:
    """Ordered, fixed list of variable names shared by a family of polynomials."""

    names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name) -> bool:
        return name in self.names

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"variable {name!r} not in {self.names}") from None

    def zero(self) -> LaurentPoly:
        return LaurentPoly(self)

    def one(self) -> LaurentPoly:
        return self.const(1)

    def const(self, c: Number) -> LaurentPoly:
        return LaurentPoly(self, {(0,) * len(self): c})

    def var(self, name: str) -> LaurentPoly:
        return self.monomial({name: 1})

    def monomial(self, exps: Mapping[str, int], coeff: Number = 1) -> LaurentPoly:
        e = [0] * len(self)
        for name, k in exps.items():
            e[self.index(name)] += k
        return LaurentPoly(self, {tuple(e): coeff})

    def gens(self) -> tuple[LaurentPoly, ...]:
        return tuple(self.var(x) for x in self.names)


class LaurentPoly:
    """Immutable sparse Laurent polynomial with rational coefficients.

    ``terms`` maps integer exponent vectors (one entry per variable of the
    table) to nonzero ``Fraction`` coefficients.
    """

    __slots__ = ("table", "terms", "_hash")

    def __init__(self, table: VarTable, terms: Mapping[tuple, Number] | None = None):
        self.table = table
        clean: dict[tuple, Fraction] = {}
        if terms:
            n = len(table)
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != n:
                    raise ValueError(f"exponent {e} does not match table {table.names}")
                c = _frac(c)
                if c:
                    clean[e] = clean.get(e, 0) + c
                    if not clean[e]:
                        del clean[e]
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, table: VarTable, terms: dict) -> LaurentPoly:
        # trusted constructor: terms already canonical
        p = cls.__new__(cls)
        p.table = table
        p.terms = terms
        p._hash = None
        return p

    # -- coercion -------------------------------------------------------

    def _coerce(self, other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            if other.table != self.table:
                raise VarTableMismatch(f"{self.table.names} vs {other.table.names}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.table.const(other)
        return None

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.table, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.table, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            if not c:
                return self.table.zero()
            return LaurentPoly._raw(self.table, {e: c * a for e, a in self.terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.terms, o.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[tuple, Fraction] = {}
        get = out.get
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = tuple([x + y for x, y in zip(e1, e2)])
                out[e] = get(e, 0) + c1 * c2
        return LaurentPoly._raw(self.table, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise NotDivisible("negative power of a non-monomial Laurent polynomial")
            (e, c), = self.terms.items()
            return LaurentPoly._raw(self.table, {tuple(k * x for x in e): c ** k})
        result = self.table.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / _frac(other))
        if isinstance(other, LaurentPoly):
            return RationalFn(self, other)
        if isinstance(other, RationalFn):
            return RationalFn(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFn(o, self)

    # -- comparison -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.table.const(other)
        if isinstance(other, RationalFn):
            return other == self
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.table == other.table and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.table, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- structure ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return next(iter(self.terms.values()), Fraction(0))

    def leading(self) -> tuple[tuple, Fraction]:
        """Lexicographically largest term."""
        e = max(self.terms)
        return e, self.terms[e]

    def exponent_bounds(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        cols = list(zip(*self.terms))
        return tuple(map(min, cols)), tuple(map(max, cols))

    def variables(self) -> set[str]:
        """Names of variables occurring with a nonzero exponent."""
        used = set()
        for e in self.terms:
            used.update(i for i, x in enumerate(e) if x)
        return {self.table.names[i] for i in used}

    def degree_range(self, name: str) -> tuple[int, int]:
        i = self.table.index(name)
        ds = [e[i] for e in self.terms] or [0]
        return min(ds), max(ds)

    def content(self) -> Fraction:
        """Positive rational c with self/c having coprime integer coefficients."""
        if not self.terms:
            return Fraction(0)
        nums = [c.numerator for c in self.terms.values()]
        dens = [c.denominator for c in self.terms.values()]
        g = math.gcd(*nums)
        l = math.lcm(*dens)
        return Fraction(g, l)

    def map_exponents(self, f) -> LaurentPoly:
        """Apply an injective exponent map ``f`` to every term."""
        out: dict[tuple, Fraction] = {}
        for e, c in self.terms.items():
            ne = f(e)
            s = out.get(ne, 0) + c
            if s:
                out[ne] = s
            else:
                out.pop(ne, None)
        return LaurentPoly._raw(self.table, out)

    def reembed(self, table: VarTable) -> LaurentPoly:
        """Move into another table; variables missing there must not occur."""
        if table == self.table:
            return self
        missing = self.variables() - set(table.names)
        if missing:
            raise VarTableMismatch(f"variables {sorted(missing)} absent from {table.names}")
        pos = [(i, table.index(x)) for i, x in enumerate(self.table.names) if x in table]
        n = len(table)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for i, j in pos:
                ne[j] = e[i]
            out[tuple(ne)] = c
        return LaurentPoly._raw(table, out)

    def exact_div(self, d: LaurentPoly) -> LaurentPoly:
        return exact_div(self, d)

    def eval(self, point) -> Fraction:
        return eval_rational(self, point)

    # -- serialization --------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        return sorted(self.terms.items())

    def to_dict(self) -> dict:
        return {
            "vars": list(self.table.names),
            "terms": [
                {"exp": list(e), "num": str(c.numerator), "den": str(c.denominator)}
                for e, c in self.sorted_terms()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: Mapping) -> LaurentPoly:
        table = VarTable(tuple(data["vars"]))
        terms = {}
        for t in data["terms"]:
            den = int(t["den"])
            if den <= 0:
                raise ValueError("denominator must be positive")
            terms[tuple(t["exp"])] = Fraction(int(t["num"]), den)
        return cls(table, terms)

    @classmethod
    def from_json(cls, text: str) -> LaurentPoly:
        return cls.from_dict(json.loads(text))

    def _monomial_str(self, e) -> str:
        parts = []
        for name, k in zip(self.table.names, e):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = self._monomial_str(e)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            out.append((sign, body))
        first_sign, first = out[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"LaurentPoly({self})"


def exact_div(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Return ``x`` with ``x * d == p`` or raise :class:`NotDivisible`.

    Lex-leading-term division.  For an exact quotient each coordinate of every
    quotient exponent is bounded by the coordinate ranges of ``p`` and ``d``,
    which both certifies non-divisibility and guarantees termination.
    """
    if p.table != d.table:
        raise VarTableMismatch(f"{p.table.names} vs {d.table.names}")
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return p.table.zero()
    if d.is_monomial():
        (de, dc), = d.terms.items()
        return LaurentPoly._raw(
            p.table,
            {tuple(a - b for a, b in zip(e, de)): c / dc for e, c in p.terms.items()},
        )
    (plo, phi), (dlo, dhi) = p.exponent_bounds(), d.exponent_bounds()
    lo = [a - b for a, b in zip(plo, dlo)]
    hi = [a - b for a, b in zip(phi, dhi)]
    if any(a > b for a, b in zip(lo, hi)):
        raise NotDivisible("Newton box of dividend is smaller than divisor's")
    dle, dlc = d.leading()
    d_items = [(e, c) for e, c in d.terms.items() if e != dle]
    rem = dict(p.terms)
    heap = [tuple(-x for x in e) for e in rem]
    heapq.heapify(heap)
    quot: dict[tuple, Fraction] = {}
    while rem:
        while True:
            e = tuple(-x for x in heapq.heappop(heap))
            if e in rem:
                break
        c = rem.pop(e)
        qe = tuple(a - b for a, b in zip(e, dle))
        if any(x < a or x > b for x, a, b in zip(qe, lo, hi)):
            raise NotDivisible(f"{p} is not divisible by {d}")
        qc = c / dlc
        quot[qe] = qc
        for de, dc in d_items:
            ex = tuple([a + b for a, b in zip(qe, de)])
            old = rem.get(ex)
            if old is None:
                rem[ex] = -qc * dc
                heapq.heappush(heap, tuple(-x for x in ex))
            else:
                s = old - qc * dc
                if s:
                    rem[ex] = s
                else:
                    del rem[ex]
    return LaurentPoly._raw(p.table, quot)


def div_one_minus_monomial(p: LaurentPoly, r: Sequence[int]) -> LaurentPoly:
    """Exact quotient of ``p`` by ``1 - x**r``, or :class:`NotDivisible`.

    Terms are grouped along lines ``e + Z r``; on each line the quotient is the
    running sum of coefficients, and divisibility means every line sums to 0.
    """
    r = tuple(r)
    if len(r) != len(p.table):
        raise VarTableMismatch("exponent vector has the wrong length")
    i = next((j for j, x in enumerate(r) if x), None)
    if i is None:
        raise ZeroDivisionError("1 - x**0 is the zero polynomial")
    ri = r[i]
    # integer coefficients are summed as ints, which is much faster
    integral = all(c.denominator == 1 for c in p.terms.values())
    lines: dict[tuple, list] = {}
    for e, c in p.terms.items():
        s = e[i] // ri
        key = tuple([a - s * b for a, b in zip(e, r)])
        lines.setdefault(key, []).append((s, c.numerator if integral else c))
    quot: dict[tuple, Fraction] = {}
    for key, items in lines.items():
        items.sort()
        run = 0
        prev = None
        for s, c in items:
            if prev is not None and run:
                val = Fraction(run)
                for t in range(prev, s):
                    quot[tuple([a + t * b for a, b in zip(key, r)])] = val
            run += c
            prev = s
        if run:
            raise NotDivisible(f"{p} is not divisible by 1 - x^{r}")
    return LaurentPoly._raw(p.table, quot)


def try_exact_div(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly | None:
    try:
        return exact_div(p, d)
    except NotDivisible:
        return None


class RationalFn:
    """Quotient of two Laurent polynomials, reduced on a best-effort basis.

    Reduction clears monomial units and content and cancels the denominator
    when it divides the numerator exactly.  Equality is always decided by
    cross-multiplication, so partial reduction never affects correctness.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | Number | None = None):
        if den is None:
            den = num.table.one()
        elif isinstance(den, (int, Fraction)):
            den = num.table.const(den)
        if num.table != den.table:
            raise VarTableMismatch(f"{num.table.names} vs {den.table.names}")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = _reduce(num, den)

    @classmethod
    def _raw(cls, num, den) -> RationalFn:
        r = cls.__new__(cls)
        r.num, r.den = num, den
        return r

    @property
    def table(self) -> VarTable:
        return self.num.table

    def _coerce(self, other) -> RationalFn | None:
        if isinstance(other, RationalFn):
            if other.table != self.table:
                raise VarTableMismatch(f"{self.table.names} vs {other.table.names}")
            return other
        if isinstance(other, LaurentPoly):
            if other.table != self.table:
                raise VarTableMismatch(f"{self.table.names} vs {other.table.names}")
            return RationalFn._raw(other, self.table.one())
        if isinstance(other, (int, Fraction)):
            return RationalFn._raw(self.table.const(other), self.table.one())
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFn(self.num + o.num, self.den)
        g = try_exact_div(o.den, self.den)
        if g is not None:
            return RationalFn(self.num * g + o.num, o.den)
        g = try_exact_div(self.den, o.den)
        if g is not None:
            return RationalFn(self.num + o.num * g, self.den)
        return RationalFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n1, d1, n2, d2 = self.num, self.den, o.num, o.den
        # cross-cancel before multiplying
        x = try_exact_div(n1, d2) if not d2.is_constant() else None
        if x is not None:
            n1, d2 = x, self.table.one()
        x = try_exact_div(n2, d1) if not d1.is_constant() else None
        if x is not None:
            n2, d1 = x, self.table.one()
        return RationalFn(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> RationalFn:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalFn(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFn(self.num ** k, self.den ** k)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_monomial()

    def as_laurent(self) -> LaurentPoly:
        q = try_exact_div(self.num, self.den)
        if q is None:
            raise NotDivisible(f"{self} is not a Laurent polynomial")
        return q

    def substitute(self, bindings, table: VarTable | None = None) -> RationalFn:
        return substitute(self.num, bindings, table) / substitute(self.den, bindings, table)

    def eval(self, point) -> Fraction:
        d = eval_rational(self.den, point)
        if not d:
            raise PoleAtSubstitution(f"denominator {self.den} vanishes at {dict(_point(point))}")
        return eval_rational(self.num, point) / d

    def reembed(self, table: VarTable) -> RationalFn:
        return RationalFn._raw(self.num.reembed(table), self.den.reembed(table))

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        n = str(self.num)
        if len(self.num.terms) > 1:
            n = f"({n})"
        return f"{n}/({self.den})"

    def __repr__(self):
        return f"RationalFn({self})"


def _reduce(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    one = num.table.one()
    if den.is_monomial():
        return exact_div(num, den), one
    if num.is_zero():
        return num, one
    q = try_exact_div(num, den)
    if q is not None:
        return q, one
    q = try_exact_div(den, num)
    if q is not None:
        num, den = one, q
    unit = _normalizing_unit(den)
    return exact_div(num, unit), exact_div(den, unit)


def _normalizing_unit(den: LaurentPoly) -> LaurentPoly:
    # den / unit is an honest polynomial (lowest exponent 0 in every
    # variable) with coprime integer coefficients and positive lex-first term
    lo, _ = den.exponent_bounds()
    first = min(den.terms)
    c = den.content()
    if den.terms[first] < 0:
        c = -c
    return LaurentPoly._raw(den.table, {lo: c})


def _point(point) -> Mapping[str, Fraction]:
    if hasattr(point, "as_point"):
        return point.as_point()
    return point


def eval_rational(p: LaurentPoly, point) -> Fraction:
    """Exact value of ``p`` at a point assigning a rational to each variable."""
    pt = _point(point)
    vals = []
    for name in p.table.names:
        if name in pt:
            vals.append(_frac(pt[name]))
        else:
            vals.append(None)
    total = Fraction(0)
    for e, c in p.terms.items():
        t = c
        for x, k in zip(vals, e):
            if not k:
                continue
            if x is None:
                raise KeyError(f"no value for variable in {p.table.names}")
            if not x and k < 0:
                raise PoleAtSubstitution("zero assigned to a variable with negative exponent")
            t *= x ** k
        total += t
    return total


def substitute(
    p: LaurentPoly,
    bindings: Mapping[str, LaurentPoly | RationalFn | Number],
    table: VarTable | None = None,
) -> RationalFn:
    """Compose ``p`` with ``bindings``; unbound variables are carried through.

    ``table`` is the target table.  By default it is taken from the first
    polynomial-valued binding, falling back to ``p.table``.
    """
    if table is None:
        for b in bindings.values():
            if isinstance(b, (LaurentPoly, RationalFn)):
                table = b.table
                break
        else:
            table = p.table
    bound: dict[int, RationalFn] = {}
    for name, b in bindings.items():
        i = p.table.index(name)
        if isinstance(b, (int, Fraction)):
            b = RationalFn._raw(table.const(b), table.one())
        elif isinstance(b, LaurentPoly):
            b = RationalFn._raw(b.reembed(table), table.one())
        elif isinstance(b, RationalFn):
            b = b.reembed(table)
        else:
            raise TypeError(f"cannot bind {name} to {type(b).__name__}")
        bound[i] = b
    carried = {}
    for i, name in enumerate(p.table.names):
        if i not in bound:
            if name in table:
                carried[i] = table.index(name)
            elif any(e[i] for e in p.terms):
                raise VarTableMismatch(f"unbound variable {name} absent from target table")
    one = table.one()
    n = len(table)

    def carried_monomial(e) -> tuple:
        ne = [0] * n
        for i, j in carried.items():
            ne[j] += e[i]
        return tuple(ne)

    # fast path: every binding is a monomial, result stays Laurent
    if all(b.den.is_monomial() and b.num.is_monomial() for b in bound.values()):
        mono = {}
        for i, b in bound.items():
            (ne, nc), = b.num.terms.items()
            (de, dc), = b.den.terms.items()
            mono[i] = (tuple(a - c for a, c in zip(ne, de)), nc / dc)
        out: dict[tuple, Fraction] = {}
        for e, c in p.terms.items():
            ex = list(carried_monomial(e))
            coef = c
            for i, (me, mc) in mono.items():
                k = e[i]
                if k:
                    for j in range(n):
                        ex[j] += k * me[j]
                    coef *= mc ** k
            ex = tuple(ex)
            s = out.get(ex, 0) + coef
            if s:
                out[ex] = s
            else:
                out.pop(ex, None)
        return RationalFn._raw(LaurentPoly._raw(table, out), one)

    # general path: common denominator D_x^{max(hi,0)} * N_x^{max(-lo,0)} per variable
    ranges = {i: (min(e[i] for e in p.terms), max(e[i] for e in p.terms)) if p.terms else (0, 0)
              for i in bound}
    for i, b in bound.items():
        if ranges[i][0] < 0 and b.num.is_zero():
            raise PoleAtSubstitution(f"{p.table.names[i]} bound to zero with negative exponent")
    num_pows: dict[tuple[int, int], LaurentPoly] = {}
    den_pows: dict[tuple[int, int], LaurentPoly] = {}

    def power(cache, i, poly, k):
        key = (i, k)
        if key not in cache:
            cache[key] = poly ** k
        return cache[key]

    total = table.zero()
    for e, c in p.terms.items():
        term = LaurentPoly._raw(table, {carried_monomial(e): c})
        for i, b in bound.items():
            lo, hi = ranges[i]
            k = e[i]
            term = term * power(num_pows, i, b.num, k + max(-lo, 0))
            term = term * power(den_pows, i, b.den, max(hi, 0) - k)
        total = total + term
    den = one
    for i, b in bound.items():
        lo, hi = ranges[i]
        den = den * b.den ** max(hi, 0) * b.num ** max(-lo, 0)
    return RationalFn(total, den)


@dataclass(frozen=True)
class Scaled:
    """A Laurent polynomial times an explicit scalar depending only on ``v``.

    The explicit Bessel and Waldspurger values carry factors such as
    ``(1 + q**-1)**-1``; keeping them separate lets polynomiality in the
    Satake parameters be checked literally on ``poly``.
    """

    poly: LaurentPoly
    scalar: RationalFn

    @classmethod
    def plain(cls, poly: LaurentPoly) -> Scaled:
        return cls(poly, RationalFn(poly.table.one()))

    @property
    def table(self) -> VarTable:
        return self.poly.table

    @property
    def value(self) -> RationalFn:
        return self.scalar * self.poly

    def simplified(self) -> Scaled:
        """Absorb the scalar into ``poly`` when its denominator divides it."""
        q = try_exact_div(self.poly * self.scalar.num, self.scalar.den)
        if q is None:
            return self
        return Scaled.plain(q)

    def __eq__(self, other):
        if isinstance(other, Scaled):
            other = other.value
        return self.value == other

    __hash__ = None

    def eval(self, point) -> Fraction:
        return self.scalar.eval(point) * self.poly.eval(point)

    def __str__(self):
        if self.scalar == 1:
            return str(self.poly)
        return f"{self.scalar} * ({self.poly})"


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    n, d = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None


@dataclass(frozen=True)
class SatakeNumeric:
    """Exact numeric point: residue field size ``q`` and parameter values.

    ``q`` must be the square of a rational so that ``v = q**(-1/2)`` is exact.
    """

    q: Fraction
    values: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        q = _frac(self.q)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "values", {k: _frac(x) for k, x in self.values.items()})
        if q <= 1:
            raise ValueError("q must exceed 1")
        if _rational_sqrt(q) is None:
            raise ValueError(f"q={q} is not the square of a rational; v would be irrational")

    @property
    def sqrt_q(self) -> Fraction:
        return _rational_sqrt(self.q)

    @property
    def v(self) -> Fraction:
        return 1 / self.sqrt_q

    def __getitem__(self, name: str) -> Fraction:
        return self.values[name]

    def as_point(self) -> dict[str, Fraction]:
        pt = dict(self.values)
        pt["v"] = self.v
        return pt


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def product(polys: Iterable, start):
    out = start
    for p in polys:
        out = out * p
    return out
