"""Exact rationals and sparse multivariate polynomials.

Every coefficient in the package is a ``Rational`` (a ``gmpy2.mpq``), so all
identities are checked as exact equalities.  A ``MultiPoly`` is an immutable
map from exponent tuples to nonzero rationals, tagged with the "world" its
slots live in:

* ``'x'`` -- the ambient coordinates x_1..x_N,
* ``'y'`` -- the squared coordinates y_i = x_i^2,
* ``'p'`` -- the formal variables p_1..p_N of the p-basis calculus.

Mixing worlds in arithmetic raises ``WorldMismatch``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Mapping, Sequence

import gmpy2

Rational = gmpy2.mpq
Monomial = tuple

WORLDS = ("x", "y", "p")

ZERO = Rational(0)
ONE = Rational(1)
HALF = Rational(1, 2)


class PolyError(ValueError):
    """Base class for polynomial arithmetic errors."""


class AmbientMismatch(PolyError):
    pass


class WorldMismatch(PolyError):
    pass


class InexactDivision(PolyError):
    """A structured division left a nonzero remainder."""


def rat(value) -> Rational:
    """Coerce ints, ``Fraction``s and ``"p/q"`` strings to ``Rational``."""
    if isinstance(value, str):
        value = value.strip()
        if not value:
            raise ValueError("empty rational literal")
        if "." in value or "e" in value.lower():
            raise ValueError(f"not an exact rational: {value!r}")
    return Rational(value)


def grlex_key(exps: Sequence[int]):
    return (sum(exps), tuple(exps))


class MultiPoly:
    """Sparse polynomial over the rationals in ``nvars`` variables."""

    __slots__ = ("nvars", "terms", "world", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None,
                 world: str = "x", *, _trusted: bool = False):
        if world not in WORLDS:
            raise ValueError(f"unknown world {world!r}")
        self.nvars = nvars
        self.world = world
        self._hash = None
        if _trusted:
            self.terms = terms
            return
        clean = {}
        for mono, coef in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != nvars:
                raise AmbientMismatch(f"monomial {mono} has length {len(mono)} != {nvars}")
            if any(e < 0 for e in mono):
                raise PolyError(f"negative exponent in {mono}")
            c = rat(coef)
            if c:
                clean[mono] = clean.get(mono, ZERO) + c
        self.terms = {m: c for m, c in clean.items() if c}

    # constructors -----------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int, world: str = "x") -> "MultiPoly":
        return cls(nvars, {}, world, _trusted=True)

    @classmethod
    def const(cls, nvars: int, value=1, world: str = "x") -> "MultiPoly":
        c = rat(value)
        return cls(nvars, {(0,) * nvars: c} if c else {}, world, _trusted=True)

    @classmethod
    def var(cls, nvars: int, i: int, world: str = "x") -> "MultiPoly":
        """The variable in slot ``i`` (1-based)."""
        if not 1 <= i <= nvars:
            raise IndexError(f"variable index {i} out of range 1..{nvars}")
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {tuple(e): ONE}, world, _trusted=True)

    @classmethod
    def monomial(cls, exps: Sequence[int], coef=1, world: str = "x") -> "MultiPoly":
        return cls(len(exps), {tuple(exps): coef}, world)

    # basic protocol ---------------------------------------------------------

    def _check(self, other: "MultiPoly") -> None:
        if self.nvars != other.nvars:
            raise AmbientMismatch(f"ambient {self.nvars} vs {other.nvars}")
        if self.world != other.world:
            raise WorldMismatch(f"world {self.world!r} vs {other.world!r}")

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.const(self.nvars, other, self.world)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Rational]]:
        return iter(self.terms.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return (self.nvars == other.nvars and self.world == other.world
                    and self.terms == other.terms)
        try:
            return self.terms == MultiPoly.const(self.nvars, other, self.world).terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, self.world, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {to_text(self)!r}, world={self.world!r})"

    # arithmetic -------------------------------------------------------------

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return MultiPoly(self.nvars, out, self.world, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {m: -c for m, c in self.terms.items()}, self.world,
                         _trusted=True)

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) - self

    def scale(self, c) -> "MultiPoly":
        c = rat(c)
        if not c:
            return MultiPoly.zero(self.nvars, self.world)
        return MultiPoly(self.nvars, {m: v * c for m, v in self.terms.items()}, self.world,
                         _trusted=True)

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        get = out.get
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = get(m, ZERO) + c1 * c2
        return MultiPoly(self.nvars, {m: c for m, c in out.items() if c}, self.world,
                         _trusted=True)

    def __rmul__(self, other) -> "MultiPoly":
        return self.scale(other)

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(self.nvars, 1, self.world)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # structure --------------------------------------------------------------

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def coeff(self, exps: Sequence[int]) -> Rational:
        return self.terms.get(tuple(exps), ZERO)

    def sorted_terms(self) -> list[tuple[Monomial, Rational]]:
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda mc: grlex_key(mc[0]), reverse=True)

    def map_monomials(self, fn) -> "MultiPoly":
        """Apply ``fn(mono) -> (mono', sign)`` to every term."""
        out: dict = {}
        for m, c in self.terms.items():
            m2, sgn = fn(m)
            out[m2] = out.get(m2, ZERO) + (c if sgn > 0 else -c)
        return MultiPoly(self.nvars, {m: c for m, c in out.items() if c}, self.world,
                         _trusted=True)

    def with_world(self, world: str) -> "MultiPoly":
        return MultiPoly(self.nvars, self.terms, world, _trusted=True)

    def diff(self, i: int) -> "MultiPoly":
        """Partial derivative in slot ``i`` (1-based)."""
        k = i - 1
        out = {}
        for m, c in self.terms.items():
            e = m[k]
            if e:
                m2 = m[:k] + (e - 1,) + m[k + 1:]
                out[m2] = c * e
        return MultiPoly(self.nvars, out, self.world, _trusted=True)

    def substitute(self, i: int, j: int) -> "MultiPoly":
        """Replace variable ``j`` by variable ``i`` (both 1-based)."""
        a, b = i - 1, j - 1

        def fn(m):
            m = list(m)
            m[a] += m[b]
            m[b] = 0
            return tuple(m), 1
        return self.map_monomials(fn)

    def set_zero(self, i: int) -> "MultiPoly":
        """Evaluate slot ``i`` at zero."""
        k = i - 1
        return MultiPoly(self.nvars, {m: c for m, c in self.terms.items() if m[k] == 0},
                         self.world, _trusted=True)

    def swap(self, i: int, j: int) -> "MultiPoly":
        a, b = i - 1, j - 1

        def fn(m):
            m = list(m)
            m[a], m[b] = m[b], m[a]
            return tuple(m), 1
        return self.map_monomials(fn)

    def shift(self, exps: Sequence[int]) -> "MultiPoly":
        """Multiply by the monomial with exponents ``exps``."""
        return MultiPoly(self.nvars,
                         {tuple(a + b for a, b in zip(m, exps)): c for m, c in self.terms.items()},
                         self.world, _trusted=True)


def poly_add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a + b


def poly_mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    return a * b


def poly_eval(p: MultiPoly, point: Sequence) -> Rational:
    """Exact value of ``p`` at ``point``."""
    if len(point) != p.nvars:
        raise AmbientMismatch(f"point of length {len(point)} for {p.nvars} variables")
    pt = [rat(v) for v in point]
    total = ZERO
    for m, c in p.terms.items():
        term = c
        for v, e in zip(pt, m):
            if e:
                term *= v ** e
                if not term:
                    break
        total += term
    return total


def _linear_form(d: MultiPoly):
    """Classify ``d`` as u*x_i (returns (u, i, None, 0)) or u*(x_i + c x_j), u, c = +-1."""
    if len(d) == 1:
        (m, c), = d.terms.items()
        if c in (1, -1) and sum(m) == 1:
            return int(c), m.index(1), None, 0
    if len(d) == 2 and d.degree() == 1 and d.is_homogeneous():
        (m1, c1), (m2, c2) = sorted(d.terms.items(), reverse=True)
        i, j = m1.index(1), m2.index(1)
        if c1 in (1, -1) and c2 in (1, -1):
            return int(c1), i, j, int(c2 * c1)
    raise PolyError(f"unsupported divisor {to_text(d)}; only x_i and x_i +- x_j")


def exact_divide(p: MultiPoly, d: MultiPoly) -> MultiPoly:
    """Quotient of ``p`` by ``x_i`` or ``x_i +- x_j``; any remainder is an error."""
    p._check(d)
    u, i, j, c = _linear_form(d)
    q = _divide_normalized(p, d, i, j, c)
    return q if u > 0 else -q


def _divide_normalized(p, d, i, j, c):
    if j is None:
        out = {}
        for m, v in p.terms.items():
            if m[i] == 0:
                raise InexactDivision(f"{to_text(p)} is not divisible by {to_text(d)}")
            out[m[:i] + (m[i] - 1,) + m[i + 1:]] = v
        return MultiPoly(p.nvars, out, p.world, _trusted=True)

    # p = sum_a P_a x_i^a; synthetic division by x_i - r x_j with r = -c.
    r = -c
    layers: dict[int, dict] = {}
    for m, v in p.terms.items():
        a = m[i]
        layers.setdefault(a, {})[m[:i] + (0,) + m[i + 1:]] = v
    if not layers:
        return p
    top = max(layers)
    out = {}
    carry: dict = {}
    for a in range(top, 0, -1):
        # Q_{a-1} = P_a + r x_j Q_a
        q = dict(layers.get(a, {}))
        for m, v in carry.items():
            m2 = m[:j] + (m[j] + 1,) + m[j + 1:]
            q[m2] = q.get(m2, ZERO) + (v if r > 0 else -v)
        q = {m: v for m, v in q.items() if v}
        for m, v in q.items():
            out[m[:i] + (a - 1,) + m[i + 1:]] = v
        carry = q
    rem = dict(layers.get(0, {}))
    for m, v in carry.items():
        m2 = m[:j] + (m[j] + 1,) + m[j + 1:]
        rem[m2] = rem.get(m2, ZERO) + (v if r > 0 else -v)
    if any(rem.values()):
        raise InexactDivision(f"{to_text(p)} is not divisible by {to_text(d)}")
    return MultiPoly(p.nvars, out, p.world, _trusted=True)


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All exponent vectors of length ``parts`` summing to ``total``."""
    for bars in combinations_with_replacement(range(parts), total):
        e = [0] * parts
        for b in bars:
            e[b] += 1
        yield tuple(e)


def lift_squares(g: MultiPoly) -> MultiPoly:
    """Substitute y_i = x_i^2 into a y-world polynomial."""
    if g.world != "y":
        raise WorldMismatch("lift_squares expects a y-world polynomial")
    return MultiPoly(g.nvars, {tuple(2 * e for e in m): c for m, c in g.terms.items()}, "x",
                     _trusted=True)


def even_part_in_squares(f: MultiPoly) -> MultiPoly:
    """Inverse of ``lift_squares``; every exponent of ``f`` must be even."""
    out = {}
    for m, c in f.terms.items():
        if any(e % 2 for e in m):
            raise PolyError(f"{to_text(f)} is not even in every variable")
        out[tuple(e // 2 for e in m)] = c
    return MultiPoly(f.nvars, out, "y", _trusted=True)


# formatting and the canonical JSON form --------------------------------------

_SYMBOL = {"x": "x", "y": "y", "p": "p"}


def to_text(p: MultiPoly) -> str:
    if not p.terms:
        return "0"
    sym = _SYMBOL[p.world]
    parts = []
    for m, c in p.sorted_terms():
        mono = "*".join(f"{sym}{i + 1}" + (f"^{e}" if e > 1 else "")
                        for i, e in enumerate(m) if e)
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


def to_latex(p: MultiPoly) -> str:
    if not p.terms:
        return "0"
    sym = _SYMBOL[p.world]
    out = []
    for idx, (m, c) in enumerate(p.sorted_terms()):
        mono = "".join(f"{sym}_{{{i + 1}}}" + (f"^{{{e}}}" if e > 1 else "")
                       for i, e in enumerate(m) if e)
        neg = c < 0
        a = -c if neg else c
        if mono and a == 1:
            body = mono
        else:
            num, den = int(a.numerator), int(a.denominator)
            coef = str(num) if den == 1 else f"\\frac{{{num}}}{{{den}}}"
            body = coef + mono
        if idx == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("-" if neg else "+") + body)
    return "".join(out)


def to_json_obj(p: MultiPoly) -> dict:
    return {
        "nvars": p.nvars,
        "terms": [{"exps": list(m), "coef": str(c)} for m, c in p.sorted_terms()],
    }


def from_json_obj(obj: Mapping, world: str = "x") -> MultiPoly:
    n = int(obj["nvars"])
    terms = {}
    for t in obj["terms"]:
        m = tuple(int(e) for e in t["exps"])
        if m in terms:
            raise PolyError(f"duplicate monomial {m}")
        terms[m] = rat(str(t["coef"]))
    return MultiPoly(n, terms, world)


def poly_sum(polys: Iterable[MultiPoly], nvars: int, world: str = "x") -> MultiPoly:
    out: dict = {}
    for p in polys:
        for m, c in p.terms.items():
            out[m] = out.get(m, ZERO) + c
    return MultiPoly(nvars, {m: c for m, c in out.items() if c}, world, _trusted=True)


@dataclass(frozen=True)
class Params:
    """Multiplicities (N, k, k1); ``k2`` is derived."""

    N: int
    k: Rational
    k1: Rational

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 2:
            raise ValueError(f"N must be an integer >= 2, got {self.N}")
        object.__setattr__(self, "N", int(self.N))
        object.__setattr__(self, "k", rat(self.k))
        object.__setattr__(self, "k1", rat(self.k1))

    @property
    def k2(self) -> Rational:
        return (self.N - 1) * self.k + self.k1 + HALF

    def with_k1(self, k1) -> "Params":
        return Params(self.N, self.k, k1)

    def __str__(self) -> str:
        return f"N={self.N}, k={self.k}, k1={self.k1}"
