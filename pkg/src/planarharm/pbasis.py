"""Type-A p-basis on squared variables and its formal-variable calculus.

p_n(y_i; y) is the r^n coefficient of (1 - r y_i)^{-1} prod_j (1 - r y_j)^{-k}, and
p_alpha is the product of p_{alpha_i}(y_i; y).  ``psi_forward`` sends p_alpha to
the monomial p^alpha in formal variables; ``hatT_formal`` is the type-A operator
transported through that map.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping, Sequence

from .exactalg import (
    ONE,
    ZERO,
    MultiPoly,
    Params,
    Rational,
    WorldMismatch,
    compositions,
    exact_divide,
    poly_sum,
    rat,
)

Composition = tuple
Expansion = list  # [(Rational, Composition), ...], deliberately not merged


@lru_cache(maxsize=None)
def _power_product_coeff(N: int, k: Rational, m: int) -> MultiPoly:
    """r^m coefficient of prod_j (1 - r y_j)^{-k}."""
    binom = [ONE]
    for l in range(m):
        binom.append(binom[-1] * (k + l) / (l + 1))
    terms = {}
    for e in compositions(m, N):
        c = ONE
        for ei in e:
            c *= binom[ei]
            if not c:
                break
        if c:
            terms[e] = c
    return MultiPoly(N, terms, "y", _trusted=True)


@lru_cache(maxsize=None)
def _p_n(N: int, k: Rational, n: int, i: int) -> MultiPoly:
    parts = []
    for m in range(n + 1):
        e = [0] * N
        e[i - 1] = n - m
        parts.append(_power_product_coeff(N, k, m).shift(e))
    return poly_sum(parts, N, "y")


def p_n(n: int, i: int, params: Params) -> MultiPoly:
    """p_n(y_i; y) as a y-world polynomial."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    if not 1 <= i <= params.N:
        raise IndexError(f"index {i} out of range")
    return _p_n(params.N, params.k, n, i)


@lru_cache(maxsize=4096)
def _p_alpha(N: int, k: Rational, alpha: Composition) -> MultiPoly:
    out = MultiPoly.const(N, 1, "y")
    for i, a in enumerate(alpha, start=1):
        if a:
            out = out * _p_n(N, k, a, i)
    return out


def p_alpha(alpha: Sequence[int], params: Params) -> MultiPoly:
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != params.N or any(a < 0 for a in alpha):
        raise ValueError(f"composition {alpha} invalid for N={params.N}")
    return _p_alpha(params.N, params.k, alpha)


def hatT_on_p_alpha(i: int, alpha: Sequence[int], params: Params) -> Expansion:
    """The type-A operator T^_i on p_alpha as an un-merged list of (coef, composition)."""
    alpha = tuple(alpha)
    N, k = params.N, params.k
    a = i - 1
    if alpha[a] == 0:
        return []
    out: Expansion = []
    lowered = list(alpha)
    lowered[a] -= 1
    out.append((N * k + alpha[a], tuple(lowered)))
    if k:
        for b in range(N):
            if b == a:
                continue
            tot = alpha[a] + alpha[b] - 1
            for m in range(alpha[b]):
                first = list(alpha)
                first[a], first[b] = tot - m, m
                second = list(alpha)
                second[a], second[b] = m, tot - m
                out.append((k, tuple(first)))
                out.append((-k, tuple(second)))
    return [(rat(c), al) for c, al in out]


def expand(coords: Mapping[Composition, object] | Expansion, params: Params) -> MultiPoly:
    """Multiply out a p-basis combination to a y-world polynomial."""
    items = coords.items() if isinstance(coords, Mapping) else [(al, c) for c, al in coords]
    return poly_sum((p_alpha(al, params).scale(c) for al, c in items), params.N, "y")


def psi_forward(coords: Mapping[Composition, object] | Expansion, N: int) -> MultiPoly:
    """Psi: p_alpha -> p_1^alpha_1 ... p_N^alpha_N, extended linearly."""
    items = coords.items() if isinstance(coords, Mapping) else [(al, c) for c, al in coords]
    terms: dict = {}
    for al, c in items:
        al = tuple(al)
        if len(al) != N:
            raise ValueError(f"composition {al} has wrong length")
        terms[al] = terms.get(al, ZERO) + rat(c)
    return MultiPoly(N, terms, "p")


def psi_inverse_coords(f: MultiPoly) -> dict:
    if f.world != "p":
        raise WorldMismatch("psi inverse expects a p-world polynomial")
    return dict(f.terms)


def psi_inverse(f: MultiPoly, params: Params) -> MultiPoly:
    """Psi^{-1} followed by expansion to a y-world polynomial."""
    return expand(psi_inverse_coords(f), params)


def psi_iso(f, direction: str, params: Params | None = None, N: int | None = None):
    if direction == "forward":
        return psi_forward(f, N if N is not None else params.N)
    if direction == "inverse":
        if params is None:
            return psi_inverse_coords(f)
        return psi_inverse(f, params)
    raise ValueError(f"direction must be 'forward' or 'inverse', not {direction!r}")


def hatT_formal(i: int, f: MultiPoly, params: Params) -> MultiPoly:
    """T^_i transported to polynomials in p_1..p_N."""
    if f.world != "p":
        raise WorldMismatch("hatT_formal expects a p-world polynomial")
    N, k = f.nvars, params.k
    out = f.diff(i)
    if not k or not f:
        return out
    pi = MultiPoly.var(N, i, "p")
    acc = exact_divide(f - f.set_zero(i), pi).scale(N)
    for j in range(1, N + 1):
        if j == i:
            continue
        num = f.substitute(i, j) + f.substitute(j, i) - f - f.swap(i, j)
        if num:
            acc = acc + exact_divide(num, pi - MultiPoly.var(N, j, "p"))
    return out + acc.scale(k)


def delta12(f: MultiPoly) -> MultiPoly:
    """(f(p1,p1) + f(p2,p2) - f(p1,p2) - f(p2,p1)) / (p1 - p2)."""
    if f.world != "p":
        raise WorldMismatch("delta12 expects a p-world polynomial")
    if any(any(m[2:]) for m in f.terms):
        raise ValueError("delta12 applies to polynomials in p1, p2 only")
    num = f.substitute(1, 2) + f.substitute(2, 1) - f - f.swap(1, 2)
    if not num:
        return num
    return exact_divide(num, MultiPoly.var(f.nvars, 1, "p") - MultiPoly.var(f.nvars, 2, "p"))
