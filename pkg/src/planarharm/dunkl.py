"""Reflections of the hyperoctahedral group and the Dunkl operators built on them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exactalg import HALF, MultiPoly, Params, WorldMismatch, exact_divide, lift_squares

SIGN_CHANGE = "sign"
TRANSPOSITION = "swap"
SIGNED_TRANSPOSITION = "signed_swap"


@dataclass(frozen=True)
class Reflection:
    """sigma_i (``sign``), sigma_ij (``swap``) or tau_ij (``signed_swap``); 1-based indices."""

    kind: str
    i: int
    j: int = 0

    def __post_init__(self):
        if self.kind == SIGN_CHANGE:
            if self.i < 1:
                raise IndexError(f"bad index {self.i}")
        elif self.kind in (TRANSPOSITION, SIGNED_TRANSPOSITION):
            if not 1 <= self.i < self.j:
                raise IndexError(f"need 1 <= i < j, got ({self.i}, {self.j})")
        else:
            raise ValueError(f"unknown reflection kind {self.kind!r}")

    @classmethod
    def sigma(cls, i: int, j: int | None = None) -> "Reflection":
        if j is None:
            return cls(SIGN_CHANGE, i)
        return cls(TRANSPOSITION, min(i, j), max(i, j))

    @classmethod
    def tau(cls, i: int, j: int) -> "Reflection":
        return cls(SIGNED_TRANSPOSITION, min(i, j), max(i, j))


def apply_reflection(r: Reflection, f: MultiPoly) -> MultiPoly:
    """The function x -> f(x r)."""
    top = max(r.i, r.j)
    if top > f.nvars:
        raise IndexError(f"reflection index {top} exceeds N={f.nvars}")
    a, b = r.i - 1, r.j - 1
    if r.kind == SIGN_CHANGE:
        return f.map_monomials(lambda m: (m, -1 if m[a] % 2 else 1))

    signed = r.kind == SIGNED_TRANSPOSITION

    def fn(m):
        s = list(m)
        s[a], s[b] = s[b], s[a]
        sign = -1 if signed and (m[a] + m[b]) % 2 else 1
        return tuple(s), sign
    return f.map_monomials(fn)


def sigma12(f: MultiPoly) -> MultiPoly:
    return apply_reflection(Reflection.sigma(1, 2), f)


def _require_x(f: MultiPoly) -> None:
    if f.world != "x":
        raise WorldMismatch(f"expected an x-world polynomial, got {f.world!r}")


def _check_index(i: int, f: MultiPoly) -> None:
    if not 1 <= i <= f.nvars:
        raise IndexError(f"operator index {i} out of range 1..{f.nvars}")


def dunkl_T(i: int, f: MultiPoly, params: Params) -> MultiPoly:
    """Type-B Dunkl operator T_i with multiplicities k (roots e_i +- e_j) and k1 (e_i)."""
    _require_x(f)
    _check_index(i, f)
    if f.nvars != params.N:
        raise ValueError(f"polynomial has {f.nvars} variables, params have N={params.N}")
    n = f.nvars
    out = f.diff(i)
    if not f:
        return out
    xi = MultiPoly.var(n, i)
    if params.k1:
        num = f - apply_reflection(Reflection.sigma(i), f)
        if num:
            out = out + exact_divide(num, xi).scale(params.k1)
    if params.k:
        acc = MultiPoly.zero(n)
        for j in range(1, n + 1):
            if j == i:
                continue
            xj = MultiPoly.var(n, j)
            num = f - apply_reflection(Reflection.sigma(i, j), f)
            if num:
                acc = acc + exact_divide(num, xi - xj)
            num = f - apply_reflection(Reflection.tau(i, j), f)
            if num:
                acc = acc + exact_divide(num, xi + xj)
        out = out + acc.scale(params.k)
    return out


def dunkl_T_power(ops: Sequence[int], f: MultiPoly, params: Params) -> MultiPoly:
    """Apply T_{ops[-1]} first, then leftwards."""
    for i in reversed(ops):
        f = dunkl_T(i, f, params)
        if not f:
            break
    return f


def laplacian_B(f: MultiPoly, params: Params) -> MultiPoly:
    """Sum of T_i(T_i f), by literal double application."""
    out = MultiPoly.zero(f.nvars)
    for i in range(1, f.nvars + 1):
        g = dunkl_T(i, f, params)
        if g:
            out = out + dunkl_T(i, g, params)
    return out


def dunkl_hatT(i: int, g: MultiPoly, params: Params) -> MultiPoly:
    """Type-A Dunkl operator on a polynomial in y_1..y_N."""
    if g.world != "y":
        raise WorldMismatch(f"expected a y-world polynomial, got {g.world!r}")
    _check_index(i, g)
    n = g.nvars
    out = g.diff(i)
    if params.k and g:
        yi = MultiPoly.var(n, i, "y")
        acc = MultiPoly.zero(n, "y")
        for j in range(1, n + 1):
            if j != i:
                num = g - g.swap(i, j)
                if num:
                    acc = acc + exact_divide(num, yi - MultiPoly.var(n, j, "y"))
        out = out + acc.scale(params.k)
    return out


def lift_check(eps: Sequence[int], g: MultiPoly, i: int, params: Params) -> MultiPoly:
    """T_i(x^eps g(y)) computed through the type-A operator on squared variables.

    An independent route to ``dunkl_T`` on polynomials of the form x^eps g(y).
    """
    if g.world != "y":
        raise WorldMismatch("g must be a y-world polynomial")
    n = g.nvars
    eps = tuple(eps)
    if len(eps) != n or any(e not in (0, 1) for e in eps):
        raise ValueError(f"eps must be a 0/1 vector of length {n}, got {eps}")
    _check_index(i, g)
    if eps[i - 1] == 0:
        inner = dunkl_hatT(i, g, params)
        shift = list(eps)
        shift[i - 1] += 1
        return lift_squares(inner).shift(shift).scale(2)
    yi = MultiPoly.var(n, i, "y")
    inner = g.scale(params.k1 - HALF) + dunkl_hatT(i, yi * g, params)
    for j in range(1, n + 1):
        if j != i and eps[j - 1] == 1:
            inner = inner - g.swap(i, j).scale(params.k)
    shift = list(eps)
    shift[i - 1] -= 1
    return lift_squares(inner).shift(shift).scale(2)
