"""Spin Calogero eigenfunctions from harmonic polynomials.

Only the ground-state conjugate 2w(E + N k2) - Delta_B is implemented (E the
Euler operator); eigenfunctions are handled through their polynomial part
L_n^{(c)}(w |x|^2) h(x).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .dunkl import Reflection, apply_reflection, laplacian_B
from .exactalg import ONE, MultiPoly, Params, Rational, poly_sum, rat
from .harmonic import HarmonicLabel, build_harmonic, poch


@dataclass(frozen=True)
class CalogeroParams:
    params: Params
    omega: Rational

    def __post_init__(self):
        object.__setattr__(self, "omega", rat(self.omega))
        if self.omega <= 0:
            raise ValueError("omega must be positive")


@dataclass(frozen=True)
class EigenLabel:
    """Harmonic degree m, Laguerre degree n and Laguerre index c."""

    m: int
    n: int
    c: Rational

    @classmethod
    def natural(cls, m: int, n: int, params: Params) -> "EigenLabel":
        return cls(m, n, m + params.N * params.k2 - 1)

    def eigenvalue(self, cp: CalogeroParams) -> Rational:
        return 2 * cp.omega * (self.m + 2 * self.n + cp.params.N * cp.params.k2)


def laguerre(n: int, c) -> list[Rational]:
    """Ascending coefficients of L_n^{(c)}(t)."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    c = rat(c)
    lead = poch(c + 1, n) / factorial(n)
    return [lead * poch(-n, i) / (poch(c + 1, i) * factorial(i)) for i in range(n + 1)]


def norm_squared_poly(N: int) -> MultiPoly:
    """|x|^2."""
    return poly_sum((MultiPoly.var(N, i) ** 2 for i in range(1, N + 1)), N)


def euler(f: MultiPoly) -> MultiPoly:
    return MultiPoly(f.nvars, {m: c * sum(m) for m, c in f.terms.items() if sum(m)}, f.world,
                     _trusted=True)


def conjugated_hamiltonian(f: MultiPoly, cp: CalogeroParams) -> MultiPoly:
    P = cp.params
    w = cp.omega
    return (euler(f) + f.scale(P.N * P.k2)).scale(2 * w) - laplacian_B(f, P)


def radial_factor(n: int, c, omega, N: int) -> MultiPoly:
    """L_n^{(c)}(omega |x|^2) as a polynomial in x."""
    r2 = norm_squared_poly(N).scale(omega)
    out = MultiPoly.zero(N)
    power = MultiPoly.const(N, ONE)
    for i, coef in enumerate(laguerre(n, c)):
        if i:
            power = power * r2
        out = out + power.scale(coef)
    return out


def eigenfunction(label: EigenLabel, harmonic: HarmonicLabel, cp: CalogeroParams) -> MultiPoly:
    if harmonic.degree != label.m:
        raise ValueError(f"{harmonic} has degree {harmonic.degree}, label needs {label.m}")
    h = build_harmonic(harmonic, cp.params).poly
    return radial_factor(label.n, label.c, cp.omega, cp.params.N) * h


def check_eigen(label: EigenLabel, harmonic: HarmonicLabel, cp: CalogeroParams) -> bool:
    f = eigenfunction(label, harmonic, cp)
    return conjugated_hamiltonian(f, cp) == f.scale(label.eigenvalue(cp))


def invariantize_terms(N: int, complete: bool = False) -> list[tuple[Reflection, ...]]:
    """Words of the sum 1 + sum_j s_2j + sum_{i<j} s_1i s_2j (all indices > 2).

    These send {1, 2} to {1, j} and {i, j} but never to {2, j}, so the sum is
    not symmetric for N >= 3 once h depends on x_1, x_2 separately.
    ``complete=True`` adds the words s_1j, giving one word per 2-subset.
    """
    if N < 3:
        raise ValueError("invariantization needs N >= 3")
    s = Reflection.sigma
    words: list[tuple[Reflection, ...]] = [()]
    words += [(s(2, j),) for j in range(3, N + 1)]
    if complete:
        words += [(s(1, j),) for j in range(3, N + 1)]
    words += [(s(1, i), s(2, j)) for i in range(3, N + 1) for j in range(i + 1, N + 1)]
    return words


def invariantize(label: HarmonicLabel, params: Params, complete: bool = False) -> MultiPoly:
    """Sum of translates of h_{2n,0}; see ``invariantize_terms``.

    The completed sum is W_N-invariant exactly when h is sigma_12-symmetric,
    i.e. for h_{4n,0}; h_{4n+2,0} is antisymmetric and gives no invariant.
    """
    if label.eps != 0 or label.n % 2:
        raise ValueError("invariantization applies to h_{2n,0}")
    h = build_harmonic(label, params).poly
    parts = []
    for word in invariantize_terms(params.N, complete):
        f = h
        for r in reversed(word):
            f = apply_reflection(r, f)
        parts.append(f)
    return poly_sum(parts, params.N)
