"""The phi/psi planar basis from truncated double series in (s, t).

The generating functions are built as functions of squared variables
u_i = x_i^2 (y-world), then lifted.  Each factor (1 - 2 s t u + t^2 u^2)^{-c}
contributes C_m^{(c)}(s) (t u)^m with C the Gegenbauer polynomials, so the
whole expansion is a truncated product of per-factor tables.

Out-of-range labels (j < 0, j > n, n < 0) are the zero polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .exactalg import ONE, ZERO, MultiPoly, Params, Rational, lift_squares, rat

PHI = "phi"
PSI = "psi"
X1X2PHI = "x1x2phi"
BASIS_KINDS = (PHI, PSI, X1X2PHI)


def gegenbauer(c, m_max: int) -> list[list[Rational]]:
    """Coefficient lists (in s, ascending) of C_0^{(c)}..C_{m_max}^{(c)}."""
    c = rat(c)
    out = [[ONE]]
    if m_max >= 1:
        out.append([ZERO, 2 * c])
    for m in range(1, m_max):
        a = out[m]
        b = out[m - 1]
        nxt = [ZERO] * (m + 2)
        for d, v in enumerate(a):
            nxt[d + 1] += 2 * (m + c) * v
        for d, v in enumerate(b):
            nxt[d] -= (m + 2 * c - 1) * v
        out.append([v / (m + 1) for v in nxt])
    return out


@dataclass
class SeriesTable:
    """Coefficients of s^j t^n, 0 <= j <= n <= max_n."""

    kind: str
    max_n: int
    nvars: int
    world: str
    entries: dict = field(default_factory=dict)

    def get(self, n: int, j: int) -> MultiPoly:
        if n < 0 or j < 0 or j > n:
            return MultiPoly.zero(self.nvars, self.world)
        if n > self.max_n:
            raise IndexError(f"order {n} beyond truncation {self.max_n}")
        return self.entries.get((n, j)) or MultiPoly.zero(self.nvars, self.world)

    __call__ = get

    def labels(self):
        return [(n, j) for n in range(self.max_n + 1) for j in range(n + 1)]


def _table_mul(a: dict, b: dict, max_n: int) -> dict:
    out: dict = {}
    for (n1, j1), p1 in a.items():
        for (n2, j2), p2 in b.items():
            n = n1 + n2
            if n > max_n:
                continue
            key = (n, j1 + j2)
            prod = p1 * p2
            out[key] = out[key] + prod if key in out else prod
    return {key: p for key, p in out.items() if p}


def _factor(N: int, slot: int, c, max_n: int, world: str) -> dict:
    out = {}
    for m, coeffs in enumerate(gegenbauer(c, max_n)):
        e = [0] * N
        e[slot - 1] = m
        for j, v in enumerate(coeffs):
            if v:
                out[(m, j)] = MultiPoly(N, {tuple(e): v}, world, _trusted=True)
    return out


@lru_cache(maxsize=None)
def generating_tables(N: int, k: Rational, max_n: int, world: str = "y"):
    """(F0, F1) coefficient tables in the squared variables.

    With k = 0 and world ``'p'`` these are the formal images f0, f1.
    """
    def mono(*exps, coef=1):
        e = [0] * N
        for slot, power in exps:
            e[slot - 1] += power
        return MultiPoly(N, {tuple(e): rat(coef)}, world)

    shared = {(0, 0): MultiPoly.const(N, 1, world)}
    for i in range(1, N + 1):
        c = k + 1 if i <= 2 else k
        if c:
            shared = _table_mul(shared, _factor(N, i, c, max_n, world), max_n)
    num0 = {
        (0, 0): mono(),
        (1, 1): -(mono((1, 1)) + mono((2, 1))),
        (2, 0): mono((1, 1), (2, 1)),
    }
    num1 = {(1, 0): mono((1, 1)) - mono((2, 1))}
    f0 = _table_mul(num0, shared, max_n)
    f1 = _table_mul(num1, shared, max_n)
    return (SeriesTable("F0", max_n, N, world, f0), SeriesTable("F1", max_n, N, world, f1))


def formal_images(N: int, max_n: int):
    """f0, f1, g0 = f0 + s f1, g1 = -f1 as p-world tables."""
    f0, f1 = generating_tables(N, ZERO, max_n, "p")
    g0 = {}
    g1 = {}
    for n, j in f0.labels():
        v = f0.get(n, j) + f1.get(n, j - 1)
        if v:
            g0[(n, j)] = v
        w = -f1.get(n, j)
        if w:
            g1[(n, j)] = w
    return (f0, f1, SeriesTable("g0", max_n, N, "p", g0), SeriesTable("g1", max_n, N, "p", g1))


_built: dict = {}


def _tables_for(params: Params, n: int):
    key = (params.N, params.k)
    have = _built.get(key)
    if have is None or have[0].max_n < n:
        order = max(n, 3, have[0].max_n * 2 if have else 0)
        have = generating_tables(params.N, params.k, order)
        _built[key] = have
    return have


@lru_cache(maxsize=None)
def _phi(N: int, k: Rational, n: int, j: int) -> MultiPoly:
    f0, f1 = _tables_for(Params(N, k, 0), n)
    return lift_squares(f0.get(n, j) + f1.get(n, j))


@lru_cache(maxsize=None)
def _psi(N: int, k: Rational, n: int, j: int) -> MultiPoly:
    f0, f1 = _tables_for(Params(N, k, 0), n)
    even = f0.get(n, j) + f1.get(n, j - 1) - f1.get(n, j)
    return lift_squares(even).shift((1,) + (0,) * (N - 1))


def phi(n: int, j: int, params: Params) -> MultiPoly:
    """phi_{n,j}; independent of k1."""
    if n < 0 or j < 0 or j > n:
        return MultiPoly.zero(params.N)
    return _phi(params.N, params.k, n, j)


def psi(n: int, j: int, params: Params) -> MultiPoly:
    if n < 0 or j < 0 or j > n:
        return MultiPoly.zero(params.N)
    return _psi(params.N, params.k, n, j)


def x1x2phi(n: int, j: int, params: Params) -> MultiPoly:
    return phi(n, j, params).shift((1, 1) + (0,) * (params.N - 2))


_ACCESSORS = {PHI: phi, PSI: psi, X1X2PHI: x1x2phi}


def basis_element(kind: str, n: int, j: int, params: Params) -> MultiPoly:
    return _ACCESSORS[kind](n, j, params)


def expand_basis(kind: str, max_n: int, params: Params) -> SeriesTable:
    """All phi_{n,j} (or psi_{n,j}) with n <= max_n, in the x variables."""
    if kind not in (PHI, PSI):
        raise ValueError(f"kind must be {PHI!r} or {PSI!r}")
    if max_n < 0:
        raise ValueError("max_n must be non-negative")
    get = _ACCESSORS[kind]
    entries = {(n, j): get(n, j, params) for n in range(max_n + 1) for j in range(n + 1)}
    return SeriesTable(kind, max_n, params.N, "x", {key: v for key, v in entries.items() if v})


def parity_split(kind: str, n: int, j: int) -> str:
    """Which generating term sources the (n, j) entry."""
    if not 0 <= j <= n:
        raise ValueError(f"label ({n}, {j}) out of range")
    even = (n + j) % 2 == 0
    if kind == PHI:
        return "F0" if even else "F1"
    if kind == PSI:
        return "x1(F0+sF1)" if even else "-x1F1"
    raise ValueError(f"unknown kind {kind!r}")


# Action of T1, T2 on the basis, as formal combinations [(coef, (kind, n, j))].

def _combo(params: Params, *items):
    out = []
    for coef, kind, n, j in items:
        if n >= 0 and 0 <= j <= n:
            c = rat(coef)
            if c:
                out.append((c, (kind, n, j)))
    return out


def T1_on_phi(n: int, j: int, params: Params):
    N, k = params.N, params.k
    if (n + j) % 2 == 0:
        return _combo(params,
                      (2 * N * k + n + j, PSI, n - 1, j - 1),
                      (2 * (N - 1) * k + n, PSI, n - 1, j),
                      (-(j + 1), PSI, n - 1, j + 1))
    return _combo(params,
                  (2 * N * k + n + j + 1, PSI, n - 1, j),
                  (j + 1, PSI, n - 1, j + 1))


def T1_on_psi(n: int, j: int, params: Params):
    N, k, k1 = params.N, params.k, params.k1
    if (n + j) % 2 == 0:
        c = 2 * (N - 1) * k + 2 * k1 + n + j + 1
        return _combo(params, (c, PHI, n, j), (c, PHI, n, j - 1), (-(j + 1), PHI, n, j + 1))
    return _combo(params,
                  (-(2 * (N - 2) * k + 2 * k1 + n + 1), PHI, n, j),
                  (-(j + 1), PHI, n, j + 1))


def T2_on_x1x2_phi(n: int, j: int, params: Params):
    N, k, k1 = params.N, params.k, params.k1
    if (n + j) % 2 == 0:
        return _combo(params,
                      (2 * (N - 2) * k + 2 * k1 + n + 1, PSI, n, j),
                      (2 * (N - 1) * k + 2 * k1 + n + j + 1, PSI, n, j - 1),
                      (-(j + 1), PSI, n, j + 1))
    return _combo(params,
                  (-(2 * (N - 1) * k + 2 * k1 + n + j + 2), PSI, n, j),
                  (-(j + 1), PSI, n, j + 1))


def T2_on_psi(n: int, j: int, params: Params):
    N, k = params.N, params.k
    if (n + j) % 2 == 0:
        return _combo(params,
                      (2 * (N - 1) * k + n + 1, X1X2PHI, n - 1, j),
                      (-(j + 1), X1X2PHI, n - 1, j + 1))
    c = 2 * N * k + n + j + 1
    # the middle label is (n-1, j-1): degree bookkeeping forces it
    return _combo(params,
                  (c, X1X2PHI, n - 1, j),
                  (-c, X1X2PHI, n - 1, j - 1),
                  (j + 1, X1X2PHI, n - 1, j + 1))


RECURRENCES = {
    ("T1", PHI): T1_on_phi,
    ("T1", PSI): T1_on_psi,
    ("T2", X1X2PHI): T2_on_x1x2_phi,
    ("T2", PSI): T2_on_psi,
}


def materialize(combo, params: Params) -> MultiPoly:
    out = MultiPoly.zero(params.N)
    for c, (kind, n, j) in combo:
        out = out + basis_element(kind, n, j, params).scale(c)
    return out
