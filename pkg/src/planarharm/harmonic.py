"""The planar harmonic polynomials h_{n,eps} and their ladder relations.

h_{n,eps} has leading term x1^n x2^eps, so its degree is n + eps.  Six of the
eight residue classes are explicit Pochhammer-weighted sums over the planar
basis; h_{4n,1} and h_{4n+2,1} are sigma_12 images.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .dunkl import sigma12
from .exactalg import HALF, ONE, ZERO, MultiPoly, Params, Rational
from .planar import PHI, PSI, X1X2PHI, basis_element


@dataclass(frozen=True, order=True)
class HarmonicLabel:
    n: int
    eps: int

    def __post_init__(self):
        if self.n < 0 or self.eps not in (0, 1):
            raise ValueError(f"invalid harmonic label ({self.n}, {self.eps})")

    @property
    def degree(self) -> int:
        return self.n + self.eps

    @property
    def residue(self) -> int:
        return self.n % 4

    @property
    def quarter(self) -> int:
        return self.n // 4

    def __str__(self) -> str:
        return f"h[{self.n},{self.eps}]"


@dataclass(frozen=True)
class HarmonicPoly:
    """A materialized h_{n,eps}.

    ``basis`` is (kind, m, coeffs) with coeffs indexed 0..m in the named planar
    basis, or None for the two families defined as sigma_12 images.
    """

    label: HarmonicLabel
    basis: tuple | None
    poly: MultiPoly


def poch(a, n: int) -> Rational:
    """Rising factorial by running product."""
    out = ONE
    for i in range(n):
        out *= a + i
    return out


def basis_coefficients(label: HarmonicLabel, params: Params):
    """(kind, m, coeffs) expressing h in the planar basis, or None."""
    N, k, k2 = params.N, params.k, params.k2
    n, r, eps = label.quarter, label.residue, label.eps
    base = k2 + (N - 1) * k  # 2(N-1)k + k1 + 1/2
    if eps == 0 and r in (0, 2):
        m = 2 * n + (r == 2)
        top = base + 2 * n + (1 if r == 2 else 0)
        den1 = k2 + n + (1 if r == 2 else 0)
        den2 = N * k + n + (2 if r == 2 else 1)
        c = [ZERO] * (m + 1)
        for j in range(n + 1):
            c[2 * j] = poch(top, j) * poch(HALF, j) / (poch(den1, j) * poch(den2, j))
        return PHI, m, c
    if eps == 1 and r in (1, 3):
        m = 2 * n + (r == 3)
        top = base + 2 * n + (2 if r == 3 else 1)
        den1 = k2 + n + (2 if r == 3 else 1)
        den2 = N * k + n + (2 if r == 3 else 1)
        c = [ZERO] * (m + 1)
        for j in range(n + 1):
            c[2 * j] = poch(top, j) * poch(HALF, j) / (poch(den1, j) * poch(den2, j))
        return X1X2PHI, m, c
    if eps == 0 and r == 1:
        m = 2 * n
        top, den1, den2 = base + 2 * n + 1, k2 + n + 1, N * k + n + 1
        c = [ZERO] * (m + 1)
        for j in range(n + 1):
            c[2 * j] = poch(top, j) * poch(HALF, j) / (poch(den1, j) * poch(den2, j))
        for j in range(1, n + 1):
            c[2 * j - 1] = (poch(top, j - 1) * poch(HALF, j)
                            / (poch(den1, j - 1) * poch(den2, j)))
        return PSI, m, c
    if eps == 0 and r == 3:
        m = 2 * n + 1
        top, den1, den2 = base + 2 * n + 2, k2 + n + 1, N * k + n + 2
        c = [ZERO] * (m + 1)
        for j in range(n + 1):
            c[2 * j] = poch(top, j) * poch(HALF, j) / (poch(den1, j) * poch(den2, j))
        for j in range(1, n + 2):
            c[2 * j - 1] = (poch(top, j - 1) * poch(HALF, j)
                            / (poch(den1, j) * poch(den2, j - 1)))
        return PSI, m, c
    return None


def combine(kind: str, m: int, coeffs, params: Params) -> MultiPoly:
    out = MultiPoly.zero(params.N)
    for j, c in enumerate(coeffs):
        if c:
            out = out + basis_element(kind, m, j, params).scale(c)
    return out


@lru_cache(maxsize=None)
def build_harmonic(label: HarmonicLabel, params: Params) -> HarmonicPoly:
    if not isinstance(label, HarmonicLabel):
        label = HarmonicLabel(*label)
    expansion = basis_coefficients(label, params)
    if expansion is not None:
        kind, m, coeffs = expansion
        return HarmonicPoly(label, (kind, m, tuple(coeffs)),
                            combine(kind, m, coeffs, params))
    # h_{4n,1} = s12 h_{4n+1,0}, h_{4n+2,1} = s12 h_{4n+3,0}
    partner = build_harmonic(HarmonicLabel(label.n + 1, 0), params)
    return HarmonicPoly(label, None, sigma12(partner.poly))


def harmonic(n: int, eps: int, params: Params) -> MultiPoly:
    return build_harmonic(HarmonicLabel(n, eps), params).poly


def all_labels(max_n: int):
    return [HarmonicLabel(n, e) for n in range(max_n + 1) for e in (0, 1)]


def _label(n: int, eps: int):
    return HarmonicLabel(n, eps) if n >= 0 else None


def ladder_apply(i: int, label: HarmonicLabel, params: Params):
    """(scalar, target) with T_i h_label = scalar * h_target; target None means T_i h = 0."""
    N, k, k1, k2 = params.N, params.k, params.k1, params.k2
    n, r, eps = label.quarter, label.residue, label.eps
    a = (N - 1) * k + n           # 2((N-1)k+n)
    b = (N - 2) * k + k1 + n + HALF
    c = N * k + n + 1
    d = k2 + n
    table = {
        # eight base rows, then their sigma_12 conjugates
        (1, 0, 0): (2 * a, (4 * n - 1, 0)),
        (1, 3, 0): (-2 * b, (4 * n + 2, 0)),
        (1, 2, 0): (2 * c, (4 * n + 1, 0)),
        (1, 1, 0): (2 * d, (4 * n, 0)),
        (2, 3, 0): (2 * c, (4 * n + 1, 1)),
        (2, 1, 1): (2 * b, (4 * n + 1, 0)),
        (2, 1, 0): (2 * a, (4 * n - 1, 1)),
        (2, 3, 1): (-2 * (d + 1), (4 * n + 3, 0)),
        (2, 0, 0): (2 * a, (4 * n - 2, 1)),
        (2, 2, 0): (-2 * c, (4 * n, 1)),
        (2, 0, 1): (2 * d, (4 * n, 0)),
        (2, 2, 1): (2 * b, (4 * n + 2, 0)),
        (1, 0, 1): (-2 * a, (4 * n - 1, 1)),
        (1, 2, 1): (2 * c, (4 * n + 1, 1)),
        (1, 1, 1): (2 * b, (4 * n, 1)),
        (1, 3, 1): (2 * (d + 1), (4 * n + 2, 1)),
    }
    key = (i, r, eps)
    if key not in table:
        raise KeyError(f"no ladder row for T{i} on {label}")
    scalar, (tn, te) = table[key]
    target = _label(tn, te)
    if target is None:
        return ZERO, None
    return scalar, target


BASE_ROWS = ((1, 0, 0), (1, 3, 0), (1, 2, 0), (1, 1, 0),
              (2, 3, 0), (2, 1, 1), (2, 1, 0), (2, 3, 1))


# Coefficient-space action of T1, T2 (lists indexed 0..m, out-of-range entries zero).

def _at(c, i):
    return c[i] if 0 <= i < len(c) else ZERO


def coefficient_ladder(case: str, coeffs, m: int, params: Params) -> list:
    """Image coefficients under T_i for the four source bases.

    ``T1_phi``:     sum c_i phi_{m,i}       -> sum (.)_i psi_{m-1,i}
    ``T1_psi``:     sum c_i psi_{m,i}       -> sum (.)_i phi_{m,i}
    ``T2_psi``:     sum c_i psi_{m,i}       -> sum (.)_i x1x2 phi_{m-1,i}
    ``T2_x1x2phi``: sum c_i x1x2 phi_{m,i}  -> sum (.)_i psi_{m,i}
    """
    N, k, k2 = params.N, params.k, params.k2
    c = list(coeffs)
    if len(c) != m + 1:
        raise ValueError(f"expected {m + 1} coefficients, got {len(c)}")
    if case == "T1_phi":
        out = []
        for i in range(m):
            if (m + i) % 2 == 0:
                out.append((2 * (N - 1) * k + m) * _at(c, i) + i * _at(c, i - 1))
            else:
                out.append((2 * N * k + m + i + 1) * (_at(c, i + 1) + _at(c, i))
                           - i * _at(c, i - 1))
        return out
    if case == "T1_psi":
        out = []
        for i in range(m + 1):
            if (m + i) % 2 == 0:
                out.append((2 * k2 + m + i) * _at(c, i) - i * _at(c, i - 1))
            else:
                out.append((2 * k2 + m + i + 1) * _at(c, i + 1) - (2 * k2 - 2 * k + m) * _at(c, i)
                           - i * _at(c, i - 1))
        return out
    if case == "T2_psi":
        out = []
        for i in range(m):
            if (m + i) % 2 == 0:
                out.append((2 * (N - 1) * k + m + 1) * _at(c, i)
                           - (2 * N * k + m + i + 2) * _at(c, i + 1) + i * _at(c, i - 1))
            else:
                out.append((2 * N * k + m + i + 1) * _at(c, i) - i * _at(c, i - 1))
        return out
    if case == "T2_x1x2phi":
        out = []
        for i in range(m + 1):
            if (m + i) % 2 == 0:
                out.append((2 * k2 - 2 * k + m) * _at(c, i) - i * _at(c, i - 1))
            else:
                out.append((2 * k2 + m + i + 1) * (_at(c, i + 1) - _at(c, i)) - i * _at(c, i - 1))
        return out
    raise ValueError(f"unknown case {case!r}")


LADDER_CASE = {(1, PHI): ("T1_phi", PSI, -1), (1, PSI): ("T1_psi", PHI, 0),
               (2, PSI): ("T2_psi", X1X2PHI, -1), (2, X1X2PHI): ("T2_x1x2phi", PSI, 0)}


def coefficient_ladder_check(i: int, label: HarmonicLabel, params: Params) -> bool:
    """Verify a ladder row purely in coefficient space (no polynomial expansion)."""
    src = build_harmonic(label, params).basis
    if src is None:
        raise ValueError(f"{label} has no planar-basis expansion")
    kind, m, coeffs = src
    case, out_kind, dm = LADDER_CASE[(i, kind)]
    image = coefficient_ladder(case, coeffs, m, params)
    scalar, target = ladder_apply(i, label, params)
    if target is None:
        return all(v == 0 for v in image)
    tkind, tm, tcoeffs = build_harmonic(target, params).basis
    if (tkind, tm) != (out_kind, m + dm):
        return False
    return list(image) == [scalar * v for v in tcoeffs]


def cancellation_terms(label: HarmonicLabel, params: Params) -> list:
    """The d_j that vanish when T1 maps h_{4n+3,0} or h_{4n+1,0} onto a pure phi sum."""
    k, k2 = params.k, params.k2
    n, r = label.quarter, label.residue
    if label.eps != 0 or r not in (1, 3):
        raise ValueError("cancellations are defined for h_{4n+1,0} and h_{4n+3,0}")
    _, _, coeffs = build_harmonic(label, params).basis
    b = {j: coeffs[2 * j] for j in range(len(coeffs) // 2 + 1) if 2 * j < len(coeffs)}
    c = {j: coeffs[2 * j - 1] for j in range(1, len(coeffs)) if 2 * j - 1 < len(coeffs)}
    if r == 3:
        return [2 * (k2 + n + j) * c[j] - (2 * j - 1) * b.get(j - 1, ZERO)
                for j in range(1, n + 2)]
    return [2 * (k2 + n + j) * b[j] - 2 * (k2 - k + n) * c[j] - (2 * j - 1) * b[j - 1]
            for j in range(1, n + 1)]


def symmetry_check(label: HarmonicLabel, params: Params) -> int:
    """The sign s with sigma_12 h = s h, for the four families that are fixed up to sign."""
    signs = {(0, 0): 1, (1, 1): 1, (2, 0): -1, (3, 1): -1}
    key = (label.residue, label.eps)
    if key not in signs:
        raise ValueError(f"{label} is not sigma_12 symmetric or antisymmetric")
    h = harmonic(label.n, label.eps, params)
    s = signs[key]
    if sigma12(h) != h.scale(s):
        raise AssertionError(f"sigma_12 {label} != {s:+d} {label}")
    return s
