"""Terminating hypergeometric sums and the closed-form evaluations of h_{n,eps}.

Covered here: values at (1,...,1), leading coefficients, the generalized
Pochhammer symbol Lambda(m, n), even parts at y0 = (1, -1, 0, ..., 0) and the
squared norm under the pairing f(T) g(x)|_{x=0}.  The point
x0 = (1, sqrt(-1), 0, ...) is never formed; only even parts in squared
variables are evaluated.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Sequence

from .dunkl import dunkl_T
from .exactalg import HALF, ONE, ZERO, MultiPoly, Params, Rational, even_part_in_squares, poly_eval, rat
from .harmonic import HarmonicLabel, build_harmonic, poch

pochhammer = poch


class HypergeometricError(ValueError):
    pass


def _termination(upper: Sequence[Rational]) -> int:
    n = None
    for a in upper:
        if a <= 0 and a.denominator == 1:
            n = int(-a) if n is None else min(n, int(-a))
    if n is None:
        raise HypergeometricError("series does not terminate: no non-positive integer numerator")
    return n


@dataclass(frozen=True)
class HypSeries:
    """pFq(upper; lower; 1), terminating."""

    upper: tuple
    lower: tuple

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(rat(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(rat(b) for b in self.lower))
        _termination(self.upper)

    @property
    def order(self) -> int:
        return _termination(self.upper)

    @property
    def balanced(self) -> bool:
        return sum(self.upper, ZERO) + 1 == sum(self.lower, ZERO)


def hyp_sum(s: HypSeries) -> Rational:
    """Sum of the terminating series term by term."""
    n = s.order
    total = ZERO
    term = ONE
    for i in range(n + 1):
        total += term
        if i == n:
            break
        num = ONE
        for a in s.upper:
            num *= a + i
        den = rat(i + 1)
        for b in s.lower:
            if b + i == 0:
                raise HypergeometricError(f"denominator parameter {b} vanishes at term {i + 1}")
            den *= b + i
        term = term * num / den
    return total


def hyp(upper, lower) -> Rational:
    return hyp_sum(HypSeries(tuple(upper), tuple(lower)))


def whipple_transform(s: HypSeries):
    """(prefactor, transformed series) for a balanced terminating 4F3.

    4F3(-n, a, b, c; d, e, f) = prefactor * 4F3(-n, a, d-b, d-c; d, 1+a-e-n, 1+a-f-n)
    """
    if len(s.upper) != 4 or len(s.lower) != 3:
        raise HypergeometricError("Whipple's transformation needs a 4F3")
    if not s.balanced:
        raise HypergeometricError("series is not balanced")
    n = s.order
    upper = list(s.upper)
    upper.remove(rat(-n))
    a, b, c = upper
    d, e, f = s.lower
    pref = (poch(1 + a - e - n, n) * poch(1 + a - f - n, n)) / (poch(e, n) * poch(f, n))
    return pref, HypSeries((-n, a, d - b, d - c), (d, 1 + a - e - n, 1 + a - f - n))


# generalized Pochhammer symbol and the T-power scalars -----------------------

def lambda_value(m: int, n: int, params: Params) -> Rational:
    if m < n or n < 0:
        raise ValueError(f"Lambda needs m >= n >= 0, got ({m}, {n})")
    N, k, k2 = params.N, params.k, params.k2
    a, b = m // 2, n // 2
    return (poch(N * k + 1, a) * poch((N - 1) * k + 1, b)
            * poch(k2, m - a) * poch(k2 - k, n - b))


def operator_word(label: HarmonicLabel) -> tuple:
    """(power of T1, power of T2) that sends h to a constant in the pairing."""
    return label.n, label.eps


def tpower_scalar(label: HarmonicLabel, params: Params) -> Rational:
    """The constant T1^n T2^eps h_{n,eps}."""
    q, r, eps = label.quarter, label.residue, label.eps
    lam = lambda a, b: lambda_value(a, b, params)  # noqa: E731
    sign = -1 if q % 2 else 1
    table = {
        (0, 0): (4 * q, sign, (2 * q, 2 * q)),
        (1, 0): (4 * q + 1, sign, (2 * q + 1, 2 * q)),
        (2, 0): (4 * q + 2, sign, (2 * q + 2, 2 * q)),
        (1, 1): (4 * q + 2, sign, (2 * q + 1, 2 * q + 1)),
        (3, 0): (4 * q + 3, -sign, (2 * q + 2, 2 * q + 1)),
        (3, 1): (4 * q + 4, sign, (2 * q + 3, 2 * q + 1)),
        # sigma_12 images, using T2^2 = -T1^2 on the family
        (0, 1): (4 * q + 1, sign, (2 * q + 1, 2 * q)),
        (2, 1): (4 * q + 3, sign, (2 * q + 2, 2 * q + 1)),
    }
    p2, s, (a, b) = table[(r, eps)]
    return s * 2 ** p2 * lam(a, b)


def tpower_direct(label: HarmonicLabel, params: Params) -> Rational:
    """T1^n T2^eps h by repeated Dunkl application."""
    f = build_harmonic(label, params).poly
    p1, p2 = operator_word(label)
    for _ in range(p2):
        f = dunkl_T(2, f, params)
    for _ in range(p1):
        f = dunkl_T(1, f, params)
    if f.degree() > 0:
        raise AssertionError(f"T-power of {label} is not constant")
    return f.coeff((0,) * params.N)


# values at 1^N ---------------------------------------------------------------

def value_at_ones(label: HarmonicLabel, params: Params) -> Rational:
    N, k, k2 = params.N, params.k, params.k2
    q, r, eps = label.quarter, label.residue, label.eps
    key = (r, eps)
    if key in ((2, 0), (3, 1)):
        return ZERO
    A = poch(N * k + 1, q) * poch((N - 1) * k + 1, q)
    nf = factorial(q)
    if key == (0, 0):
        return A / (nf * poch(k2 + q, q))
    if key in ((1, 0), (1, 1), (0, 1)):
        return A / (nf * poch(k2 + q + 1, q))
    # (3, 0) and its sigma_12 image (2, 1)
    return poch(N * k + 1, q + 1) * poch((N - 1) * k + 1, q) / (nf * poch(k2 + q + 1, q + 1))


def value_at_ones_direct(label: HarmonicLabel, params: Params) -> Rational:
    return poly_eval(build_harmonic(label, params).poly, [1] * params.N)


# leading coefficients --------------------------------------------------------

LEAD = "lead"      # x1^n x2^eps
MIRROR = "mirror"  # x1^(n mod 2) x2^(n + eps - n mod 2), the sigma_12 partner monomial


def selector_monomial(label: HarmonicLabel, which: str, N: int) -> tuple:
    if which == LEAD:
        head = (label.n, label.eps)
    elif which == MIRROR:
        p1 = label.n % 2
        head = (p1, label.n + label.eps - p1)
    else:
        raise ValueError(f"unsupported selector {which!r}")
    return head + (0,) * (N - 2)


def _lead_even(q: int, r: int, params: Params) -> Rational:
    """cof(h_{4q,0}, x1^{4q}) for r = 0, cof(h_{4q+2,0}, x1^{4q+2}) for r = 2."""
    N, k, k2 = params.N, params.k, params.k2
    num = (-1) ** q * poch(k + 1, q) * poch(k2 - k, q) * poch((N - 1) * k + 1, q)
    if r == 0:
        return num / (factorial(q) * poch(k2 + q, q) * poch(N * k + q + 1, q))
    return num / (factorial(q) * poch(k2 + q + 1, q) * poch(N * k + q + 2, q))


def leading_coefficient(label: HarmonicLabel, which: str, params: Params) -> Rational:
    N, k, k2 = params.N, params.k, params.k2
    q, r, eps = label.quarter, label.residue, label.eps
    if which not in (LEAD, MIRROR):
        raise ValueError(f"unsupported selector {which!r}")
    shifted = params.with_k1(params.k1 + 1)
    key = (r, eps)
    if key == (0, 0):
        return _lead_even(q, 0, params)
    if key == (2, 0):
        v = _lead_even(q, 2, params)
        return v if which == LEAD else -v
    if key == (1, 1):
        return _lead_even(q, 0, shifted)
    if key == (3, 1):
        v = _lead_even(q, 2, shifted)
        return v if which == LEAD else -v
    if key in ((1, 0), (0, 1)):
        lead = ((-1) ** q * poch(k + 1, q) * poch(k2 - k, q) * poch((N - 1) * k + 1, q)
                / (factorial(q) * poch(k2 + q + 1, q) * poch(N * k + q + 1, q)))
        mirror = lead * (k2 - k + 2 * q) / (k2 - k)
    else:  # (3, 0) and (2, 1)
        lead = ((-1) ** (q + 1) * poch(k + 1, q) * poch(k2 - k, q + 1)
                * poch((N - 1) * k + 1, q)
                / (factorial(q) * poch(k2 + q + 1, q + 1) * poch(N * k + q + 2, q)))
        mirror = -lead * (k2 + k + 2 * q + 1) / (k2 - k)
    if eps == 1:  # sigma_12 image swaps the two monomials
        lead, mirror = mirror, lead
    return lead if which == LEAD else mirror


def leading_coefficient_direct(label: HarmonicLabel, which: str, params: Params) -> Rational:
    return build_harmonic(label, params).poly.coeff(selector_monomial(label, which, params.N))


# evaluation of even parts at y0 = (1, -1, 0, ..., 0) --------------------------

def parity_pattern(label: HarmonicLabel) -> tuple:
    return label.n % 2, label.eps


def even_part(f: MultiPoly, eps1: int, eps2: int) -> MultiPoly:
    """f0 with f = x1^eps1 x2^eps2 f0(x1^2, ..., xN^2)."""
    out = {}
    for m, c in f.terms.items():
        if m[0] < eps1 or m[1] < eps2:
            raise ValueError("polynomial lacks the requested x1/x2 factor")
        out[(m[0] - eps1, m[1] - eps2) + m[2:]] = c
    return even_part_in_squares(MultiPoly(f.nvars, out, "x", _trusted=True))


def y0_point(N: int) -> list:
    return [1, -1] + [0] * (N - 2)


def value_at_x0_direct(label: HarmonicLabel, params: Params) -> Rational:
    f = build_harmonic(label, params).poly
    return poly_eval(even_part(f, *parity_pattern(label)), y0_point(params.N))


def phi_at_x0(n: int, j: int, params: Params) -> Rational:
    """Even part of phi_{n,j} at y0, from its closed form."""
    k = params.k
    if j % 2 == 1:
        return ZERO
    jj = j // 2
    if n % 2 == 0:
        nn = n // 2
        return (poch(2 * k + 1, nn + jj) * (-1) ** nn * poch(-nn, jj) * (2 * k + 2 * nn + 1)
                / (factorial(nn) * factorial(jj) * poch(k + Rational(3, 2), jj) * (2 * k + 1)))
    nn = (n - 1) // 2
    return (2 * poch(2 * k + 2, nn + jj) * (-1) ** nn * poch(-nn, jj)
            / (factorial(nn) * factorial(jj) * poch(k + Rational(3, 2), jj)))


def _x0_closed(q: int, r: int, params: Params) -> Rational:
    N, k, k2 = params.N, params.k, params.k2
    K = (N - 1) * k
    three_half = Rational(3, 2)
    nf = factorial(q)
    if r == 0:
        pref = ((-1) ** q * poch(2 * k + 1, q) * (2 * k + 2 * q + 1) * poch(K + 1, q)
                * poch(k2 - k, q)
                / (nf * (2 * k + 1) * poch(k2 + q, q) * poch(N * k + q + 1, q)))
        return pref * hyp((-q, k2 + K + 2 * q, k + 1, -q - k + HALF),
                          (k + three_half, k2 - k, K + 1))
    if r == 2:
        pref = ((-1) ** q * 2 * poch(2 * k + 2, q) * poch(K + 1, q) * poch(k2 - k, q)
                / (nf * poch(k2 + q + 1, q) * poch(N * k + q + 2, q)))
        return pref * hyp((-q, k2 + K + 2 * q + 1, k + 1, -q - k - HALF),
                          (k + three_half, k2 - k, K + 1))
    if r == 1:
        pref = ((-1) ** q * poch(2 * k + 1, q) * (2 * k + 2 * q + 1) * poch(K + 1, q)
                * poch(k2 - k + 1, q)
                / (nf * (2 * k + 1) * poch(k2 + q + 1, q) * poch(N * k + q + 1, q)))
        return pref * hyp((-q, k2 + K + 2 * q + 1, k + 1, -q - k + HALF),
                          (k + three_half, k2 - k + 1, K + 1))
    pref = ((-1) ** (q + 1) * (2 * k2 + 2 * q + 1) * poch(2 * k + 2, q) * poch(K + 1, q)
            * poch(k2 - k + 1, q)
            / (nf * poch(k2 + q + 1, q + 1) * poch(N * k + q + 2, q)))
    return pref * hyp((-q, k2 + K + 2 * q + 2, k + 1, -q - k - HALF),
                      (k + three_half, k2 - k + 1, K + 1))


def value_at_x0(label: HarmonicLabel, params: Params) -> Rational:
    """Even part of h at y0, from the balanced 4F3 closed forms."""
    q, r, eps = label.quarter, label.residue, label.eps
    if eps == 0:
        return _x0_closed(q, r, params)
    if r in (1, 3):  # x1 x2 f0: shift k1 (hence k2) by one in the eps = 0 partner
        return _x0_closed(q, r - 1, params.with_k1(params.k1 + 1))
    # sigma_12 images: f0(-1, 1, ...) = (-1)^deg f0(1, -1, ...)
    return (-1) ** (label.n // 2) * _x0_closed(q, r + 1, params)


def x0_prewhipple_h4n(q: int, params: Params):
    """The 4F3 for h_{4q,0}(x0) before Whipple's transformation: (prefactor, series)."""
    N, k, k2 = params.N, params.k, params.k2
    pref = (-1) ** q * poch(2 * k + 1, q) * (2 * k + 2 * q + 1) / (factorial(q) * (2 * k + 1))
    series = HypSeries((-q, k2 + (N - 1) * k + 2 * q, HALF, 2 * k + q + 1),
                       (k + Rational(3, 2), k2 + q, N * k + q + 1))
    return pref, series


# norms -----------------------------------------------------------------------

@dataclass(frozen=True)
class NormCertificate:
    label: HarmonicLabel
    value: Rational
    pairing: Rational      # h(T) h |_{x=0}
    x0_value: Rational     # even part at y0 (4F3 closed form)
    tpower: Rational       # T1^n T2^eps h


class NormMismatch(AssertionError):
    pass


def operator_pairing(f: MultiPoly, g: MultiPoly, params: Params) -> Rational:
    """f(T_1, ..., T_N) g evaluated at 0, for homogeneous f, g of equal degree."""
    memo = {(): g}

    def apply(word: tuple) -> MultiPoly:
        # word is a non-increasing tuple of operator indices
        got = memo.get(word)
        if got is None:
            prev = apply(word[:-1])
            got = dunkl_T(word[-1], prev, params) if prev else prev
            memo[word] = got
        return got

    total = ZERO
    origin = (0,) * params.N
    for m, c in f.terms.items():
        word = tuple(i for i in range(params.N, 0, -1) for _ in range(m[i - 1]))
        total += c * apply(word).coeff(origin)
    return total


def norm_squared(label: HarmonicLabel, params: Params) -> NormCertificate:
    """The pairing h(T)h|_0 by two routes; a disagreement raises ``NormMismatch``."""
    h = build_harmonic(label, params).poly
    pairing = operator_pairing(h, h, params)
    x0 = value_at_x0(label, params)
    tp = tpower_scalar(label, params)
    if pairing != x0 * tp:
        raise NormMismatch(f"{label}: pairing {pairing} != {x0} * {tp}")
    return NormCertificate(label, pairing, pairing, x0, tp)
