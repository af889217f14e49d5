import pytest

from planarharm.dunkl import dunkl_T, laplacian_B, sigma12
from planarharm.exactalg import HALF, MultiPoly
from planarharm.harmonic import (
    BASE_ROWS,
    HarmonicLabel,
    all_labels,
    basis_coefficients,
    build_harmonic,
    cancellation_terms,
    coefficient_ladder,
    coefficient_ladder_check,
    harmonic,
    ladder_apply,
    symmetry_check,
)
from planarharm.verify import suite_ladder

H = HarmonicLabel


def x(N, i):
    return MultiPoly.var(N, i)


def test_small_members(P):
    N = P.N
    assert harmonic(0, 0, P) == MultiPoly.const(N, 1)
    assert harmonic(1, 0, P) == x(N, 1)
    assert harmonic(0, 1, P) == x(N, 2)
    assert harmonic(1, 1, P) == x(N, 1) * x(N, 2)
    assert harmonic(2, 0, P) == x(N, 1) ** 2 - x(N, 2) ** 2


def test_label_validation():
    with pytest.raises(ValueError):
        H(-1, 0)
    with pytest.raises(ValueError):
        H(3, 2)
    assert H(6, 1).degree == 7 and H(6, 1).residue == 2 and H(6, 1).quarter == 1


def test_top_monomial_and_degree(P):
    for lab in all_labels(9):
        h = harmonic(lab.n, lab.eps, P)
        assert h.is_homogeneous() and h.degree() == lab.degree
        top = (lab.n, lab.eps) + (0,) * (P.N - 2)
        assert h.coeff(top) != 0
        assert all(m[0] <= lab.n for m in h.terms)


def test_harmonic_and_planar(P):
    for lab in all_labels(9):
        h = harmonic(lab.n, lab.eps, P)
        assert not laplacian_B(h, P), lab
        for i in range(3, P.N + 1):
            assert not dunkl_T(i, h, P), (lab, i)


def test_exponent_parities_in_first_two_slots(P):
    for lab in all_labels(8):
        h = harmonic(lab.n, lab.eps, P)
        pattern = {(m[0] % 2, m[1] % 2) for m in h.terms}
        assert pattern == {(lab.n % 2, lab.eps)}
        assert all(e % 2 == 0 for m in h.terms for e in m[2:])


def test_sigma12_images(P):
    for n in range(3):
        assert harmonic(4 * n, 1, P) == sigma12(harmonic(4 * n + 1, 0, P))
        assert build_harmonic(H(4 * n + 2, 1), P).basis is None


def test_ladder_examples(P):
    N, k, k1 = P.N, P.k, P.k1
    assert ladder_apply(1, H(1, 0), P) == (2 * P.k2, H(0, 0))
    assert ladder_apply(2, H(1, 1), P) == (2 * ((N - 2) * k + k1 + HALF), H(1, 0))
    assert ladder_apply(1, H(0, 0), P) == (0, None)
    assert not dunkl_T(1, harmonic(0, 0, P), P)


def test_ladder_rows_direct(P):
    for lab in all_labels(9):
        h = harmonic(lab.n, lab.eps, P)
        for i in (1, 2):
            c, target = ladder_apply(i, lab, P)
            want = harmonic(target.n, target.eps, P).scale(c) if target else MultiPoly.zero(P.N)
            assert dunkl_T(i, h, P) == want, (lab, i)


def test_coefficient_maps(P):
    for lab in all_labels(9):
        for i in (1, 2):
            if (i, lab.residue, lab.eps) in BASE_ROWS:
                assert coefficient_ladder_check(i, lab, P), (lab, i)


def test_coefficient_map_is_linear(P):
    assert coefficient_ladder("T1_psi", [0, 0, 0], 2, P) == [0, 0, 0]
    with pytest.raises(ValueError):
        coefficient_ladder("T1_psi", [1, 2], 2, P)
    with pytest.raises(ValueError):
        coefficient_ladder("T3_phi", [1], 0, P)


def test_cancellations(P):
    for n in range(4):
        for r in (1, 3):
            assert all(d == 0 for d in cancellation_terms(H(4 * n + r, 0), P))


def test_symmetry(P):
    assert symmetry_check(H(4, 0), P) == 1
    assert symmetry_check(H(6, 0), P) == -1
    with pytest.raises(ValueError):
        symmetry_check(H(5, 0), P)


def test_basis_coefficients_shape(P):
    kind, m, coeffs = basis_coefficients(H(9, 0), P)
    assert len(coeffs) == m + 1


def test_ladder_suite(samples):
    res = suite_ladder(samples, 11, seed=0)
    assert res.passed, res.failure
