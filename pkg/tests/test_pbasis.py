import pytest

from planarharm.dunkl import dunkl_hatT
from planarharm.exactalg import MultiPoly, WorldMismatch, compositions
from planarharm.pbasis import (
    delta12,
    expand,
    hatT_formal,
    hatT_on_p_alpha,
    p_alpha,
    p_n,
    psi_forward,
    psi_inverse,
    psi_inverse_coords,
    psi_iso,
)
from planarharm.verify import suite_pbasis


def ys(N):
    return [MultiPoly.var(N, i, "y") for i in range(1, N + 1)]


def ps(N):
    return [MultiPoly.var(N, i, "p") for i in range(1, N + 1)]


def test_p_n_examples(P):
    y = ys(P.N)
    assert p_n(0, 1, P) == MultiPoly.const(P.N, 1, "y")
    total = sum(y, MultiPoly.zero(P.N, "y"))
    assert p_n(1, 1, P) == y[0] + total.scale(P.k)


def test_p_alpha_examples(P):
    N = P.N
    z = (0,) * N
    assert p_alpha(z, P) == MultiPoly.const(N, 1, "y")
    assert p_alpha((1,) + z[1:], P) == p_n(1, 1, P)
    assert p_alpha((1, 1) + z[2:], P) == p_n(1, 1, P) * p_n(1, 2, P)
    with pytest.raises(ValueError):
        p_alpha((1, -1) + z[2:], P)


def test_p_n_annihilated_by_other_operators(P):
    for n in range(7):
        for i in range(1, P.N + 1):
            p = p_n(n, i, P)
            for j in range(1, P.N + 1):
                if j != i:
                    assert not dunkl_hatT(j, p, P), (n, i, j)


def test_hat_on_p_alpha_examples(P):
    N = P.N
    e1 = (1,) + (0,) * (N - 1)
    assert hatT_on_p_alpha(2, e1, P) == []
    assert expand(hatT_on_p_alpha(1, e1, P), P) == MultiPoly.const(N, N * P.k + 1, "y")


def test_hat_on_p_alpha_against_brute_force(P):
    for total in range(5):
        for alpha in compositions(total, P.N):
            for i in range(1, P.N + 1):
                want = dunkl_hatT(i, p_alpha(alpha, P), P)
                assert expand(hatT_on_p_alpha(i, alpha, P), P) == want, (alpha, i)


def test_psi_examples(N):
    p = ps(N)
    assert psi_forward({(0,) * N: 1}, N) == MultiPoly.const(N, 1, "p")
    assert psi_forward({(2, 1) + (0,) * (N - 2): 1}, N) == p[0] ** 2 * p[1]
    f = p[0] ** 2 * p[1] - p[2].scale(3)
    assert psi_forward(psi_inverse_coords(f), N) == f
    assert psi_iso(psi_iso(f, "inverse"), "forward", N=N) == f


def test_psi_inverse_expands(P):
    p = ps(P.N)
    assert psi_inverse(p[0] * p[1], P) == p_n(1, 1, P) * p_n(1, 2, P)
    with pytest.raises(WorldMismatch):
        psi_inverse(MultiPoly.var(P.N, 1, "y"), P)


def test_hat_formal_examples(P):
    N, k = P.N, P.k
    p = ps(N)
    assert hatT_formal(1, p[0], P) == MultiPoly.const(N, 1 + N * k, "p")
    # alpha_1 = 0, so the image vanishes; the xi-terms cancel in pairs
    assert not hatT_formal(1, p[1], P)
    assert hatT_formal(1, p[0] * p[1], P) == (p[1].scale(1 + N * k) + p[0].scale(k)
                                               - p[1].scale(k))


def test_psi_conjugation_identity(samples):
    res = suite_pbasis(samples, 5, seed=2)
    assert res.passed, res.failure


def test_delta12_examples(N):
    p = ps(N)
    assert not delta12(MultiPoly.const(N, 1, "p"))
    assert not delta12(p[0])
    assert not delta12(p[0] ** 2)
    assert delta12(p[0] * p[1]) == p[0] - p[1]
    with pytest.raises(ValueError):
        delta12(p[2])
