from fractions import Fraction

import pytest

from oracle import add, as_x, coefficient, generating
from planarharm.dunkl import dunkl_T
from planarharm.exactalg import MultiPoly, Params, Rational
from planarharm.planar import (
    PHI,
    PSI,
    RECURRENCES,
    basis_element,
    expand_basis,
    gegenbauer,
    generating_tables,
    materialize,
    parity_split,
    phi,
    psi,
)
from planarharm.verify import suite_delta, suite_recurrences


def as_dict(p: MultiPoly):
    return {m: Fraction(int(c.numerator), int(c.denominator)) for m, c in p.terms.items()}


def x(N, i):
    return MultiPoly.var(N, i)


def test_low_order_examples(P):
    N, k = P.N, P.k
    r2 = sum((x(N, i) ** 2 for i in range(1, N + 1)), MultiPoly.zero(N))
    d = x(N, 1) ** 2 - x(N, 2) ** 2
    assert phi(0, 0, P) == MultiPoly.const(N, 1)
    assert phi(1, 0, P) == d
    assert phi(1, 1, P) == x(N, 1) ** 2 + x(N, 2) ** 2 + r2.scale(2 * k)
    assert phi(1, 0, P) + phi(1, 1, P) == (x(N, 1) ** 2).scale(2) + r2.scale(2 * k)
    assert psi(0, 0, P) == x(N, 1)
    assert psi(1, 0, P) == -(x(N, 1) * d)
    assert psi(1, 1, P) == x(N, 1) * ((x(N, 1) ** 2).scale(2) + r2.scale(2 * k))


@pytest.mark.parametrize("k", [Fraction(2, 7), Fraction(5, 3)])
def test_against_naive_series(N, k):
    order = 4
    F0, F1 = generating(N, k, order)
    P = Params(N, Rational(k.numerator, k.denominator), 0)
    for n in range(order + 1):
        for j in range(n + 1):
            want_phi = add(coefficient(F0, n, j), coefficient(F1, n, j))
            assert as_dict(phi(n, j, P)) == as_x(want_phi), (n, j)
            even = add(add(coefficient(F0, n, j), coefficient(F1, n, j - 1)),
                       {e: -c for e, c in coefficient(F1, n, j).items()})
            assert as_dict(psi(n, j, P)) == as_x(even, {1: 1}), (n, j)


def test_degrees_and_independence_of_k1(N):
    P1, P2 = Params(N, Rational(1, 3), 0), Params(N, Rational(1, 3), Rational(7, 2))
    for n in range(5):
        for j in range(n + 1):
            f = phi(n, j, P1)
            assert f == phi(n, j, P2)
            assert f.is_homogeneous() and f.degree() == 2 * n
            g = psi(n, j, P1)
            assert g.is_homogeneous() and g.degree() == 2 * n + 1


def test_out_of_range_labels_are_zero(P):
    assert not phi(2, 3, P) and not phi(-1, 0, P) and not psi(1, -1, P)


def test_gegenbauer_small_cases():
    c = Rational(3, 4)
    C = gegenbauer(c, 3)
    assert C[0] == [1]
    assert C[1] == [0, 2 * c]
    assert C[2] == [-c, 0, 2 * c * (c + 1)]


def test_generating_table_truncation(P):
    f0, f1 = generating_tables(P.N, P.k, 2)
    with pytest.raises(IndexError):
        f0.get(3, 0)


def test_parity_rule():
    assert parity_split(PHI, 2, 0) == "F0"
    assert parity_split(PHI, 1, 0) == "F1"
    assert parity_split(PSI, 1, 1) == "x1(F0+sF1)"
    with pytest.raises(ValueError):
        parity_split(PHI, 1, 2)


def test_expand_basis_matches_accessors(P):
    table = expand_basis(PHI, 3, P)
    for n, j in table.labels():
        assert table.get(n, j) == phi(n, j, P)


def test_recurrence_examples(P):
    N, k, k2 = P.N, P.k, P.k2
    x1 = x(N, 1)
    assert materialize(RECURRENCES[("T1", PHI)](1, 0, P), P) == x1.scale(2 * N * k + 2)
    assert not materialize(RECURRENCES[("T2", PSI)](0, 0, P), P)
    assert materialize(RECURRENCES[("T1", PSI)](0, 0, P), P) == MultiPoly.const(N, 2 * k2)
    assert materialize(RECURRENCES[("T2", "x1x2phi")](0, 0, P), P) == x1.scale(2 * (k2 - k))


def test_recurrences_match_direct(samples):
    res = suite_recurrences(samples, 4, seed=0)
    assert res.passed, res.failure


def test_odd_t2_psi_middle_term(P):
    # the second term of T2 psi_{n,j} (n+j odd) carries the label (n-1, j-1)
    for n, j in [(2, 1), (3, 2), (4, 1)]:
        direct = dunkl_T(2, basis_element(PSI, n, j, P), P)
        assert direct == materialize(RECURRENCES[("T2", PSI)](n, j, P), P)


def test_divided_difference_relations(samples):
    res = suite_delta(samples, 5, seed=0)
    assert res.passed, res.failure
