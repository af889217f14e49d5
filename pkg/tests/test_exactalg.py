import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planarharm.dunkl import Reflection, apply_reflection
from planarharm.exactalg import (
    AmbientMismatch,
    InexactDivision,
    MultiPoly,
    Params,
    Rational,
    WorldMismatch,
    exact_divide,
    from_json_obj,
    poly_add,
    poly_eval,
    poly_mul,
    rat,
    to_json_obj,
    to_latex,
)

N = 3
x1, x2, x3 = (MultiPoly.var(N, i) for i in (1, 2, 3))

coef = st.builds(Rational, st.integers(-20, 20), st.integers(1, 9))
mono = st.tuples(*[st.integers(0, 3)] * N)
polys = st.dictionaries(mono, coef, max_size=5).map(lambda d: MultiPoly(N, d))
points = st.lists(coef, min_size=N, max_size=N)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == MultiPoly.zero(N)
    assert a * MultiPoly.const(N, 1) == a


@settings(max_examples=60, deadline=None)
@given(polys, st.integers(1, 3), st.integers(1, 3), st.sampled_from(["var", "minus", "plus"]))
def test_exact_divide_roundtrip(q, i, j, form):
    xi, xj = MultiPoly.var(N, i), MultiPoly.var(N, j)
    if form != "var" and i == j:
        return
    d = {"var": xi, "minus": xi - xj, "plus": xi + xj}[form]
    assert exact_divide(q * d, d) == q
    assert exact_divide(q * d.scale(-1), d.scale(-1)) == q


@settings(max_examples=60, deadline=None)
@given(polys, polys, points)
def test_eval_is_a_homomorphism(a, b, pt):
    assert poly_eval(a * b, pt) == poly_eval(a, pt) * poly_eval(b, pt)
    assert poly_eval(a + b, pt) == poly_eval(a, pt) + poly_eval(b, pt)


@settings(max_examples=40, deadline=None)
@given(polys)
def test_coefficients_stay_canonical(a):
    for c in (a * a + a).terms.values():
        assert c != 0 and c.denominator > 0
        assert Rational(c.numerator, c.denominator) == c


@settings(max_examples=40, deadline=None)
@given(polys)
def test_json_roundtrip(a):
    text = json.dumps(to_json_obj(a), sort_keys=True)
    assert from_json_obj(json.loads(text)) == a


def test_addition_and_product_examples():
    assert poly_add(x1, -x1) == MultiPoly.zero(N)
    assert poly_add(x1 ** 2, x2 ** 2) == x1 ** 2 + x2 ** 2
    assert poly_mul(x1, x2) == MultiPoly.monomial((1, 1, 0))
    assert poly_mul(x1 - x2, x1 + x2) == x1 ** 2 - x2 ** 2


def test_eval_examples():
    f = x1 ** 2 - x2 ** 2
    assert poly_eval(f, [1, 1, 1]) == 0
    assert poly_eval(f, [1, 0, 0]) == 1


def test_divide_examples():
    assert exact_divide(x1 ** 2 - x2 ** 2, x1 - x2) == x1 + x2
    assert exact_divide((x1 ** 3).scale(2), x1) == (x1 ** 2).scale(2)
    f = x1 ** 3
    assert exact_divide(f - apply_reflection(Reflection.sigma(1), f), x1) == (x1 ** 2).scale(2)


def test_divide_rejects_remainder_and_bad_divisors():
    with pytest.raises(InexactDivision):
        exact_divide(x1 ** 2 + x2, x1 - x2)
    with pytest.raises(ValueError):
        exact_divide(x1, x1 * x2)


def test_ambient_and_world_checks():
    with pytest.raises(AmbientMismatch):
        x1 + MultiPoly.var(2, 1)
    with pytest.raises(WorldMismatch):
        x1 + MultiPoly.var(N, 1, "y")


def test_rational_parsing_is_exact():
    assert rat("6/4") == Rational(3, 2)
    assert rat(Rational(1, 3)) * 3 == 1


def test_grlex_order_and_latex():
    f = x2 ** 2 - x1 ** 2 + x1 * x2 * x3
    assert [m for m, _ in f.sorted_terms()] == [(1, 1, 1), (2, 0, 0), (0, 2, 0)]
    assert to_latex(x1 ** 2 - x2 ** 2) == "x_{1}^{2}-x_{2}^{2}"
    assert to_latex((x1 * x3).scale(Rational(-2, 3))) == "-\\frac{2}{3}x_{1}x_{3}"


def test_params_k2():
    P = Params(4, Rational(1, 3), Rational(1, 5))
    assert P.k2 == 3 * Rational(1, 3) + Rational(1, 5) + Rational(1, 2)
    with pytest.raises(ValueError):
        Params(1, 0, 0)
