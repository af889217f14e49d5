"""Naive truncated series for the generating functions, for cross-checking.

Each factor (1 - 2 s t u + t^2 u^2)^(-c) is expanded with the generalized
binomial theorem as sum_m (c)_m / m! (2 s t u - t^2 u^2)^m, using Fraction
arithmetic only.  Series are dicts {(s, t, u_1..u_N): Fraction}.
"""

from fractions import Fraction
from math import factorial


def mul(a, b, order):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            if e[1] > order:
                continue
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def add(a, b):
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def unit(N):
    return {(0,) * (N + 2): Fraction(1)}


def mono(N, coef, s=0, t=0, u=None):
    e = [s, t] + [0] * N
    for slot, power in (u or {}).items():
        e[1 + slot] += power
    return {tuple(e): Fraction(coef)}


def factor(N, slot, c, order):
    x = add(mono(N, 2, s=1, t=1, u={slot: 1}), mono(N, -1, t=2, u={slot: 2}))
    out = unit(N)
    power = unit(N)
    rising = Fraction(1)
    for m in range(1, order + 1):
        power = mul(power, x, order)
        rising *= c + m - 1
        out = add(out, {e: v * rising / factorial(m) for e, v in power.items()})
    return out


def generating(N, k, order):
    shared = unit(N)
    for slot in range(1, N + 1):
        c = k + 1 if slot <= 2 else k
        shared = mul(shared, factor(N, slot, Fraction(c), order), order)
    num0 = add(add(unit(N), mono(N, -1, s=1, t=1, u={1: 1})),
               add(mono(N, -1, s=1, t=1, u={2: 1}), mono(N, 1, t=2, u={1: 1, 2: 1})))
    num1 = add(mono(N, 1, t=1, u={1: 1}), mono(N, -1, t=1, u={2: 1}))
    return mul(num0, shared, order), mul(num1, shared, order)


def coefficient(series, n, j):
    """The (t^n s^j) coefficient as {u-exponents: Fraction}."""
    return {e[2:]: c for e, c in series.items() if e[0] == j and e[1] == n}


def as_x(poly_u, shift=None):
    """Replace u_i by x_i^2 and multiply by x^shift; returns {x-exponents: Fraction}."""
    out = {}
    for e, c in poly_u.items():
        x = [2 * v for v in e]
        for slot, p in (shift or {}).items():
            x[slot - 1] += p
        out[tuple(x)] = c
    return out
