"""Randomized exact verification suites, shared by the CLI and the test-suite.

Every suite takes a list of parameter samples and reports how many identities
it checked and the first counterexample.  Randomness comes from a
``random.Random`` seeded per suite, so reports are reproducible.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from . import calogero, dunkl, harmonic, pbasis, planar, special
from .exactalg import (
    ONE,
    MultiPoly,
    Params,
    Rational,
    compositions,
    exact_divide,
    lift_squares,
    poly_eval,
    to_json_obj,
)
from .harmonic import all_labels


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failure: dict | None = None
    by_law: Counter = field(default_factory=Counter)

    @property
    def passed(self) -> bool:
        return self.failure is None and self.checked > 0

    def check(self, ok: bool, **context) -> bool:
        self.checked += 1
        self.by_law[context.get("law", self.name)] += 1
        if not ok and self.failure is None:
            self.failure = {k: _jsonable(v) for k, v in context.items()}
        return ok


def _jsonable(v):
    if isinstance(v, MultiPoly):
        return to_json_obj(v)
    if isinstance(v, (Params,)):
        return {"N": v.N, "k": str(v.k), "k1": str(v.k1)}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (int, str, bool)) or v is None:
        return v
    return str(v)


# sampling ---------------------------------------------------------------------

def random_rational(rng: random.Random, lo: int = 1, hi: int = 40) -> Rational:
    return Rational(rng.randint(lo, hi), rng.randint(lo, hi))


def sample_params(N: int, samples: int, seed: int) -> list[Params]:
    """Positive rational (k, k1) pairs; numerators and denominators in [1, 40]."""
    rng = random.Random(seed)
    seen = set()
    out = []
    while len(out) < samples:
        k, k1 = random_rational(rng), random_rational(rng)
        if (k, k1) in seen:
            continue
        seen.add((k, k1))
        out.append(Params(N, k, k1))
    return out


def random_poly(rng: random.Random, N: int, degree: int, terms: int = 4,
                homogeneous: bool = True, world: str = "x") -> MultiPoly:
    out = {}
    for _ in range(terms):
        d = degree if homogeneous else rng.randint(0, degree)
        e = [0] * N
        for _ in range(d):
            e[rng.randrange(N)] += 1
        out[tuple(e)] = Rational(rng.randint(-9, 9), rng.randint(1, 5))
    return MultiPoly(N, {m: c for m, c in out.items() if c}, world)


# suites -------------------------------------------------------------------------

def suite_ring(params_list, max_n, seed, **_):
    res = SuiteResult("ring")
    rng = random.Random(seed)
    N = params_list[0].N
    for _ in range(20):
        a, b, c = (random_poly(rng, N, rng.randint(0, 4), homogeneous=False) for _ in range(3))
        res.check((a * b) * c == a * (b * c), a=a, b=b, c=c, law="associativity")
        res.check(a * b == b * a, a=a, b=b, law="commutativity")
        res.check(a * (b + c) == a * b + a * c, a=a, b=b, c=c, law="distributivity")
        pt = [Rational(rng.randint(-7, 7), rng.randint(1, 7)) for _ in range(N)]
        res.check(poly_eval(a * b, pt) == poly_eval(a, pt) * poly_eval(b, pt), a=a, b=b, law="eval*")
        res.check(poly_eval(a + b, pt) == poly_eval(a, pt) + poly_eval(b, pt), a=a, b=b, law="eval+")
        i, j = rng.sample(range(1, N + 1), 2)
        xi, xj = MultiPoly.var(N, i), MultiPoly.var(N, j)
        for d in (xi, xi - xj, xi + xj):
            res.check(exact_divide(a * d, d) == a, q=a, d=d, law="division")
    return res


def suite_dunkl(params_list, max_n, seed, **_):
    res = SuiteResult("dunkl")
    rng = random.Random(seed)
    for P in params_list:
        N = P.N
        for _ in range(6):
            f = random_poly(rng, N, rng.randint(1, 8))
            i, j = rng.sample(range(1, N + 1), 2)
            tij = dunkl.dunkl_T(i, dunkl.dunkl_T(j, f, P), P)
            tji = dunkl.dunkl_T(j, dunkl.dunkl_T(i, f, P), P)
            res.check(tij == tji, f=f, i=i, j=j, params=P, law="commute")
            g = dunkl.dunkl_T(i, f, P)
            res.check(not g or (g.is_homogeneous() and g.degree() == f.degree() - 1),
                      f=f, i=i, params=P, law="homogeneity")
            res.check(dunkl.sigma12(dunkl.dunkl_T(1, dunkl.sigma12(f), P)) == dunkl.dunkl_T(2, f, P),
                      f=f, params=P, law="equivariance")
        for _ in range(6):
            g = random_poly(rng, N, rng.randint(0, 4), world="y")
            eps = (rng.randint(0, 1), rng.randint(0, 1)) + (0,) * (N - 2)
            f = lift_squares(g).shift(eps)
            for i in range(1, N + 1):
                res.check(dunkl.dunkl_T(i, f, P) == dunkl.lift_check(eps, g, i, P),
                          g=g, eps=eps, i=i, params=P, law="lift")
    return res


def suite_pbasis(params_list, max_n, seed, **_):
    res = SuiteResult("pbasis")
    for P in params_list:
        N = P.N
        for n in range(min(max_n, 6) + 1):
            for i in range(1, N + 1):
                p = pbasis.p_n(n, i, P)
                for j in range(1, N + 1):
                    if j != i:
                        res.check(not dunkl.dunkl_hatT(j, p, P), n=n, i=i, j=j, params=P,
                                  law="p_n annihilated")
        for total in range(min(max_n, 5) + 1):
            for alpha in compositions(total, N):
                pa = pbasis.p_alpha(alpha, P)
                p_formal = pbasis.psi_forward({alpha: 1}, N)
                for i in range(1, N + 1):
                    exp = pbasis.hatT_on_p_alpha(i, alpha, P)
                    res.check(pbasis.expand(exp, P) == dunkl.dunkl_hatT(i, pa, P),
                              alpha=alpha, i=i, params=P, law="T^ on p_alpha")
                    res.check(pbasis.psi_forward(exp, N) == pbasis.hatT_formal(i, p_formal, P),
                              alpha=alpha, i=i, params=P, law="Psi conjugation")
    return res


def suite_delta(params_list, max_n, seed, **_):
    """The divided difference relations on the formal images, and Psi F = f."""
    res = SuiteResult("delta12")
    N = params_list[0].N
    top = min(max_n, 5)
    f0, f1, g0, g1 = planar.formal_images(N, top + 1)
    p1 = MultiPoly.var(N, 1, "p")
    p2 = MultiPoly.var(N, 2, "p")
    d = pbasis.delta12
    for n in range(top + 1):
        for j in range(n + 1):
            lab = dict(n=n, j=j)
            res.check(d(f0(n, j)) == f1(n - 1, j), law="d f0", **lab)
            res.check(not d(f1(n, j)), law="d f1", **lab)
            res.check(d(p2 * f0(n, j)) == f1(n, j - 1), law="d p2 f0", **lab)
            res.check(d(p2 * f1(n, j)) == f1(n, j), law="d p2 f1", **lab)
            res.check(d(g0(n, j)) == f1(n - 1, j), law="d g0", **lab)
            res.check(not d(g1(n, j)), law="d g1", **lab)
            res.check(not d(p1 * g0(n, j)), law="d p1 g0", **lab)
            res.check(d(p1 * g1(n, j)) == f1(n, j), law="d p1 g1", **lab)
    for P in params_list:
        F0, F1 = planar.generating_tables(N, P.k, top)
        for n in range(top + 1):
            for j in range(n + 1):
                res.check(pbasis.psi_inverse(f0(n, j), P) == F0(n, j), n=n, j=j, params=P,
                          law="Psi F0")
                res.check(pbasis.psi_inverse(f1(n, j), P) == F1(n, j), n=n, j=j, params=P,
                          law="Psi F1")
    return res


_OPS = {"T1": 1, "T2": 2}


def suite_recurrences(params_list, max_n, seed, **_):
    res = SuiteResult("recurrences")
    for P in params_list:
        for (op, kind), rule in sorted(planar.RECURRENCES.items()):
            for n in range(min(max_n, 4) + 1):
                for j in range(n + 1):
                    src = planar.basis_element(kind, n, j, P)
                    want = planar.materialize(rule(n, j, P), P)
                    res.check(dunkl.dunkl_T(_OPS[op], src, P) == want,
                              op=op, kind=kind, n=n, j=j, params=P)
    return res


def suite_harmonicity(params_list, max_n, seed, corrupt=False, **_):
    res = SuiteResult("harmonicity")
    for P in params_list:
        for lab in all_labels(max_n):
            h = harmonic.harmonic(lab.n, lab.eps, P)
            if corrupt and lab.n == max_n:
                m, c = h.sorted_terms()[-1]
                h = h + MultiPoly(P.N, {m: ONE}, "x")
            res.check(not dunkl.laplacian_B(h, P), label=lab, params=P, h=h, law="Delta_B h = 0")
            for i in range(3, P.N + 1):
                res.check(not dunkl.dunkl_T(i, h, P), label=lab, i=i, params=P, law="T_i h = 0")
            res.check(h.is_homogeneous() and h.degree() == lab.degree, label=lab, params=P,
                      law="degree")
    return res


def suite_ladder(params_list, max_n, seed, **_):
    res = SuiteResult("ladder")
    for P in params_list:
        for lab in all_labels(max_n):
            h = harmonic.harmonic(lab.n, lab.eps, P)
            for i in (1, 2):
                scalar, target = harmonic.ladder_apply(i, lab, P)
                want = (harmonic.harmonic(target.n, target.eps, P).scale(scalar)
                        if target else MultiPoly.zero(P.N))
                res.check(dunkl.dunkl_T(i, h, P) == want, label=lab, i=i, params=P, law="direct")
                if (i, lab.residue, lab.eps) in harmonic.BASE_ROWS and \
                        harmonic.build_harmonic(lab, P).basis is not None:
                    res.check(harmonic.coefficient_ladder_check(i, lab, P), label=lab, i=i,
                              params=P, law="coefficient map")
            if lab.eps == 0 and lab.residue in (1, 3):
                res.check(all(d == 0 for d in harmonic.cancellation_terms(lab, P)),
                          label=lab, params=P, law="d_j cancellation")
            if (lab.residue, lab.eps) in ((0, 0), (1, 1), (2, 0), (3, 1)):
                try:
                    harmonic.symmetry_check(lab, P)
                    ok = True
                except AssertionError:
                    ok = False
                res.check(ok, label=lab, params=P, law="sigma_12 symmetry")
    return res


def suite_closed_forms(params_list, max_n, seed, **_):
    res = SuiteResult("closed_forms")
    for P in params_list:
        for lab in all_labels(max_n):
            res.check(special.value_at_ones(lab, P) == special.value_at_ones_direct(lab, P),
                      label=lab, params=P, law="value at 1^N")
            for which in (special.LEAD, special.MIRROR):
                res.check(special.leading_coefficient(lab, which, P)
                          == special.leading_coefficient_direct(lab, which, P),
                          label=lab, which=which, params=P, law="leading coefficient")
            res.check(special.value_at_x0(lab, P) == special.value_at_x0_direct(lab, P),
                      label=lab, params=P, law="x0 value")
            res.check(special.tpower_scalar(lab, P) == special.tpower_direct(lab, P),
                      label=lab, params=P, law="T-power scalar")
    return res


def suite_norms(params_list, max_n, seed, **_):
    res = SuiteResult("norms")
    for P in params_list:
        for lab in all_labels(min(max_n, 9)):
            try:
                cert = special.norm_squared(lab, P)
            except special.NormMismatch as exc:
                res.check(False, label=lab, params=P, error=str(exc))
                continue
            res.check(True)
            if P.k > 0 and P.k1 > 0:
                res.check(cert.value > 0, label=lab, params=P, value=cert.value, law="positivity")
    return res


def _free_param(rng):
    # a rational that is never an integer, so no lower parameter hits a pole
    while True:
        q = Rational(rng.randint(-40, 40), rng.randint(2, 40))
        if q.denominator != 1:
            return q


def chu_vandermonde_tuples(rng, count):
    out = []
    for _ in range(count):
        n = rng.randint(0, 6)
        out.append((n, _free_param(rng), _free_param(rng)))
    return out


def saalschutz_tuples(rng, count):
    out = []
    while len(out) < count:
        n = rng.randint(0, 6)
        a, b, c = (_free_param(rng) for _ in range(3))
        e = 1 + a + b - c - n
        if e.denominator == 1 or (c - a - b).denominator == 1:
            continue
        out.append((n, a, b, c))
    return out


def whipple_tuples(rng, count):
    out = []
    while len(out) < count:
        n = rng.randint(0, 5)
        a, b, c, d, e = (_free_param(rng) for _ in range(5))
        f = a + b + c + 1 - n - d - e
        s = special.HypSeries((-n, a, b, c), (d, e, f))
        lowered = (1 + a - e - n, 1 + a - f - n)
        if any(x.denominator == 1 for x in (f,) + lowered):
            continue
        out.append(s)
    return out


def suite_hypergeometric(params_list, max_n, seed, counts=(50, 50, 25), **_):
    res = SuiteResult("hypergeometric")
    rng = random.Random(seed)
    poch = special.pochhammer
    for n, b, c in chu_vandermonde_tuples(rng, counts[0]):
        lhs = special.hyp((-n, b), (c,))
        res.check(lhs == poch(c - b, n) / poch(c, n), n=n, b=b, c=c, law="Chu-Vandermonde")
    for n, a, b, c in saalschutz_tuples(rng, counts[1]):
        lhs = special.hyp((-n, a, b), (c, 1 + a + b - c - n))
        rhs = poch(c - a, n) * poch(c - b, n) / (poch(c, n) * poch(c - a - b, n))
        res.check(lhs == rhs, n=n, a=a, b=b, c=c, law="Saalschutz")
    for s in whipple_tuples(rng, counts[2]):
        pref, t = special.whipple_transform(s)
        res.check(special.hyp_sum(s) == pref * special.hyp_sum(t), series=s, law="Whipple")
    return res


def suite_calogero(params_list, max_n, seed, omegas=None, **_):
    res = SuiteResult("calogero")
    rng = random.Random(seed)
    omegas = omegas or [random_rational(rng, 1, 9) for _ in range(2)]
    for P in params_list:
        for w in omegas:
            cp = calogero.CalogeroParams(P, w)
            for lab in all_labels(min(max_n, 7)):
                if lab.degree > 7:
                    continue
                for n in range(3):
                    L = calogero.EigenLabel.natural(lab.degree, n, P)
                    res.check(calogero.check_eigen(L, lab, cp), label=lab, n=n, omega=w,
                              params=P, law="eigen-relation")
                    if n:
                        bad = calogero.EigenLabel(L.m, n, L.c + 1)
                        res.check(not calogero.check_eigen(bad, lab, cp), label=lab, n=n,
                                  omega=w, params=P, law="perturbed index fails")
    return res


def suite_classical(params_list, max_n, seed, **_):
    """k = k1 = 0 regardless of the sampled parameters."""
    res = SuiteResult("classical")
    rng = random.Random(seed)
    N = params_list[0].N
    P = Params(N, 0, 0)
    for _ in range(10):
        f = random_poly(rng, N, rng.randint(1, 6))
        for i in range(1, N + 1):
            res.check(dunkl.dunkl_T(i, f, P) == f.diff(i), f=f, i=i, law="T_i = d/dx_i")
    for lab in all_labels(max_n):
        h = harmonic.harmonic(lab.n, lab.eps, P)
        lap = sum((h.diff(i).diff(i) for i in range(1, N + 1)), MultiPoly.zero(N))
        res.check(not lap, label=lab, law="ordinary Laplacian")
        res.check(all(not any(m[2:]) for m in h.terms), label=lab, law="planar")
    return res


SUITES = {
    "calogero": suite_calogero,
    "classical": suite_classical,
    "closed_forms": suite_closed_forms,
    "delta12": suite_delta,
    "dunkl": suite_dunkl,
    "harmonicity": suite_harmonicity,
    "hypergeometric": suite_hypergeometric,
    "ladder": suite_ladder,
    "norms": suite_norms,
    "pbasis": suite_pbasis,
    "recurrences": suite_recurrences,
    "ring": suite_ring,
}


def run_suites(params_list, max_n, seed, names=None, corrupt=False) -> list[SuiteResult]:
    """Run the named suites (all by default) in name order."""
    out = []
    for name in sorted(names or SUITES):
        sub_seed = seed * 1000003 + sum(map(ord, name))
        out.append(SUITES[name](params_list, max_n, sub_seed, corrupt=corrupt))
    return out
