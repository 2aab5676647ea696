"""Acceptance criteria 1-10, each at its stated tolerance and time budget.

Every test prints one PASS/FAIL line (visible under ``pytest -v`` since
output capture is bypassed for the report line).
"""

import random
import time

import pytest

from degeq.bounds import bound_f_delta, bound_f_n, h_exact, lemma_bound
from degeq.certificate import verify_certificate
from degeq.cli import fit_exponent
from degeq.exactf import exact_f
from degeq.families import b, caterpillar_T, extremal_gn, g2_extremal, h1_extremal, h2_extremal, star_union_delta
from degeq.forest import forest_fk, icbrt
from degeq.graph import (
    all_graphs,
    disjoint_union,
    double_star,
    random_bounded_degree,
    random_forest,
    random_graph,
    star,
)
from degeq.lowdeg import equate_deg2
from degeq.oracle import brute_feasible, brute_fk

SEED = 20240601


@pytest.fixture
def report(capsys):
    def _report(num: int, name: str, ok: bool, elapsed: float, limit: float, detail: str = ""):
        status = "PASS" if ok and elapsed < limit else "FAIL"
        with capsys.disabled():
            print(f"\n[criterion {num:2d}] {status} {name}: {detail} ({elapsed:.2f}s, limit {limit:g}s)")
        assert ok, detail
        assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"

    return _report


def test_criterion_01_oracle_equivalence(report):
    t0 = time.perf_counter()
    bad = []
    count = 0
    for g in all_graphs(6):
        count += 1
        if exact_f(g).value != brute_fk(g, 2)[0]:
            bad.append(g)
    rng = random.Random(SEED)
    for _ in range(10_000):
        g = random_graph(rng.randint(7, 10), rng.random(), rng.randrange(2 ** 32))
        count += 1
        if exact_f(g).value != brute_fk(g, 2)[0]:
            bad.append(g)
    report(1, "oracle equivalence", not bad and count == 32768 + 10_000, time.perf_counter() - t0, 120,
           f"{count} graphs, {len(bad)} mismatches")


def test_criterion_02_delta_sharpness(report):
    t0 = time.perf_counter()
    bad = [d for d in range(2, 46) if exact_f(star_union_delta(d)[0]).value != bound_f_delta(d)]
    ts = {bound_f_delta(d) for d in range(2, 46)}
    report(2, "delta sharpness", not bad and ts == set(range(1, 9)), time.perf_counter() - t0, 1,
           f"44 values of delta, failures {bad}")


def test_criterion_03_n_sharpness(report):
    t0 = time.perf_counter()
    bad = [n for n in range(4, 24) if exact_f(extremal_gn(n)[0]).value != bound_f_n(n)]
    report(3, "n sharpness", not bad, time.perf_counter() - t0, 1, f"20 values of n, failures {bad}")


def test_criterion_04_caterpillars(report):
    t0 = time.perf_counter()
    bad = []
    for t in range(7):
        g, _ = caterpillar_T(t)
        if g.n != (t ** 3 + 6 * t ** 2 + 17 * t + 18) // 6 or g.n != b(t) or exact_f(g).value != t + 1:
            bad.append(t)
    report(4, "caterpillar family", not bad, time.perf_counter() - t0, 1, f"t = 0..6, failures {bad}")


def test_criterion_05_forest_bound(report):
    t0 = time.perf_counter()
    bad = []
    worst = 0.0
    rng = random.Random(SEED)
    for k, lo, hi in ((2, 27, 500), (3, 125, 1000)):
        for _ in range(100):
            f = random_forest(rng.randint(lo, hi), rng.randrange(2 ** 32), root_prob=rng.uniform(0, 0.2))
            cert = forest_fk(f, k)
            bound = (2 * k - 1) * icbrt(f.n)
            worst = max(worst, cert.size / bound)
            if not verify_certificate(f, cert) or cert.size > bound:
                bad.append((k, f.n))
    report(5, "forest bound", not bad, time.perf_counter() - t0, 30,
           f"200 forests, failures {bad}, worst size/bound {worst:.2f}")


def test_criterion_06_thirteen_vertices(report):
    t0 = time.perf_counter()
    named = [brute_fk(disjoint_union(star(4), star(7)), 2)[0], brute_fk(double_star(5, 8), 2)[0]]
    rng = random.Random(SEED)
    worst = 0
    for _ in range(10_000):
        f = random_forest(rng.randint(1, 13), rng.randrange(2 ** 32), root_prob=rng.uniform(0, 0.2))
        worst = max(worst, brute_fk(f, 2)[0])
    report(6, "13-vertex forests", named == [2, 2] and worst <= 2, time.perf_counter() - t0, 300,
           f"named cases {named}, max f over 10^4 forests {worst}")


def test_criterion_07_g2k(report):
    t0 = time.perf_counter()
    family = {k: brute_fk(g2_extremal(k)[0], k)[0] for k in range(2, 6)}
    rng = random.Random(SEED)
    bad = 0
    for _ in range(1000):
        g = random_bounded_degree(rng.randint(1, 16), 2, rng.random(), rng.randrange(2 ** 32))
        k = rng.randint(2, 6)
        cert = equate_deg2(g, k)
        if not verify_certificate(g, cert) or cert.size > k - 1:
            bad += 1
    ok = family == {k: k - 1 for k in range(2, 6)} and bad == 0
    report(7, "g(2,k) = k-1", ok, time.perf_counter() - t0, 120,
           f"family values {family}, {bad} bad certificates of 1000")


def test_criterion_08_h_values(report):
    t0 = time.perf_counter()
    extremal = [brute_feasible(gen(k)[0], k)[0] for gen in (h1_extremal, h2_extremal) for k in range(2, 7)]
    rng = random.Random(SEED)
    infeasible = 0
    for k in range(2, 6):
        n = h_exact(2, k) + 1
        for _ in range(500):
            g = random_bounded_degree(n, 2, rng.random(), rng.randrange(2 ** 32))
            if not brute_feasible(g, k)[0]:
                infeasible += 1
    report(8, "h values", not any(extremal) and infeasible == 0, time.perf_counter() - t0, 300,
           f"extremal instances feasible: {sum(extremal)}/10, infeasible samples above h: {infeasible}/2000")


def test_criterion_09_lemma_bound(report):
    t0 = time.perf_counter()
    bad = 0
    for g in all_graphs(6):
        delta = g.max_degree()
        for k in (2, 3, 4):
            if brute_fk(g, k)[0] > lemma_bound(k, delta):
                bad += 1
    report(9, "lemma bound", bad == 0, time.perf_counter() - t0, 300, f"{3 * 32768} checks, {bad} violations")


def test_criterion_10_performance(report):
    t0 = time.perf_counter()
    ns = [1000, 2000, 4000, 8000]
    best = []
    for i, n in enumerate(ns):
        g = random_graph(n, 4 / n, SEED + i)
        times = []
        for _ in range(3):
            s = time.perf_counter()
            exact_f(g)
            times.append(time.perf_counter() - s)
        best.append(max(min(times), 1e-9))
    exponent = fit_exponent(ns, best)
    ok = exponent <= 2.3 and best[-1] < 5
    report(10, "performance", ok, time.perf_counter() - t0, 60,
           f"fitted exponent {exponent:.2f}, n=8000 best {best[-1]:.3f}s")
