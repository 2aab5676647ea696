"""Verification suites behind ``degeq verify``.

A suite is a function ``(seed, samples) -> iterable of (case_id, check)``
where ``check()`` returns ``(ok, detail)``.  Family sweeps are driven by
the tables below, so adding a family instance means adding a row.
"""

from __future__ import annotations

import random
from typing import Callable, Iterable, Iterator

from . import families as fam
from .bounds import bound_f_delta, bound_f_n, h_exact, lemma_bound, sparse_bound
from .certificate import verify_certificate
from .exactf import exact_f
from .forest import forest_fk, icbrt, sparse_fk
from .graph import (
    Graph,
    all_graphs,
    disjoint_union,
    double_star,
    random_bounded_degree,
    random_forest,
    random_graph,
    star,
)
from .lowdeg import equate_deg2
from .oracle import brute_feasible, brute_fk

Check = Callable[[], tuple[bool, dict]]
Suite = Callable[[int, int], Iterable[tuple[str, Check]]]


def case_rng(seed: int, i: int) -> random.Random:
    return random.Random(seed * 1_000_003 + i)


# --- checks -----------------------------------------------------------------

def check_oracle_equivalence(g: Graph) -> tuple[bool, dict]:
    res = exact_f(g)
    want, _ = brute_fk(g, 2)
    ok = res.value == want and verify_certificate(g, res.cert) and res.cert.size == res.value
    return ok, {"exact": res.value, "oracle": want}


def check_family_value(g: Graph, spec: fam.FamilySpec, max_n: int = 16) -> tuple[bool, dict]:
    if spec.relation == "f":
        got = exact_f(g).value
        return got == spec.claimed, {"claimed": spec.claimed, "exact_f": got}
    if spec.relation in ("fk", "fk>="):
        got, cert = brute_fk(g, spec.k, max_n=max_n)
        ok = got == spec.claimed if spec.relation == "fk" else got >= spec.claimed
        return ok and verify_certificate(g, cert), {"claimed": spec.claimed, "brute_fk": got}
    feasible, _ = brute_feasible(g, spec.k, max_n=max_n)
    return not feasible, {"feasible": feasible}


def _family_rows(rows: Iterable[tuple[str, dict]], expect: Callable[[Graph, fam.FamilySpec], int] | None = None):
    for name, params in rows:
        g, spec = fam.generate(name, **params)
        case_id = f"{name}-" + "-".join(f"{p}{v:03d}" for p, v in sorted(params.items()))

        def check(g=g, spec=spec):
            ok, detail = check_family_value(g, spec)
            if expect is not None:
                target = expect(g, spec)
                detail["bound"] = target
                ok = ok and spec.claimed == target
            return ok, detail

        yield case_id, check


# --- suites -----------------------------------------------------------------

def suite_oracle_equivalence(seed: int, samples: int):
    for i, g in enumerate(all_graphs(6)):
        yield f"n6-{i:05d}", lambda g=g: check_oracle_equivalence(g)
    for i in range(samples):
        rng = case_rng(seed, i)
        n = rng.randint(7, 10)
        g = random_graph(n, rng.random(), rng.randrange(2 ** 32))
        yield f"rand-{i:06d}", lambda g=g: check_oracle_equivalence(g)


def suite_sharpness_delta(seed: int, samples: int):
    rows = [("stars-delta", {"delta": d}) for d in range(2, 46)]
    return _family_rows(rows, lambda g, s: bound_f_delta(g.max_degree()))


def suite_sharpness_n(seed: int, samples: int):
    rows = [("gn", {"n": n}) for n in range(4, 24)]
    return _family_rows(rows, lambda g, s: bound_f_n(g.n))


def suite_trees(seed: int, samples: int):
    for t in range(7):
        g, spec = fam.caterpillar_T(t)

        def check(g=g, spec=spec, t=t):
            got = exact_f(g).value
            return g.n == fam.b(t) and got == spec.claimed, {"n": g.n, "b_t": fam.b(t), "exact_f": got}

        yield f"tree-t{t:02d}", check


def random_forest_case(rng: random.Random, lo: int, hi: int) -> Graph:
    return random_forest(rng.randint(lo, hi), rng.randrange(2 ** 32), root_prob=rng.uniform(0.0, 0.2))


def suite_forest_bound(seed: int, samples: int):
    for k, lo, hi in ((2, 27, 500), (3, 125, 1000)):
        for i in range(samples):
            f = random_forest_case(case_rng(seed, 10_000 * k + i), lo, hi)

            def check(f=f, k=k):
                cert = forest_fk(f, k)
                bound = (2 * k - 1) * icbrt(f.n)
                return verify_certificate(f, cert) and cert.size <= bound, {
                    "n": f.n, "deleted": cert.size, "bound": bound}

            yield f"k{k}-{i:05d}", check


def suite_prop32(seed: int, samples: int):
    named = {
        "named-k14-k17": disjoint_union(star(4), star(7)),
        "named-s5-8": double_star(5, 8),
    }
    for case_id, g in named.items():
        yield case_id, lambda g=g: ((v := brute_fk(g, 2)[0]) == 2, {"brute_fk": v})
    for i in range(samples):
        f = random_forest_case(case_rng(seed, i), 1, 13)
        yield f"rand-{i:06d}", lambda f=f: ((v := brute_fk(f, 2)[0]) <= 2, {"n": f.n, "brute_fk": v})


def suite_lowdeg(seed: int, samples: int):
    yield from _family_rows([("g2-extremal", {"k": k}) for k in range(2, 6)])
    for i in range(samples):
        rng = case_rng(seed, i)
        n, k = rng.randint(1, 16), rng.randint(2, 6)
        g = random_bounded_degree(n, 2, rng.random(), rng.randrange(2 ** 32))

        def check(g=g, k=k):
            cert = equate_deg2(g, k)
            exact, _ = brute_fk(g, k)
            ok = verify_certificate(g, cert) and exact <= cert.size <= k - 1
            return ok, {"n": g.n, "k": k, "deleted": cert.size, "brute_fk": exact}

        yield f"rand-{i:06d}", check


def suite_feasibility(seed: int, samples: int):
    rows = [(name, {"k": k}) for name in ("h1-extremal", "h2-extremal") for k in range(2, 7)]
    yield from _family_rows(rows)
    for k in range(2, 6):
        n = h_exact(2, k) + 1
        for i in range(samples):
            rng = case_rng(seed, 100_000 * k + i)
            g = random_bounded_degree(n, 2, rng.random(), rng.randrange(2 ** 32))
            yield f"above-h-k{k}-{i:05d}", lambda g=g, k=k: (brute_feasible(g, k)[0], {"n": g.n, "k": k})


def suite_sparse(seed: int, samples: int):
    for i in range(samples):
        rng = case_rng(seed, i)
        n, k = rng.randint(2, 12), rng.randint(2, 4)
        g = random_graph(n, rng.uniform(0.0, 0.5), rng.randrange(2 ** 32))

        def check(g=g, k=k):
            c = max(g.num_edges() / g.n, 1e-9)
            bound = sparse_bound(g.n, c, 0.0, k)
            exact, _ = brute_fk(g, k)
            cert = sparse_fk(g, k)
            ok = exact <= bound and verify_certificate(g, cert) and cert.size <= bound
            return ok, {"n": g.n, "k": k, "brute_fk": exact, "sparse_fk": cert.size, "bound": bound}

        yield f"rand-{i:06d}", check


def suite_lemma_bound(seed: int, samples: int):
    for i, g in enumerate(all_graphs(6)):
        for k in (2, 3, 4):
            def check(g=g, k=k):
                v, _ = brute_fk(g, k)
                return v <= lemma_bound(k, g.max_degree()), {"brute_fk": v, "delta": g.max_degree()}

            yield f"n6-{i:05d}-k{k}", check


# name -> (suite, default samples)
SUITES: dict[str, tuple[Suite, int]] = {
    "oracle-equivalence": (suite_oracle_equivalence, 0),
    "sharpness-delta": (suite_sharpness_delta, 0),
    "sharpness-n": (suite_sharpness_n, 0),
    "trees": (suite_trees, 0),
    "forest-bound": (suite_forest_bound, 100),
    "prop32": (suite_prop32, 10_000),
    "lowdeg": (suite_lowdeg, 1_000),
    "feasibility": (suite_feasibility, 500),
    "sparse": (suite_sparse, 1_000),
    "lemma-bound": (suite_lemma_bound, 0),
}


def iter_results(name: str, seed: int = 0, samples: int | None = None) -> Iterator[dict]:
    suite, default = SUITES[name]
    for case_id, check in suite(seed, default if samples is None else samples):
        ok, detail = check()
        yield {"id": case_id, "ok": bool(ok), **detail}


def run_suite(name: str, seed: int = 0, samples: int | None = None) -> dict:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    results = sorted(iter_results(name, seed, samples), key=lambda r: r["id"])
    return {
        "suite": name,
        "seed": seed,
        "samples": SUITES[name][1] if samples is None else samples,
        "cases": len(results),
        "failures": [r for r in results if not r["ok"]],
    }
