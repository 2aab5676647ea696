import logging
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degeq.certificate import verify_certificate
from degeq.families import g2_extremal
from degeq.forest import (
    TOP,
    NotAForestError,
    bucket_index,
    conflict_set,
    forest_fk,
    greedy_fk,
    icbrt,
    interval_partition,
    run_forest_procedure,
    sparse_fk,
)
from degeq.graph import Graph, cycle, delete_vertices, path, random_forest, random_graph, star, survivors


def test_icbrt():
    assert [icbrt(x) for x in (0, 1, 7, 8, 26, 27, 63, 64)] == [0, 1, 1, 2, 2, 3, 3, 4]
    assert all(icbrt(r ** 3) == r and icbrt(r ** 3 - 1) == r - 1 for r in range(1, 2000))


def test_interval_examples():
    n, w = 27, 3
    assert bucket_index(9, n, w) == TOP
    assert bucket_index(8, n, w) == 2  # 216 <= 512 < 729
    assert bucket_index(3, n, w) == 1
    assert bucket_index(2, n, w) == 0
    assert bucket_index(0, n, w) == 0


def test_interval_partition_star():
    p = interval_partition(star(26))
    assert p.w == 3 and p.top == (0,)
    assert p.buckets[0] == tuple(range(1, 27))


def test_conflict_set_examples():
    assert conflict_set(star(5), {1, 2, 3}) == (0,)
    assert conflict_set(path(5), {0, 2}) == (1,)
    assert conflict_set(path(7), {0, 6}) == ()


def test_conflict_set_errors():
    with pytest.raises(NotAForestError):
        conflict_set(cycle(4), {0, 2})
    with pytest.raises(ValueError):
        conflict_set(path(3), {0})


def test_conflict_set_smaller_than_A_random():
    rng = random.Random(2024)
    for _ in range(10_000):
        f = random_forest(rng.randint(2, 40), rng.randrange(2 ** 32), root_prob=rng.uniform(0, 0.3))
        A = rng.sample(range(f.n), rng.randint(2, f.n))
        assert len(conflict_set(f, A)) < len(A)


def test_greedy_examples():
    cert = greedy_fk(star(3), 2)
    assert cert.deleted == (0,) and cert.result_max_degree == 0 and len(cert.realizing) == 3
    assert greedy_fk(Graph.empty(6), 4).deleted == ()
    g, _ = g2_extremal(3)
    cert = greedy_fk(g, 3)
    assert sorted(cert.deleted) == [0, 3] and cert.size <= 2 * 2


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 25), st.floats(0, 1), st.integers(0, 2 ** 32), st.integers(2, 6))
def test_greedy_within_lemma_bound(n, p, seed, k):
    g = random_graph(n, p, seed)
    cert = greedy_fk(g, k)
    assert verify_certificate(g, cert)
    assert cert.size <= (k - 1) * g.max_degree()


def test_forest_star_hand_trace():
    run = run_forest_procedure(star(26), 2)
    assert run.cert.deleted == (0,) and run.top_deleted == (0,)
    assert run.cert.size <= run.budget == 9
    assert verify_certificate(star(26), run.cert)


@pytest.mark.parametrize("n, k", [(216, 2), (343, 3)])
@pytest.mark.parametrize("seed", range(5))
def test_forest_examples(n, k, seed):
    f = random_forest(n, seed)
    cert = forest_fk(f, k)
    assert verify_certificate(f, cert)
    assert cert.size <= (2 * k - 1) * icbrt(n)


def test_forest_preconditions():
    with pytest.raises(ValueError):
        forest_fk(random_forest(26, 0), 2)
    with pytest.raises(ValueError):
        forest_fk(random_forest(124, 0), 3)
    with pytest.raises(NotAForestError):
        forest_fk(cycle(30), 2)


def overflow_forest() -> Graph:
    # four hubs on a path, padded with leaves to degree 16, plus one isolated vertex
    edges = [(0, 1), (1, 2), (2, 3)]
    nxt = 4
    for hub, leaves in ((0, 15), (1, 14), (2, 14), (3, 15)):
        edges += [(hub, nxt + i) for i in range(leaves)]
        nxt += leaves
    return Graph.from_edges(nxt + 1, edges)


def test_top_interval_overflow(caplog):
    f = overflow_forest()
    assert f.n == 63 and icbrt(63) == 3
    with caplog.at_level(logging.WARNING):
        run = run_forest_procedure(f, 2)
    assert run.top_overflow and len(run.top_deleted) == 4
    assert "top interval" in caplog.text
    assert verify_certificate(f, run.cert) and run.cert.size <= run.budget


def test_equalization_plan_has_no_collateral_changes():
    hits = 0
    for seed in range(300):
        f = random_forest(random.Random(seed).randint(27, 400), seed, root_prob=0.02)
        for k in (2, 3):
            if icbrt(f.n) < 2 * k - 1:
                continue
            run = run_forest_procedure(f, k)
            assert verify_certificate(f, run.cert)
            if run.plan is None:
                continue
            hits += 1
            h = delete_vertices(f, set(run.cert.deleted))
            pos = {old: i for i, old in enumerate(survivors(f, set(run.cert.deleted)))}
            target = run.plan.degrees[-1]
            assert all(h.degree(pos[v]) == target for v in run.plan.A)
            assert set(run.plan.deletions()).isdisjoint(run.plan.M)
    assert hits > 0


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 12), st.floats(0, 0.5), st.integers(0, 2 ** 32), st.integers(2, 4))
def test_sparse_fk_validates(n, p, seed, k):
    g = random_graph(n, p, seed)
    assert verify_certificate(g, sparse_fk(g, k))


def test_sparse_fk_rejects_beta():
    with pytest.raises(ValueError):
        sparse_fk(path(4), 2, beta=1.0)
