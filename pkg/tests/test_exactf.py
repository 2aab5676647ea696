import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degeq.bounds import bound_f_delta, bound_f_n
from degeq.certificate import make_certificate, verify_certificate
from degeq.exactf import diff_upper_bound, exact_f
from degeq.families import caterpillar_T
from degeq.graph import (
    Graph,
    GraphError,
    all_graphs,
    complete,
    cycle,
    degree_view,
    delete_vertices,
    disjoint_union,
    double_star,
    path,
    random_graph,
    star,
)

from conftest import naive_fk


def test_diff_bound_star():
    g = star(3)
    bound, witness = diff_upper_bound(g)
    assert bound == 2 and len(witness) == 2 and 0 not in witness
    assert verify_certificate(g, make_certificate(g, witness, 2))


def test_diff_bound_regular():
    assert diff_upper_bound(cycle(4)) == (0, ())


def test_diff_bound_double_star_not_tight():
    g = double_star(5, 8)
    assert diff_upper_bound(g)[0] == 3
    assert exact_f(g).value == 2


def test_diff_bound_needs_two_vertices():
    with pytest.raises(GraphError):
        diff_upper_bound(Graph.empty(1))


@pytest.mark.parametrize(
    "g, want",
    [
        (star(2), 1),
        (disjoint_union(star(2), star(4), star(7), star(13)), 4),
        (caterpillar_T(2)[0], 3),
        (cycle(5), 0),
        (disjoint_union(star(4), star(7)), 2),
    ],
)
def test_exact_f_examples(g, want):
    res = exact_f(g)
    assert res.value == want
    assert res.cert.size == want and verify_certificate(g, res.cert)


@pytest.mark.parametrize("n", [0, 1])
def test_exact_f_tiny(n):
    res = exact_f(Graph.empty(n))
    assert res.value == 0 and res.cert.small_h and verify_certificate(Graph.empty(n), res.cert)


def test_certificate_checker_examples():
    g = star(2)
    assert verify_certificate(g, make_certificate(g, {0}, 2))
    assert not verify_certificate(g, make_certificate(g, set(), 2))


def test_certificate_rejects_tampering():
    g = caterpillar_T(2)[0]
    cert = exact_f(g).cert
    bad = cert.__class__(cert.k, cert.deleted, cert.result_max_degree + 1, cert.realizing, cert.small_h)
    assert not verify_certificate(g, bad)
    dup = cert.__class__(cert.k, cert.deleted + cert.deleted[:1], cert.result_max_degree,
                         cert.realizing, cert.small_h)
    assert not verify_certificate(g, dup)


def test_trace_stops_at_first_zero_diff():
    res = exact_f(complete(5))
    assert len(res.trace.steps) == 1 and res.trace.steps[0].diff == 0


def test_long_trace():
    # nested threshold-like union: each deletion exposes a new unique maximum
    g = disjoint_union(*[star(d) for d in (1, 3, 6, 10, 15, 21)])
    res = exact_f(g)
    steps = res.trace.steps
    assert len(steps) >= 4
    assert [s.j for s in steps] == list(range(len(steps)))
    assert res.value == min(s.diff + s.j for s in steps)
    assert steps[res.trace.jstar].diff + res.trace.jstar == res.value
    assert verify_certificate(g, res.cert)


def test_trace_matches_repeated_deletion():
    g = random_graph(30, 0.2, 4)
    h = g
    for step in exact_f(g).trace.steps:
        dv = degree_view(h)
        assert (step.d1, step.d2, step.diff) == (dv.d1, dv.d2, dv.diff)
        if step.diff == 0:
            break
        h = delete_vertices(h, {dv.degrees.index(dv.d1)})


def test_exhaustive_n5_against_naive():
    for g in all_graphs(5):
        assert exact_f(g).value == naive_fk(g, 2)


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 11), st.floats(0, 1), st.integers(0, 2 ** 32))
def test_exact_f_invariants(n, p, seed):
    g = random_graph(n, p, seed)
    res = exact_f(g)
    assert res.value == naive_fk(g, 2)
    assert res.cert.size == res.value and verify_certificate(g, res.cert)
    assert res.value <= diff_upper_bound(g)[0]
    assert res.value <= bound_f_delta(g.max_degree())
    if n >= 4:
        assert res.value <= bound_f_n(n)


def test_deterministic():
    g = random_graph(200, 0.05, 9)
    assert exact_f(g) == exact_f(g)


def test_path_is_easy():
    assert exact_f(path(6)).value == 0
