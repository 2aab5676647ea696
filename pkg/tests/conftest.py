from itertools import combinations

import pytest

from degeq.graph import Graph, check_graph


def naive_fk(g: Graph, k: int, feasible_only: bool = False):
    """Plain set-based enumeration, deliberately sharing no code with the oracle module."""
    vs = list(range(g.n))
    for d in range(g.n + 1):
        for dels in combinations(vs, d):
            keep = set(vs) - set(dels)
            if len(keep) < k:
                if feasible_only:
                    return None
                return d
            degs = [len(g.adj[v] & keep) for v in keep]
            if degs.count(max(degs)) >= k:
                return d
    return None


@pytest.fixture(scope="session")
def valid():
    """Assert the structural invariants of a graph and hand it back."""

    def _valid(g: Graph) -> Graph:
        check_graph(g)
        assert sum(g.degrees()) == 2 * g.num_edges()
        return g

    return _valid
