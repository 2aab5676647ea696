"""Exponential brute force over deletion sets; the ground truth for small graphs."""

from __future__ import annotations

from itertools import combinations
from typing import Optional

from .certificate import Certificate, make_certificate
from .graph import Graph

DEFAULT_FK_MAX_N = 16
DEFAULT_FEASIBLE_MAX_N = 20


class GuardError(ValueError):
    """The graph is larger than the enumeration guard allows."""


def _top_count(masks: list[int], keep: int) -> int:
    """Number of kept vertices realising the maximum degree of the kept subgraph."""
    best = -1
    count = 0
    m = keep
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        d = (masks[v] & keep).bit_count()
        if d > best:
            best, count = d, 1
        elif d == best:
            count += 1
    return count


def _first_deletion_set(g: Graph, k: int, escape: bool) -> Optional[tuple[int, ...]]:
    # Sizes ascending, lexicographic within a size: the first hit is minimal
    # and lexicographically smallest among the minimal ones.
    n = g.n
    masks = g.masks()
    full = (1 << n) - 1
    for d in range(n + 1):
        if n - d < k:
            return tuple(range(d)) if escape else None
        for dels in combinations(range(n), d):
            keep = full
            for b in dels:
                keep ^= 1 << b
            if _top_count(masks, keep) >= k:
                return dels
    return None


def _guard(g: Graph, k: int, max_n: int) -> None:
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if g.n > max_n:
        raise GuardError(f"n={g.n} exceeds the enumeration guard max_n={max_n}")


def brute_fk(g: Graph, k: int, max_n: int = DEFAULT_FK_MAX_N) -> tuple[int, Certificate]:
    """f_k(G) by enumeration, with the lexicographically first optimal deletion set."""
    _guard(g, k, max_n)
    dels = _first_deletion_set(g, k, escape=True)
    return len(dels), make_certificate(g, dels, k)


def brute_feasible(
    g: Graph, k: int, max_n: int = DEFAULT_FEASIBLE_MAX_N
) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Whether some induced H with |H| >= k has k vertices at Delta(H).

    The witness is the vertex set of the largest such H (fewest deletions,
    lexicographically first deletion set).
    """
    _guard(g, k, max_n)
    dels = _first_deletion_set(g, k, escape=False)
    if dels is None:
        return False, None
    gone = set(dels)
    return True, tuple(v for v in range(g.n) if v not in gone)


def has_homogeneous_set(g: Graph, k: int) -> bool:
    """True if g contains a clique or an independent set on k vertices."""
    masks = g.masks()
    for sub in combinations(range(g.n), k):
        sm = 0
        for v in sub:
            sm |= 1 << v
        inner = [(masks[v] & sm).bit_count() for v in sub]
        if all(d == k - 1 for d in inner) or all(d == 0 for d in inner):
            return True
    return False
