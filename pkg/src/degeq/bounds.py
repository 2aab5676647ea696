"""Closed-form bounds and known exact values of f, g(Delta, k) and h(Delta, k).

Ceiling-of-square-root formulas are evaluated by integer search over
binomial coefficients; the float forms are kept only for cross-checking.
"""

from __future__ import annotations

import math
from math import comb


class UnknownValueError(LookupError):
    """The requested value is an open problem, not an input error."""


def _least_t(x: int, lo: int) -> int:
    # least t >= lo with x <= C(t+2, 2); isqrt gives a guess within one step
    t = max(lo, (math.isqrt(8 * max(x, 0) + 1) - 3) // 2)
    while x > comb(t + 2, 2):
        t += 1
    while t > lo and x <= comb(t + 1, 2):
        t -= 1
    return t


def bound_f_delta(delta: int) -> int:
    """Largest f(G) over graphs with maximum degree ``delta``:
    the least t >= 0 with delta <= C(t+2, 2)."""
    if delta < 0:
        raise ValueError(f"maximum degree must be non-negative, got {delta}")
    return _least_t(delta, 0)


def bound_f_n(n: int) -> int:
    """Largest f(G) over graphs on n >= 4 vertices: least t >= 1 with n <= C(t+2, 2) + 2."""
    if n < 4:
        raise ValueError(f"the vertex-count bound needs n >= 4, got {n}")
    return _least_t(n - 2, 1)


def bound_f_delta_float(delta: int) -> int:
    return max(0, math.ceil((-3 + math.sqrt(8 * delta + 1)) / 2))


def bound_f_n_float(n: int) -> int:
    return math.ceil((-3 + math.sqrt(8 * n - 15)) / 2)


def g_exact(delta: int, k: int) -> int:
    """g(delta, k) = max f_k(G) over Delta(G) <= delta, where it is known."""
    if delta < 0 or k < 2:
        raise ValueError(f"need delta >= 0 and k >= 2, got ({delta}, {k})")
    if delta == 0:
        return 0
    if delta == 1:
        return (k - 1) // 2
    if delta == 2:
        return k - 1
    if k == 2:
        return bound_f_delta(delta)
    raise UnknownValueError(f"g({delta}, {k}) is not known for delta >= 3 and k >= 3")


def h_exact(delta: int, k: int) -> int:
    """h(delta, k) = largest order of a non-k-feasible graph with Delta <= delta."""
    if delta < 0 or k < 2:
        raise ValueError(f"need delta >= 0 and k >= 2, got ({delta}, {k})")
    if delta == 0:
        return k - 1
    if delta == 1:
        return k // 2 + 2 * ((k - 1) // 2)
    if delta == 2:
        return 2 * k - 2 if k % 2 else 2 * k - 3
    raise UnknownValueError(f"h({delta}, {k}) is not known for delta >= 3")


def lemma_bound(k: int, delta: int) -> int:
    """Greedy bound f_k(G) <= (k - 1) * Delta(G)."""
    return (k - 1) * delta


def sparse_bound(n: int, c: float, beta: float, k: int) -> float:
    """(k - 1 + 2c) n^((1 + beta) / 2), valid when e(G) <= c n^(1 + beta)."""
    if not 0 <= beta < 1:
        raise ValueError(f"beta must lie in [0, 1), got {beta}")
    if c < 0:
        raise ValueError(f"c must be non-negative, got {c}")
    return (k - 1 + 2 * c) * n ** ((1 + beta) / 2)


def g_lower_even(delta: int, k: int) -> int:
    """Lower bound g(delta, 2) k/2 + k/2 - 1 on g(delta, k) for even k."""
    if k < 2 or k % 2:
        raise ValueError(f"k must be even and >= 2, got {k}")
    return bound_f_delta(delta) * (k // 2) + k // 2 - 1


_DIAGONAL_RAMSEY = {2: 2, 3: 6, 4: 18}


def h_ramsey_cap(k: int) -> int:
    """R(k, k) - 1, for the diagonal Ramsey numbers that are known."""
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if k not in _DIAGONAL_RAMSEY:
        raise UnknownValueError(f"R({k}, {k}) is not known")
    return _DIAGONAL_RAMSEY[k] - 1
