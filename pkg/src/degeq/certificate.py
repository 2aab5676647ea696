"""Deletion certificates and their independent checker."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import Graph


@dataclass(frozen=True)
class Certificate:
    """A deletion set B together with what it claims about H = G - B.

    All ids are vertex ids of the graph the certificate was issued for.
    ``small_h`` is set when |H| < k, the escape clause of the definition;
    the degree fields are still filled in for such H (None if H is empty).
    """

    k: int
    deleted: tuple[int, ...]
    result_max_degree: Optional[int]
    realizing: tuple[int, ...]
    small_h: bool

    @property
    def size(self) -> int:
        return len(self.deleted)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "deleted": list(self.deleted),
            "result_max_degree": self.result_max_degree,
            "realizing": list(self.realizing),
            "small_h": self.small_h,
        }


def make_certificate(g: Graph, deleted: Iterable[int], k: int) -> Certificate:
    """Build the certificate describing ``g - deleted``."""
    gone = set(deleted)
    kept = [v for v in range(g.n) if v not in gone]
    degs = {v: sum(1 for u in g.adj[v] if u not in gone) for v in kept}
    top = max(degs.values(), default=None)
    realizing = tuple(v for v in kept if degs[v] == top)
    return Certificate(k, tuple(sorted(gone)), top, realizing, len(kept) < k)


def verify_certificate(g: Graph, cert: Certificate) -> bool:
    gone = set(cert.deleted)
    if len(gone) != len(cert.deleted) or any(not 0 <= v < g.n for v in gone):
        return False
    kept = [v for v in range(g.n) if v not in gone]
    if (len(kept) < cert.k) != cert.small_h:
        return False
    if cert.small_h:
        return True
    deg = {v: len(g.adj[v] - gone) for v in kept}
    top = max(deg.values(), default=None)
    at_top = {v for v in kept if deg[v] == top}
    return (
        cert.result_max_degree == top
        and set(cert.realizing) == at_top
        and len(cert.realizing) == len(at_top)
        and len(at_top) >= cert.k
    )
