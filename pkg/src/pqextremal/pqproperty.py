"""Deciding the (p,q)-property.

A k-uniform hypergraph has the (p,q)-property when among any p of its edges
some q share a vertex. Equivalently, no p edges cover every vertex at most
q - 1 times; such a p-family (a bounded-degree member embedded in the host)
is what :func:`find_violation` searches for.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .hypergraph import EdgeFamily, Hypergraph


@dataclass(frozen=True)
class PQParams:
    """``(p, q)`` with ``p - 1 = t (q - 1) + r`` and ``0 <= r < q - 1``."""

    p: int
    q: int

    def __post_init__(self):
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise TypeError("p and q must be integers")
        if not self.p >= self.q >= 2:
            raise ValueError(f"need p >= q >= 2, got p={self.p}, q={self.q}")

    @property
    def t(self) -> int:
        return (self.p - 1) // (self.q - 1)

    @property
    def r(self) -> int:
        return (self.p - 1) % (self.q - 1)

    @property
    def cap(self) -> int:
        """Largest multiplicity a vertex may have inside a violating family."""
        return self.q - 1


def _params(params) -> PQParams:
    if isinstance(params, PQParams):
        return params
    return PQParams(*params)


@dataclass(frozen=True)
class Violation:
    """``p`` edges of the host in which every vertex lies in at most ``q - 1`` of them."""

    family: EdgeFamily
    params: PQParams

    def __post_init__(self):
        if len(self.family) != self.params.p:
            raise ValueError(f"violation must have {self.params.p} edges, got {len(self.family)}")
        mult: dict[int, int] = {}
        for edge in self.family.edge_lists():
            for v in edge:
                mult[v] = mult.get(v, 0) + 1
        worst = max(mult.values(), default=0)
        if worst > self.params.cap:
            raise ValueError(f"vertex multiplicity {worst} exceeds q - 1 = {self.params.cap}")

    def edge_lists(self) -> list[list[int]]:
        return self.family.edge_lists()

    def support_size(self) -> int:
        mask = 0
        for m in self.family.masks:
            mask |= m
        return mask.bit_count()


def is_bounded_degree_member(H: Hypergraph, params) -> bool:
    """True iff ``H`` has exactly ``p`` edges and maximum degree at most ``q - 1``.

    Isolated vertices of the declared vertex set are ignored.
    """
    params = _params(params)
    return H.num_edges == params.p and H.max_degree() <= params.cap


def find_violation(H: Hypergraph, params) -> Violation | None:
    """Least violating p-family (lexicographic in edge indices), or None."""
    params = _params(params)
    if H.num_edges < params.p:
        return None
    out = np.empty((1, params.p), dtype=np.int64)
    found = _kernels.family_dfs(
        H.mask_array, H.vertex_array, params.p, params.cap, np.empty(0, np.int64), 1, out
    )
    if not found:
        return None
    return Violation(EdgeFamily(H, tuple(int(i) for i in out[0])), params)


def has_pq_property(H: Hypergraph, params) -> bool:
    """Among any p edges of ``H`` some q share a vertex (vacuously true below p edges)."""
    return find_violation(H, params) is None


def count_bounded_families(H: Hypergraph, params) -> int:
    """Number of p-subsets of edges that violate the property."""
    params = _params(params)
    if H.num_edges < params.p:
        return 0
    out = np.empty((0, params.p), dtype=np.int64)
    return int(_kernels.family_dfs(
        H.mask_array, H.vertex_array, params.p, params.cap, np.empty(0, np.int64), 0, out
    ))
