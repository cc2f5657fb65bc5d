"""Named hypergraphs and closed-form counts.

The split hypergraph ``F_k(n, t)`` holds every k-subset of [n] meeting the
first t vertices; adding r further edges that avoid [t] gives a member of the
family whose edge count ``phi`` is the conjectured (p,q)-extremal number.
"""

from __future__ import annotations

import random
from math import comb
from typing import NamedTuple

from .hypergraph import Hypergraph, enumerate_k_subsets


def tq_decompose(p: int, q: int) -> tuple[int, int]:
    """``(t, r)`` with ``p - 1 = t (q - 1) + r`` and ``0 <= r < q - 1``."""
    if not p >= q >= 2:
        raise ValueError(f"need p >= q >= 2, got p={p}, q={q}")
    return divmod(p - 1, q - 1)


def _check_split(n: int, k: int, t: int):
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if not n >= t >= 1:
        raise ValueError(f"need n >= t >= 1, got n={n}, t={t}")
    if n < k:
        raise ValueError(f"need n >= k, got n={n}, k={k}")


def split_hypergraph(n: int, k: int, t: int) -> Hypergraph:
    _check_split(n, k, t)
    head = (1 << t) - 1
    return Hypergraph(n, k, tuple(e for e in enumerate_k_subsets(n, k) if e & head))


def _tail_subsets(n: int, k: int, t: int) -> list[int]:
    if n - t < k:
        return []
    return [e << t for e in enumerate_k_subsets(n - t, k)]


def split_family_member(n: int, k: int, t: int, r: int, rng: random.Random | None = None) -> Hypergraph:
    """``F_k(n, t)`` plus r edges avoiding [t].

    The canonical member takes the colex-first r subsets of {t+1, ..., n};
    passing ``rng`` picks the r extra edges uniformly at random instead.
    """
    _check_split(n, k, t)
    tail = _tail_subsets(n, k, t)
    if not 0 <= r <= len(tail):
        raise ValueError(f"r must lie in 0..{len(tail)} for n={n}, k={k}, t={t}, got {r}")
    extra = rng.sample(tail, r) if rng is not None else tail[:r]
    return Hypergraph.from_masks(n, k, list(split_hypergraph(n, k, t).edges) + extra)


def phi(n: int, k: int, p: int, q: int) -> int:
    """Edge count ``C(n,k) - C(n-t,k) + r`` of the split family member for (p, q)."""
    t, r = tq_decompose(p, q)
    if n < k or n < t:
        raise ValueError(f"need n >= k and n >= t, got n={n}, k={k}, t={t}")
    return comb(n, k) - comb(n - t, k) + r


def phi_construction_exists(n: int, k: int, p: int, q: int) -> bool:
    t, r = tq_decompose(p, q)
    return k >= 1 and n >= max(k, t) and r <= comb(n - t, k)


def complete_plus_edge(p: int) -> Hypergraph:
    """``K_{p-1}`` on {1..p-1} plus the pendant edge {p-1, p}."""
    if p < 3:
        raise ValueError(f"need p >= 3, got {p}")
    edges = list(enumerate_k_subsets(p - 1, 2))
    edges.append((1 << (p - 2)) | (1 << (p - 1)))
    return Hypergraph.from_masks(p, 2, edges)


def cycle(n: int) -> Hypergraph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Hypergraph.from_edges(n, 2, [(i, i + 1) for i in range(1, n)] + [(1, n)])


class SarkariaValue(NamedTuple):
    chi: int
    raw: int


def sarkaria_chi(n: int, k: int, p: int, q: int) -> SarkariaValue:
    """Ceiling formula for the chromatic number of the q-wise Kneser p-uniform hypergraph.

    ``raw`` is the formula as written; ``chi`` clamps it to at least 1, the
    chromatic number of any hypergraph with at least one vertex.
    """
    if not p >= q >= 2:
        raise ValueError(f"need p >= q >= 2, got p={p}, q={q}")
    if n < k:
        raise ValueError(f"need n >= k, got n={n}, k={k}")
    num = n * (q - 1) - p * (k - 1)
    raw = -((-num) // (p - 1))
    return SarkariaValue(max(raw, 1), raw)


class Threshold(NamedTuple):
    simple: int
    refined: int
    refined_exact: bool


def theorem_threshold(p: int, q: int) -> Threshold:
    """Vertex-count thresholds beyond which the graph case of the problem is settled.

    ``simple`` is ``2 p^2``. ``refined`` is
    ``C(2(p-1), 2) + C(t+1, 2) - 2(p-1)(t-1)/(q-1) - r`` with the division
    floored; ``refined_exact`` says whether that division was exact.
    """
    if not p >= q >= 3:
        raise ValueError(f"need p >= q >= 3, got p={p}, q={q}")
    t, r = tq_decompose(p, q)
    quot, rem = divmod(2 * (p - 1) * (t - 1), q - 1)
    refined = comb(2 * (p - 1), 2) + comb(t + 1, 2) - quot - r
    return Threshold(2 * p * p, refined, rem == 0)
