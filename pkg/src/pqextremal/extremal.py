"""Exact (p,q)-extremal numbers at small scale.

``ex_k(n, p, q)`` is the largest number of edges of a k-uniform hypergraph on
[n] with the (p,q)-property. :func:`extremal_number` finds it by branch and
bound; :func:`extremal_oracle` is the independent power-set check.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from concurrent.futures import TimeoutError as FutureTimeout
from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb

import numpy as np

from . import _kernels
from .constructions import phi, phi_construction_exists, split_family_member, tq_decompose
from .hypergraph import Hypergraph, VertexSet
from .pqproperty import PQParams, has_pq_property

log = logging.getLogger(__name__)

ORACLE_MAX_EDGES = 24
SPLIT_DEPTH = 6


@dataclass(frozen=True)
class SearchBudget:
    """Limits for a search. ``max_nodes`` is split evenly across the subtrees."""

    max_nodes: int | None = None
    max_seconds: float | None = None
    workers: int = 1

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ValueError("max_seconds must be positive")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


@dataclass
class ExtremalResult:
    n: int
    k: int
    p: int
    q: int
    value: int
    witness: Hypergraph
    method: str
    complete: bool = True
    stats: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def phi(self) -> int | None:
        t, _ = tq_decompose(self.p, self.q)
        return phi(self.n, self.k, self.p, self.q) if self.n >= max(self.k, t) else None

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "p": self.p,
            "q": self.q,
            "value": self.value,
            "complete": self.complete,
            "method": self.method,
            "phi": self.phi,
            "stats": dict(self.stats),
            "witness": self.witness.edge_lists(),
        }
        if timings:
            out["elapsed"] = round(self.elapsed, 6)
        return out


def _check_args(n: int, k: int, p: int, q: int) -> PQParams:
    params = PQParams(p, q)
    if not n >= k >= 1:
        raise ValueError(f"need n >= k >= 1, got n={n}, k={k}")
    return params


def extremal_oracle(n: int, k: int, p: int, q: int) -> ExtremalResult:
    """Maximum over all edge subsets of ``C([n], k)``, largest sizes first.

    Every subset of each size is tested with the property checker until some
    size admits one, so no search-specific pruning is involved.
    """
    params = _check_args(n, k, p, q)
    full = Hypergraph.complete(n, k)
    if full.num_edges > ORACLE_MAX_EDGES:
        raise ValueError(f"oracle limited to C(n,k) <= {ORACLE_MAX_EDGES}, got {full.num_edges}")
    start = time.perf_counter()
    size, sub, checked = _kernels.power_set_maximum(full.mask_array, full.vertex_array, p, params.cap)
    sub = int(sub)
    witness = full.subfamily(i for i in range(full.num_edges) if sub >> i & 1)
    return ExtremalResult(
        n, k, p, q, int(size), witness, "oracle",
        stats={"subsets_checked": int(checked)},
        elapsed=time.perf_counter() - start,
    )


def _seed(n: int, k: int, p: int, q: int, params: PQParams) -> Hypergraph | None:
    if not phi_construction_exists(n, k, p, q):
        return None
    t, r = tq_decompose(p, q)
    H = split_family_member(n, k, t, r)
    if not has_pq_property(H, params):
        raise AssertionError(f"split construction for n={n}, k={k}, p={p}, q={q} lacks the property")
    return H


def _prefixes(depth: int) -> list[np.ndarray]:
    # include-first order, matching a single depth-first search
    return [np.array(bits, dtype=np.int8) for bits in product((1, 0), repeat=depth)]


def _run_subtree(args):
    masks, verts, p, cap, prefix, best_init, node_limit = args
    best, sel, found, complete, nodes, prunes = _kernels.branch_and_bound(
        masks, verts, p, cap, prefix, best_init, node_limit
    )
    return int(best), sel.copy(), bool(found), bool(complete), int(nodes), int(prunes)


def extremal_number(n: int, k: int, p: int, q: int, budget: SearchBudget | None = None) -> ExtremalResult:
    """Exact ``ex_k(n, p, q)`` by include/exclude branch and bound over colex-ordered edges.

    The split construction seeds the lower bound. The tree is cut into a fixed
    set of subtrees by the first few decisions; each subtree is searched
    independently against the seed, so the value, witness and statistics do
    not depend on ``budget.workers``. If the budget runs out the result holds
    the best hypergraph found and ``complete`` is False.
    """
    params = _check_args(n, k, p, q)
    budget = budget or SearchBudget()
    full = Hypergraph.complete(n, k)
    m = full.num_edges
    start = time.perf_counter()

    seed = _seed(n, k, p, q, params)
    best_init = seed.num_edges if seed is not None else -1
    depth = min(SPLIT_DEPTH, m)
    prefixes = _prefixes(depth)
    node_limit = 0
    if budget.max_nodes is not None:
        node_limit = max(1, budget.max_nodes // len(prefixes))
    tasks = [
        (full.mask_array, full.vertex_array, p, params.cap, pre, best_init, node_limit)
        for pre in prefixes
    ]

    results = []
    timed_out = False
    if budget.workers > 1:
        with ProcessPoolExecutor(max_workers=budget.workers) as pool:
            futures = [pool.submit(_run_subtree, task) for task in tasks]
            for fut in futures:
                remaining = None
                if budget.max_seconds is not None:
                    remaining = max(0.0, budget.max_seconds - (time.perf_counter() - start))
                try:
                    results.append(fut.result(timeout=remaining))
                except FutureTimeout:
                    timed_out = True
                    break
            if timed_out:
                for fut in futures:
                    fut.cancel()
    else:
        for task in tasks:
            if budget.max_seconds is not None and time.perf_counter() - start > budget.max_seconds:
                timed_out = True
                break
            results.append(_run_subtree(task))

    value = best_init
    witness = seed
    complete = not timed_out
    nodes = prunes = 0
    for best, sel, found, sub_complete, sub_nodes, sub_prunes in results:
        nodes += sub_nodes
        prunes += sub_prunes
        complete &= sub_complete
        if found and best > value:
            value = best
            witness = full.subfamily(np.flatnonzero(sel).tolist())
    if witness is None:
        # only reachable when the budget stopped every subtree before a leaf
        witness = Hypergraph(n, k)
        value = 0

    elapsed = time.perf_counter() - start
    log.debug("extremal n=%d k=%d p=%d q=%d -> %d (%d nodes, %.3fs)", n, k, p, q, value, nodes, elapsed)
    stats = {
        "nodes": nodes,
        "prunes": prunes,
        "subtrees": len(prefixes),
        "subtrees_searched": len(results),
        "seed": best_init if seed is not None else None,
    }
    return ExtremalResult(n, k, p, q, value, witness, "branch_and_bound", complete, stats, elapsed)


def find_cover_structure(H: Hypergraph, t: int, r: int) -> VertexSet | None:
    """Colex-first t-set X such that exactly r edges of ``H`` miss X, or None."""
    if not 0 <= t <= H.n:
        return None
    for X in combinations(range(H.n), t):
        mask = sum(1 << v for v in X)
        missed = sum(1 for e in H.edges if not e & mask)
        if missed == r:
            return VertexSet(H.n, mask)
    return None


@dataclass
class Lemma5Report:
    max_n: int
    examined: int
    counterexamples: int
    first_counterexample: list[list[int]] | None
    strict_failures: int
    first_strict_failure: list[list[int]] | None

    @property
    def passed(self) -> bool:
        return self.counterexamples == 0

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "examined": self.examined,
            "counterexamples": self.counterexamples,
            "first_counterexample": self.first_counterexample,
            "strict_reading_failures": self.strict_failures,
            "first_strict_reading_failure": self.first_strict_failure,
        }


def _graph_from_pair_mask(n: int, g: int) -> list[list[int]] | None:
    if g < 0:
        return None
    pairs = list(combinations(range(1, n + 1), 2))
    pairs.sort(key=lambda e: (e[1], e[0]))
    return [list(pairs[i]) for i in range(len(pairs)) if g >> i & 1]


def verify_lemma_p3(max_n: int = 6) -> Lemma5Report:
    """Check every graph on ``max_n`` vertices with ``|support| = e >= 3``.

    Each must have a vertex of degree at least 3 or be 2-regular on its
    support. Graphs on fewer vertices are covered as subgraphs with isolated
    vertices. The report also counts graphs that fail the stricter
    "degree greater than 3" reading.
    """
    if not 3 <= max_n <= 7:
        raise ValueError(f"max_n must lie in 3..7, got {max_n}")
    examined, bad, first_bad, strict, first_strict = _kernels.unicyclic_degree_scan(max_n)
    return Lemma5Report(
        max_n,
        int(examined),
        int(bad),
        _graph_from_pair_mask(max_n, int(first_bad)),
        int(strict),
        _graph_from_pair_mask(max_n, int(first_strict)),
    )


def oracle_feasible(n: int, k: int) -> bool:
    return n >= k >= 1 and comb(n, k) <= ORACLE_MAX_EDGES
