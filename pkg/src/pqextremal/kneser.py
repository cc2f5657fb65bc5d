"""q-wise Kneser p-uniform hypergraphs and their colouring numbers.

Vertices of ``KG(n, k, p, q)`` are the k-subsets of [n] (vertex i is the i-th
subset in colex order); p subsets form an edge when no element lies in q of
them. An independent set is then a k-uniform hypergraph on [n] with the
(p,q)-property, so the independence number is the (p,q)-extremal number.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from . import _kernels
from .constructions import tq_decompose
from .extremal import ExtremalResult, SearchBudget, extremal_number
from .hypergraph import Hypergraph, VertexSet, enumerate_k_subsets, mask_of, vertices_of
from .lp import check_certificate, solve_covering_lp

MAX_EDGE_CANDIDATES = 10**7
MAX_MAXIMAL_SETS = 200_000


class IncompleteSearchError(RuntimeError):
    """A search hit its budget before proving its answer."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


@dataclass(frozen=True)
class KneserSpec:
    n: int
    k: int
    p: int
    q: int

    def __post_init__(self):
        if not self.p >= self.q >= 2:
            raise ValueError(f"need p >= q >= 2, got p={self.p}, q={self.q}")
        if not self.n >= self.k >= 1:
            raise ValueError(f"need n >= k >= 1, got n={self.n}, k={self.k}")

    @property
    def num_vertices(self) -> int:
        return comb(self.n, self.k)


def qwise_disjoint(sets, q: int) -> bool:
    """No element belongs to q of the given sets."""
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    mult: dict[int, int] = {}
    for s in sets:
        for x in s:
            mult[x] = mult.get(x, 0) + 1
            if mult[x] >= q:
                return False
    return True


def kneser_labels(spec: KneserSpec) -> list[list[int]]:
    """The k-subset of [n] carried by each Kneser vertex, in vertex order."""
    return [list(vertices_of(m)) for m in enumerate_k_subsets(spec.n, spec.k)]


def build_kneser(spec: KneserSpec, max_vertices: int = _kernels.MAX_VERTICES,
                 max_edge_candidates: int = MAX_EDGE_CANDIDATES) -> Hypergraph:
    nv = spec.num_vertices
    if nv > min(max_vertices, _kernels.MAX_VERTICES):
        raise ValueError(f"Kneser hypergraph has {nv} vertices, above the guard {max_vertices}")
    if comb(nv, spec.p) > max_edge_candidates:
        raise ValueError(f"C({nv}, {spec.p}) candidate edges exceed the guard {max_edge_candidates}")
    ground = Hypergraph.complete(spec.n, spec.k)
    masks, verts = ground.mask_array, ground.vertex_array
    init = np.empty(0, np.int64)
    cap = spec.q - 1
    count = _kernels.family_dfs(masks, verts, spec.p, cap, init, 0, np.empty((0, spec.p), np.int64))
    out = np.empty((count, spec.p), np.int64)
    _kernels.family_dfs(masks, verts, spec.p, cap, init, 0, out)
    edges = [sum(1 << int(i) for i in row) for row in out]
    return Hypergraph.from_masks(nv, spec.p, edges)


def relabel_permutation(spec: KneserSpec, target: int) -> list[int]:
    """A permutation of [n] (as a 0-based list) sending {1..k} onto the ``target``-th k-subset."""
    chosen = list(vertices_of(list(enumerate_k_subsets(spec.n, spec.k))[target]))
    rest = [x for x in range(1, spec.n + 1) if x not in chosen]
    return chosen + rest


def permutation_is_automorphism(spec: KneserSpec, H: Hypergraph, perm: list[int]) -> bool:
    """Whether relabelling [n] by ``perm`` maps every Kneser edge onto an edge."""
    subsets = list(enumerate_k_subsets(spec.n, spec.k))
    index = {m: i for i, m in enumerate(subsets)}
    image = [index[mask_of(perm[v - 1] for v in vertices_of(m))] for m in subsets]
    edges = set(H.edges)
    for e in H.edges:
        mapped = 0
        for v in vertices_of(e):
            mapped |= 1 << image[v - 1]
        if mapped not in edges:
            return False
    return True


def check_vertex_transitive(spec: KneserSpec, H: Hypergraph | None = None) -> bool:
    """Every vertex is the image of vertex 1 under some edge-preserving relabelling."""
    if H is None:
        H = build_kneser(spec)
    return all(
        permutation_is_automorphism(spec, H, relabel_permutation(spec, i))
        for i in range(spec.num_vertices)
    )


@dataclass(frozen=True)
class IndependentSetResult:
    value: int
    vertices: VertexSet
    complete: bool
    nodes: int


def independence_number(H: Hypergraph, max_nodes: int | None = None) -> IndependentSetResult:
    """Maximum edge-free vertex set by include-first branch and bound.

    With a node budget the result may be a lower bound (``complete`` False).
    """
    ptr, idx = H.incidence
    best, mask, complete, nodes = _kernels.max_independent_set(
        H.n, H.mask_array, ptr, idx, max_nodes or 0
    )
    best = max(int(best), 0)
    return IndependentSetResult(best, VertexSet(H.n, int(mask)), bool(complete), int(nodes))


def independence_oracle(H: Hypergraph) -> int:
    if H.n > 24:
        raise ValueError(f"power-set oracle limited to 24 vertices, got {H.n}")
    size, _ = _kernels.independent_power_set(H.n, H.mask_array)
    return int(size)


def alpha_kneser(spec: KneserSpec, budget: SearchBudget | None = None) -> int:
    """Independence number of the Kneser hypergraph via the (p,q)-extremal search."""
    res = alpha_kneser_result(spec, budget)
    if not res.complete:
        raise IncompleteSearchError(f"extremal search for {spec} ran out of budget", res)
    return res.value


def alpha_kneser_result(spec: KneserSpec, budget: SearchBudget | None = None) -> ExtremalResult:
    return extremal_number(spec.n, spec.k, spec.p, spec.q, budget)


@dataclass(frozen=True)
class ChromaticResult:
    lower: int
    upper: int
    coloring: tuple[int, ...]  # color per vertex, from the best coloring found
    complete: bool
    nodes: int

    @property
    def value(self) -> int:
        if not self.complete:
            raise IncompleteSearchError(f"chromatic number only bracketed in [{self.lower}, {self.upper}]")
        return self.upper


def _require_colorable(H: Hypergraph):
    if H.k < 2 and H.num_edges:
        raise ValueError("a hypergraph with one-vertex edges has no proper colouring")


def chromatic_number_exact(H: Hypergraph, max_nodes: int | None = None) -> ChromaticResult:
    """Fewest classes partitioning the vertices with no edge inside a class.

    Tries 2, 3, ... colours in turn; a node budget per attempt may leave the
    answer bracketed. A one-vertex edge admits no proper colouring at all and
    raises ValueError.
    """
    _require_colorable(H)
    nv = H.n
    if nv == 0:
        return ChromaticResult(0, 0, (), True, 0)
    if H.num_edges == 0:
        return ChromaticResult(1, 1, (0,) * nv, True, 0)
    ptr, idx = H.incidence
    edges = H.mask_array
    # the first branch of a search with nv colours is greedy colouring
    _, greedy, _ = _kernels.color_search(nv, edges, ptr, idx, nv, 0)
    upper = int(greedy.max()) + 1
    best = tuple(int(c) for c in greedy)
    total = 0
    for c in range(2, upper):
        status, colors, nodes = _kernels.color_search(nv, edges, ptr, idx, c, max_nodes or 0)
        total += int(nodes)
        if status == 1:
            return ChromaticResult(c, c, tuple(int(x) for x in colors), True, total)
        if status == -1:
            return ChromaticResult(c, upper, best, False, total)
    return ChromaticResult(upper, upper, best, True, total)


def is_proper_coloring(H: Hypergraph, coloring) -> bool:
    for e in H.edges:
        if len({coloring[v - 1] for v in vertices_of(e)}) == 1:
            return False
    return True


@dataclass(frozen=True)
class FractionalColoring:
    """Nonnegative weights on independent sets (vertex bitmasks) of ``host``."""

    host: Hypergraph
    weights: dict

    @property
    def weight(self) -> Fraction:
        return sum(self.weights.values(), Fraction(0))

    def is_feasible(self) -> bool:
        """Exact check: keyed sets are independent, weights nonnegative, every vertex covered."""
        for s, w in self.weights.items():
            if w < 0 or any((e & ~s) == 0 for e in self.host.edges):
                return False
        for v in range(self.host.n):
            if sum((w for s, w in self.weights.items() if s >> v & 1), Fraction(0)) < 1:
                return False
        return True

    def to_list(self) -> list[dict]:
        return [
            {"set": list(vertices_of(s)), "weight": rational_json(w)}
            for s, w in sorted(self.weights.items())
        ]


def maximal_independent_sets(H: Hypergraph, limit: int = MAX_MAXIMAL_SETS) -> list[int]:
    ptr, idx = H.incidence
    out = np.empty(limit, np.int64)
    count = _kernels.maximal_independent_sets(H.n, H.mask_array, ptr, idx, out)
    if count < 0:
        raise IncompleteSearchError(f"more than {limit} maximal independent sets")
    return sorted(int(x) for x in out[:count])


def fractional_chromatic_lp(H: Hypergraph, max_sets: int = MAX_MAXIMAL_SETS) -> tuple[Fraction, FractionalColoring]:
    """Exact fractional chromatic number from the covering LP over maximal independent sets.

    Restricting to maximal sets loses nothing: moving weight to a superset
    never uncovers a vertex. The solver's packing duals certify optimality.
    """
    _require_colorable(H)
    if H.n == 0:
        return Fraction(0), FractionalColoring(H, {})
    sets = maximal_independent_sets(H, max_sets)
    sol = solve_covering_lp(H.n, sets)
    if not check_certificate(H.n, sets, sol):
        raise ArithmeticError("LP solution failed its exact optimality re-check")
    coloring = FractionalColoring(H, {s: w for s, w in zip(sets, sol.weights) if w})
    if coloring.weight != sol.value or not coloring.is_feasible():
        raise ArithmeticError("fractional coloring failed its feasibility re-check")
    return sol.value, coloring


def fractional_chromatic_transitive(spec: KneserSpec, budget: SearchBudget | None = None) -> Fraction:
    """``C(n, k) / alpha`` for the vertex-transitive Kneser hypergraph."""
    return Fraction(spec.num_vertices, alpha_kneser(spec, budget))


@dataclass(frozen=True)
class CorollaryValue:
    value: Fraction
    in_validity_range: bool


def corollary_chi_f(n: int, p: int, q: int) -> CorollaryValue:
    """Closed form ``C(n,2) / (C(n,2) - C(n-t,2) + r)`` for the 2-set Kneser hypergraph.

    Claimed for ``p >= q >= 3`` and ``n >= 2 p^2``; other n still get the value,
    flagged out of range.
    """
    if not p >= q >= 3:
        raise ValueError(f"need p >= q >= 3, got p={p}, q={q}")
    t, r = tq_decompose(p, q)
    if n < max(2, t):
        raise ValueError(f"need n >= max(2, t), got n={n}, t={t}")
    total = comb(n, 2)
    return CorollaryValue(Fraction(total, total - comb(n - t, 2) + r), n >= 2 * p * p)


def rational_json(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}

