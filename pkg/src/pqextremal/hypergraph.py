"""k-uniform hypergraphs on ``[n] = {1, ..., n}`` with edges stored as bitmasks.

Vertex ``v`` is bit ``v - 1`` of an edge mask. Sorting masks as integers is
the colexicographic order on k-subsets, which is the canonical edge order used
throughout the package.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from ._kernels import MAX_VERTICES


class HypergraphFormatError(ValueError):
    """Malformed ``.hg`` or JSON hypergraph input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def enumerate_k_subsets(n: int, k: int) -> Iterator[int]:
    """Yield every k-subset of [n] as a bitmask, in colex order.

    >>> [vertices_of(m) for m in enumerate_k_subsets(3, 2)]
    [(1, 2), (1, 3), (2, 3)]
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if k == 0:
        yield 0
        return
    comb = (1 << k) - 1
    top = 1 << n
    while comb < top:
        yield comb
        low = comb & -comb
        r = comb + low
        comb = (((r ^ comb) >> 2) // low) | r


@dataclass(frozen=True)
class VertexSet:
    n: int
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"vertex set has bits outside 1..{self.n}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> VertexSet:
        vertices = list(vertices)
        for v in vertices:
            if not 1 <= v <= n:
                raise ValueError(f"vertex {v} outside 1..{n}")
        return cls(n, mask_of(vertices))

    def __iter__(self):
        return iter(vertices_of(self.mask))

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, v: int) -> bool:
        return 1 <= v <= self.n and bool(self.mask >> (v - 1) & 1)

    def to_list(self) -> list[int]:
        return list(vertices_of(self.mask))


@dataclass(frozen=True)
class Hypergraph:
    """Immutable k-uniform hypergraph on ``[n]``.

    ``edges`` holds distinct k-subsets as bitmasks in colex order; build
    instances with :meth:`from_edges` or :meth:`from_masks`, which sort and
    validate.
    """

    n: int
    k: int
    edges: tuple[int, ...] = ()
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0 or self.k < 0:
            raise ValueError("n and k must be nonnegative")
        prev = -1
        for e in self.edges:
            if e <= prev:
                raise ValueError("edges must be distinct and in colex order")
            if e >> self.n:
                raise ValueError(f"edge {vertices_of(e)} has a vertex outside 1..{self.n}")
            if e.bit_count() != self.k:
                raise ValueError(f"edge {vertices_of(e)} does not have {self.k} vertices")
            prev = e

    @classmethod
    def from_masks(cls, n: int, k: int, masks: Iterable[int]) -> Hypergraph:
        masks = [int(m) for m in masks]
        ordered = sorted(set(masks))
        if len(ordered) != len(masks):
            raise ValueError("duplicate edge")
        return cls(n, k, tuple(ordered))

    @classmethod
    def from_edges(cls, n: int, k: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
        masks = []
        for edge in edges:
            edge = list(edge)
            if len(set(edge)) != len(edge):
                raise ValueError(f"edge {edge} repeats a vertex")
            for v in edge:
                if not 1 <= v <= n:
                    raise ValueError(f"vertex {v} outside 1..{n}")
            masks.append(mask_of(edge))
        return cls.from_masks(n, k, masks)

    @classmethod
    def complete(cls, n: int, k: int) -> Hypergraph:
        return cls(n, k, tuple(enumerate_k_subsets(n, k)))

    def __len__(self):
        return len(self.edges)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_lists(self) -> list[list[int]]:
        return [list(vertices_of(e)) for e in self.edges]

    def index_of(self, edge: int | Iterable[int]) -> int:
        mask = edge if isinstance(edge, int) else mask_of(edge)
        if self._index is None:
            object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.edges)})
        return self._index[mask]

    def __contains__(self, edge) -> bool:
        try:
            self.index_of(edge)
        except KeyError:
            return False
        return True

    def degree(self, v: int) -> int:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} outside 1..{self.n}")
        bit = 1 << (v - 1)
        return sum(1 for e in self.edges if e & bit)

    def degrees(self) -> list[int]:
        """Degrees of vertices 1..n, as a list indexed from 0."""
        deg = [0] * self.n
        for e in self.edges:
            for v in vertices_of(e):
                deg[v - 1] += 1
        return deg

    def min_degree(self, support_only: bool = False) -> int:
        deg = self.degrees()
        if support_only:
            deg = [d for d in deg if d]
        return min(deg, default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def support(self) -> VertexSet:
        mask = 0
        for e in self.edges:
            mask |= e
        return VertexSet(self.n, mask)

    def induced(self, U: VertexSet | Iterable[int]) -> Hypergraph:
        """Sub-hypergraph of the edges lying inside ``U``, on the same vertex labels."""
        mask = U.mask if isinstance(U, VertexSet) else mask_of(U)
        return Hypergraph(self.n, self.k, tuple(e for e in self.edges if (e & ~mask) == 0))

    def subfamily(self, indices: Iterable[int]) -> Hypergraph:
        return Hypergraph.from_masks(self.n, self.k, (self.edges[i] for i in indices))

    # numpy views for the kernels

    @cached_property
    def mask_array(self) -> np.ndarray:
        self._require_kernel_width()
        return np.array(self.edges, dtype=np.int64)

    @cached_property
    def vertex_array(self) -> np.ndarray:
        """``(e, k)`` array of 0-based vertex ids of each edge."""
        self._require_kernel_width()
        arr = np.empty((len(self.edges), self.k), dtype=np.int64)
        for i, e in enumerate(self.edges):
            arr[i] = [v - 1 for v in vertices_of(e)]
        return arr

    @cached_property
    def incidence(self) -> tuple[np.ndarray, np.ndarray]:
        """CSR incidence ``(ptr, idx)``: edges containing vertex v are ``idx[ptr[v-1]:ptr[v]]``."""
        self._require_kernel_width()
        lists = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for v in vertices_of(e):
                lists[v - 1].append(i)
        ptr = np.zeros(self.n + 1, dtype=np.int64)
        for v, lst in enumerate(lists):
            ptr[v + 1] = ptr[v] + len(lst)
        idx = np.array([i for lst in lists for i in lst], dtype=np.int64)
        return ptr, idx

    def _require_kernel_width(self):
        if self.n > MAX_VERTICES:
            raise ValueError(f"search kernels support at most {MAX_VERTICES} vertices, got {self.n}")

    # serialization

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "edges": self.edge_lists()}

    @classmethod
    def from_dict(cls, data: dict) -> Hypergraph:
        try:
            n, k, edges = data["n"], data["k"], data["edges"]
        except (KeyError, TypeError) as exc:
            raise HypergraphFormatError(f"missing field {exc}") from None
        if not (isinstance(n, int) and isinstance(k, int) and n >= 0 and k >= 0):
            raise HypergraphFormatError("n and k must be nonnegative integers")
        seen = set()
        masks = []
        for i, edge in enumerate(edges):
            masks.append(_check_edge(edge, n, k, seen, f"edge {i}"))
        return cls.from_masks(n, k, masks)


@dataclass(frozen=True)
class EdgeFamily:
    """A selection of edges of ``host`` by strictly increasing edge index."""

    host: Hypergraph
    indices: tuple[int, ...]

    def __post_init__(self):
        prev = -1
        for i in self.indices:
            if not prev < i < len(self.host.edges):
                raise ValueError("edge indices must be strictly increasing and in range")
            prev = i

    def __len__(self):
        return len(self.indices)

    @property
    def masks(self) -> list[int]:
        return [self.host.edges[i] for i in self.indices]

    def edge_lists(self) -> list[list[int]]:
        return [list(vertices_of(m)) for m in self.masks]

    def as_hypergraph(self) -> Hypergraph:
        return self.host.subfamily(self.indices)


def _check_edge(edge: Sequence[int], n: int, k: int, seen: set, where: str, line: int | None = None) -> int:
    if len(edge) != k:
        raise HypergraphFormatError(f"{where}: expected {k} vertices, got {len(edge)}", line)
    for v in edge:
        if not isinstance(v, int) or not 1 <= v <= n:
            raise HypergraphFormatError(f"{where}: vertex {v} out of range 1..{n}", line)
    if any(a >= b for a, b in zip(edge, edge[1:])):
        raise HypergraphFormatError(f"{where}: vertices must be strictly increasing", line)
    mask = mask_of(edge)
    if mask in seen:
        raise HypergraphFormatError(f"{where}: duplicate edge {list(edge)}", line)
    seen.add(mask)
    return mask


def parse(text: str) -> Hypergraph:
    """Read the ``.hg`` text format.

    The first non-comment line is ``n k``; each further line lists one edge as
    k strictly increasing vertices. ``#`` comments and blank lines are skipped.
    """
    header = None
    masks: list[int] = []
    seen: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            nums = [int(tok) for tok in line.split()]
        except ValueError:
            raise HypergraphFormatError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if len(nums) != 2 or nums[0] < 0 or nums[1] < 0:
                raise HypergraphFormatError("header must be 'n k'", lineno)
            header = nums
            continue
        masks.append(_check_edge(nums, header[0], header[1], seen, "edge", lineno))
    if header is None:
        raise HypergraphFormatError("missing 'n k' header")
    return Hypergraph.from_masks(header[0], header[1], masks)


def serialize(H: Hypergraph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{H.n} {H.k}")
    lines.extend(" ".join(map(str, vertices_of(e))) for e in H.edges)
    return "\n".join(lines) + "\n"


def loads_json(text: str) -> Hypergraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise HypergraphFormatError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    return Hypergraph.from_dict(data)


def dumps_json(H: Hypergraph) -> str:
    return json.dumps(H.to_dict())


def read_file(path) -> Hypergraph:
    with open(path) as fh:
        text = fh.read()
    if str(path).endswith(".json"):
        return loads_json(text)
    return parse(text)

