"""Bipartite maximum matching with a König vertex-cover certificate."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


@dataclass(frozen=True)
class BipartiteGraph:
    """Sides ``A = range(n_a)`` and ``B = range(n_b)``; edges are ``(a, b)`` pairs."""

    n_a: int
    n_b: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n_a < 0 or self.n_b < 0:
            raise ValueError("side sizes must be nonnegative")
        seen = set()
        for a, b in self.edges:
            if not (0 <= a < self.n_a and 0 <= b < self.n_b):
                raise ValueError(f"edge ({a}, {b}) does not join A to B")
            if (a, b) in seen:
                raise ValueError(f"duplicate edge ({a}, {b})")
            seen.add((a, b))

    @classmethod
    def from_edges(cls, n_a, n_b, edges) -> BipartiteGraph:
        return cls(n_a, n_b, tuple((int(a), int(b)) for a, b in edges))

    def adjacency(self) -> list[list[int]]:
        adj = [[] for _ in range(self.n_a)]
        for a, b in self.edges:
            adj[a].append(b)
        return adj


@dataclass(frozen=True)
class MatchingResult:
    size: int
    pairs: tuple[tuple[int, int], ...]
    cover_a: tuple[int, ...]
    cover_b: tuple[int, ...]

    @property
    def cover_size(self) -> int:
        return len(self.cover_a) + len(self.cover_b)


def max_matching(G: BipartiteGraph) -> MatchingResult:
    """Maximum matching by augmenting paths, with a vertex cover of the same size.

    The cover is read off the alternating-path reachability from unmatched
    A-vertices: unreached A-vertices plus reached B-vertices.
    """
    adj = G.adjacency()
    match_b = [-1] * G.n_b
    match_a = [-1] * G.n_a

    def augment(a, seen):
        for b in adj[a]:
            if seen[b]:
                continue
            seen[b] = True
            if match_b[b] < 0 or augment(match_b[b], seen):
                match_b[b] = a
                match_a[a] = b
                return True
        return False

    for a in range(G.n_a):
        augment(a, [False] * G.n_b)

    reached_a = [False] * G.n_a
    reached_b = [False] * G.n_b
    queue = deque(a for a in range(G.n_a) if match_a[a] < 0)
    for a in queue:
        reached_a[a] = True
    while queue:
        a = queue.popleft()
        for b in adj[a]:
            if not reached_b[b]:
                reached_b[b] = True
                nxt = match_b[b]
                if nxt >= 0 and not reached_a[nxt]:
                    reached_a[nxt] = True
                    queue.append(nxt)

    pairs = tuple(sorted((a, b) for a, b in enumerate(match_a) if b >= 0))
    cover_a = tuple(a for a in range(G.n_a) if not reached_a[a])
    cover_b = tuple(b for b in range(G.n_b) if reached_b[b])
    return MatchingResult(len(pairs), pairs, cover_a, cover_b)


def is_vertex_cover(G: BipartiteGraph, cover_a, cover_b) -> bool:
    ca, cb = set(cover_a), set(cover_b)
    return all(a in ca or b in cb for a, b in G.edges)


def is_matching(G: BipartiteGraph, pairs) -> bool:
    edges = set(G.edges)
    used_a = [a for a, _ in pairs]
    used_b = [b for _, b in pairs]
    return all(e in edges for e in pairs) and len(set(used_a)) == len(used_a) and len(set(used_b)) == len(used_b)


@dataclass(frozen=True)
class Lemma3Report:
    premise: bool
    conclusion: bool
    matching_size: int
    certified: bool

    @property
    def verdict(self) -> str:
        if not self.premise:
            return "vacuous"
        return "confirmed" if self.conclusion else "COUNTEREXAMPLE"


def lemma3_check(G: BipartiteGraph, t: int) -> Lemma3Report:
    """Test: ``|A| < |B|`` and ``e(G) > (t-1)|B|`` imply a matching of size t.

    ``certified`` records that the returned matching and cover are valid and
    of equal size.
    """
    res = max_matching(G)
    premise = G.n_a < G.n_b and len(G.edges) > (t - 1) * G.n_b
    certified = (
        res.size == res.cover_size
        and is_matching(G, res.pairs)
        and is_vertex_cover(G, res.cover_a, res.cover_b)
    )
    return Lemma3Report(premise, res.size >= t, res.size, certified)
