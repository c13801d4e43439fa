"""Simple undirected graphs: contraction, distance, induced subgraphs, and
classification of 4-vertex neighborhoods.

Vertices are contiguous ids 0..n-1. Graphs are immutable after construction;
every operation returns a new value, so results are safe to share and reuse.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Iterator


class Graph:
    """Immutable simple undirected graph on vertex ids 0..n-1.

    Adjacency is symmetric, loop-free and deduplicated. Optional per-vertex
    labels carry provenance strings (contractions produce labels such as
    "2~5" for the vertex obtained by identifying 2 and 5). Equality and
    hashing are structural; labels are ignored.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 labels: Iterable[str] | None = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(s) for s in adj)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("labels length must equal vertex count")
        self.labels = labels

    @classmethod
    def from_adjacency(cls, adjacency: Iterable[Iterable[int]],
                       labels: Iterable[str] | None = None) -> "Graph":
        adj = [list(row) for row in adjacency]
        edges = [(u, v) for u, row in enumerate(adj) for v in row if u < v]
        g = cls(len(adj), edges, labels)
        for u, row in enumerate(adj):
            if g.neighbors(u) != frozenset(row):
                raise ValueError(f"adjacency rows are not symmetric at vertex {u}")
        return g

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def sorted_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self._adj[v]))

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self._adj)

    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("empty graph has no minimum degree")
        return min(self.degrees())

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in self.sorted_neighbors(u) if u < v]

    @cached_property
    def edge_count(self) -> int:
        return sum(len(s) for s in self._adj) // 2

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmask; bit w of masks[v] is set iff vw is an edge."""
        out = []
        for v in range(self.n):
            m = 0
            for w in self._adj[v]:
                m |= 1 << w
            out.append(m)
        return tuple(out)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def _check_vertex(g: Graph, v: int) -> None:
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range for n={g.n}")


# ---------------------------------------------------------------------------
# Connected components over bitmasks (the hot path for cut enumeration).

def component_masks(masks: tuple[int, ...], alive: int) -> list[int]:
    """Connected components of the subgraph induced on the `alive` bitmask.

    Returned masks are ordered by their lowest vertex id.
    """
    comps = []
    remaining = alive
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= masks[b.bit_length() - 1]
                f ^= b
            nxt &= alive & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        remaining &= ~comp
    return comps


def mask_to_vertices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def vertices_to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def components_after_removal(g: Graph, removed: Iterable[int]) -> list[tuple[int, ...]]:
    """Vertex sets of the components of G - removed, each sorted, ordered by minimum."""
    rm = vertices_to_mask(removed)
    alive = g.full_mask & ~rm
    return [mask_to_vertices(c) for c in component_masks(g.masks, alive)]


def is_connected(g: Graph) -> bool:
    """A graph on 0 or 1 vertices counts as connected."""
    if g.n <= 1:
        return True
    return len(component_masks(g.masks, g.full_mask)) == 1


# ---------------------------------------------------------------------------
# Contraction.

@dataclass(frozen=True)
class Contraction:
    """Result of contracting one edge.

    `vertex_map[old]` is the id of `old` in the contracted graph; both
    endpoints of the contracted edge map to `merged`.
    """

    graph: Graph
    vertex_map: tuple[int, ...]
    merged: int

    def preimage(self, new_id: int) -> tuple[int, ...]:
        return tuple(v for v, nv in enumerate(self.vertex_map) if nv == new_id)

    def preimage_set(self, new_ids: Iterable[int]) -> tuple[int, ...]:
        wanted = set(new_ids)
        return tuple(v for v, nv in enumerate(self.vertex_map) if nv in wanted)


def contract_edge(g: Graph, e: tuple[int, int]) -> Contraction:
    """Contract edge e = (x, y): delete it, identify its ends, merge any
    parallel edges produced. Ids are re-compacted to 0..n-2.
    """
    x, y = e
    _check_vertex(g, x)
    _check_vertex(g, y)
    if not g.has_edge(x, y):
        raise ValueError(f"({x}, {y}) is not an edge")
    if x > y:
        x, y = y, x
    keep = [v for v in range(g.n) if v != y]
    new_id = {old: i for i, old in enumerate(keep)}
    merged = new_id[x]

    def translate(v: int) -> int:
        return merged if v == y else new_id[v]

    edges = set()
    for u, v in g.edges():
        nu, nv = translate(u), translate(v)
        if nu != nv:
            edges.add((min(nu, nv), max(nu, nv)))
    labels = [g.label_of(old) for old in keep]
    labels[merged] = f"{g.label_of(x)}~{g.label_of(y)}"
    vertex_map = tuple(translate(v) for v in range(g.n))
    return Contraction(Graph(g.n - 1, sorted(edges), labels), vertex_map, merged)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on vertex set s, with the old->new id mapping."""
    sel = sorted(set(s))
    for v in sel:
        _check_vertex(g, v)
    new_id = {old: i for i, old in enumerate(sel)}
    edges = [(new_id[u], new_id[v]) for u, v in g.edges() if u in new_id and v in new_id]
    labels = [g.label_of(v) for v in sel] if g.labels is not None else None
    return Graph(len(sel), edges, labels), new_id


# ---------------------------------------------------------------------------
# Distance.

def distance(g: Graph, u: int, v: int) -> int | float:
    """Shortest-path length between u and v; math.inf if disconnected."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        return 0
    masks = g.masks
    target = 1 << v
    seen = 1 << u
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            nxt |= masks[b.bit_length() - 1]
            f ^= b
        nxt &= ~seen
        if nxt & target:
            return d
        seen |= nxt
        frontier = nxt
    return math.inf


def vertices_within_distance(g: Graph, u: int, radius: int) -> tuple[int, ...]:
    """Vertices at distance 1..radius from u, sorted."""
    _check_vertex(g, u)
    masks = g.masks
    seen = 1 << u
    frontier = seen
    reached = 0
    for _ in range(radius):
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            nxt |= masks[b.bit_length() - 1]
            f ^= b
        nxt &= ~seen
        reached |= nxt
        seen |= nxt
        frontier = nxt
    return mask_to_vertices(reached)


# ---------------------------------------------------------------------------
# Classification of 4-vertex neighborhoods.

# Canonical edge sets on role indices 0..3 (role i is the vertex called
# x_{i+1} in reports). In every pattern that has an edge at all, roles 0 and
# 1 are adjacent; roles 2 and 3 avoid the matched {x1, x2} edge wherever the
# pattern permits.
PATTERN_EDGES: dict[str, tuple[tuple[int, int], ...]] = {
    "4K1": (),
    "K2u2K1": ((0, 1),),
    "P3uK1": ((0, 1), (1, 2)),
    "2K2": ((0, 1), (2, 3)),
    "P4": ((0, 1), (0, 2), (1, 3)),
    "K3uK1": ((0, 1), (0, 2), (1, 2)),
    "K1,3": ((0, 1), (0, 2), (0, 3)),
    "C4": ((0, 1), (0, 2), (1, 3), (2, 3)),
    "paw": ((0, 1), (0, 2), (1, 2), (2, 3)),
    "diamond": ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3)),
    "K4": ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)),
}


def _invariant(edge_pairs: frozenset[frozenset[int]]) -> tuple[int, tuple[int, ...], int]:
    degs = [0, 0, 0, 0]
    for pair in edge_pairs:
        for v in pair:
            degs[v] += 1
    triangles = sum(
        1 for trio in combinations(range(4), 3)
        if all(frozenset(p) in edge_pairs for p in combinations(trio, 2))
    )
    return len(edge_pairs), tuple(sorted(degs)), triangles


_INVARIANT_TO_TAG = {
    _invariant(frozenset(frozenset(p) for p in pairs)): tag
    for tag, pairs in PATTERN_EDGES.items()
}
assert len(_INVARIANT_TO_TAG) == 11, "4-vertex classes must be separable"


@dataclass(frozen=True)
class Pattern4:
    """Isomorphism class of a 4-vertex graph plus a concrete role assignment.

    mapping[i] is the vertex placed in role i (the vertex written x_{i+1}).
    """

    tag: str
    mapping: tuple[int, int, int, int]


def classify_neighborhood(g: Graph, x: int) -> Pattern4:
    """Classify the subgraph induced by the four neighbors of x.

    Requires d(x) = 4. The returned mapping is the lexicographically first
    role assignment (over the sorted neighbor list) realizing the class's
    canonical edge set.
    """
    _check_vertex(g, x)
    nbrs = g.sorted_neighbors(x)
    if len(nbrs) != 4:
        raise ValueError("degree not four")
    actual = frozenset(
        frozenset((i, j)) for i, j in combinations(range(4), 2)
        if g.has_edge(nbrs[i], nbrs[j])
    )
    tag = _INVARIANT_TO_TAG[_invariant(actual)]
    pattern = PATTERN_EDGES[tag]
    for perm in permutations(range(4)):
        if {frozenset((perm[a], perm[b])) for a, b in pattern} == actual:
            return Pattern4(tag, tuple(nbrs[perm[r]] for r in range(4)))
    raise AssertionError("no role assignment found for a matched class")


def degree_k_vertices(g: Graph, k: int) -> tuple[int, ...]:
    return tuple(v for v in range(g.n) if g.degree(v) == k)


def triangles_in_neighborhood(g: Graph, x: int) -> Iterator[tuple[int, int, int]]:
    """Triangles contained in N(x), in sorted order."""
    nbrs = g.sorted_neighbors(x)
    for a, b, c in combinations(nbrs, 3):
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c):
            yield (a, b, c)
