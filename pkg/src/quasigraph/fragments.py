"""Fragments of cuts: nontrivial fragments, quasi fragments, and atoms.

A fragment of a cut T is the union of at least one but not all components
of G - T. Its boundary is the exact neighborhood of the body, which for
minimum cuts coincides with T. Quasi fragments arise from k-cuts containing
both ends of an edge whose removal splits the graph into two sides of at
least two vertices each.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .core import Graph, component_masks, mask_to_vertices, vertices_to_mask
from .connectivity import Cut, make_cut, minimum_cuts


@dataclass(frozen=True)
class Fragment:
    body: tuple[int, ...]
    boundary: tuple[int, ...]
    complement: tuple[int, ...]
    kind: str  # "plain" | "nontrivial" | "quasi"
    source_cut: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.body)

    def is_nontrivial(self) -> bool:
        return len(self.body) >= 2 and len(self.complement) >= 2

    def to_json(self) -> dict:
        return {
            "body": list(self.body),
            "boundary": list(self.boundary),
            "complement": list(self.complement),
            "kind": self.kind,
            "source_cut": list(self.source_cut),
        }


def fragment_from_body(g: Graph, body: Iterable[int], source_cut: Iterable[int],
                       quasi: bool = False) -> Fragment:
    """Build a Fragment with boundary = N(body) computed exactly."""
    body_mask = vertices_to_mask(body)
    nbr_mask = 0
    m = body_mask
    while m:
        b = m & -m
        nbr_mask |= g.masks[b.bit_length() - 1]
        m ^= b
    boundary_mask = nbr_mask & ~body_mask
    complement_mask = g.full_mask & ~body_mask & ~boundary_mask
    body_t = mask_to_vertices(body_mask)
    complement_t = mask_to_vertices(complement_mask)
    if quasi:
        kind = "quasi"
    elif len(body_t) >= 2 and len(complement_t) >= 2:
        kind = "nontrivial"
    else:
        kind = "plain"
    return Fragment(body_t, mask_to_vertices(boundary_mask), complement_t,
                    kind, tuple(sorted(set(source_cut))))


def fragments_of_cut(g: Graph, cut: Cut | Iterable[int],
                     single_components: bool = False) -> list[Fragment]:
    """All unions of proper nonempty component subsets of G - cut.

    With c components this yields 2^c - 2 fragments; `single_components`
    restricts to the c single components and their complements, for cuts
    whose removal shatters the graph.
    """
    if not isinstance(cut, Cut):
        cut = make_cut(g, cut)
    comps = cut.components
    c = len(comps)
    if single_components:
        bodies = [comps[i] for i in range(c)]
        if c > 2:
            bodies.extend(
                tuple(sorted(v for j in range(c) if j != i for v in comps[j]))
                for i in range(c))
        seen = set()
        out = []
        for body in bodies:
            if body not in seen:
                seen.add(body)
                out.append(fragment_from_body(g, body, cut.vertices))
        return out
    if c > 16:
        raise ValueError(
            f"{c} components produce 2^{c}-2 fragments; use single_components=True")
    out = []
    for r in range(1, c):
        for chosen in combinations(range(c), r):
            body = tuple(sorted(v for i in chosen for v in comps[i]))
            out.append(fragment_from_body(g, body, cut.vertices))
    return out


def nontrivial_fragments_wrt_edge(g: Graph, e: tuple[int, int]) -> list[Fragment]:
    """Nontrivial fragments A over minimum cuts S with both ends of e in S.

    Empty exactly when no minimum cut through both endpoints leaves a
    two-sided split, i.e. when e is either contraction-safe at kappa or only
    trivially non-contractible.
    """
    x, y = e
    if not g.has_edge(x, y):
        raise ValueError(f"({x}, {y}) is not an edge")
    out = []
    for cut in minimum_cuts(g):
        if x in cut.vertices and y in cut.vertices:
            for frag in fragments_of_cut(g, cut):
                if frag.is_nontrivial():
                    out.append(frag)
    out.sort(key=lambda f: (f.size, f.body, f.source_cut))
    return out


def quasi_fragments_wrt_edge(g: Graph, e: tuple[int, int], k: int = 5) -> list[Fragment]:
    """Sides of nontrivial splits of G - T over all k-cuts T containing e.

    Every grouping of the components of G - T into two sides of >= 2
    vertices contributes both sides, deduplicated. Empty when e has no such
    k-cut (in particular when e is quasi k-contractible).
    """
    x, y = e
    if not g.has_edge(x, y):
        raise ValueError(f"({x}, {y}) is not an edge")
    if k > g.n:
        return []
    masks = g.masks
    full = g.full_mask
    others = [v for v in range(g.n) if v != x and v != y]
    seen: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    out = []
    for extra in combinations(others, k - 2):
        t = tuple(sorted((x, y) + extra))
        alive = full & ~vertices_to_mask(t)
        comp_masks = component_masks(masks, alive)
        c = len(comp_masks)
        if c < 2:
            continue
        if c > 16:
            raise ValueError(f"cut {t} leaves {c} components; split enumeration too large")
        comps = [mask_to_vertices(cm) for cm in comp_masks]
        sizes = [len(cc) for cc in comps]
        total = sum(sizes)
        if total < 4:
            continue
        # groupings that keep component 0 on side A, so each split is seen once
        for bits in range(2 ** (c - 1)):
            chosen = [0] + [i for i in range(1, c) if bits & (1 << (i - 1))]
            size_a = sum(sizes[i] for i in chosen)
            if size_a < 2 or total - size_a < 2:
                continue
            side_a = tuple(sorted(v for i in chosen for v in comps[i]))
            side_b = tuple(sorted(v for i in range(c) if i not in chosen
                                  for v in comps[i]))
            for body in (side_a, side_b):
                key = (body, t)
                if key not in seen:
                    seen.add(key)
                    out.append(fragment_from_body(g, body, t, quasi=True))
    out.sort(key=lambda f: (f.size, f.body, f.source_cut))
    return out


def nontrivial_atom(g: Graph) -> Fragment | None:
    """A minimum-cardinality nontrivial fragment; ties break on the
    lexicographically least body. None when no nontrivial fragment exists."""
    best: Fragment | None = None
    for cut in minimum_cuts(g):
        for frag in fragments_of_cut(g, cut):
            if not frag.is_nontrivial():
                continue
            if best is None or (frag.size, frag.body) < (best.size, best.body):
                best = frag
    return best


def quasi_atom_wrt_edges(g: Graph, edges: Iterable[tuple[int, int]],
                         k: int = 5) -> Fragment | None:
    """Minimum-cardinality quasi fragment over the given edges, or None."""
    best: Fragment | None = None
    for e in sorted((min(e), max(e)) for e in edges):
        for frag in quasi_fragments_wrt_edge(g, e, k):
            if best is None or (frag.size, frag.body) < (best.size, best.body):
                best = frag
    return best
