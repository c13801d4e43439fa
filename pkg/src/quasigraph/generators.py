"""Graph builders, seeded random families, and corpus generation.

Every corpus family re-validates its declared properties on the generated
graph instead of assuming them, and generation is deterministic for a fixed
seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable

from .core import Graph
from .connectivity import _vertex_connectivity_with_cut, is_quasi_k_connected, vertex_connectivity
from . import io as gio


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """K_{1,n-1} with the center at vertex 0."""
    return Graph(n, ((0, i) for i in range(1, n)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def circulant_graph(n: int, jumps: Iterable[int]) -> Graph:
    js = sorted(set(jumps))
    if any(j < 1 or j > n // 2 for j in js):
        raise ValueError(f"jumps must lie in 1..{n // 2}")
    edges = {(min(i, (i + j) % n), max(i, (i + j) % n)) for i in range(n) for j in js}
    return Graph(n, edges)


def petersen_graph() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, edges)


def icosahedron_graph() -> Graph:
    """The 5-regular planar triangulation on 12 vertices: two poles (0, 11)
    and two pentagonal rings joined as an antiprism."""
    upper = [1 + i for i in range(5)]
    lower = [6 + i for i in range(5)]
    edges = [(0, u) for u in upper]
    edges += [(upper[i], upper[(i + 1) % 5]) for i in range(5)]
    edges += [(lower[i], lower[(i + 1) % 5]) for i in range(5)]
    edges += [(11, v) for v in lower]
    edges += [(upper[i], lower[i]) for i in range(5)]
    edges += [(upper[i], lower[(i + 1) % 5]) for i in range(5)]
    return Graph(12, edges)


def glued_cliques(clique: int, shared: int) -> Graph:
    """Two copies of K_clique sharing `shared` vertices.

    With clique=7, shared=5 this is 5-connected and the shared set is a
    5-cut splitting the two private pairs, so edges inside the shared set
    contract to graphs with a nontrivial 4-cut.
    """
    if not (0 < shared < clique):
        raise ValueError("need 0 < shared < clique")
    n = 2 * clique - shared
    first = list(range(clique))
    second = list(range(shared)) + list(range(clique, n))
    edges = set()
    for block in (first, second):
        edges.update((min(u, v), max(u, v)) for u, v in combinations(block, 2))
    return Graph(n, edges)


def complement_graph(g: Graph) -> Graph:
    return Graph(g.n, ((u, v) for u, v in combinations(range(g.n), 2)
                       if not g.has_edge(u, v)))


def with_edges(g: Graph, extra: Iterable[tuple[int, int]]) -> Graph:
    return Graph(g.n, list(g.edges()) + list(extra), g.labels)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    edges = list(a.edges()) + [(u + a.n, v + a.n) for u, v in b.edges()]
    return Graph(a.n + b.n, edges)


# ---------------------------------------------------------------------------
# Seeded random families.

def _rng(seed: int | random.Random | None) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_graph(n: int, p: float, seed: int | random.Random | None = None) -> Graph:
    rng = _rng(seed)
    return Graph(n, (e for e in combinations(range(n), 2) if rng.random() < p))


def random_k_connected(n: int, k: int, seed: int | random.Random | None = None) -> Graph:
    """Random graph augmented with edges until it is k-connected, validated.

    Starts near the target density, lifts minimum degree to k, then patches
    each remaining minimum cut with an edge across two of its components.
    """
    if n <= k:
        raise ValueError(f"a {k}-connected graph needs more than {k} vertices")
    rng = _rng(seed)
    g = random_graph(n, min(1.0, (k + 0.5) / (n - 1)), rng)
    while True:
        v = min(range(n), key=lambda u: (g.degree(u), u))
        if g.degree(v) >= k:
            break
        candidates = [w for w in range(n) if w != v and not g.has_edge(v, w)]
        g = with_edges(g, [(v, rng.choice(candidates))])
    while True:
        kappa, cut = _vertex_connectivity_with_cut(g)
        if kappa >= k:
            break
        assert cut is not None
        a = rng.choice(cut.components[0])
        b = rng.choice(cut.components[1])
        g = with_edges(g, [(min(a, b), max(a, b))])
    if vertex_connectivity(g) < k:
        raise AssertionError("augmentation failed to reach target connectivity")
    return g


def random_5_connected(n: int, seed: int | random.Random | None = None) -> Graph:
    return random_k_connected(n, 5, seed)


def quasi_5_apex(n: int, seed: int | random.Random | None = None,
                 attach_triangle: bool = False) -> Graph:
    """A 5-connected graph on n-1 vertices plus one degree-4 vertex.

    The apex neighborhood is the unique 4-cut, and its only split strands
    the apex alone, so the result is quasi 5-connected with kappa = 4.
    With attach_triangle the apex is glued onto a triangle plus one extra
    vertex, producing degree-4 vertices whose neighborhood contains K3.
    """
    if n < 7:
        raise ValueError("need at least 7 vertices")
    rng = _rng(seed)
    h = random_5_connected(n - 1, rng)
    if attach_triangle:
        anchors = None
        for a, b in h.edges():
            common = sorted(h.neighbors(a) & h.neighbors(b))
            if common:
                c = common[0]
                rest = [v for v in range(h.n) if v not in (a, b, c)]
                anchors = [a, b, c, rng.choice(rest)]
                break
        if anchors is None:
            raise ValueError("host graph has no triangle to attach to")
    else:
        anchors = rng.sample(range(h.n), 4)
    g = Graph(n, list(h.edges()) + [(v, n - 1) for v in anchors])
    if vertex_connectivity(g) != 4 or not is_quasi_k_connected(g, 5).holds:
        raise AssertionError("apex construction lost quasi 5-connectivity")
    return g


# ---------------------------------------------------------------------------
# Corpus specification and generation.

KNOWN_FAMILIES = (
    "complete", "circulant", "icosahedron", "random_5_connected",
    "quasi_5_apex", "graph6_file", "edge_list_file",
)


@dataclass(frozen=True)
class CorpusSpec:
    """One corpus entry: a family name plus its parameters.

    `params["n"]` may be an int or an inclusive [lo, hi] range. `count`
    controls how many seeded instances a random family emits.
    """

    family: str
    params: dict = field(default_factory=dict)
    count: int = 1
    seed: int | None = None

    @classmethod
    def from_json(cls, obj: dict) -> "CorpusSpec":
        family = obj.get("family")
        if family not in KNOWN_FAMILIES:
            raise ValueError(f"unknown family {family!r}; known: {KNOWN_FAMILIES}")
        return cls(family=family, params=dict(obj.get("params", {})),
                   count=int(obj.get("count", 1)),
                   seed=None if obj.get("seed") is None else int(obj["seed"]))


def _sizes(params: dict) -> list[int]:
    n = params.get("n")
    if n is None:
        raise ValueError("family requires an 'n' parameter")
    if isinstance(n, int):
        return [n]
    lo, hi = n
    return list(range(int(lo), int(hi) + 1))


def _expand(spec: CorpusSpec) -> list[tuple[str, Graph]]:
    fam = spec.family
    out: list[tuple[str, Graph]] = []
    if fam == "complete":
        for n in _sizes(spec.params):
            g = complete_graph(n)
            if not g.is_complete():
                raise AssertionError("complete family validation failed")
            out.append((f"K{n}", g))
    elif fam == "circulant":
        jumps = tuple(spec.params.get("jumps", (1,)))
        for n in _sizes(spec.params):
            g = circulant_graph(n, jumps)
            expected = sum(1 if 2 * j == n else 2 for j in set(jumps))
            if any(g.degree(v) != expected for v in g.vertices):
                raise AssertionError("circulant family validation failed")
            out.append((f"C{n}({','.join(map(str, jumps))})", g))
    elif fam == "icosahedron":
        g = icosahedron_graph()
        if g.n != 12 or g.edge_count != 30 or vertex_connectivity(g) != 5:
            raise AssertionError("icosahedron validation failed")
        out.append(("icosahedron", g))
    elif fam == "random_5_connected":
        base = 0 if spec.seed is None else spec.seed
        for n in _sizes(spec.params):
            for i in range(spec.count):
                out.append((f"rand5-n{n}-s{base + i}", random_5_connected(n, base + i)))
    elif fam == "quasi_5_apex":
        base = 0 if spec.seed is None else spec.seed
        tri = bool(spec.params.get("attach_triangle", False))
        suffix = "-tri" if tri else ""
        for n in _sizes(spec.params):
            for i in range(spec.count):
                out.append((f"apex4-n{n}-s{base + i}{suffix}",
                            quasi_5_apex(n, base + i, attach_triangle=tri)))
    elif fam == "graph6_file":
        path = Path(spec.params["path"])
        for i, g in enumerate(gio.iter_graph6_file(path)):
            out.append((f"{path.name}:{i}", g))
    elif fam == "edge_list_file":
        path = Path(spec.params["path"])
        out.append((path.name, gio.read_edge_list_file(path)))
    else:
        raise ValueError(f"unknown family {fam!r}")
    return out


def generate_corpus(spec) -> list[tuple[str, Graph]]:
    """Expand a CorpusSpec, a list of them, or parsed corpus JSON into
    (graph_id, Graph) pairs, in declaration order."""
    if isinstance(spec, CorpusSpec):
        specs = [spec]
    elif isinstance(spec, dict):
        specs = [CorpusSpec.from_json(entry) for entry in spec.get("corpus", [])]
    else:
        specs = [s if isinstance(s, CorpusSpec) else CorpusSpec.from_json(s)
                 for s in spec]
    out = []
    for s in specs:
        out.extend(_expand(s))
    return out


def read_corpus_file(path: str | Path) -> list[tuple[str, Graph]]:
    import json

    return generate_corpus(json.loads(Path(path).read_text(encoding="utf-8")))
