"""Per-edge contraction verdicts, the set of quasi-breaking edges, and
contraction-criticality tests.

For a quasi k-connected graph the edge set partitions into three classes:
quasi k-contractible edges, edges whose contraction keeps (k-1)-connectivity
but admits a nontrivial (k-1)-cut (the quasi-breaking set E0), and edges
whose contraction drops connectivity below k-1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Graph, contract_edge
from .connectivity import (
    Cut,
    QuasiConnectivity,
    is_quasi_k_connected,
    vertex_connectivity,
)


@dataclass(frozen=True)
class ContractionReport:
    """Verdicts for contracting a single edge of a quasi k-connected graph.

    The refuting cut, when present, lives in the contracted graph; its
    preimage lists the original vertices behind those ids (the merged vertex
    expands to both endpoints of the edge).
    """

    edge: tuple[int, int]
    k: int
    kappa_after: int
    k_contractible: bool
    quasi_k_contractible: bool
    in_E0: bool
    refuting_cut: Cut | None
    refuting_cut_preimage: tuple[int, ...] | None

    def to_json(self) -> dict:
        return {
            "edge": list(self.edge),
            "k": self.k,
            "kappa_after": self.kappa_after,
            "k_contractible": self.k_contractible,
            "quasi_k_contractible": self.quasi_k_contractible,
            "in_E0": self.in_E0,
            "refuting_cut": None if self.refuting_cut is None else self.refuting_cut.to_json(),
            "refuting_cut_preimage": None if self.refuting_cut_preimage is None
            else list(self.refuting_cut_preimage),
        }


def _require_edge(g: Graph, e: tuple[int, int]) -> tuple[int, int]:
    x, y = e
    if not (0 <= x < g.n and 0 <= y < g.n) or not g.has_edge(x, y):
        raise ValueError(f"({x}, {y}) is not an edge")
    return (min(x, y), max(x, y))


def _require_quasi(g: Graph, k: int) -> QuasiConnectivity:
    rep = is_quasi_k_connected(g, k)
    if not rep.holds:
        raise ValueError(f"hypothesis violated: graph is not quasi {k}-connected")
    return rep


def is_k_contractible(g: Graph, e: tuple[int, int], k: int) -> bool:
    """Contraction of e leaves a k-connected graph."""
    e = _require_edge(g, e)
    return vertex_connectivity(contract_edge(g, e).graph) >= k


def _edge_report(g: Graph, e: tuple[int, int], k: int) -> ContractionReport:
    con = contract_edge(g, e)
    rep = is_quasi_k_connected(con.graph, k)
    refuting = rep.cut
    preimage = None
    if refuting is not None:
        preimage = con.preimage_set(refuting.vertices)
    return ContractionReport(
        edge=e,
        k=k,
        kappa_after=rep.kappa,
        k_contractible=rep.kappa >= k,
        quasi_k_contractible=rep.holds,
        in_E0=rep.kappa >= k - 1 and not rep.holds,
        refuting_cut=refuting,
        refuting_cut_preimage=preimage,
    )


def is_quasi_k_contractible(g: Graph, e: tuple[int, int], k: int = 5) -> ContractionReport:
    """Full contraction report for e; requires g quasi k-connected."""
    e = _require_edge(g, e)
    _require_quasi(g, k)
    return _edge_report(g, e, k)


def compute_E0(g: Graph, k: int = 5) -> tuple[tuple[int, int], ...]:
    """Edges whose contraction keeps (k-1)-connectivity but is not quasi
    k-connected; requires g quasi k-connected."""
    _require_quasi(g, k)
    return tuple(e for e in g.edges() if _edge_report(g, e, k).in_E0)


def contraction_reports(g: Graph, k: int = 5) -> list[ContractionReport]:
    """Per-edge reports for the whole graph, sorted by edge."""
    _require_quasi(g, k)
    return [_edge_report(g, e, k) for e in g.edges()]


def is_contraction_critical(g: Graph, k: int,
                            quasi: bool = False) -> tuple[bool, tuple[int, int] | None]:
    """No edge of g is (quasi) k-contractible.

    Returns (True, None) when critical, else (False, witness edge): the
    first contractible edge in sorted order.
    """
    if quasi:
        _require_quasi(g, k)
        for e in g.edges():
            if is_quasi_k_connected(contract_edge(g, e).graph, k).holds:
                return False, e
        return True, None
    if vertex_connectivity(g) < k:
        raise ValueError(f"hypothesis violated: graph is not {k}-connected")
    for e in g.edges():
        if vertex_connectivity(contract_edge(g, e).graph) >= k:
            return False, e
    return True, None


def check_martinov(g: Graph) -> tuple[bool, bool]:
    """Both sides of the 4-connected criticality characterization,
    computed independently: (contraction critical, 4-regular with every
    edge in a triangle)."""
    if vertex_connectivity(g) < 4:
        raise ValueError("hypothesis violated: graph is not 4-connected")
    critical, _ = is_contraction_critical(g, 4, quasi=False)
    regular = all(g.degree(v) == 4 for v in g.vertices)
    triangular = all(g.neighbors(u) & g.neighbors(v) for u, v in g.edges())
    return critical, regular and triangular
