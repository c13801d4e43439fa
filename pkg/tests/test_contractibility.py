import pytest

from quasigraph.connectivity import is_quasi_k_connected, vertex_connectivity
from quasigraph.contractibility import (
    check_martinov,
    compute_E0,
    contraction_reports,
    is_contraction_critical,
    is_k_contractible,
    is_quasi_k_contractible,
)
from quasigraph.core import contract_edge
from quasigraph.generators import (
    circulant_graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    glued_cliques,
    icosahedron_graph,
    quasi_5_apex,
)

from oracles import brute_vertex_connectivity


class TestIsKContractible:
    def test_k6_at_four_and_five(self):
        g = complete_graph(6)
        assert is_k_contractible(g, (0, 1), 4) is True   # kappa(K5) = 4
        assert is_k_contractible(g, (0, 1), 5) is False

    def test_icosahedron_has_no_5_contractible_edge(self):
        g = icosahedron_graph()
        for e in g.edges():
            contracted = contract_edge(g, e).graph
            assert brute_vertex_connectivity(contracted) == 4
            assert is_k_contractible(g, e, 5) is False

    def test_non_edge_rejected(self):
        with pytest.raises(ValueError, match="not an edge"):
            is_k_contractible(cycle_graph(5), (0, 2), 2)


class TestIsQuasiKContractible:
    def test_k6_edge_reports_true(self):
        rep = is_quasi_k_contractible(complete_graph(6), (0, 1), 5)
        assert rep.quasi_k_contractible is True
        assert rep.kappa_after == 4
        assert rep.k_contractible is False
        assert rep.in_E0 is False
        assert rep.refuting_cut is None

    def test_icosahedron_has_a_witness(self):
        g = icosahedron_graph()
        reports = [is_quasi_k_contractible(g, e, 5) for e in g.edges()]
        assert any(r.quasi_k_contractible for r in reports)

    def test_hypothesis_violated(self):
        with pytest.raises(ValueError, match="hypothesis violated"):
            is_quasi_k_contractible(cycle_graph(6), (0, 1), 5)

    def test_e0_edge_report_carries_certificate(self):
        g = glued_cliques(7, 5)
        rep = is_quasi_k_contractible(g, (0, 1), 5)
        assert rep.in_E0 is True
        assert rep.quasi_k_contractible is False
        assert rep.kappa_after >= 4
        cut = rep.refuting_cut
        assert cut is not None and cut.nontrivial and cut.size == 4
        # the pre-image expands the merged vertex back to both endpoints
        pre = set(rep.refuting_cut_preimage)
        assert {0, 1} <= pre and len(pre) == 5

    def test_report_invariants_on_apex(self):
        g = quasi_5_apex(10, seed=2)
        for rep in contraction_reports(g, 5):
            if rep.quasi_k_contractible:
                assert rep.kappa_after >= 4
                assert rep.refuting_cut is None
            else:
                assert rep.refuting_cut is not None
            assert rep.in_E0 == (rep.kappa_after >= 4 and not rep.quasi_k_contractible)

    def test_json_round_trip_shape(self):
        rep = is_quasi_k_contractible(glued_cliques(7, 5), (0, 1), 5)
        obj = rep.to_json()
        assert obj["edge"] == [0, 1]
        assert obj["in_E0"] is True
        assert obj["refuting_cut"]["nontrivial"] is True


class TestComputeE0:
    def test_complete_graph_empty(self):
        assert compute_E0(complete_graph(6), 5) == ()

    def test_icosahedron_empty_by_full_scan(self):
        # edge transitive: one quasi 5-contractible edge makes all of them so
        assert compute_E0(icosahedron_graph(), 5) == ()

    def test_glued_cliques_shared_edges(self):
        e0 = compute_E0(glued_cliques(7, 5), 5)
        assert e0 == tuple((u, v) for u in range(5) for v in range(u + 1, 5))

    def test_edge_classes_partition_edge_set(self, quasi5_corpus):
        sample = [g for gid, g in quasi5_corpus if g.n <= 10][:10]
        for g in sample:
            reports = contraction_reports(g, 5)
            assert [r.edge for r in reports] == g.edges()
            for r in reports:
                classes = [r.quasi_k_contractible, r.in_E0, r.kappa_after < 4]
                assert classes.count(True) == 1


class TestContractionCritical:
    def test_icosahedron_plain_critical(self):
        assert is_contraction_critical(icosahedron_graph(), 5) == (True, None)

    def test_icosahedron_not_quasi_critical(self):
        critical, witness = is_contraction_critical(icosahedron_graph(), 5, quasi=True)
        assert critical is False and witness == (0, 1)

    def test_k6_not_critical_at_four(self):
        critical, witness = is_contraction_critical(complete_graph(6), 4)
        assert critical is False and witness == (0, 1)

    def test_hypothesis_checked(self):
        with pytest.raises(ValueError, match="hypothesis violated"):
            is_contraction_critical(cycle_graph(6), 5)
        with pytest.raises(ValueError, match="hypothesis violated"):
            is_contraction_critical(circulant_graph(8, (1, 2)), 5, quasi=True)


class TestMartinov:
    def test_k5_is_critical_and_regular_triangular(self):
        assert check_martinov(complete_graph(5)) == (True, True)

    def test_squared_cycle_is_critical(self):
        assert check_martinov(circulant_graph(8, (1, 2))) == (True, True)

    def test_k44_is_neither(self):
        assert check_martinov(complete_bipartite_graph(4, 4)) == (False, False)

    def test_octahedron(self):
        assert check_martinov(circulant_graph(6, (1, 2))) == (True, True)

    def test_requires_4_connected(self):
        with pytest.raises(ValueError, match="hypothesis violated"):
            check_martinov(cycle_graph(6))

    @pytest.mark.parametrize("g", [
        complete_graph(5), complete_graph(6), complete_graph(7),
        complete_bipartite_graph(4, 4), complete_bipartite_graph(4, 5),
        complete_bipartite_graph(5, 5), circulant_graph(7, (1, 2)),
        circulant_graph(8, (1, 2)), circulant_graph(9, (1, 2)),
        circulant_graph(10, (1, 2)), circulant_graph(6, (1, 2)),
        glued_cliques(6, 4), glued_cliques(7, 5), glued_cliques(7, 6),
    ])
    def test_equivalence_on_4_connected_fixtures_up_to_10(self, g):
        # every fixture here is 4-connected with at most 10 vertices
        assert g.n <= 10 and vertex_connectivity(g) >= 4
        critical, structural = check_martinov(g)
        assert critical == structural


class TestLemmaLevelProperties:
    def test_degree_preserving_contractions_stay_4_connected(self, quasi5_corpus):
        # quasi 5-connected + min degree 4 after contraction forces
        # 4-connectivity of the contracted graph
        sample = [g for gid, g in quasi5_corpus if g.n <= 10][:12]
        for g in sample:
            assert is_quasi_k_connected(g, 5).holds
            for e in g.edges():
                contracted = contract_edge(g, e).graph
                if contracted.min_degree() >= 4:
                    assert vertex_connectivity(contracted) >= 4

    def test_triangle_anchored_apex_edges_contract_safely(self):
        # degree-4 vertex with a triangle among its neighbors: contracting
        # onto the remaining neighbor preserves quasi 5-connectivity
        for seed in range(5):
            g = quasi_5_apex(11, seed=200 + seed, attach_triangle=True)
            x = g.n - 1
            nbrs = set(g.sorted_neighbors(x))
            from quasigraph.core import triangles_in_neighborhood

            for tri in triangles_in_neighborhood(g, x):
                (x4,) = nbrs - set(tri)
                rep = is_quasi_k_contractible(g, (x, x4), 5)
                assert rep.quasi_k_contractible, (seed, tri, x4)
