import json

import pytest

from quasigraph.connectivity import vertex_connectivity
from quasigraph.generators import (
    CorpusSpec,
    circulant_graph,
    complete_graph,
    cycle_graph,
    generate_corpus,
    glued_cliques,
    icosahedron_graph,
    petersen_graph,
    quasi_5_apex,
    with_edges,
)
from quasigraph.harness import (
    CLAIMS,
    check_degree_sum_condition,
    check_min_degree_condition,
    run_campaign,
    verify_claim,
    verify_degree_condition_A,
    verify_degree_condition_BC,
    verify_lemma,
    verify_theorem1,
    verify_theorem2,
)


def k12_minus_perfect_matching():
    g = complete_graph(12)
    edges = [e for e in g.edges() if e not in {(2 * i, 2 * i + 1) for i in range(6)}]
    from quasigraph.core import Graph

    return Graph(12, edges)


class TestDegreeConditions:
    def test_degree_sum_k6(self):
        assert check_degree_sum_condition(complete_graph(6)) == (True, None)

    def test_degree_sum_icosahedron(self):
        assert check_degree_sum_condition(icosahedron_graph()) == (True, None)

    def test_degree_sum_squared_cycle_fails_adjacent(self):
        ok, pair = check_degree_sum_condition(circulant_graph(8, (1, 2)))
        assert not ok and pair == (0, 1)

    def test_degree_sum_adjacent_only_variant(self):
        # path: endpoint has degree 1, so adjacent pair (0, 1) fails bound 4
        ok, pair = check_degree_sum_condition(cycle_graph(5), bound=4, max_dist=1)
        assert ok
        from quasigraph.generators import path_graph

        ok, pair = check_degree_sum_condition(path_graph(4), bound=4, max_dist=1)
        assert not ok and pair == (0, 1)

    def test_min_degree_condition(self):
        assert check_min_degree_condition(complete_graph(6), 4)       # 5 >= 5
        assert check_min_degree_condition(icosahedron_graph(), 4)     # 5 >= 5
        assert not check_min_degree_condition(circulant_graph(8, (1, 2)), 4)  # 4 < 5


class TestTheorem1:
    def test_icosahedron_verified_with_witness(self):
        rep = verify_theorem1(icosahedron_graph(), "ico")
        assert rep.status == "verified"
        assert rep.hypotheses_hold and rep.conclusion_holds
        assert rep.witness == {"edge": [0, 1]}
        assert rep.enumeration_mode == "exhaustive"

    def test_complete_graph_verified(self):
        assert verify_theorem1(complete_graph(6)).status == "verified"

    def test_c6_vacuous(self):
        rep = verify_theorem1(cycle_graph(6), "C6")
        assert rep.status == "vacuous"
        assert rep.hypotheses_hold is False and rep.conclusion_holds is None
        assert "kappa=2<5" in rep.witness["failed_hypothesis"]


class TestTheorem2:
    def test_k5_vacuous_on_degree_sum(self):
        rep = verify_theorem2(complete_graph(5), "K5")
        assert rep.status == "vacuous"
        assert "degree sum" in rep.witness["failed_hypothesis"]

    def test_k6_and_icosahedron_verified(self):
        assert verify_theorem2(complete_graph(6)).status == "verified"
        assert verify_theorem2(icosahedron_graph()).status == "verified"

    def test_apex_graph_verified(self):
        rep = verify_theorem2(quasi_5_apex(11, seed=0), "apex")
        assert rep.status == "verified"
        assert rep.witness and "edge" in rep.witness

    def test_squared_cycle_vacuous_not_quasi(self):
        rep = verify_theorem2(circulant_graph(8, (1, 2)))
        assert rep.status == "vacuous"
        assert "not quasi 5-connected" in rep.witness["failed_hypothesis"]


class TestLemmas:
    def test_lemma1_icosahedron_vacuous_not_critical(self):
        rep = verify_lemma(icosahedron_graph(), "lemma1")
        assert rep.status == "vacuous"
        assert "not contraction critical" in rep.witness["failed_hypothesis"]

    def test_lemma1_gated_without_exhaustive(self):
        rep = verify_lemma(icosahedron_graph(), "lemma1", exhaustive=False)
        assert rep.status == "vacuous" and rep.hypotheses_hold is None

    def test_lemma2_icosahedron_all_edges(self):
        rep = verify_lemma(icosahedron_graph(), "lemma2")
        assert rep.status == "verified"
        assert rep.witness == {"configurations": 30}

    def test_lemma2_k5_vacuous_no_configuration(self):
        # contracting any K5 edge leaves minimum degree 3
        rep = verify_lemma(complete_graph(5), "lemma2")
        assert rep.status == "vacuous" and rep.hypotheses_hold is True

    def test_lemma3_c6_vacuous(self):
        rep = verify_lemma(cycle_graph(6), "lemma3")
        assert rep.status == "vacuous"

    def test_lemma3_apex_triangle_verified(self):
        rep = verify_lemma(quasi_5_apex(11, seed=104, attach_triangle=True), "lemma3")
        assert rep.status == "verified"
        assert rep.witness["configurations"] >= 1

    def test_lemma3_small_graph_vacuous(self):
        rep = verify_lemma(complete_graph(6), "lemma3")
        assert rep.status == "vacuous"
        assert "n=6<8" in rep.witness["failed_hypothesis"]

    def test_lemma4_on_k44(self):
        from quasigraph.generators import complete_bipartite_graph

        rep = verify_lemma(complete_bipartite_graph(4, 4), "lemma4")
        assert rep.status == "verified"
        assert rep.witness["is_critical"] is False
        assert rep.witness["is_regular_triangular"] is False
        assert rep.witness["contractible_edge"] is not None

    def test_lemma4_on_squared_cycle(self):
        rep = verify_lemma(circulant_graph(8, (1, 2)), "lemma4")
        assert rep.status == "verified"
        assert rep.witness["is_critical"] is True

    def test_lemma4_vacuous_below_4_connected(self):
        assert verify_lemma(cycle_graph(8), "lemma4").status == "vacuous"

    def test_lemma5_glued_vacuous_not_critical(self):
        rep = verify_lemma(glued_cliques(7, 5), "lemma5")
        assert rep.status == "vacuous"
        assert "not contraction critical" in rep.witness["failed_hypothesis"]

    def test_lemma5_gated_without_exhaustive(self):
        rep = verify_lemma(glued_cliques(7, 5), "lemma5", exhaustive=False)
        assert rep.status == "vacuous" and rep.hypotheses_hold is None

    def test_unknown_lemma_rejected(self):
        with pytest.raises(ValueError, match="unknown lemma"):
            verify_lemma(complete_graph(6), "lemma9")


class TestDegreeConditionClaims:
    def test_A_on_petersen_at_three(self):
        rep = verify_degree_condition_A(petersen_graph(), k=3)
        assert rep.status == "verified" and rep.witness["k"] == 3

    def test_A_on_icosahedron_at_four(self):
        rep = verify_degree_condition_A(icosahedron_graph(), k=4)
        assert rep.status == "verified"

    def test_A_vacuous_on_complete(self):
        assert verify_degree_condition_A(complete_graph(6)).status == "vacuous"

    def test_A_vacuous_when_degree_low(self):
        rep = verify_degree_condition_A(circulant_graph(8, (1, 2)), k=4)
        assert rep.status == "vacuous"
        assert "min degree" in rep.witness["failed_hypothesis"]

    def test_BC_excludes_k7(self):
        rep = verify_degree_condition_BC(complete_graph(9), k=7)
        assert rep.status == "vacuous"
        assert "k=7" in rep.witness["failed_hypothesis"]

    def test_BC_on_icosahedron(self):
        rep = verify_degree_condition_BC(icosahedron_graph(), k=4)
        assert rep.status == "verified"

    def test_BC_adjacent_only_branch_at_k8(self):
        g = k12_minus_perfect_matching()
        assert vertex_connectivity(g) >= 8
        rep = verify_degree_condition_BC(g, k=8)
        assert rep.status == "verified" and rep.witness["k"] == 8


class TestVerifyClaimDispatch:
    def test_all_claims_run_on_icosahedron(self):
        for claim in CLAIMS:
            rep = verify_claim(icosahedron_graph(), claim, "ico")
            assert rep.status in ("verified", "vacuous")
            assert rep.elapsed >= 0
            if rep.hypotheses_hold is False:
                assert rep.conclusion_holds is None and rep.status == "vacuous"

    def test_unknown_claim_rejected(self):
        with pytest.raises(ValueError, match="unknown claim"):
            verify_claim(complete_graph(6), "theorem3")

    def test_timeout_reports_timeout(self):
        rep = verify_claim(icosahedron_graph(), "theorem1", timeout=0.0)
        assert rep.status == "timeout"
        assert rep.hypotheses_hold is None and rep.conclusion_holds is None


class TestRunCampaign:
    CORPUS = {"corpus": [
        {"family": "complete", "params": {"n": [6, 8]}},
        {"family": "icosahedron"},
        {"family": "random_5_connected", "params": {"n": 9}, "count": 2, "seed": 5},
    ]}

    def test_summary_counts(self, tmp_path):
        out = tmp_path / "reports.jsonl"
        summary = run_campaign(self.CORPUS, ["theorem1", "lemma2"], out)
        assert summary["graphs"] == 6
        assert summary["counts"]["verified"] == 12
        assert summary["counts"]["falsified"] == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 12
        first = json.loads(lines[0])
        assert first["graph_id"] == "K6" and first["claim"] == "theorem1"
        assert "elapsed" not in first  # canonical output carries no timing

    def test_complete_six_to_nine_all_verified(self, tmp_path):
        corpus = {"corpus": [{"family": "complete", "params": {"n": [6, 9]}}]}
        summary = run_campaign(corpus, ["theorem1"], tmp_path / "kn.jsonl")
        assert summary["counts"] == {
            "verified": 4, "vacuous": 0, "falsified": 0, "timeout": 0}

    def test_squared_cycle_lemma4_verified(self, tmp_path):
        pairs = [("C8(1,2)", circulant_graph(8, (1, 2)))]
        summary = run_campaign(pairs, ["lemma4"], tmp_path / "m.jsonl")
        assert summary["counts"]["verified"] == 1

    def test_byte_identical_reruns(self, tmp_path):
        a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
        run_campaign(self.CORPUS, ["theorem2", "lemma3", "lemma4"], a)
        run_campaign(self.CORPUS, ["theorem2", "lemma3", "lemma4"], b)
        assert a.read_bytes() == b.read_bytes()

    def test_empty_corpus(self, tmp_path):
        out = tmp_path / "empty.jsonl"
        summary = run_campaign({"corpus": []}, ["theorem1"], out)
        assert summary["counts"] == {
            "verified": 0, "vacuous": 0, "falsified": 0, "timeout": 0}
        assert out.read_text() == ""

    def test_accepts_prebuilt_graph_list(self, tmp_path):
        pairs = [("K6", complete_graph(6)), ("C6", cycle_graph(6))]
        summary = run_campaign(pairs, ["theorem1"], tmp_path / "r.jsonl")
        assert summary["counts"]["verified"] == 1
        assert summary["counts"]["vacuous"] == 1

    def test_unknown_claim_rejected(self, tmp_path):
        with pytest.raises(ValueError):
            run_campaign(self.CORPUS, ["nope"], tmp_path / "x.jsonl")


class TestGenerateCorpus:
    def test_families_validate_their_claims(self):
        pairs = generate_corpus({"corpus": [
            {"family": "complete", "params": {"n": 6}},
            {"family": "circulant", "params": {"n": 9, "jumps": [1, 2]}},
            {"family": "icosahedron"},
            {"family": "quasi_5_apex", "params": {"n": 10}, "count": 1, "seed": 2},
        ]})
        ids = [gid for gid, _ in pairs]
        assert ids == ["K6", "C9(1,2)", "icosahedron", "apex4-n10-s2"]
        by_id = dict(pairs)
        assert vertex_connectivity(by_id["K6"]) == 5
        assert all(by_id["C9(1,2)"].degree(v) == 4 for v in range(9))
        assert vertex_connectivity(by_id["C9(1,2)"]) == 4
        assert by_id["icosahedron"].n == 12

    def test_deterministic_for_fixed_seed(self):
        spec = CorpusSpec("random_5_connected", {"n": 10}, count=3, seed=9)
        a = generate_corpus(spec)
        b = generate_corpus(spec)
        assert a == b

    def test_file_families(self, tmp_path):
        from quasigraph import io as gio

        g6 = tmp_path / "pool.g6"
        gio.write_graph6_file(g6, [complete_graph(6), cycle_graph(5)])
        el = tmp_path / "one.edges"
        gio.write_edge_list_file(el, petersen_graph())
        pairs = generate_corpus({"corpus": [
            {"family": "graph6_file", "params": {"path": str(g6)}},
            {"family": "edge_list_file", "params": {"path": str(el)}},
        ]})
        assert [g for _, g in pairs] == [complete_graph(6), cycle_graph(5),
                                         petersen_graph()]

    def test_unknown_family_rejected(self):
        with pytest.raises(ValueError, match="unknown family"):
            generate_corpus({"corpus": [{"family": "hypercube"}]})

    def test_unsatisfiable_spec_rejected(self):
        with pytest.raises(ValueError):
            generate_corpus({"corpus": [
                {"family": "random_5_connected", "params": {"n": 5}}]})
