from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_balanced, brute_equivalent, brute_switched
from strategies import (
    DEFAULT_SETTINGS,
    graphs,
    signatures_for,
    signed_graphs,
    vertex_subsets,
)

from sgspec import (
    BalanceWitness,
    Graph,
    Signature,
    SignedGraph,
    are_equivalent,
    canonical_form,
    circuit_sign,
    delete_vertex,
    induced_subgraph,
    is_antibalanced,
    is_balanced,
    spanning_forest,
    switch,
)


class TestGraph:
    def test_edges_normalized(self):
        g = Graph(3, ((2, 0), (1, 2)))
        assert g.edges == ((0, 2), (1, 2))

    def test_rejects_loop(self):
        with pytest.raises(ValueError, match="loop"):
            Graph(2, ((1, 1),))

    def test_rejects_duplicate_even_flipped(self):
        with pytest.raises(ValueError, match="duplicate"):
            Graph(3, ((0, 1), (1, 0)))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="outside"):
            Graph(2, ((0, 2),))

    def test_rejects_negative_vertex_count(self):
        with pytest.raises(ValueError):
            Graph(-1)

    def test_neighbors_sorted(self):
        g = Graph(4, ((2, 3), (0, 3), (1, 3)))
        assert g.neighbors(3) == (0, 1, 2)
        assert g.degree(3) == 3
        assert g.degree(0) == 1

    def test_edge_index(self):
        g = Graph(3, ((0, 1), (1, 2)))
        assert g.edge_index(2, 1) == 1
        with pytest.raises(ValueError, match="no edge"):
            g.edge_index(0, 2)

    def test_constructors(self):
        assert Graph.complete(4).edge_count == 6
        assert Graph.cycle(5).edge_count == 5
        assert Graph.path(4).edges == ((0, 1), (1, 2), (2, 3))
        assert Graph.star(3).edges == ((0, 1), (0, 2), (0, 3))
        assert Graph.edgeless(3).edge_count == 0
        with pytest.raises(ValueError):
            Graph.cycle(2)

    def test_components(self):
        g = Graph(5, ((0, 1), (0, 2), (1, 2), (3, 4)))
        assert g.component_count == 2
        assert not g.is_connected
        assert Graph(0).component_count == 0
        assert Graph(0).is_connected

    def test_spanning_forest_of_cycle(self):
        # BFS from 0 reaches 1 and 4 first, so the chord (2, 3) stays out
        assert spanning_forest(Graph.cycle(5)) == (0, 4, 1, 3)

    def test_spanning_forest_spans_components(self):
        g = Graph(5, ((0, 1), (0, 2), (1, 2), (3, 4)))
        forest = spanning_forest(g)
        assert len(forest) == g.vertex_count - g.component_count


class TestSignature:
    def test_rejects_bad_sign(self):
        with pytest.raises(ValueError, match="signs"):
            Signature((1, 0))

    def test_negative_edges(self):
        assert Signature((1, -1, 1, -1)).negative_edges == (1, 3)

    def test_from_negative_edges(self):
        assert Signature.from_negative_edges(3, [2]).signs == (1, 1, -1)
        with pytest.raises(ValueError):
            Signature.from_negative_edges(3, [3])

    def test_signed_graph_length_check(self):
        with pytest.raises(ValueError, match="signs"):
            SignedGraph(Graph.path(3), Signature((1,)))

    def test_with_negative_edges(self):
        sg = SignedGraph.with_negative_edges(Graph.cycle(3), [(1, 2)])
        assert sg.signature.signs == (1, -1, 1)


class TestSwitch:
    def test_single_vertex_on_triangle(self):
        sg = switch(SignedGraph.all_positive(Graph.cycle(3)), {0})
        # edges (0,1), (1,2), (0,2): both edges at 0 flip
        assert sg.signature.signs == (-1, 1, -1)

    def test_rejects_unknown_vertex(self):
        with pytest.raises(ValueError, match="outside"):
            switch(SignedGraph.all_positive(Graph.path(2)), {5})

    @DEFAULT_SETTINGS
    @given(data=st.data())
    def test_involution(self, data):
        sg = data.draw(signed_graphs())
        subset = data.draw(vertex_subsets(sg.graph))
        assert switch(switch(sg, subset), subset) == sg

    @DEFAULT_SETTINGS
    @given(sg=signed_graphs())
    def test_full_vertex_set_is_identity(self, sg):
        everything = range(sg.graph.vertex_count)
        assert switch(sg, everything) == sg

    @DEFAULT_SETTINGS
    @given(data=st.data())
    def test_composes_by_symmetric_difference(self, data):
        sg = data.draw(signed_graphs())
        first = set(data.draw(vertex_subsets(sg.graph)))
        second = set(data.draw(vertex_subsets(sg.graph)))
        chained = switch(switch(sg, first), second)
        assert chained == switch(sg, first ^ second)

    @DEFAULT_SETTINGS
    @given(data=st.data())
    def test_matches_brute_force(self, data):
        sg = data.draw(signed_graphs())
        subset = data.draw(vertex_subsets(sg.graph))
        mask = sum(1 << v for v in subset)
        assert switch(sg, subset).signature.signs == brute_switched(
            sg.graph, sg.signature, mask
        )


class TestCircuitSign:
    def test_examples(self):
        c4 = Graph.cycle(4)
        assert circuit_sign(SignedGraph.all_positive(c4), (0, 1, 2, 3)) == 1
        two_neg = SignedGraph.with_negative_edges(c4, [(0, 1), (1, 2)])
        assert circuit_sign(two_neg, (0, 1, 2, 3)) == 1
        one_neg = SignedGraph.with_negative_edges(Graph.cycle(3), [(0, 1)])
        assert circuit_sign(one_neg, (0, 1, 2)) == -1

    def test_traversal_direction_irrelevant(self):
        sg = SignedGraph.with_negative_edges(Graph.cycle(4), [(1, 2)])
        assert circuit_sign(sg, (0, 1, 2, 3)) == circuit_sign(sg, (2, 1, 0, 3))

    def test_rejects_short_and_repeated(self):
        sg = SignedGraph.all_positive(Graph.cycle(4))
        with pytest.raises(ValueError, match="at least 3"):
            circuit_sign(sg, (0, 1))
        with pytest.raises(ValueError, match="repeats"):
            circuit_sign(sg, (0, 1, 2, 1))

    def test_rejects_missing_edge(self):
        sg = SignedGraph.all_positive(Graph.cycle(4))
        with pytest.raises(ValueError, match="no edge"):
            circuit_sign(sg, (0, 1, 3))

    @DEFAULT_SETTINGS
    @given(data=st.data())
    def test_invariant_under_switching(self, data):
        n = data.draw(st.integers(3, 7))
        graph = Graph.cycle(n)
        sg = SignedGraph(graph, data.draw(signatures_for(n)))
        subset = data.draw(vertex_subsets(graph))
        rim = tuple(range(n))
        assert circuit_sign(sg, rim) == circuit_sign(switch(sg, subset), rim)


class TestBalance:
    def test_all_positive_balanced_with_empty_switching(self):
        ok, witness = is_balanced(SignedGraph.all_positive(Graph.complete(4)))
        assert ok
        assert witness == BalanceWitness("switching-set", ())

    def test_one_negative_triangle_unbalanced(self):
        sg = SignedGraph.with_negative_edges(Graph.cycle(3), [(0, 1)])
        ok, witness = is_balanced(sg)
        assert not ok
        assert witness.kind == "unbalanced-circuit"
        assert circuit_sign(sg, witness.vertices) == -1

    def test_two_negatives_on_c4_balanced(self):
        sg = SignedGraph.with_negative_edges(Graph.cycle(4), [(1, 2), (2, 3)])
        ok, witness = is_balanced(sg)
        assert ok
        assert brute_balanced(sg)
        switched = switch(sg, witness.vertices)
        assert all(s == 1 for s in switched.signature.signs)

    def test_empty_graph(self):
        sg = SignedGraph.all_positive(Graph(0))
        assert is_balanced(sg) == (True, BalanceWitness("switching-set", ()))
        assert is_antibalanced(sg)

    @DEFAULT_SETTINGS
    @given(sg=signed_graphs())
    def test_agrees_with_brute_force(self, sg):
        assert is_balanced(sg)[0] == brute_balanced(sg)

    @DEFAULT_SETTINGS
    @given(sg=signed_graphs())
    def test_witness_is_usable(self, sg):
        ok, witness = is_balanced(sg)
        if ok:
            assert witness.kind == "switching-set"
            switched = switch(sg, witness.vertices)
            assert all(s == 1 for s in switched.signature.signs)
        else:
            assert witness.kind == "unbalanced-circuit"
            assert circuit_sign(sg, witness.vertices) == -1

    @DEFAULT_SETTINGS
    @given(data=st.data())
    def test_invariant_under_switching(self, data):
        sg = data.draw(signed_graphs())
        subset = data.draw(vertex_subsets(sg.graph))
        assert is_balanced(sg)[0] == is_balanced(switch(sg, subset))[0]

    def test_antibalance_examples(self):
        assert is_antibalanced(SignedGraph.all_negative(Graph.complete(4)))
        # even circuits are bipartite, so all-positive C4 is also antibalanced
        assert is_antibalanced(SignedGraph.all_positive(Graph.cycle(4)))
        assert not is_antibalanced(SignedGraph.all_positive(Graph.cycle(3)))

    @DEFAULT_SETTINGS
    @given(sg=signed_graphs())
    def test_antibalance_is_balance_of_negation(self, sg):
        negated = SignedGraph(sg.graph, sg.signature.negate())
        assert is_antibalanced(sg) == is_balanced(negated)[0]


class TestEquivalence:
    def test_switching_never_leaves_the_class(self):
        sg = SignedGraph.with_negative_edges(Graph.complete(4), [(0, 1)])
        other = switch(sg, (1, 3))
        assert are_equivalent(sg.graph, sg.signature, other.signature)

    def test_examples_on_triangle(self):
        triangle = Graph.cycle(3)
        all_pos = Signature.all_positive(3)
        one_neg = Signature.from_negative_edges(3, [0])
        two_neg = Signature.from_negative_edges(3, [0, 1])
        assert not are_equivalent(triangle, all_pos, one_neg)
        assert are_equivalent(triangle, all_pos, two_neg)

    def test_rejects_length_mismatch(self):
        with pytest.raises(ValueError):
            are_equivalent(Graph.path(3), Signature((1,)), Signature((1, 1)))

    @DEFAULT_SETTINGS
    @given(data=st.data())
    def test_agrees_with_brute_force(self, data):
        graph = data.draw(graphs(max_vertices=5))
        a = data.draw(signatures_for(graph.edge_count))
        b = data.draw(signatures_for(graph.edge_count))
        assert are_equivalent(graph, a, b) == brute_equivalent(graph, a, b)

    @DEFAULT_SETTINGS
    @given(data=st.data())
    def test_symmetric_relation(self, data):
        graph = data.draw(graphs(max_vertices=5))
        a = data.draw(signatures_for(graph.edge_count))
        b = data.draw(signatures_for(graph.edge_count))
        assert are_equivalent(graph, a, b) == are_equivalent(graph, b, a)


class TestCanonicalForm:
    def test_all_positive_is_fixed(self):
        sg = SignedGraph.all_positive(Graph.complete(4))
        canonical, switched_at = canonical_form(sg)
        assert canonical == sg
        assert switched_at == ()

    def test_unbalanced_cycle_sign_lands_on_cotree_edge(self):
        # the BFS forest of C5 leaves out edge 2 = (2, 3); any one-negative
        # signature is unbalanced, so that edge carries the class's -1
        sg = SignedGraph.with_negative_edges(Graph.cycle(5), [(0, 1)])
        canonical, _ = canonical_form(sg)
        assert canonical.signature.signs == (1, 1, -1, 1, 1)

    def test_switching_set_reproduces_canonical(self):
        sg = SignedGraph.with_negative_edges(Graph.complete(4), [(1, 2), (0, 3)])
        canonical, switched_at = canonical_form(sg)
        assert switch(sg, switched_at) == canonical

    @DEFAULT_SETTINGS
    @given(sg=signed_graphs())
    def test_idempotent(self, sg):
        canonical, _ = canonical_form(sg)
        again, switched_at = canonical_form(canonical)
        assert again == canonical
        assert switched_at == ()

    @DEFAULT_SETTINGS
    @given(data=st.data())
    def test_classifies_equivalence(self, data):
        graph = data.draw(graphs(max_vertices=5))
        a = data.draw(signatures_for(graph.edge_count))
        b = data.draw(signatures_for(graph.edge_count))
        same_form = (
            canonical_form(SignedGraph(graph, a))[0]
            == canonical_form(SignedGraph(graph, b))[0]
        )
        assert same_form == are_equivalent(graph, a, b)

    @pytest.mark.parametrize(
        "graph, expected",
        [
            (Graph.path(3), 1),
            (Graph.cycle(4), 2),
            (Graph.complete(4), 8),
            (Graph(5, ((0, 1), (0, 2), (1, 2), (3, 4))), 2),
        ],
    )
    def test_class_counts(self, graph, expected):
        m = graph.edge_count
        forms = {
            canonical_form(SignedGraph(graph, Signature.from_negative_edges(m, [
                i for i in range(m) if (mask >> i) & 1
            ])))[0].signature.signs
            for mask in range(1 << m)
        }
        n, c = graph.vertex_count, graph.component_count
        assert len(forms) == 2 ** (m - n + c) == expected


class TestDeleteAndInduce:
    def test_delete_from_triangle(self):
        sg = SignedGraph.all_negative(Graph.cycle(3))
        smaller, mapping = delete_vertex(sg, 0)
        assert smaller.graph.edges == ((0, 1),)
        assert smaller.signature.signs == (-1,)
        assert mapping == {1: 0, 2: 1}

    def test_delete_star_center(self):
        sg = SignedGraph.all_positive(Graph.star(3))
        smaller, mapping = delete_vertex(sg, 0)
        assert smaller.graph == Graph.edgeless(3)
        assert mapping == {1: 0, 2: 1, 3: 2}

    def test_delete_keeps_other_edges(self):
        sg = SignedGraph.with_negative_edges(Graph.path(4), [(0, 1)])
        smaller, mapping = delete_vertex(sg, 2)
        assert smaller.graph.edges == ((0, 1),)
        assert smaller.signature.signs == (-1,)
        assert mapping == {0: 0, 1: 1, 3: 2}

    def test_rejects_unknown_vertex(self):
        with pytest.raises(ValueError):
            delete_vertex(SignedGraph.all_positive(Graph.path(2)), 2)

    def test_induced_subgraph(self):
        sg = SignedGraph.with_negative_edges(Graph.complete(4), [(1, 2)])
        sub, mapping = induced_subgraph(sg, (1, 2, 3))
        assert mapping == {1: 0, 2: 1, 3: 2}
        assert sub.graph == Graph.complete(3)
        assert sub.signature.signs == (-1, 1, 1)

    @DEFAULT_SETTINGS
    @given(data=st.data())
    def test_induced_balance_inherited(self, data):
        sg = data.draw(signed_graphs(min_vertices=1))
        subset = data.draw(vertex_subsets(sg.graph))
        if is_balanced(sg)[0]:
            assert is_balanced(induced_subgraph(sg, subset)[0])[0]
