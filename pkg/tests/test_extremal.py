import itertools
from math import comb

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import categorical_node_match

from treepack.extremal import (CrossPattern, book_graph, complete_graph, enumerate_family,
                               family_edge_count, family_graph, join_candidate)
from treepack.graph import GraphError, edge_connectivity, is_connected, min_degree
from treepack.iso import are_isomorphic
from treepack.packing import partition_oracle, tau


class TestConstructors:
    @pytest.mark.parametrize("n,m", [(1, 0), (4, 6), (13, 78)])
    def test_complete(self, n, m):
        assert complete_graph(n).m == m

    def test_family_one_link(self):
        fg = family_graph(12, 5, CrossPattern(5, 7, ((0, 0),)))
        assert fg.graph.m == 32 == family_edge_count(12, 5, 1)

    def test_family_empty_pattern(self):
        fg = family_graph(10, 5, CrossPattern(5, 5, ()))
        assert fg.graph.m == 20 and not is_connected(fg.graph)

    def test_family_two_links_is_book(self):
        fg = family_graph(13, 5, CrossPattern(5, 8, ((0, 0), (0, 1))))
        assert fg.graph == book_graph(13, 4, 2)

    def test_pattern_validation(self):
        with pytest.raises(GraphError):
            CrossPattern(5, 7, ((5, 0),))
        with pytest.raises(GraphError):
            CrossPattern(5, 7, ((0, 0), (0, 0)))
        with pytest.raises(GraphError):
            family_graph(12, 5, CrossPattern(5, 6, ()))

    def test_book_counts(self):
        assert book_graph(13, 4, 1).m == 39
        g = book_graph(13, 4, 0)
        assert not is_connected(g)

    def test_book_connectivity_class(self):
        g = book_graph(12, 4, 4)
        assert edge_connectivity(g)[0] == 4 and min_degree(g) == 4

    def test_book_errors(self):
        with pytest.raises(GraphError):
            book_graph(5, 4, 0)
        with pytest.raises(GraphError):
            book_graph(13, 4, 9)

    @pytest.mark.parametrize("delta", range(1, 7))
    def test_book_min_degree(self, delta):
        for n in range(2 * delta + 2, 2 * delta + 6):
            for i in range(1, delta + 1):
                assert min_degree(book_graph(n, delta, i)) == delta

    @pytest.mark.parametrize("n,k,m", [(8, 2, 14), (5, 2, 8), (7, 3, 18)])
    def test_join_candidate(self, n, k, m):
        g = join_candidate(n, k)
        assert g.n == n and g.m == m == k * (n - 1)

    def test_join_candidate_tau(self):
        g = join_candidate(8, 2)
        assert tau(g) == 2
        assert partition_oracle(g, 2).holds and not partition_oracle(g, 3).holds

    def test_join_candidate_degenerate(self):
        with pytest.raises(GraphError):
            join_candidate(4, 2)


def orbit_count_oracle(left: int, right: int, i: int) -> int:
    """Classify all i-edge bipartite patterns with networkx, keeping the parts fixed."""
    cells = [(a, b) for a in range(left) for b in range(right)]
    reps: list[nx.Graph] = []
    match = categorical_node_match("side", None)
    for links in itertools.combinations(cells, i):
        h = nx.Graph()
        h.add_nodes_from((("L", a) for a in range(left)), side=0)
        h.add_nodes_from((("R", b) for b in range(right)), side=1)
        h.add_edges_from((("L", a), ("R", b)) for a, b in links)
        if not any(nx.is_isomorphic(h, r, node_match=match) for r in reps):
            reps.append(h)
    return len(reps)


class TestEnumeration:
    def test_single_link(self):
        assert len(list(enumerate_family(12, 5, 1))) == 1

    def test_two_links(self):
        members = list(enumerate_family(13, 5, 2))
        assert len(members) == 3
        assert sum(are_isomorphic(fg.graph, book_graph(13, 4, 2)) for fg in members) == 1

    def test_no_links(self):
        members = list(enumerate_family(11, 4, 0))
        assert len(members) == 1 and not is_connected(members[0].graph)

    @pytest.mark.parametrize("left,right,i", [(2, 3, 2), (3, 3, 3), (3, 4, 3), (4, 4, 4), (2, 5, 4)])
    def test_counts_match_oracle(self, left, right, i):
        ours = len(list(enumerate_family(left + right, left, i)))
        assert ours == orbit_count_oracle(left, right, i)

    @pytest.mark.parametrize("n,n1,i", [(13, 5, 3), (14, 6, 4), (16, 5, 4)])
    def test_members_pairwise_distinct(self, n, n1, i):
        members = [fg.graph for fg in enumerate_family(n, n1, i)]
        for a, b in itertools.combinations(members, 2):
            # different patterns may still be isomorphic graphs when n1 = n - n1; not here
            assert not are_isomorphic(a, b)

    @pytest.mark.parametrize("n,n1,i", [(12, 5, 2), (13, 6, 3), (15, 7, 4)])
    def test_edge_count_and_connectivity(self, n, n1, i):
        for fg in enumerate_family(n, n1, i):
            assert fg.graph.m == comb(n1, 2) + comb(n - n1, 2) + i
            assert is_connected(fg.graph) == (i >= 1)
            assert fg.min_degree == min_degree(fg.graph)

    @pytest.mark.parametrize("n,delta,i", [(11, 4, 1), (13, 4, 2), (14, 5, 3), (16, 6, 4)])
    def test_book_in_family(self, n, delta, i):
        book = book_graph(n, delta, i)
        assert any(are_isomorphic(fg.graph, book) for fg in enumerate_family(n, delta + 1, i))

    def test_limits(self):
        with pytest.raises(GraphError):
            list(enumerate_family(19, 5, 1))
        with pytest.raises(GraphError):
            list(enumerate_family(12, 5, 5))
        with pytest.raises(GraphError):
            list(enumerate_family(4, 1, 4))


def test_binomial_exchange_inequality():
    for a in range(1, 41):
        for b in range(1, a + 1):
            assert comb(a, 2) + comb(b, 2) < comb(a + 1, 2) + comb(b - 1, 2)
