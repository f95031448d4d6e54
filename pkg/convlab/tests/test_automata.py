"""
Tests for the graph utilities behind the product construction.
"""

from convlab.automata.graph import (
    backward_closure,
    cycle_through,
    cyclic_nodes,
    predecessor_map,
    reachable,
    shortest_path,
    strongly_connected_components,
)
from convlab.automata.product import ProductGraph
from convlab.methods import ordinary_induction
from convlab.problems import raven_problem

EDGES = {
    0: [("a", 1), ("b", 2)],
    1: [("a", 0), ("b", 3)],
    2: [("a", 2), ("b", 2)],
    3: [("a", 3), ("b", 2)],
    4: [("a", 0), ("b", 0)],
}


def successors(node):
    return EDGES[node]


class TestGraph:
    """Test searches and components on a small fixed graph."""

    def test_components_sinks_first(self):
        """Test Tarjan's components in reverse topological order."""
        components = strongly_connected_components([4, 0, 1, 2, 3], successors)
        assert [set(c) for c in components] == [{2}, {3}, {0, 1}, {4}]
        assert cyclic_nodes(components, successors) == {0, 1, 2, 3}

    def test_deep_chain(self):
        """Test that long chains do not hit the recursion limit."""
        chain = {i: [("a", i + 1)] for i in range(5000)}
        chain[5000] = [("a", 5000)]
        components = strongly_connected_components(list(chain), lambda n: chain[n])
        assert len(components) == 5001
        assert components[0] == [5000]

    def test_reachable_breadth_first(self):
        """Test reachability order."""
        assert reachable([4], successors) == [4, 0, 1, 2, 3]
        assert reachable([2], successors) == [2]

    def test_shortest_path_and_cycles(self):
        """Test shortest symbol paths and cycles."""
        assert shortest_path(4, lambda n: n == 3, successors) == (("a", "a", "b"), 3)
        assert shortest_path(2, lambda n: n == 0, successors) is None
        assert cycle_through(0, successors) == ("a", "a")
        assert cycle_through(2, successors) == ("a",)
        assert cycle_through(4, successors) is None

    def test_backward_closure(self):
        """Test the nodes that can reach a target."""
        nodes = [4, 0, 1, 2, 3]
        assert backward_closure([3], predecessor_map(nodes, successors)) == {0, 1, 3, 4}


class TestProduct:
    """Test the method-problem product."""

    def test_ordinary_induction_on_raven(self):
        """Test the reachable product nodes and their labels."""
        product = ProductGraph.build(ordinary_induction(), raven_problem())

        assert product.root == ("s0", "q0")
        assert set(product.nodes) == {("s0", "q0"), ("s1", "q1")}
        assert product.cyclic == frozenset(product.nodes)
        assert product.path_to(("s1", "q1")) == ("nonblack",)
        assert product.output(("s1", "q1")) == "no"
        assert product.truth_label(("s0", "q0")) == "yes"
