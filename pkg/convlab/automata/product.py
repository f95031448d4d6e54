"""
Product of an inference method with a problem's truth automaton.

A product node (method state, truth state) is what the method "sees" and
what the world has committed to after the same evidence. Every property
the checkers decide is a property of runs through this graph, so it is
built once per (method, problem) pair and shared.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Optional, Tuple

from convlab.automata.graph import (
    cyclic_nodes,
    reachable,
    shortest_path,
    strongly_connected_components,
)
from convlab.methods.models import InferenceMethod, MethodOutput
from convlab.methods.service import check_compatible
from convlab.problems.models import EmpiricalProblem, EvidenceSequence, HypothesisLabel

logger = logging.getLogger(__name__)

ProductNode = Tuple[str, str]


@dataclass(frozen=True)
class ProductGraph:
    """
    Reachable product of a method and a truth automaton.

    Attributes:
        method: The inference method
        problem: The empirical problem
        root: (initial method state, initial truth state)
        nodes: Reachable nodes in breadth-first order from the root
        edges: node -> ((symbol, node), ...) in alphabet order
        cyclic: Nodes lying on a cycle of the product
    """
    method: InferenceMethod
    problem: EmpiricalProblem
    root: ProductNode
    nodes: Tuple[ProductNode, ...]
    edges: Dict[ProductNode, Tuple[Tuple[str, ProductNode], ...]] = field(hash=False)
    cyclic: FrozenSet[ProductNode] = frozenset()

    @classmethod
    def build(cls, m: InferenceMethod, p: EmpiricalProblem) -> "ProductGraph":
        """
        Build the reachable product of m and p.

        Raises:
            InputError: If m does not read p's alphabet
        """
        check_compatible(m, p)
        truth = p.truth

        def successors(node: ProductNode):
            method_state, truth_state = node
            return [
                (symbol, (m.step(method_state, symbol), truth.step(truth_state, symbol)))
                for symbol in p.alphabet
            ]

        root = (m.initial, truth.initial)
        nodes = reachable([root], successors)
        edges = {node: tuple(successors(node)) for node in nodes}
        components = strongly_connected_components(nodes, lambda node: edges[node])
        cyclic = cyclic_nodes(components, lambda node: edges[node])

        logger.debug(
            f"Product of '{m.name}' x '{p.name}': {len(nodes)} nodes, {len(cyclic)} cyclic"
        )
        return cls(
            method=m,
            problem=p,
            root=root,
            nodes=tuple(nodes),
            edges=edges,
            cyclic=frozenset(cyclic),
        )

    def successors(self, node: ProductNode) -> Tuple[Tuple[str, ProductNode], ...]:
        return self.edges[node]

    def output(self, node: ProductNode) -> MethodOutput:
        return self.method.outputs[node[0]]

    def truth_label(self, node: ProductNode) -> HypothesisLabel:
        """Label of the node's truth state (semantic only on cyclic truth states)."""
        return self.problem.truth.labels[node[1]]

    def is_settled(self, node: ProductNode) -> bool:
        return self.problem.structure.is_settled(node[1])

    def settled_label(self, node: ProductNode) -> Optional[HypothesisLabel]:
        return self.problem.structure.settled_label(node[1])

    def path_to(self, target: ProductNode) -> EvidenceSequence:
        """Shortest evidence leading from the root to target."""
        found = shortest_path(self.root, lambda node: node == target, self.successors)
        if found is None:
            raise ValueError(f"Product node {target} is not reachable")
        return found[0]
