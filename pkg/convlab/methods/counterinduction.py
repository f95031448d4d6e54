"""
Detection of counterinductive outputs.

A method applies counterinduction at evidence e when the truth state
after e sits in a cyclic component labelled h (uniform experience so far
points to h) while the method outputs a different hypothesis that is
still possible. For the raven problem that is exactly "answer no on
all-black evidence".

Whether e is counterinductive depends only on the product node reached
by e, so the set of offending reachable product nodes is a finite
certificate: the listed sequences at any depth are exactly the evidence
leading into that set, and an empty set means no depth ever lists one.
"""

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, List, Tuple

from convlab.automata.graph import backward_closure, predecessor_map
from convlab.errors import InputError
from convlab.methods.models import InferenceMethod, is_suspend
from convlab.problems.models import EmpiricalProblem, EvidenceSequence

if TYPE_CHECKING:
    from convlab.automata.product import ProductGraph

ProductNode = Tuple[str, str]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CounterinductionReport:
    """
    Result of a counterinduction scan.

    Attributes:
        method: Method name
        problem: Problem name
        depth_bound: Longest evidence listed
        nodes: Counterinductive evidence up to depth_bound, by length then alphabet order
        certificate: Offending reachable product nodes (method state, truth state)
    """
    method: str
    problem: str
    depth_bound: int
    nodes: Tuple[EvidenceSequence, ...]
    certificate: Tuple[ProductNode, ...]

    @property
    def empty_at_every_depth(self) -> bool:
        return not self.certificate


def is_counterinductive(product: "ProductGraph", node: ProductNode) -> bool:
    output = product.output(node)
    if is_suspend(output):
        return False
    truth_state = node[1]
    structure = product.problem.structure
    if truth_state not in structure.cyclic:
        return False
    return (
        output != product.truth_label(node)
        and output in structure.trapped_labels[truth_state]
    )


def counterinductive_nodes(
    m: InferenceMethod,
    p: EmpiricalProblem,
    depth_bound: int,
) -> CounterinductionReport:
    """
    List counterinductive evidence of length at most depth_bound.

    Raises:
        InputError: On alphabet mismatch or a negative bound
    """
    if depth_bound < 0:
        raise InputError(f"depth_bound must be non-negative, got {depth_bound}")

    # the product module imports this package
    from convlab.automata.product import ProductGraph

    product = ProductGraph.build(m, p)
    offending = [node for node in product.nodes if is_counterinductive(product, node)]

    listed: List[EvidenceSequence] = []
    if offending:
        # only subtrees that can still hit an offending node are expanded
        live = backward_closure(offending, predecessor_map(product.nodes, product.successors))
        offending_set = set(offending)
        frontier: List[Tuple[EvidenceSequence, ProductNode]] = [((), product.root)]
        for length in range(depth_bound + 1):
            next_frontier = []
            for evidence, node in frontier:
                if node in offending_set:
                    listed.append(evidence)
                if length == depth_bound:
                    continue
                for symbol, target in product.successors(node):
                    if target in live:
                        next_frontier.append((evidence + (symbol,), target))
            frontier = next_frontier

    logger.info(
        f"Counterinduction scan of '{m.name}' on '{p.name}': "
        f"{len(offending)} offending product state(s), {len(listed)} node(s) to depth {depth_bound}"
    )
    return CounterinductionReport(
        method=m.name,
        problem=p.name,
        depth_bound=depth_bound,
        nodes=tuple(listed),
        certificate=tuple(offending),
    )
