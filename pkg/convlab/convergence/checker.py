"""
Exact convergence checks by product-graph analysis.

The definitions quantify over every infinite branch, but for finite-state
methods and problems each one reduces to a condition on the finitely many
reachable product nodes. Each check below states its reduction next to
the code. Throughout, "time t" is the evidence length t, so the output at
time t is apply(m, world.take(t)).
"""

import logging
from typing import Dict, List, Optional, Set, Tuple

from convlab.automata.graph import (
    backward_closure,
    cycle_through,
    predecessor_map,
    shortest_path,
)
from convlab.automata.product import ProductGraph, ProductNode
from convlab.convergence.models import ConvergenceVerdict, Mode, Verdict
from convlab.methods.models import InferenceMethod, is_suspend
from convlab.problems.models import (
    EmpiricalProblem,
    EvidenceSequence,
    HypothesisLabel,
    UltimatelyPeriodicWorld,
)

logger = logging.getLogger(__name__)


def _passed(mode: Mode, **extra) -> ConvergenceVerdict:
    return ConvergenceVerdict(mode=mode, verdict=Verdict.PASS, **extra)


def _lasso(
    product: ProductGraph,
    lead_in: EvidenceSequence,
    loop_node: ProductNode,
) -> UltimatelyPeriodicWorld:
    """World following lead_in to loop_node and then circling there forever."""
    cycle = cycle_through(loop_node, product.successors)
    return UltimatelyPeriodicWorld(lead_in, cycle)


def _trap(
    product: ProductGraph,
    start: ProductNode,
    wanted: Optional[HypothesisLabel] = None,
    avoid: Optional[HypothesisLabel] = None,
) -> Optional[Tuple[EvidenceSequence, ProductNode]]:
    """Shortest continuation from start into a cyclic node with a matching truth label."""
    def is_target(node: ProductNode) -> bool:
        if node not in product.cyclic:
            return False
        label = product.truth_label(node)
        if wanted is not None and label != wanted:
            return False
        return avoid is None or label != avoid

    return shortest_path(start, is_target, product.successors)


def _check_pointwise(product: ProductGraph) -> ConvergenceVerdict:
    # Reduction: a branch's run eventually circles inside one product SCC
    # and visits every node of some cycle there infinitely often; the
    # truth of the branch is the label of the truth states on that cycle.
    # So the method is eventually always right on every branch iff every
    # cyclic product node outputs its own truth label. Conversely an
    # offending cyclic node c yields the branch path(c) . cycle(c)^w, whose
    # error recurs once per cycle.
    for node in product.nodes:
        if node in product.cyclic and product.output(node) != product.truth_label(node):
            lead_in = product.path_to(node)
            world = _lasso(product, lead_in, node)
            t = len(lead_in)
            logger.debug(f"Pointwise failure at recurring product node {node}")
            return ConvergenceVerdict(
                mode=Mode.POINTWISE,
                verdict=Verdict.FAIL,
                witness=world,
                witness_times=(t, t + len(world.cycle)),
            )
    return _passed(Mode.POINTWISE)


def _check_stability(product: ProductGraph) -> ConvergenceVerdict:
    # Reduction: a violation is a branch with truth t along which the
    # method outputs t at some time i and something else at a later j.
    # Taking u, v as the nodes at i and j, this is: output(u) = t, a
    # non-empty path u -> v with output(v) != t, and a continuation from v
    # into a cyclic node labelled t. Let C_t be the nodes that can reach
    # such a v (v itself included); a violation exists iff some node with
    # output t has a successor in C_t. Nodes are scanned in breadth-first
    # order so the reported i is as small as possible.
    predecessors = predecessor_map(product.nodes, product.successors)
    closures: Dict[HypothesisLabel, Tuple[Set[ProductNode], Set[ProductNode]]] = {}

    def closure_for(t: HypothesisLabel) -> Tuple[Set[ProductNode], Set[ProductNode]]:
        if t not in closures:
            targets = [
                node for node in product.cyclic if product.truth_label(node) == t
            ]
            can_reach_t = backward_closure(targets, predecessors)
            deviating = [node for node in can_reach_t if product.output(node) != t]
            closures[t] = (can_reach_t, backward_closure(deviating, predecessors))
        return closures[t]

    for u in product.nodes:
        t = product.output(u)
        if is_suspend(t):
            continue
        can_reach_t, c_t = closure_for(t)
        for symbol, x in product.successors(u):
            if x not in c_t:
                continue
            found = shortest_path(
                x,
                lambda node: product.output(node) != t and node in can_reach_t,
                product.successors,
            )
            if found is None:
                continue
            to_v, v = found
            to_w, w = _trap(product, v, wanted=t)
            head = product.path_to(u)
            lead_in = head + (symbol,) + to_v + to_w
            i = len(head)
            j = i + 1 + len(to_v)
            logger.debug(f"Stability failure: output {t} at {u} abandoned at {v}")
            return ConvergenceVerdict(
                mode=Mode.STABLE,
                verdict=Verdict.FAIL,
                witness=_lasso(product, lead_in, w),
                witness_times=(i, j),
            )
    return _passed(Mode.STABLE)


def _longest_lead_in(product: ProductGraph, transient: Set[ProductNode]) -> int:
    """Edges on the longest path from the root that stays inside the transient part."""
    indegree = {node: 0 for node in transient}
    for node in transient:
        for _, target in product.successors(node):
            if target in transient:
                indegree[target] += 1
    # transient nodes lie on no cycle, so Kahn's order covers all of them
    longest = {node: (0 if node == product.root else None) for node in transient}
    ready = [node for node in product.nodes if node in transient and indegree[node] == 0]
    best = 0
    while ready:
        node = ready.pop()
        for _, target in product.successors(node):
            if target not in transient:
                continue
            if longest[node] is not None:
                candidate = longest[node] + 1
                if longest[target] is None or candidate > longest[target]:
                    longest[target] = candidate
            indegree[target] -= 1
            if indegree[target] == 0:
                ready.append(target)
        if longest[node] is not None:
            best = max(best, longest[node])
    return best


def _check_uniform(product: ProductGraph) -> ConvergenceVerdict:
    # Reduction: with N reachable product nodes, any run longer than N
    # repeats a node, so from time N on every run sits in R, the nodes
    # reachable from a cyclic node; and every node of R occurs at
    # arbitrarily late times (pump the cycle before it). Hence a uniform
    # modulus exists iff every node of R is right in every world through
    # it: its truth state is settled and it outputs the settled label.
    # Outside R the product is acyclic, and after the longest path through
    # it every run has entered R, which gives the modulus.
    sources = [node for node in product.nodes if node in product.cyclic]
    # multi-source search so each node of R remembers a cyclic ancestor
    origin: Dict[ProductNode, ProductNode] = {}
    order: List[ProductNode] = []
    for source in sources:
        if source not in origin:
            origin[source] = source
            order.append(source)
    for node in order:
        for _, target in product.successors(node):
            if target not in origin:
                origin[target] = origin[node]
                order.append(target)
    recurrent = set(origin)

    bad = [
        node for node in product.nodes
        if node in recurrent
        and (not product.is_settled(node) or product.output(node) != product.settled_label(node))
    ]
    if not bad:
        if product.root in recurrent:
            modulus = 0
        else:
            transient = set(product.nodes) - recurrent
            modulus = 1 + _longest_lead_in(product, transient)
        return _passed(Mode.UNIFORM, modulus=modulus)

    v = bad[0]
    c = origin[v]
    output = product.output(v)
    to_c = product.path_to(c)
    loop = cycle_through(c, product.successors)
    c_to_v = shortest_path(c, lambda node: node == v, product.successors)[0]
    head = to_c + loop + c_to_v
    error_time = len(head)

    # unsettled: a world through v whose truth differs from v's output,
    # and a second world through v with yet another truth
    to_w, w = _trap(product, v, avoid=None if is_suspend(output) else output)
    witness = _lasso(product, head + to_w, w)
    alt_witness = None
    if not product.is_settled(v):
        to_w2, w2 = _trap(product, v, avoid=product.truth_label(w))
        alt_witness = _lasso(product, head + to_w2, w2)

    logger.debug(f"Uniform failure at product node {v}, pumped through {c}")
    return ConvergenceVerdict(
        mode=Mode.UNIFORM,
        verdict=Verdict.FAIL,
        witness=witness,
        # the second time is the same error in the world pumped once more
        witness_times=(error_time, error_time + len(loop)),
        alt_witness=alt_witness,
        pump=(len(to_c), len(loop)),
    )


def check_pointwise(m: InferenceMethod, p: EmpiricalProblem) -> ConvergenceVerdict:
    """
    Pointwise convergence: on every branch the method is eventually always right.

    Raises:
        InputError: On alphabet mismatch
    """
    return _check_pointwise(ProductGraph.build(m, p))


def check_stability(m: InferenceMethod, p: EmpiricalProblem) -> ConvergenceVerdict:
    """Stability: once the method outputs the truth of a branch it never lets go."""
    return _check_stability(ProductGraph.build(m, p))


def check_uniform(m: InferenceMethod, p: EmpiricalProblem) -> ConvergenceVerdict:
    """Uniform convergence: one evidence amount after which every branch is right."""
    return _check_uniform(ProductGraph.build(m, p))


def check_stable_pointwise(m: InferenceMethod, p: EmpiricalProblem) -> ConvergenceVerdict:
    """
    Pointwise convergence together with stability.

    The pointwise clause is checked first; a failure reports that clause's
    witness and names it in `clause`.
    """
    product = ProductGraph.build(m, p)
    for check in (_check_pointwise, _check_stability):
        verdict = check(product)
        if not verdict.passed:
            return ConvergenceVerdict(
                mode=Mode.STABLE_POINTWISE,
                verdict=Verdict.FAIL,
                witness=verdict.witness,
                witness_times=verdict.witness_times,
                clause=verdict.mode,
            )
    return _passed(Mode.STABLE_POINTWISE)


CHECKS = {
    Mode.UNIFORM: check_uniform,
    Mode.POINTWISE: check_pointwise,
    Mode.STABLE: check_stability,
    Mode.STABLE_POINTWISE: check_stable_pointwise,
}


def check_mode(m: InferenceMethod, p: EmpiricalProblem, mode: Mode) -> ConvergenceVerdict:
    verdict = CHECKS[Mode(mode)](m, p)
    logger.info(f"{Mode(mode).value} check of '{m.name}' on '{p.name}': {verdict.verdict.value}")
    return verdict
