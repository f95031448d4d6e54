"""
Graph utilities over labelled transition systems.

A graph is given by a `successors(node)` callable returning `(symbol,
target)` pairs in a fixed order (the alphabet order), so every search
below is deterministic: the first path found is the shortest one and,
among shortest ones, the lexicographically first by alphabet position.

The SCC computation is Tarjan's algorithm with an explicit stack so deep
chains do not hit Python's recursion limit. Components come out sinks
first (reverse topological order of the condensation).
"""

from collections import deque
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Set, Tuple

Node = Hashable
Edge = Tuple[str, Node]
Successors = Callable[[Node], Iterable[Edge]]


def strongly_connected_components(
    nodes: Sequence[Node],
    successors: Successors,
) -> List[List[Node]]:
    """Compute the strongly connected components of the graph."""
    index: Dict[Node, int] = {}
    lowlink: Dict[Node, int] = {}
    on_stack: Set[Node] = set()
    stack: List[Node] = []
    components: List[List[Node]] = []
    counter = 0

    for root in nodes:
        if root in index:
            continue
        # each frame: (node, iterator over successor targets)
        work = [(root, iter([target for _, target in successors(root)]))]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)

        while work:
            node, targets = work[-1]
            advanced = False
            for target in targets:
                if target not in index:
                    index[target] = lowlink[target] = counter
                    counter += 1
                    stack.append(target)
                    on_stack.add(target)
                    work.append((target, iter([t for _, t in successors(target)])))
                    advanced = True
                    break
                if target in on_stack:
                    lowlink[node] = min(lowlink[node], index[target])
            if advanced:
                continue

            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[node])

            if lowlink[node] == index[node]:
                component = []
                while True:
                    member = stack.pop()
                    on_stack.discard(member)
                    component.append(member)
                    if member == node:
                        break
                components.append(component)

    return components


def cyclic_nodes(components: Iterable[List[Node]], successors: Successors) -> Set[Node]:
    """Nodes lying on some cycle: members of non-trivial or self-looping components."""
    result: Set[Node] = set()
    for component in components:
        if len(component) > 1:
            result.update(component)
            continue
        node = component[0]
        if any(target == node for _, target in successors(node)):
            result.add(node)
    return result


def reachable(starts: Iterable[Node], successors: Successors) -> List[Node]:
    """Nodes reachable from `starts` (inclusive), in breadth-first order."""
    seen: Set[Node] = set()
    order: List[Node] = []
    queue = deque()
    for start in starts:
        if start not in seen:
            seen.add(start)
            order.append(start)
            queue.append(start)
    while queue:
        node = queue.popleft()
        for _, target in successors(node):
            if target not in seen:
                seen.add(target)
                order.append(target)
                queue.append(target)
    return order


def predecessor_map(nodes: Iterable[Node], successors: Successors) -> Dict[Node, List[Node]]:
    """Reverse adjacency restricted to `nodes`."""
    preds: Dict[Node, List[Node]] = {node: [] for node in nodes}
    for node in list(preds):
        for _, target in successors(node):
            if target in preds:
                preds[target].append(node)
    return preds


def backward_closure(targets: Iterable[Node], predecessors: Dict[Node, List[Node]]) -> Set[Node]:
    """Nodes that can reach some target in zero or more steps."""
    closure = set(targets)
    queue = deque(closure)
    while queue:
        node = queue.popleft()
        for pred in predecessors.get(node, ()):
            if pred not in closure:
                closure.add(pred)
                queue.append(pred)
    return closure


def shortest_path(
    start: Node,
    is_target: Callable[[Node], bool],
    successors: Successors,
    min_steps: int = 0,
) -> Optional[Tuple[Tuple[str, ...], Node]]:
    """
    Breadth-first search for the shortest symbol path to a target node.

    With `min_steps=1` the empty path is not accepted, so a search from a
    target node back to itself finds a cycle.

    Returns:
        (symbols, target) or None if no target is reachable
    """
    if min_steps == 0 and is_target(start):
        return (), start

    # start stays unvisited only when re-entering it is the goal
    visited: Set[Node] = set() if is_target(start) else {start}
    parents: Dict[Node, Tuple[Node, str]] = {}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        for symbol, target in successors(node):
            if target in visited:
                continue
            visited.add(target)
            parents[target] = (node, symbol)
            if is_target(target):
                return _unwind(start, target, parents), target
            queue.append(target)
    return None


def _unwind(start: Node, target: Node, parents: Dict[Node, Tuple[Node, str]]) -> Tuple[str, ...]:
    symbols: List[str] = []
    node = target
    while True:
        pred, symbol = parents[node]
        symbols.append(symbol)
        if pred == start:
            break
        node = pred
    symbols.reverse()
    return tuple(symbols)


def cycle_through(node: Node, successors: Successors) -> Optional[Tuple[str, ...]]:
    """Shortest non-empty symbol path from `node` back to itself."""
    found = shortest_path(node, lambda other: other == node, successors, min_steps=1)
    return found[0] if found else None
