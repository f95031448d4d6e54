"""
Brute-force cross-check of the exact checkers.

The oracle never looks at SCCs. It enumerates every ultimately periodic
world with |prefix| <= depth and |cycle| <= max_period, simulates the
method and the truth automaton along it, and reports the defining clause
of each mode whenever a world breaks it:

- pointwise: the method errs inside the world's periodic part, so the
  error recurs forever;
- stable: the method outputs the world's truth at some time and
  something else later;
- uniform: a recurring error, or an error at a time by which the run has
  already revisited a product state (pumping that loop moves the error
  arbitrarily late, so no evidence amount works for every world).

Every report is a real violation. Passing is conclusive only for the
enumerated family of worlds.

Enumeration walks prefixes depth-first. The run after a prefix depends
only on the product state reached and the cycle, so the simulation of
each (state, cycle) tail is memoised and shared by all prefixes reaching
that state.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from convlab.convergence.models import Mode
from convlab.errors import InputError
from convlab.methods.models import InferenceMethod, MethodOutput
from convlab.methods.service import apply, check_compatible
from convlab.problems.models import (
    EmpiricalProblem,
    EvidenceSequence,
    HypothesisLabel,
    UltimatelyPeriodicWorld,
)

logger = logging.getLogger(__name__)

MAX_EXAMPLES = 5

ORACLE_MODES = (Mode.UNIFORM, Mode.STABLE_POINTWISE, Mode.POINTWISE, Mode.STABLE)


@dataclass(frozen=True)
class OracleViolation:
    """
    One observed violation.

    Attributes:
        mode: Mode whose defining clause failed
        world: The world
        truth: Hypothesis true in the world
        times: Evidence lengths exhibiting the violation
    """
    mode: Mode
    world: UltimatelyPeriodicWorld
    truth: HypothesisLabel
    times: Tuple[int, int]


@dataclass(frozen=True)
class OracleReport:
    """
    Attributes:
        method: Method name
        problem: Problem name
        depth: Longest prefix enumerated
        max_period: Longest cycle enumerated
        horizon: depth + max_period * (product size + 1), the simulation bound per world
        max_worlds: Resource cap
        worlds_checked: Worlds evaluated
        complete: False if the cap stopped enumeration early
        counts: mode -> worlds violating that mode
        examples: mode -> up to five replayed violations
    """
    method: str
    problem: str
    depth: int
    max_period: int
    horizon: int
    max_worlds: Optional[int]
    worlds_checked: int
    complete: bool
    counts: Dict[Mode, int] = field(hash=False)
    examples: Dict[Mode, Tuple[OracleViolation, ...]] = field(hash=False)

    def found(self, mode: Mode) -> bool:
        return self.counts.get(Mode(mode), 0) > 0


@dataclass(frozen=True)
class _Tail:
    """Simulation of cycle^w from one product state (times counted after the prefix)."""
    truth: HypothesisLabel
    transient: Tuple[MethodOutput, ...]
    periodic: Tuple[MethodOutput, ...]
    first_repeat: int


@dataclass
class _PrefixInfo:
    """What the outputs along a prefix say about each hypothesis as the truth."""
    seen: FrozenSet[MethodOutput]
    violated: FrozenSet[MethodOutput]
    last_error: Dict[HypothesisLabel, int]
    visited: Set[Tuple[str, str]]
    first_repeat: Optional[int]


def _simulate_tail(
    m: InferenceMethod,
    p: EmpiricalProblem,
    state: Tuple[str, str],
    cycle: EvidenceSequence,
) -> _Tail:
    boundaries = {state: 0}
    seen_nodes = {state}
    first_repeat = None
    outputs: List[MethodOutput] = []
    method_state, truth_state = state
    block = 0
    while True:
        for symbol in cycle:
            method_state = m.step(method_state, symbol)
            truth_state = p.truth.step(truth_state, symbol)
            outputs.append(m.outputs[method_state])
            node = (method_state, truth_state)
            if first_repeat is None and node in seen_nodes:
                first_repeat = len(outputs)
            seen_nodes.add(node)
        block += 1
        boundary = (method_state, truth_state)
        if boundary in boundaries:
            start = boundaries[boundary] * len(cycle)
            # the truth state at a repeating boundary lies on a cycle
            return _Tail(
                truth=p.truth.labels[truth_state],
                transient=tuple(outputs[:start]),
                periodic=tuple(outputs[start:]),
                first_repeat=first_repeat,
            )
        boundaries[boundary] = block


def _tail_violates_stability(tail: _Tail, truth: HypothesisLabel) -> bool:
    sequence = tail.transient + tail.periodic + tail.periodic
    held = False
    for output in sequence:
        if output == truth:
            held = True
        elif held:
            return True
    return False


def _last_tail_error(tail: _Tail, truth: HypothesisLabel) -> Optional[int]:
    for offset in range(len(tail.transient), 0, -1):
        if tail.transient[offset - 1] != truth:
            return offset
    return None


def _replay_times(
    m: InferenceMethod,
    world: UltimatelyPeriodicWorld,
    truth: HypothesisLabel,
    mode: Mode,
    tail: _Tail,
    pump_time: Optional[int],
) -> Tuple[int, int]:
    """Recover the violation's times by replaying the method with apply."""
    periodic_start = len(world.prefix) + len(tail.transient)
    limit = periodic_start + 2 * len(tail.periodic) + 1
    outputs = [apply(m, world.take(t)) for t in range(limit)]
    recurring = any(output != truth for output in tail.periodic)

    if mode == Mode.STABLE or (mode == Mode.STABLE_POINTWISE and not recurring):
        i = outputs.index(truth)
        j = next(t for t in range(i + 1, limit) if outputs[t] != truth)
        return i, j
    if recurring:
        t = next(t for t in range(periodic_start, limit) if outputs[t] != truth)
        return t, t + len(tail.periodic)
    # uniform without a recurring error: (first revisit, last error)
    last = max(t for t in range(limit) if outputs[t] != truth)
    return pump_time, last


def brute_force_oracle(
    m: InferenceMethod,
    p: EmpiricalProblem,
    depth: int,
    max_period: int,
    max_worlds: Optional[int] = None,
) -> OracleReport:
    """
    Enumerate worlds and report observed violations per mode.

    Raises:
        InputError: On alphabet mismatch or non-positive bounds
    """
    if depth < 1 or max_period < 1:
        raise InputError(f"depth and max_period must be >= 1, got {depth} and {max_period}")
    check_compatible(m, p)

    product_bound = len(m.states) * len(p.truth.states)
    horizon = depth + max_period * (product_bound + 1)
    cycles = [
        cycle
        for length in range(1, max_period + 1)
        for cycle in itertools.product(p.alphabet, repeat=length)
    ]
    hypotheses = p.hypothesis_labels

    tails: Dict[Tuple[Tuple[str, str], EvidenceSequence], _Tail] = {}
    counts = {mode: 0 for mode in ORACLE_MODES}
    examples: Dict[Mode, List[OracleViolation]] = {mode: [] for mode in ORACLE_MODES}
    checked = 0
    complete = True

    def record(mode: Mode, world, truth, tail, pump_time):
        counts[mode] += 1
        if len(examples[mode]) < MAX_EXAMPLES:
            times = _replay_times(m, world, truth, mode, tail, pump_time)
            examples[mode].append(OracleViolation(mode, world, truth, times))

    def evaluate(prefix: EvidenceSequence, state: Tuple[str, str], info: _PrefixInfo) -> bool:
        nonlocal checked, complete
        for cycle in cycles:
            if max_worlds is not None and checked >= max_worlds:
                complete = False
                return False
            checked += 1
            key = (state, cycle)
            tail = tails.get(key)
            if tail is None:
                tail = tails[key] = _simulate_tail(m, p, state, cycle)
            truth = tail.truth

            recurring = any(output != truth for output in tail.periodic)
            unstable = (
                truth in info.violated
                or (truth in info.seen and any(o != truth for o in tail.transient + tail.periodic))
                or _tail_violates_stability(tail, truth)
            )
            tail_error = _last_tail_error(tail, truth)
            last_error = (
                len(prefix) + tail_error if tail_error is not None else info.last_error[truth]
            )
            if info.first_repeat is not None:
                pump_time = info.first_repeat
            else:
                pump_time = len(prefix) + tail.first_repeat
            late = last_error >= min(pump_time, product_bound)
            pump_time = min(pump_time, product_bound)

            world = None
            for mode, violated in (
                (Mode.POINTWISE, recurring),
                (Mode.STABLE, unstable),
                (Mode.STABLE_POINTWISE, recurring or unstable),
                (Mode.UNIFORM, recurring or late),
            ):
                if violated:
                    world = world or UltimatelyPeriodicWorld(prefix, cycle)
                    record(mode, world, truth, tail, pump_time)
        return True

    def extend(info: _PrefixInfo, node: Tuple[str, str], t: int) -> _PrefixInfo:
        output = m.outputs[node[0]]
        last_error = {
            h: (info.last_error[h] if output == h else t) for h in hypotheses
        }
        first_repeat = info.first_repeat
        if first_repeat is None and node in info.visited:
            first_repeat = t
        return _PrefixInfo(
            seen=info.seen | {output},
            violated=info.violated | {h for h in info.seen if h != output},
            last_error=last_error,
            visited=info.visited | {node},
            first_repeat=first_repeat,
        )

    def walk(prefix: EvidenceSequence, state: Tuple[str, str], info: _PrefixInfo) -> bool:
        if not evaluate(prefix, state, info):
            return False
        if len(prefix) == depth:
            return True
        for symbol in p.alphabet:
            node = (m.step(state[0], symbol), p.truth.step(state[1], symbol))
            if not walk(prefix + (symbol,), node, extend(info, node, len(prefix) + 1)):
                return False
        return True

    root = (m.initial, p.truth.initial)
    root_output = m.outputs[m.initial]
    walk(
        (),
        root,
        _PrefixInfo(
            seen=frozenset({root_output}),
            violated=frozenset(),
            last_error={h: (-1 if h == root_output else 0) for h in hypotheses},
            visited={root},
            first_repeat=None,
        ),
    )

    if not complete:
        logger.warning(
            f"Oracle stopped at max_worlds={max_worlds} after {checked} worlds; coverage is partial"
        )
    logger.info(
        f"Oracle for '{m.name}' on '{p.name}' (depth {depth}, period {max_period}): "
        + ", ".join(f"{mode.value}={counts[mode]}" for mode in ORACLE_MODES)
    )
    return OracleReport(
        method=m.name,
        problem=p.name,
        depth=depth,
        max_period=max_period,
        horizon=horizon,
        max_worlds=max_worlds,
        worlds_checked=checked,
        complete=complete,
        counts=counts,
        examples={mode: tuple(found) for mode, found in examples.items()},
    )
