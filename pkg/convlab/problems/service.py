"""
Operations on empirical problems: validation, runs, and truth of worlds.
"""

import logging
from typing import FrozenSet, Iterable, List

from convlab.automata.graph import reachable, strongly_connected_components
from convlab.errors import InputError
from convlab.problems.models import (
    EmpiricalProblem,
    EvidenceSequence,
    HypothesisLabel,
    Observation,
    State,
    UltimatelyPeriodicWorld,
    Violation,
)

logger = logging.getLogger(__name__)


def validate_problem(p: EmpiricalProblem) -> List[Violation]:
    """
    Check every well-formedness condition of a problem.

    Violations are returned as data; an empty list means the problem is
    valid. Each violation names the states (or SCC members) involved.
    """
    violations: List[Violation] = []
    truth = p.truth
    states = set(truth.states)

    if not p.alphabet:
        violations.append(Violation("empty_alphabet", "Alphabet is empty"))
    if len(set(p.alphabet)) != len(p.alphabet):
        violations.append(Violation("duplicate_symbol", "Alphabet symbols are not distinct"))

    labels = p.hypothesis_labels
    if len(labels) < 2:
        violations.append(
            Violation("too_few_hypotheses", f"Need at least 2 hypotheses, got {len(labels)}")
        )
    if len(set(labels)) != len(labels):
        violations.append(Violation("duplicate_hypothesis", "Hypothesis labels are not distinct"))

    if truth.initial not in states:
        violations.append(
            Violation("bad_initial", f"Initial state '{truth.initial}' is not declared", (truth.initial,))
        )

    for state in truth.states:
        label = truth.labels.get(state)
        if label is None or label not in labels:
            violations.append(
                Violation(
                    "unknown_label",
                    f"State '{state}' carries undeclared label '{label}'",
                    (state,),
                )
            )
        for symbol in p.alphabet:
            target = truth.transitions.get((state, symbol))
            if target is None:
                violations.append(
                    Violation(
                        "missing_transition",
                        f"State '{state}' has no transition on '{symbol}'",
                        (state,),
                    )
                )
            elif target not in states:
                violations.append(
                    Violation(
                        "unknown_state",
                        f"Transition '{state}' --{symbol}--> '{target}' targets an undeclared state",
                        (state, target),
                    )
                )

    def successors(state: State):
        return [
            (symbol, truth.transitions[(state, symbol)])
            for symbol in p.alphabet
            if truth.transitions.get((state, symbol)) in states
        ]

    for component in strongly_connected_components(list(truth.states), successors):
        component_labels = {truth.labels.get(state) for state in component}
        if len(component_labels) > 1:
            members = tuple(state for state in truth.states if state in component)
            violations.append(
                Violation(
                    "mixed_scc",
                    f"SCC {{{', '.join(members)}}} mixes labels "
                    f"{sorted(str(label) for label in component_labels)}",
                    members,
                )
            )

    if truth.initial in states:
        live = set(reachable([truth.initial], successors))
        for state in truth.states:
            if state not in live:
                violations.append(
                    Violation("unreachable_state", f"State '{state}' is unreachable", (state,))
                )

    if violations:
        logger.debug(f"Problem '{p.name}' has {len(violations)} violation(s)")
    return violations


def _check_symbols(p: EmpiricalProblem, symbols: Iterable[Observation]) -> None:
    alphabet = set(p.alphabet)
    for symbol in symbols:
        if symbol not in alphabet:
            raise InputError(
                f"Observation '{symbol}' is outside the alphabet of problem '{p.name}'"
            )


def run_state(p: EmpiricalProblem, e: EvidenceSequence) -> State:
    """State of the truth automaton after reading evidence e from the initial state."""
    _check_symbols(p, e)
    state = p.truth.initial
    for symbol in e:
        state = p.truth.step(state, symbol)
    return state


def truth_from_state(p: EmpiricalProblem, state: State, cycle: EvidenceSequence) -> HypothesisLabel:
    """
    Label of the SCC in which the run from `state` reading cycle^w is trapped.

    The states at cycle boundaries must repeat within |states| iterations;
    the states visited between two equal boundaries lie on a cycle, hence
    in one cyclic SCC, and by well-posedness they share its label.
    """
    _check_symbols(p, cycle)
    seen = {}
    boundary = state
    iteration = 0
    while boundary not in seen:
        seen[boundary] = iteration
        for symbol in cycle:
            boundary = p.truth.step(boundary, symbol)
        iteration += 1
    return p.truth.labels[boundary]


def truth_of_world(p: EmpiricalProblem, w: UltimatelyPeriodicWorld) -> HypothesisLabel:
    """The hypothesis true in world w."""
    return truth_from_state(p, run_state(p, w.prefix), w.cycle)


def possible_truths(p: EmpiricalProblem, e: EvidenceSequence) -> FrozenSet[HypothesisLabel]:
    """Labels of the cyclic SCCs still reachable after evidence e."""
    return p.structure.trapped_labels[run_state(p, e)]
