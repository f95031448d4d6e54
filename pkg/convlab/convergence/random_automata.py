"""
Seeded random problems and methods for property tests.

Every draw comes from a numpy Generator handed in by the caller, so a
corpus is reproducible from its master seed. Unreachable states are
trimmed so that every generated automaton passes validation.
"""

from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from convlab.automata.graph import reachable, strongly_connected_components
from convlab.methods.models import SUSPEND, InferenceMethod
from convlab.problems.models import EmpiricalProblem, Hypothesis, TruthAutomaton

RANDOM_ALPHABET = ("a", "b")
RANDOM_HYPOTHESES = ("h0", "h1")


def trial_rng(master_seed: int, trial: int) -> np.random.Generator:
    """Independent generator for one trial, derived from the master seed."""
    return np.random.default_rng([master_seed, trial])


def _random_graph(
    rng: np.random.Generator,
    prefix: str,
    max_states: int,
    alphabet: Sequence[str],
) -> Tuple[List[str], Dict[Tuple[str, str], str]]:
    """Random total transition table, trimmed to the part reachable from state 0."""
    count = int(rng.integers(1, max_states + 1))
    names = [f"{prefix}{i}" for i in range(count)]
    targets = rng.integers(0, count, size=(count, len(alphabet)))
    transitions = {
        (names[i], symbol): names[int(targets[i, k])]
        for i in range(count)
        for k, symbol in enumerate(alphabet)
    }

    def successors(state):
        return [(symbol, transitions[(state, symbol)]) for symbol in alphabet]

    live = set(reachable([names[0]], successors))
    kept = [name for name in names if name in live]
    trimmed = {key: target for key, target in transitions.items() if key[0] in live}
    return kept, trimmed


def random_problem(
    rng: np.random.Generator,
    max_states: int = 4,
    name: str = "random_problem",
) -> EmpiricalProblem:
    """Random well-posed problem over {a, b} with hypotheses {h0, h1}, one label per SCC."""
    states, transitions = _random_graph(rng, "q", max_states, RANDOM_ALPHABET)

    def successors(state):
        return [(symbol, transitions[(state, symbol)]) for symbol in RANDOM_ALPHABET]

    labels: Dict[str, str] = {}
    for component in strongly_connected_components(states, successors):
        label = RANDOM_HYPOTHESES[int(rng.integers(0, len(RANDOM_HYPOTHESES)))]
        for state in component:
            labels[state] = label

    return EmpiricalProblem(
        name=name,
        alphabet=RANDOM_ALPHABET,
        hypotheses=tuple(Hypothesis(label) for label in RANDOM_HYPOTHESES),
        truth=TruthAutomaton(
            states=tuple(states),
            initial=states[0],
            transitions=transitions,
            labels=labels,
        ),
    )


def random_method(
    rng: np.random.Generator,
    problem: EmpiricalProblem,
    max_states: int = 5,
    name: Optional[str] = None,
) -> InferenceMethod:
    """Random transducer for problem: uniform transitions, outputs from its hypotheses or SUSPEND."""
    states, transitions = _random_graph(rng, "m", max_states, problem.alphabet)
    choices = list(problem.hypothesis_labels) + [SUSPEND]
    picks = rng.integers(0, len(choices), size=len(states))
    outputs = {state: choices[int(pick)] for state, pick in zip(states, picks)}
    return InferenceMethod(
        name=name or "random_method",
        problem=problem.name,
        alphabet=problem.alphabet,
        states=tuple(states),
        initial=states[0],
        transitions=transitions,
        outputs=outputs,
    )
