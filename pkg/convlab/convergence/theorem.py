"""
Randomized test of "convergence plus stability rules out counterinduction".
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from convlab.convergence.checker import check_stable_pointwise
from convlab.convergence.random_automata import random_method, trial_rng
from convlab.errors import InputError
from convlab.methods.builtins import ordinary_induction, skeptic
from convlab.methods.counterinduction import counterinductive_nodes
from convlab.methods.models import InferenceMethod
from convlab.problems.builtins import raven_problem

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TheoremReport:
    """
    Attributes:
        trials: Random methods generated
        seed: Master seed
        max_states: State bound for random methods
        antecedent_true: Random methods passing the stable_pointwise check
        counterexamples: Methods passing the check yet applying counterinduction
        builtin_results: name -> (antecedent, consequent) for the named methods
    """
    trials: int
    seed: int
    max_states: int
    antecedent_true: int
    counterexamples: Tuple[InferenceMethod, ...]
    builtin_results: Dict[str, Tuple[bool, bool]] = field(hash=False)

    @property
    def holds(self) -> bool:
        return not self.counterexamples


def _implication(m: InferenceMethod, problem) -> Tuple[bool, bool]:
    antecedent = check_stable_pointwise(m, problem).passed
    consequent = True
    if antecedent:
        # depth 0 suffices: emptiness is decided by the certificate
        consequent = counterinductive_nodes(m, problem, 0).empty_at_every_depth
    return antecedent, consequent


def theorem_property_test(trials: int, seed: int, max_states: int = 5) -> TheoremReport:
    """
    Check (stable_pointwise passes) => (no counterinductive node) on random raven methods.

    Trial i draws its method from a generator seeded with (seed, i), so
    the outcome does not depend on the order trials run in.

    Raises:
        InputError: If trials < 1
    """
    if trials < 1:
        raise InputError(f"trials must be at least 1, got {trials}")

    problem = raven_problem()
    builtin_results = {
        method.name: _implication(method, problem)
        for method in (ordinary_induction(), skeptic())
    }

    antecedent_true = 0
    counterexamples: List[InferenceMethod] = []
    for trial in range(trials):
        method = random_method(
            trial_rng(seed, trial), problem, max_states=max_states, name=f"trial_{trial}"
        )
        antecedent, consequent = _implication(method, problem)
        antecedent_true += antecedent
        if not consequent:
            logger.warning(f"Counterexample to the implication at trial {trial}")
            counterexamples.append(method)

    logger.info(
        f"Theorem test: {trials} trials, {antecedent_true} converge stably, "
        f"{len(counterexamples)} counterexample(s)"
    )
    return TheoremReport(
        trials=trials,
        seed=seed,
        max_states=max_states,
        antecedent_true=antecedent_true,
        counterexamples=tuple(counterexamples),
        builtin_results=builtin_results,
    )
