"""
Empirical problems as truth-labeled automata.
"""

from convlab.problems.models import (
    AutomatonStructure,
    EmpiricalProblem,
    EvidenceSequence,
    Hypothesis,
    HypothesisLabel,
    Observation,
    State,
    TruthAutomaton,
    UltimatelyPeriodicWorld,
    Violation,
)
from convlab.problems.service import (
    possible_truths,
    run_state,
    truth_from_state,
    truth_of_world,
    validate_problem,
)
from convlab.problems.builtins import first_observation_problem, raven_problem

__all__ = [
    "AutomatonStructure",
    "EmpiricalProblem",
    "EvidenceSequence",
    "Hypothesis",
    "HypothesisLabel",
    "Observation",
    "State",
    "TruthAutomaton",
    "UltimatelyPeriodicWorld",
    "Violation",
    "possible_truths",
    "run_state",
    "truth_from_state",
    "truth_of_world",
    "validate_problem",
    "first_observation_problem",
    "raven_problem",
]
