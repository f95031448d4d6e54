"""
Built-in case-study problems.
"""

from convlab.problems.models import EmpiricalProblem, Hypothesis, TruthAutomaton

BLACK = "black"
NONBLACK = "nonblack"
YES = "yes"
NO = "no"


def raven_problem() -> EmpiricalProblem:
    """
    Are all ravens black?

    q0 [yes] loops on black and moves to the absorbing refutation state
    q1 [no] on the first nonblack raven. The excluded world "not all black
    but no counterexample ever observed" has no branch.
    """
    truth = TruthAutomaton(
        states=("q0", "q1"),
        initial="q0",
        transitions={
            ("q0", BLACK): "q0",
            ("q0", NONBLACK): "q1",
            ("q1", BLACK): "q1",
            ("q1", NONBLACK): "q1",
        },
        labels={"q0": YES, "q1": NO},
    )
    return EmpiricalProblem(
        name="raven",
        alphabet=(BLACK, NONBLACK),
        hypotheses=(
            Hypothesis(YES, "Yes, all ravens are black"),
            Hypothesis(NO, "No, not all are"),
        ),
        truth=truth,
    )


def first_observation_problem() -> EmpiricalProblem:
    """Truth is fixed by the first observation: two absorbing states."""
    truth = TruthAutomaton(
        states=("s", "qa", "qb"),
        initial="s",
        transitions={
            ("s", "a"): "qa",
            ("s", "b"): "qb",
            ("qa", "a"): "qa",
            ("qa", "b"): "qa",
            ("qb", "a"): "qb",
            ("qb", "b"): "qb",
        },
        labels={"s": "A", "qa": "A", "qb": "B"},
    )
    return EmpiricalProblem(
        name="first_observation",
        alphabet=("a", "b"),
        hypotheses=(
            Hypothesis("A", "The first observation is a"),
            Hypothesis("B", "The first observation is b"),
        ),
        truth=truth,
    )
