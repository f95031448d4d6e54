"""
Named inference methods for the raven problem.
"""

from typing import Dict, Iterable, Tuple

from convlab.errors import InputError
from convlab.methods.models import SUSPEND, InferenceMethod
from convlab.problems.builtins import BLACK, NO, NONBLACK, YES

RAVEN = "raven"
RAVEN_ALPHABET = (BLACK, NONBLACK)


def _absorbing(transitions: Dict[Tuple[str, str], str], state: str) -> None:
    for symbol in RAVEN_ALPHABET:
        transitions[(state, symbol)] = state


def ordinary_induction() -> InferenceMethod:
    """Conjecture "yes" until a nonblack raven shows up, then "no" forever."""
    transitions = {("s0", BLACK): "s0", ("s0", NONBLACK): "s1"}
    _absorbing(transitions, "s1")
    return InferenceMethod(
        name="ordinary_induction",
        problem=RAVEN,
        alphabet=RAVEN_ALPHABET,
        states=("s0", "s1"),
        initial="s0",
        transitions=transitions,
        outputs={"s0": YES, "s1": NO},
    )


def occasional_counterinduction(flip_depths: Iterable[int]) -> InferenceMethod:
    """
    Ordinary induction that answers "no" on all-black evidence of the listed lengths.

    Counting states c0..c{d*} track the length of all-black evidence and
    c{d*+1} stands for every longer all-black body; r is the refuted state.

    Raises:
        InputError: If flip_depths is empty or contains a negative depth
    """
    flips = sorted(set(flip_depths))
    if not flips:
        raise InputError("occasional_counterinduction needs at least one flip depth")
    if flips[0] < 0:
        raise InputError(f"Flip depths must be non-negative, got {flips}")

    deepest = flips[-1]
    counters = [f"c{k}" for k in range(deepest + 2)]
    transitions: Dict[Tuple[str, str], str] = {}
    outputs = {}
    for k, state in enumerate(counters):
        transitions[(state, BLACK)] = counters[min(k + 1, deepest + 1)]
        transitions[(state, NONBLACK)] = "r"
        outputs[state] = NO if k in flips else YES
    _absorbing(transitions, "r")
    outputs["r"] = NO

    return InferenceMethod(
        name=f"occasional_counterinduction_{'_'.join(str(d) for d in flips)}",
        problem=RAVEN,
        alphabet=RAVEN_ALPHABET,
        states=tuple(counters) + ("r",),
        initial="c0",
        transitions=transitions,
        outputs=outputs,
    )


def skeptic() -> InferenceMethod:
    """Suspends judgment forever."""
    transitions: Dict[Tuple[str, str], str] = {}
    _absorbing(transitions, "z")
    return InferenceMethod(
        name="skeptic",
        problem=RAVEN,
        alphabet=RAVEN_ALPHABET,
        states=("z",),
        initial="z",
        transitions=transitions,
        outputs={"z": SUSPEND},
    )


def delayed_induction(k: int) -> InferenceMethod:
    """
    Suspend on all-black evidence shorter than k, then behave as ordinary induction.

    Any counterexample, early or late, leads to "no" forever.

    Raises:
        InputError: If k is negative
    """
    if k < 0:
        raise InputError(f"delayed_induction needs k >= 0, got {k}")

    waiting = [f"d{i}" for i in range(k)]
    transitions: Dict[Tuple[str, str], str] = {}
    outputs = {}
    for i, state in enumerate(waiting):
        transitions[(state, BLACK)] = waiting[i + 1] if i + 1 < k else "y"
        transitions[(state, NONBLACK)] = "n"
        outputs[state] = SUSPEND
    transitions[("y", BLACK)] = "y"
    transitions[("y", NONBLACK)] = "n"
    _absorbing(transitions, "n")
    outputs["y"] = YES
    outputs["n"] = NO

    return InferenceMethod(
        name=f"delayed_induction_{k}",
        problem=RAVEN,
        alphabet=RAVEN_ALPHABET,
        states=tuple(waiting) + ("y", "n"),
        initial=waiting[0] if waiting else "y",
        transitions=transitions,
        outputs=outputs,
    )
