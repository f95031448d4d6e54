"""
Problem-level achievability: which modes can any method reach on a problem.
"""

import logging
from typing import Callable, Dict, List, Sequence

from convlab.convergence.checker import check_mode
from convlab.convergence.models import (
    DEFAULT_HIERARCHY,
    Achievability,
    AchievabilityReport,
    Mode,
    ModeAchievability,
)
from convlab.errors import InvalidModelError
from convlab.methods.models import SUSPEND, InferenceMethod
from convlab.problems.models import EmpiricalProblem
from convlab.problems.service import validate_problem

logger = logging.getLogger(__name__)


def canonical_induction(p: EmpiricalProblem) -> InferenceMethod:
    """Track the truth automaton and output the current state's label."""
    return InferenceMethod(
        name="canonical_induction",
        problem=p.name,
        alphabet=p.alphabet,
        states=p.truth.states,
        initial=p.truth.initial,
        transitions=p.truth.transitions,
        outputs=dict(p.truth.labels),
    )


def settled_induction(p: EmpiricalProblem) -> InferenceMethod:
    """
    Track the truth automaton, answering only once the truth is settled.

    Outputs the settled label on settled states and suspends elsewhere. A
    settled answer can never be retracted, since the labels still
    reachable only shrink along a run.
    """
    structure = p.structure
    outputs = {}
    for state in p.truth.states:
        label = structure.settled_label(state) if state in structure.trapped_labels else None
        outputs[state] = label if label is not None else SUSPEND
    return InferenceMethod(
        name="settled_induction",
        problem=p.name,
        alphabet=p.alphabet,
        states=p.truth.states,
        initial=p.truth.initial,
        transitions=p.truth.transitions,
        outputs=outputs,
    )


def _skeptic_for(p: EmpiricalProblem) -> InferenceMethod:
    return InferenceMethod(
        name="skeptic",
        problem=p.name,
        alphabet=p.alphabet,
        states=("z",),
        initial="z",
        transitions={("z", symbol): "z" for symbol in p.alphabet},
        outputs={"z": SUSPEND},
    )


CANDIDATES: List[Callable[[EmpiricalProblem], InferenceMethod]] = [
    canonical_induction,
    settled_induction,
    _skeptic_for,
]


def _search(p: EmpiricalProblem, mode: Mode) -> ModeAchievability:
    tried = []
    for build in CANDIDATES:
        method = build(p)
        tried.append(method.name)
        verdict = check_mode(method, p, mode)
        if verdict.passed:
            return ModeAchievability(
                mode=mode,
                status=Achievability.ACHIEVABLE,
                witness_method=method,
                verdict=verdict,
                tried=tuple(tried),
            )
    logger.warning(f"No candidate method achieves {mode.value} on '{p.name}'; marking unknown")
    return ModeAchievability(mode=mode, status=Achievability.UNKNOWN, tried=tuple(tried))


def achievability(
    p: EmpiricalProblem,
    hierarchy: Sequence[Mode] = DEFAULT_HIERARCHY,
) -> AchievabilityReport:
    """
    Decide, mode by mode, whether some method achieves it on p.

    Uniform convergence is achievable iff every cyclic truth state is
    settled: an unsettled cyclic state is reachable at arbitrarily late
    times and still leaves two truths open, so no evidence amount works;
    otherwise settled induction is right from the moment every run is
    trapped. Other modes are witnessed constructively, and a mode no
    candidate passes is reported as unknown, not unachievable.

    Raises:
        InvalidModelError: If p fails validation
    """
    violations = validate_problem(p)
    if violations:
        raise InvalidModelError(f"Problem '{p.name}' is invalid", violations)

    hierarchy = tuple(Mode(mode) for mode in hierarchy)
    modes: Dict[Mode, ModeAchievability] = {}
    structure = p.structure
    for mode in hierarchy:
        if mode == Mode.UNIFORM:
            unsettled = [
                state for state in p.truth.states
                if state in structure.cyclic and not structure.is_settled(state)
            ]
            if unsettled:
                modes[mode] = ModeAchievability(
                    mode=mode,
                    status=Achievability.UNACHIEVABLE,
                    certificate=unsettled[0],
                )
                continue
        modes[mode] = _search(p, mode)

    report = AchievabilityReport(problem=p.name, hierarchy=hierarchy, modes=modes)
    highest = report.highest_achievable
    logger.info(
        f"Achievability on '{p.name}': highest "
        f"{highest.display_name if highest else 'none'}"
    )
    return report
