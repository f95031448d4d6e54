"""
Applying and validating inference methods.
"""

import logging
from typing import List, Optional

from convlab.automata.graph import reachable
from convlab.errors import InputError
from convlab.methods.models import SUSPEND, InferenceMethod, MethodOutput
from convlab.problems.models import EmpiricalProblem, EvidenceSequence, Violation

logger = logging.getLogger(__name__)


def method_state(m: InferenceMethod, e: EvidenceSequence) -> str:
    """State of the method after reading e."""
    alphabet = set(m.alphabet)
    state = m.initial
    for symbol in e:
        if symbol not in alphabet:
            raise InputError(
                f"Observation '{symbol}' is outside the alphabet of method '{m.name}'"
            )
        state = m.step(state, symbol)
    return state


def apply(m: InferenceMethod, e: EvidenceSequence) -> MethodOutput:
    """Output of method m on evidence e (a hypothesis label or SUSPEND)."""
    return m.outputs[method_state(m, e)]


def check_compatible(m: InferenceMethod, p: EmpiricalProblem) -> None:
    """
    Raise InputError unless m reads exactly p's alphabet.

    Raises:
        InputError: On alphabet mismatch
    """
    if tuple(m.alphabet) != tuple(p.alphabet):
        raise InputError(
            f"Method '{m.name}' reads {list(m.alphabet)} but problem "
            f"'{p.name}' has alphabet {list(p.alphabet)}"
        )


def validate_method(m: InferenceMethod, p: Optional[EmpiricalProblem] = None) -> List[Violation]:
    """
    Check totality, reachability and the output domain of a method.

    With a problem given, outputs must be that problem's hypotheses (or
    SUSPEND) and the alphabets must agree.
    """
    violations: List[Violation] = []
    states = set(m.states)

    if m.initial not in states:
        violations.append(
            Violation("bad_initial", f"Initial state '{m.initial}' is not declared", (m.initial,))
        )

    for state in m.states:
        if state not in m.outputs:
            violations.append(
                Violation("missing_output", f"State '{state}' has no output", (state,))
            )
        for symbol in m.alphabet:
            target = m.transitions.get((state, symbol))
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

    if p is not None:
        if m.problem != p.name:
            violations.append(
                Violation(
                    "problem_mismatch",
                    f"Method targets problem '{m.problem}', not '{p.name}'",
                )
            )
        if tuple(m.alphabet) != tuple(p.alphabet):
            violations.append(
                Violation(
                    "alphabet_mismatch",
                    f"Method alphabet {list(m.alphabet)} differs from {list(p.alphabet)}",
                )
            )
        allowed = set(p.hypothesis_labels) | {SUSPEND}
        for state in m.states:
            output = m.outputs.get(state)
            if output is not None and output not in allowed:
                violations.append(
                    Violation(
                        "unknown_output",
                        f"State '{state}' outputs '{output}', which is not a hypothesis of '{p.name}'",
                        (state,),
                    )
                )

    if m.initial in states:
        def successors(state):
            return [
                (symbol, m.transitions[(state, symbol)])
                for symbol in m.alphabet
                if m.transitions.get((state, symbol)) in states
            ]

        live = set(reachable([m.initial], successors))
        for state in m.states:
            if state not in live:
                violations.append(
                    Violation("unreachable_state", f"State '{state}' is unreachable", (state,))
                )

    if violations:
        logger.debug(f"Method '{m.name}' has {len(violations)} violation(s)")
    return violations
