"""
Built-in problems and methods addressable by name.

Method specs on the command line take the form NAME or NAME:ARGS, e.g.
"ordinary_induction", "occasional_counterinduction:1,3" or
"delayed_induction:3".
"""

from typing import Callable, Dict, Optional

from convlab.convergence.achievability import canonical_induction, settled_induction
from convlab.errors import InputError
from convlab.methods.builtins import (
    delayed_induction,
    occasional_counterinduction,
    ordinary_induction,
    skeptic,
)
from convlab.methods.models import InferenceMethod
from convlab.problems.builtins import first_observation_problem, raven_problem
from convlab.problems.models import EmpiricalProblem

PROBLEM_FACTORIES: Dict[str, Callable[[], EmpiricalProblem]] = {
    "raven": raven_problem,
    "first_observation": first_observation_problem,
}

METHOD_NAMES = (
    "ordinary_induction",
    "occasional_counterinduction",
    "skeptic",
    "delayed_induction",
    "canonical_induction",
    "settled_induction",
)


def builtin_problems() -> Dict[str, EmpiricalProblem]:
    return {name: factory() for name, factory in PROBLEM_FACTORIES.items()}


def _int_list(name: str, args: str):
    try:
        return [int(part) for part in args.split(",") if part.strip()]
    except ValueError:
        raise InputError(f"Method '{name}' takes comma-separated integers, got '{args}'")


def parse_method_spec(spec: str, problem: Optional[EmpiricalProblem] = None) -> InferenceMethod:
    """
    Build a built-in method from its command-line spec.

    canonical_induction and settled_induction are built for `problem`;
    the other built-ins target the raven problem.

    Raises:
        InputError: On an unknown name or malformed arguments
    """
    name, _, args = spec.partition(":")
    name = name.strip()
    if name == "ordinary_induction":
        return ordinary_induction()
    if name == "skeptic":
        return skeptic()
    if name == "occasional_counterinduction":
        flips = _int_list(name, args)
        if not flips:
            raise InputError("occasional_counterinduction needs flip depths, e.g. ':2' or ':1,3'")
        return occasional_counterinduction(flips)
    if name == "delayed_induction":
        values = _int_list(name, args)
        if len(values) != 1:
            raise InputError("delayed_induction needs exactly one delay, e.g. ':3'")
        return delayed_induction(values[0])
    if name in ("canonical_induction", "settled_induction"):
        if problem is None:
            raise InputError(f"Method '{name}' needs a problem")
        build = canonical_induction if name == "canonical_induction" else settled_induction
        return build(problem)
    raise InputError(f"Unknown built-in method '{name}'; known: {', '.join(METHOD_NAMES)}")
