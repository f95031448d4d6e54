"""
Built-in priors and the JSON prior format.

    {"all_black": "1/2", "cx_at": {"1": "1/4", "2": "1/8"}, "tail": "1/8"}

"tail" is optional and defaults to whatever mass the other entries leave.
"""

import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Union

from convlab.bayes.models import ALL_BLACK, TAIL, DiscretePrior, cx_key, cx_position
from convlab.errors import PriorError

logger = logging.getLogger(__name__)


def geometric(truncation: int) -> DiscretePrior:
    """P(all_black) = 1/2, P(cx_at:k) = 2^-(k+1), tail 2^-(K+1)."""
    masses = {ALL_BLACK: Fraction(1, 2)}
    for k in range(1, truncation + 1):
        masses[cx_key(k)] = Fraction(1, 2 ** (k + 1))
    masses[TAIL] = Fraction(1, 2 ** (truncation + 1))
    return DiscretePrior(name=f"geometric_{truncation}", truncation=truncation, masses=masses)


def uniform_counterexamples(truncation: int) -> DiscretePrior:
    """Mass 1/K on each counterexample position; nothing on all_black."""
    masses = {ALL_BLACK: Fraction(0)}
    for k in range(1, truncation + 1):
        masses[cx_key(k)] = Fraction(1, truncation)
    masses[TAIL] = Fraction(0)
    return DiscretePrior(
        name=f"uniform_counterexamples_{truncation}", truncation=truncation, masses=masses
    )


def zero_on_all_black(truncation: int) -> DiscretePrior:
    """P(cx_at:k) = 2^-k, tail 2^-K, and no credence that all ravens are black."""
    masses = {ALL_BLACK: Fraction(0)}
    for k in range(1, truncation + 1):
        masses[cx_key(k)] = Fraction(1, 2 ** k)
    masses[TAIL] = Fraction(1, 2 ** truncation)
    return DiscretePrior(name=f"zero_on_all_black_{truncation}", truncation=truncation, masses=masses)


PRIOR_FACTORIES = {
    "geometric": geometric,
    "uniform_counterexamples": uniform_counterexamples,
    "zero_on_all_black": zero_on_all_black,
}


def builtin_prior(name: str, truncation: int) -> DiscretePrior:
    try:
        factory = PRIOR_FACTORIES[name]
    except KeyError:
        known = ", ".join(sorted(PRIOR_FACTORIES))
        raise PriorError(f"Unknown prior '{name}' (built-ins: {known})") from None
    return factory(truncation)


def _mass(value: Any, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str, float)):
        raise PriorError(f"Mass for {where} must be a number or a rational string, got {value!r}")
    try:
        return Fraction(repr(value)) if isinstance(value, float) else Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise PriorError(f"Mass for {where} is not a rational number: {value!r}") from exc


def prior_from_dict(data: Dict[str, Any], name: str = "custom") -> DiscretePrior:
    """
    Build a prior from its JSON form.

    Raises:
        PriorError: On unknown keys, malformed masses, or masses not summing to 1
    """
    unknown = set(data) - {ALL_BLACK, "cx_at", TAIL, "truncation", "name"}
    if unknown:
        raise PriorError(f"Unknown prior keys: {', '.join(sorted(unknown))}")

    cx_masses: Dict[int, Fraction] = {}
    for key, value in (data.get("cx_at") or {}).items():
        try:
            k = int(key)
        except ValueError:
            raise PriorError(f"Counterexample position must be an integer, got '{key}'") from None
        if k < 1:
            raise PriorError(f"Counterexample positions start at 1, got {k}")
        cx_masses[k] = _mass(value, f"cx_at {k}")

    truncation = int(data.get("truncation") or max(cx_masses, default=1))
    masses = {ALL_BLACK: _mass(data.get(ALL_BLACK, 0), ALL_BLACK)}
    for k in sorted(cx_masses):
        masses[cx_key(k)] = cx_masses[k]
    if TAIL in data:
        masses[TAIL] = _mass(data[TAIL], TAIL)
    else:
        masses[TAIL] = 1 - sum(masses.values(), Fraction(0))
    return DiscretePrior(name=str(data.get("name", name)), truncation=truncation, masses=masses)


def prior_to_dict(prior: DiscretePrior) -> Dict[str, Any]:
    cx_at = {}
    for key, value in prior.masses.items():
        k = cx_position(key)
        if k is not None:
            cx_at[str(k)] = str(value)
    return {
        "name": prior.name,
        "truncation": prior.truncation,
        ALL_BLACK: str(prior.mass(ALL_BLACK)),
        "cx_at": cx_at,
        TAIL: str(prior.tail_mass),
    }


def read_prior(path: Union[str, Path]) -> DiscretePrior:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise PriorError(f"Prior file {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise PriorError(f"Prior file {path} must hold a JSON object")
    prior = prior_from_dict(data, name=path.stem)
    logger.info(f"Read prior '{prior.name}' with truncation {prior.truncation} from {path}")
    return prior


def write_prior(prior: DiscretePrior, path: Union[str, Path]) -> None:
    Path(path).write_text(
        json.dumps(prior_to_dict(prior), sort_keys=True, indent=2) + "\n", encoding="utf-8"
    )
