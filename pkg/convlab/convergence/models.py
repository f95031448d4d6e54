"""
Data models for convergence verdicts and achievability reports.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from convlab.methods.models import InferenceMethod
from convlab.problems.models import UltimatelyPeriodicWorld


class Mode(str, Enum):
    """Modes of convergence to the truth."""
    UNIFORM = "uniform"
    POINTWISE = "pointwise"
    STABLE = "stable"
    STABLE_POINTWISE = "stable_pointwise"

    @property
    def display_name(self) -> str:
        return DISPLAY_NAMES[self]


DISPLAY_NAMES = {
    Mode.UNIFORM: "uniform convergence",
    Mode.POINTWISE: "pointwise convergence",
    Mode.STABLE: "stability",
    Mode.STABLE_POINTWISE: "pointwise convergence with stability",
}

# Evaluative standards from high to low
DEFAULT_HIERARCHY: Tuple[Mode, ...] = (Mode.UNIFORM, Mode.STABLE_POINTWISE, Mode.POINTWISE)


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"


@dataclass(frozen=True)
class ConvergenceVerdict:
    """
    Outcome of one mode check.

    Attributes:
        mode: The mode checked
        verdict: pass or fail
        witness: World realizing the failure (fail only)
        witness_times: Evidence lengths marking the failure pattern. For uniform
            failures the first is an error time in the witness and the second the
            matching error time in pumped_witness(), one pump later
        modulus: Evidence amount after which the method is always right (uniform pass only)
        alt_witness: Second world sharing the witness's lead-in but with a different truth
        pump: (start, length) of a witness prefix segment whose repetition delays the error
        clause: For stable_pointwise failures, the component mode that failed
    """
    mode: Mode
    verdict: Verdict
    witness: Optional[UltimatelyPeriodicWorld] = None
    witness_times: Optional[Tuple[int, int]] = None
    modulus: Optional[int] = None
    alt_witness: Optional[UltimatelyPeriodicWorld] = None
    pump: Optional[Tuple[int, int]] = None
    clause: Optional[Mode] = None

    def __post_init__(self):
        if self.verdict == Verdict.FAIL and self.witness is None:
            raise ValueError("A failing verdict needs a witness world")
        if self.verdict == Verdict.PASS and self.mode == Mode.UNIFORM and self.modulus is None:
            raise ValueError("A passing uniform verdict needs a modulus")

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS

    def pumped_witness(self, extra: int = 1) -> UltimatelyPeriodicWorld:
        """
        The witness with its pump segment repeated `extra` more times.

        Raises:
            ValueError: If the verdict carries no pump
        """
        if self.pump is None or self.witness is None:
            raise ValueError(f"A {self.mode.value} {self.verdict.value} verdict has no pump")
        if extra < 0:
            raise ValueError(f"extra must be non-negative, got {extra}")
        start, length = self.pump
        prefix = self.witness.prefix
        segment = prefix[start:start + length]
        return UltimatelyPeriodicWorld(
            prefix[:start] + segment * (extra + 1) + prefix[start + length:],
            self.witness.cycle,
        )


class Achievability(str, Enum):
    ACHIEVABLE = "achievable"
    UNACHIEVABLE = "unachievable"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class ModeAchievability:
    """
    Whether one mode can be achieved on a problem.

    Attributes:
        mode: The mode
        status: achievable, unachievable or unknown
        witness_method: A method passing the mode's check (achievable only)
        verdict: The witness method's verdict
        certificate: Truth state proving impossibility (unachievable only)
        tried: Candidate methods checked, in order
    """
    mode: Mode
    status: Achievability
    witness_method: Optional[InferenceMethod] = None
    verdict: Optional[ConvergenceVerdict] = None
    certificate: Optional[str] = None
    tried: Tuple[str, ...] = ()


@dataclass(frozen=True)
class AchievabilityReport:
    """
    Problem-level achievability over an ordered hierarchy of modes.

    Attributes:
        problem: Problem name
        hierarchy: Modes from highest to lowest
        modes: mode -> achievability
    """
    problem: str
    hierarchy: Tuple[Mode, ...]
    modes: Dict[Mode, ModeAchievability] = field(hash=False)

    @property
    def highest_achievable(self) -> Optional[Mode]:
        for mode in self.hierarchy:
            if self.modes[mode].status == Achievability.ACHIEVABLE:
                return mode
        return None

    def achievable(self) -> List[Mode]:
        return [
            mode for mode in self.hierarchy
            if self.modes[mode].status == Achievability.ACHIEVABLE
        ]
