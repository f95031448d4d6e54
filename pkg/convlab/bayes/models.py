"""
Data models for discrete Bayesian agents in the raven problem.

A world-hypothesis fixes where the first nonblack raven turns up:
"all_black" (never), "cx_at:k" (observation k, 1-based) or "tail" (some
observation after the truncation bound K).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

from convlab.errors import PriorError
from convlab.problems.builtins import NO, YES
from convlab.problems.models import EvidenceSequence, HypothesisLabel, UltimatelyPeriodicWorld

ALL_BLACK = "all_black"
TAIL = "tail"
CX_PREFIX = "cx_at:"

WorldKey = str


def cx_key(k: int) -> WorldKey:
    return f"{CX_PREFIX}{k}"


def cx_position(key: WorldKey) -> Optional[int]:
    """k for "cx_at:k", None for the other world-hypotheses."""
    if key.startswith(CX_PREFIX):
        return int(key[len(CX_PREFIX):])
    return None


def hypothesis_of(key: WorldKey) -> HypothesisLabel:
    """Raven hypothesis true in a world-hypothesis."""
    return YES if key == ALL_BLACK else NO


@dataclass(frozen=True)
class DiscretePrior:
    """
    Credences over world-hypotheses, conditioned on `evidence` so far.

    Attributes:
        name: Identifier recorded in reports (e.g. "geometric_64")
        truncation: K, the last explicit counterexample position
        masses: Exact mass per world-hypothesis, in support order
        evidence: Observations already conditioned on
    """
    name: str
    truncation: int
    masses: Dict[WorldKey, Fraction] = field(hash=False)
    evidence: EvidenceSequence = ()

    def __post_init__(self):
        if self.truncation < 1:
            raise PriorError(f"Truncation bound must be >= 1, got {self.truncation}")
        masses = {key: Fraction(value) for key, value in self.masses.items()}
        for key, value in masses.items():
            k = cx_position(key)
            if key not in (ALL_BLACK, TAIL) and (k is None or not 1 <= k <= self.truncation):
                raise PriorError(f"Unknown world-hypothesis '{key}' for truncation {self.truncation}")
            if value < 0:
                raise PriorError(f"Negative mass {value} on '{key}'")
        total = sum(masses.values(), Fraction(0))
        if total != 1:
            raise PriorError(f"Prior masses sum to {total}, not 1")
        object.__setattr__(self, "masses", masses)
        object.__setattr__(self, "evidence", tuple(self.evidence))

    @property
    def support(self) -> Tuple[WorldKey, ...]:
        return tuple(key for key, value in self.masses.items() if value > 0)

    @property
    def tail_mass(self) -> Fraction:
        return self.masses.get(TAIL, Fraction(0))

    def mass(self, key: WorldKey) -> Fraction:
        return self.masses.get(key, Fraction(0))

    def hypothesis_mass(self, label: HypothesisLabel) -> Fraction:
        return sum(
            (value for key, value in self.masses.items() if hypothesis_of(key) == label),
            Fraction(0),
        )


@dataclass(frozen=True)
class TracePoint:
    length: int
    mass: Fraction


@dataclass(frozen=True)
class PosteriorTrace:
    """
    Posterior credence in the world's true hypothesis after each observation.

    Attributes:
        world: The world the evidence was read from
        truth: Hypothesis true in the world
        points: (evidence length, posterior mass) with lengths 1..horizon
        tail_mass: Prior mass beyond the truncation bound
    """
    world: UltimatelyPeriodicWorld
    truth: HypothesisLabel
    points: Tuple[TracePoint, ...]
    tail_mass: Fraction = Fraction(0)

    @property
    def final_mass(self) -> Fraction:
        return self.points[-1].mass if self.points else Fraction(0)


@dataclass(frozen=True)
class BayesFailure:
    """
    Attributes:
        world: Failing world
        truth: Hypothesis true in it
        reason: "below_threshold", "zero_prior" or "conditioning_on_null"
        final_mass: Posterior on the truth at the horizon (None on null conditioning)
        trace: The posterior trace, when one exists
    """
    world: UltimatelyPeriodicWorld
    truth: HypothesisLabel
    reason: str
    final_mass: Optional[Fraction] = None
    trace: Optional[PosteriorTrace] = None


@dataclass(frozen=True)
class BayesConsistencyReport:
    """
    Attributes:
        prior: Prior name
        problem: Problem name
        horizon: Evidence length the posteriors are read at
        threshold: Required posterior on the truth
        max_prefix, max_period: Bounds of the enumerated world family
        worlds_checked: Distinct worlds after deduplication
        tail_mass: Prior mass beyond the truncation bound
        traces: One trace per checked world
        failures: Worlds that miss the threshold
        note: How "high chance" was read
    """
    prior: str
    problem: str
    horizon: int
    threshold: Fraction
    max_prefix: int
    max_period: int
    worlds_checked: int
    tail_mass: Fraction
    traces: Tuple[PosteriorTrace, ...]
    failures: Tuple[BayesFailure, ...]
    note: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures
