"""
Data models for the white-ball problem and its reports.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Tuple, Union

from convlab.errors import InputError

Number = Union[int, float, str, Fraction]

GT_HALF = "p>1/2"
LE_HALF = "p<=1/2"
TEST_HYPOTHESES = (GT_HALF, LE_HALF)


def as_fraction(value: Number) -> Fraction:
    """Exact value of a number; floats are read through their shortest repr."""
    if isinstance(value, float):
        return Fraction(repr(value))
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"Not a rational number: {value!r}") from exc


@dataclass(frozen=True)
class Urn:
    """An urn whose proportion of white balls is p."""
    p: Fraction

    def __post_init__(self):
        p = as_fraction(self.p)
        if not 0 <= p <= 1:
            raise InputError(f"Urn proportion must lie in [0, 1], got {p}")
        object.__setattr__(self, "p", p)

    @property
    def true_test_hypothesis(self) -> str:
        return GT_HALF if self.p > Fraction(1, 2) else LE_HALF


@dataclass(frozen=True)
class Sample:
    """
    Attributes:
        n: Sample size
        whites: White draws
        lineage: Seed the draw came from, e.g. "42" or "1/3"
    """
    n: int
    whites: int
    lineage: str = ""

    def __post_init__(self):
        if self.n < 0 or not 0 <= self.whites <= self.n:
            raise InputError(f"Invalid sample: {self.whites} whites out of {self.n}")


@dataclass(frozen=True)
class ConsistencySpec:
    """Closeness epsilon and error probability delta."""
    epsilon: Fraction
    delta: Fraction

    def __post_init__(self):
        epsilon = as_fraction(self.epsilon)
        delta = as_fraction(self.delta)
        if epsilon <= 0:
            raise InputError(f"epsilon must be positive, got {epsilon}")
        if not 0 < delta < 1:
            raise InputError(f"delta must lie strictly between 0 and 1, got {delta}")
        object.__setattr__(self, "epsilon", epsilon)
        object.__setattr__(self, "delta", delta)


@dataclass(frozen=True)
class TestMethod:
    """A deterministic test between the two white-ball hypotheses (or "?")."""
    name: str
    description: str
    decide: Callable[[Sample], str]

    __test__ = False


@dataclass(frozen=True)
class CoverageRow:
    p: Fraction
    n: int
    replicates: int
    coverage: Fraction


@dataclass(frozen=True)
class ConsistencyReport:
    """
    Attributes:
        estimator: Estimator name
        spec: Closeness and error thresholds
        analytic_n: Hoeffding sample size for spec
        n: Sample size simulated
        replicates: Replicates per grid point
        master_seed: Seed all streams derive from
        prng: Generator identifier
        rows: Coverage per grid point
    """
    estimator: str
    spec: ConsistencySpec
    analytic_n: int
    n: int
    replicates: int
    master_seed: int
    prng: str
    rows: Tuple[CoverageRow, ...]

    @property
    def min_coverage(self) -> Fraction:
        return min(row.coverage for row in self.rows)

    def certified(self, margin: Fraction = Fraction(0)) -> bool:
        """Every coverage is at least 1 - delta - margin."""
        return self.min_coverage >= 1 - self.spec.delta - as_fraction(margin)


@dataclass(frozen=True)
class ChanceRow:
    n: int
    replicates: int
    chance: Fraction


@dataclass(frozen=True)
class ProgressivenessReport:
    """
    Attributes:
        test: Test method name
        p: Urn proportion
        truth: Hypothesis true of the urn
        replicates: Replicates per sample size
        master_seed: Seed all streams derive from
        prng: Generator identifier
        rows: Chance of outputting the truth per sample size
        max_drop: Largest decrease chance[i] - chance[j] over i < j (0 if none)
        drop_threshold: Tolerated drop
        drop_at: (n_i, n_j) realizing max_drop, if positive
    """
    test: str
    p: Fraction
    truth: str
    replicates: int
    master_seed: int
    prng: str
    rows: Tuple[ChanceRow, ...]
    max_drop: Fraction
    drop_threshold: Fraction
    drop_at: Optional[Tuple[int, int]] = None

    @property
    def flagged(self) -> bool:
        return self.max_drop > self.drop_threshold
