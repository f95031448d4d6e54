"""
Progressiveness curves: does the chance of finding the truth ever drop much
as the sample grows?
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from convlab.errors import InputError
from convlab.statistics.models import (
    GT_HALF,
    LE_HALF,
    ChanceRow,
    Number,
    ProgressivenessReport,
    Sample,
    TestMethod,
    Urn,
    as_fraction,
)
from convlab.statistics.rng import child_generators, prng_id

logger = logging.getLogger(__name__)

DEFAULT_DROP_THRESHOLD = Fraction(2, 100)

# Odd sizes only: an even n can tie at whites = n/2, which the threshold test
# answers with p<=1/2, so mixing parities dents even an honest test's curve.
DEFAULT_N_GRID = "11:201:10"


def _threshold_decision(sample: Sample) -> str:
    # ties go to p <= 1/2
    if sample.n > 0 and Fraction(sample.whites, sample.n) > Fraction(1, 2):
        return GT_HALF
    return LE_HALF


def frequency_threshold_test() -> TestMethod:
    return TestMethod(
        name="frequency_threshold",
        description="Output p>1/2 iff whites/n > 1/2, else p<=1/2",
        decide=_threshold_decision,
    )


def constant_test(hypothesis: str) -> TestMethod:
    if hypothesis not in (GT_HALF, LE_HALF):
        raise InputError(f"Unknown test hypothesis '{hypothesis}'")
    return TestMethod(
        name=f"constant_{hypothesis}",
        description=f"Always output {hypothesis}",
        decide=lambda sample: hypothesis,
    )


def odd_n_adversarial_test() -> TestMethod:
    """The threshold test with its answer flipped at every odd sample size."""
    def decide(sample: Sample) -> str:
        answer = _threshold_decision(sample)
        if sample.n % 2 == 1:
            return LE_HALF if answer == GT_HALF else GT_HALF
        return answer

    return TestMethod(
        name="odd_n_adversarial",
        description="Frequency threshold test, answer flipped when n is odd",
        decide=decide,
    )


def parse_n_grid(text: str) -> List[int]:
    """
    Read "start:stop:step" (stop inclusive) or a comma-separated list.

    Raises:
        InputError: On malformed text
    """
    try:
        if ":" in text:
            start, stop, step = (int(part) for part in text.split(":"))
            if step < 1:
                raise InputError(f"Grid step must be positive, got {step}")
            return list(range(start, stop + 1, step))
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise InputError(f"Malformed sample-size grid '{text}'") from exc


def max_drop(chances: Sequence[Fraction]) -> Tuple[Fraction, Optional[Tuple[int, int]]]:
    """Largest chances[i] - chances[j] over i < j, floored at 0, and the (i, j) realizing it."""
    best = Fraction(0)
    where = None
    peak_index = 0
    for j in range(1, len(chances)):
        if chances[j - 1] > chances[peak_index]:
            peak_index = j - 1
        drop = chances[peak_index] - chances[j]
        if drop > best:
            best = drop
            where = (peak_index, j)
    return best, where


def progressiveness_curve(
    test: TestMethod,
    urn: Urn,
    n_grid: Sequence[int],
    replicates: int,
    master_seed: int,
    drop_threshold: Number = DEFAULT_DROP_THRESHOLD,
) -> ProgressivenessReport:
    """
    Estimate, for each n, the chance that the test outputs the urn's true hypothesis.

    Sample size i draws from the i-th stream spawned from master_seed.

    Raises:
        InputError: If the grid is empty, not strictly increasing, or has n < 1
    """
    n_grid = list(n_grid)
    if not n_grid:
        raise InputError("n_grid must not be empty")
    if any(b <= a for a, b in zip(n_grid, n_grid[1:])):
        raise InputError(f"n_grid must be strictly increasing, got {n_grid}")
    if n_grid[0] < 1:
        raise InputError(f"Sample sizes must be >= 1, got {n_grid[0]}")
    if replicates < 1:
        raise InputError(f"replicates must be >= 1, got {replicates}")

    truth = urn.true_test_hypothesis
    rows: List[ChanceRow] = []
    for index, (n, rng) in enumerate(zip(n_grid, child_generators(master_seed, len(n_grid)))):
        whites = rng.binomial(n, float(urn.p), size=replicates)
        hits = 0
        for value, count in zip(*np.unique(whites, return_counts=True)):
            sample = Sample(n=n, whites=int(value), lineage=f"{master_seed}/{index}")
            if test.decide(sample) == truth:
                hits += int(count)
        rows.append(ChanceRow(n=n, replicates=replicates, chance=Fraction(hits, replicates)))

    drop, where = max_drop([row.chance for row in rows])
    report = ProgressivenessReport(
        test=test.name,
        p=urn.p,
        truth=truth,
        replicates=replicates,
        master_seed=master_seed,
        prng=prng_id(),
        rows=tuple(rows),
        max_drop=drop,
        drop_threshold=as_fraction(drop_threshold),
        drop_at=(n_grid[where[0]], n_grid[where[1]]) if where else None,
    )
    if report.flagged:
        logger.warning(
            f"Test '{test.name}' at p={urn.p}: chance of truth drops by "
            f"{float(drop):.4f} between n={report.drop_at[0]} and n={report.drop_at[1]}"
        )
    return report
