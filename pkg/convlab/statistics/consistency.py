"""
Statistical consistency in the white-ball problem.

The Hoeffding bound supplies a sample size that works for every p; the
Monte Carlo run checks it on a grid. Estimates are exact rationals and
closeness is decided in exact arithmetic, once per distinct white count.
"""

import logging
from decimal import ROUND_CEILING, Decimal, localcontext
from fractions import Fraction
from typing import Callable, Iterable, List, Optional

import numpy as np

from convlab.errors import InputError, UndefinedEstimateError
from convlab.statistics.models import (
    ConsistencyReport,
    ConsistencySpec,
    CoverageRow,
    Number,
    Sample,
    Urn,
    as_fraction,
)
from convlab.statistics.rng import child_generators, generator, prng_id

logger = logging.getLogger(__name__)

Estimator = Callable[[Sample], Fraction]


def draw_sample(urn: Urn, n: int, seed: int) -> Sample:
    """n independent draws with replacement; identical (seed, n, p) give identical samples."""
    if n < 0:
        raise InputError(f"Sample size must be non-negative, got {n}")
    whites = int(generator(seed).binomial(n, float(urn.p)))
    return Sample(n=n, whites=whites, lineage=str(seed))


def frequency_estimate(s: Sample) -> Fraction:
    """
    Relative frequency of white draws, as an exact rational.

    Raises:
        UndefinedEstimateError: If the sample is empty
    """
    if s.n == 0:
        raise UndefinedEstimateError("The frequency estimate of an empty sample is undefined")
    return Fraction(s.whites, s.n)


def constant_estimator(value: Number) -> Estimator:
    """Estimator that ignores the sample."""
    fixed = as_fraction(value)

    def estimate(_: Sample) -> Fraction:
        return fixed

    estimate.__name__ = f"constant_{fixed}"
    return estimate


def _to_decimal(value: Fraction) -> Decimal:
    return Decimal(value.numerator) / Decimal(value.denominator)


def hoeffding_sample_size(spec: ConsistencySpec) -> int:
    """
    Smallest n with n >= ln(2/delta) / (2 epsilon^2).

    At that n, P(|whites/n - p| >= epsilon) <= delta for every p.
    """
    with localcontext() as ctx:
        ctx.prec = 50
        bound = (Decimal(2) / _to_decimal(spec.delta)).ln() / (2 * _to_decimal(spec.epsilon) ** 2)
        return int(bound.to_integral_value(rounding=ROUND_CEILING))


def monte_carlo_consistency(
    estimator: Estimator,
    p_grid: Iterable[Number],
    spec: ConsistencySpec,
    n: int,
    replicates: int,
    master_seed: int,
    name: Optional[str] = None,
) -> ConsistencyReport:
    """
    Estimate, for each p, the chance that the estimate is within epsilon of p.

    Grid point i draws from the i-th stream spawned from master_seed.

    Raises:
        InputError: If n < 1, replicates < 1 or the grid is empty
    """
    urns = [Urn(p) for p in p_grid]
    if not urns:
        raise InputError("p_grid must not be empty")
    if n < 1 or replicates < 1:
        raise InputError(f"n and replicates must be >= 1, got {n} and {replicates}")

    rows: List[CoverageRow] = []
    for index, (urn, rng) in enumerate(zip(urns, child_generators(master_seed, len(urns)))):
        whites = rng.binomial(n, float(urn.p), size=replicates)
        close = 0
        for value, count in zip(*np.unique(whites, return_counts=True)):
            sample = Sample(n=n, whites=int(value), lineage=f"{master_seed}/{index}")
            if abs(estimator(sample) - urn.p) < spec.epsilon:
                close += int(count)
        rows.append(CoverageRow(p=urn.p, n=n, replicates=replicates, coverage=Fraction(close, replicates)))

    report = ConsistencyReport(
        estimator=name or getattr(estimator, "__name__", "estimator"),
        spec=spec,
        analytic_n=hoeffding_sample_size(spec),
        n=n,
        replicates=replicates,
        master_seed=master_seed,
        prng=prng_id(),
        rows=tuple(rows),
    )
    logger.info(
        f"Consistency run: n={n}, {replicates} replicates, "
        f"min coverage {float(report.min_coverage):.4f}"
    )
    return report
