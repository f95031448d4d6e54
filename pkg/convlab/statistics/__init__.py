"""
The white-ball problem: sampling, statistical consistency and progressiveness.
"""

from convlab.statistics.models import (
    GT_HALF,
    LE_HALF,
    ChanceRow,
    ConsistencyReport,
    ConsistencySpec,
    CoverageRow,
    ProgressivenessReport,
    Sample,
    TestMethod,
    Urn,
    as_fraction,
)
from convlab.statistics.rng import child_generators, generator, prng_id
from convlab.statistics.consistency import (
    constant_estimator,
    draw_sample,
    frequency_estimate,
    hoeffding_sample_size,
    monte_carlo_consistency,
)
from convlab.statistics.progressiveness import (
    DEFAULT_DROP_THRESHOLD,
    DEFAULT_N_GRID,
    constant_test,
    frequency_threshold_test,
    max_drop,
    odd_n_adversarial_test,
    parse_n_grid,
    progressiveness_curve,
)

__all__ = [
    "GT_HALF",
    "LE_HALF",
    "ChanceRow",
    "ConsistencyReport",
    "ConsistencySpec",
    "CoverageRow",
    "ProgressivenessReport",
    "Sample",
    "TestMethod",
    "Urn",
    "as_fraction",
    "child_generators",
    "generator",
    "prng_id",
    "constant_estimator",
    "draw_sample",
    "frequency_estimate",
    "hoeffding_sample_size",
    "monte_carlo_consistency",
    "DEFAULT_DROP_THRESHOLD",
    "DEFAULT_N_GRID",
    "constant_test",
    "frequency_threshold_test",
    "max_drop",
    "odd_n_adversarial_test",
    "parse_n_grid",
    "progressiveness_curve",
]
