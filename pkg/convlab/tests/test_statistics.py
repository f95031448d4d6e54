"""
Tests for the white-ball problem.

This module tests:
- Sampling determinism and the frequency estimate
- The Hoeffding sample size and the Monte Carlo consistency run
- Progressiveness curves, grids and drop detection
"""

from fractions import Fraction

import pytest

from convlab.errors import InputError, UndefinedEstimateError
from convlab.statistics import (
    DEFAULT_N_GRID,
    GT_HALF,
    LE_HALF,
    ConsistencySpec,
    Sample,
    Urn,
    as_fraction,
    constant_estimator,
    constant_test,
    draw_sample,
    frequency_estimate,
    frequency_threshold_test,
    hoeffding_sample_size,
    max_drop,
    monte_carlo_consistency,
    odd_n_adversarial_test,
    parse_n_grid,
    progressiveness_curve,
)

P_GRID = [Fraction(k, 20) for k in range(21)]


class TestSampling:
    """Test urns, samples and the frequency estimate."""

    def test_draw_is_reproducible(self):
        """Test that identical (seed, n, p) give identical samples."""
        urn = Urn(Fraction(3, 10))
        first = draw_sample(urn, 100, 42)
        assert first == draw_sample(urn, 100, 42)
        assert first.lineage == "42"
        assert 0 <= first.whites <= 100

    def test_extreme_urns(self):
        """Test that p = 0 and p = 1 give all-black and all-white samples."""
        assert draw_sample(Urn(0), 50, 1).whites == 0
        assert draw_sample(Urn(1), 50, 1).whites == 50

    def test_frequency_estimate(self):
        """Test the exact relative frequency."""
        assert frequency_estimate(Sample(n=6, whites=4)) == Fraction(2, 3)

    def test_empty_sample(self):
        """Test that the frequency of an empty sample is undefined."""
        with pytest.raises(UndefinedEstimateError):
            frequency_estimate(Sample(n=0, whites=0))

    def test_invalid_inputs(self):
        """Test urn, sample and spec bounds."""
        with pytest.raises(InputError):
            Urn(Fraction(3, 2))
        with pytest.raises(InputError):
            Sample(n=3, whites=4)
        with pytest.raises(InputError):
            ConsistencySpec(epsilon=0, delta=Fraction(1, 20))
        with pytest.raises(InputError):
            ConsistencySpec(epsilon=Fraction(1, 10), delta=1)

    def test_floats_read_exactly(self):
        """Test that floats are read through their shortest repr."""
        assert as_fraction(0.1) == Fraction(1, 10)
        assert as_fraction("1/3") == Fraction(1, 3)
        with pytest.raises(InputError):
            as_fraction("one third")


class TestConsistency:
    """Test the Hoeffding size and the Monte Carlo consistency run."""

    def test_hoeffding_sample_size(self):
        """Test n = ceil(ln(2/delta) / (2 epsilon^2)) at epsilon 0.1, delta 0.05."""
        spec = ConsistencySpec(epsilon=Fraction(1, 10), delta=Fraction(1, 20))
        assert hoeffding_sample_size(spec) == 185

    def test_frequency_estimator_certified(self):
        """Test that the frequency estimate reaches the Hoeffding guarantee on the grid."""
        spec = ConsistencySpec(epsilon=Fraction(1, 10), delta=Fraction(1, 20))
        report = monte_carlo_consistency(
            frequency_estimate, P_GRID, spec, n=185, replicates=10_000, master_seed=1,
        )

        assert report.estimator == "frequency_estimate"
        assert report.analytic_n == 185
        assert len(report.rows) == 21
        assert report.certified()
        assert report.min_coverage >= Fraction(94, 100)
        assert all(row.replicates == 10_000 for row in report.rows)
        assert report.rows[0].coverage == 1
        assert report.rows[-1].coverage == 1

    def test_constant_estimator_fails(self):
        """Test that an estimator ignoring the data is not certified."""
        spec = ConsistencySpec(epsilon=Fraction(1, 10), delta=Fraction(1, 20))
        report = monte_carlo_consistency(
            constant_estimator(Fraction(1, 2)), P_GRID, spec, n=185, replicates=200, master_seed=1,
        )

        assert report.estimator == "constant_1/2"
        assert report.rows[0].coverage == 0
        assert report.rows[10].coverage == 1
        assert not report.certified(Fraction(1, 10))

    def test_same_seed_same_rows(self):
        """Test that reruns with one master seed reproduce every row."""
        spec = ConsistencySpec(epsilon=Fraction(1, 20), delta=Fraction(1, 10))
        first = monte_carlo_consistency(frequency_estimate, P_GRID[:5], spec, 50, 300, 9)
        second = monte_carlo_consistency(frequency_estimate, P_GRID[:5], spec, 50, 300, 9)
        assert first.rows == second.rows
        assert first.prng.endswith("PCG64/SeedSequence")

    def test_rejects_bad_arguments(self):
        """Test empty grids and non-positive sizes."""
        spec = ConsistencySpec(epsilon=Fraction(1, 10), delta=Fraction(1, 20))
        with pytest.raises(InputError):
            monte_carlo_consistency(frequency_estimate, [], spec, 10, 10, 0)
        with pytest.raises(InputError):
            monte_carlo_consistency(frequency_estimate, P_GRID, spec, 0, 10, 0)


class TestProgressiveness:
    """Test progressiveness curves."""

    def test_frequency_threshold_is_progressive(self):
        """Test that the threshold test's chance of the truth never drops by more than 0.02."""
        report = progressiveness_curve(
            frequency_threshold_test(), Urn(Fraction(3, 5)), parse_n_grid("10:200:10"),
            replicates=20_000, master_seed=42,
        )

        assert report.truth == GT_HALF
        assert report.max_drop <= Fraction(2, 100)
        assert not report.flagged
        assert report.rows[-1].chance > report.rows[0].chance

    def test_odd_n_adversary_is_flagged(self):
        """Test that flipping the answer at odd n produces a large drop."""
        report = progressiveness_curve(
            odd_n_adversarial_test(), Urn(Fraction(3, 5)), parse_n_grid("10:200:5"),
            replicates=2000, master_seed=42,
        )

        assert report.flagged
        assert report.max_drop >= Fraction(1, 10)
        low, high = report.drop_at
        assert low < high
        assert high % 2 == 1

    def test_default_grid_flags_adversary(self):
        """Test that the default grid of odd sizes exposes the flipped answers."""
        report = progressiveness_curve(
            odd_n_adversarial_test(), Urn(Fraction(3, 5)), parse_n_grid(DEFAULT_N_GRID),
            replicates=2000, master_seed=42,
        )

        assert report.flagged
        assert report.max_drop >= Fraction(1, 10)
        assert all(row.n % 2 == 1 for row in report.rows)

    def test_default_grid_keeps_threshold_test_progressive(self):
        """Test that the honest threshold test is not flagged on the default grid."""
        report = progressiveness_curve(
            frequency_threshold_test(), Urn(Fraction(3, 5)), parse_n_grid(DEFAULT_N_GRID),
            replicates=10_000, master_seed=42,
        )
        assert not report.flagged

    def test_ties_dent_threshold_test_on_mixed_grid(self):
        """Test that ties at even n make the threshold test drop after an odd n."""
        report = progressiveness_curve(
            frequency_threshold_test(), Urn(Fraction(3, 5)), parse_n_grid("10:200:5"),
            replicates=20_000, master_seed=42,
        )

        assert report.flagged
        low, high = report.drop_at
        assert low % 2 == 1
        assert high % 2 == 0

    def test_constant_test(self):
        """Test that a constant wrong answer has chance 0 and no drop."""
        report = progressiveness_curve(
            constant_test(LE_HALF), Urn(Fraction(3, 5)), [10, 20, 30], replicates=100, master_seed=3,
        )
        assert all(row.chance == 0 for row in report.rows)
        assert report.max_drop == 0
        assert report.drop_at is None
        with pytest.raises(InputError):
            constant_test("maybe")

    def test_grid_validation(self):
        """Test that grids must be non-empty, increasing and positive."""
        urn = Urn(Fraction(3, 5))
        test = frequency_threshold_test()
        for grid in ([], [20, 10], [10, 10], [0, 10]):
            with pytest.raises(InputError):
                progressiveness_curve(test, urn, grid, replicates=10, master_seed=0)


class TestGrids:
    """Test grid parsing and drop detection."""

    def test_parse_n_grid(self):
        """Test range and list forms."""
        assert parse_n_grid("10:30:10") == [10, 20, 30]
        assert parse_n_grid("5, 7,9") == [5, 7, 9]
        for text in ("a:b:c", "10:20", "10:20:0"):
            with pytest.raises(InputError):
                parse_n_grid(text)

    def test_max_drop(self):
        """Test the largest later decrease and where it happens."""
        assert max_drop([Fraction(1, 2), Fraction(3, 4), Fraction(1, 4), Fraction(1)]) == (
            Fraction(1, 2), (1, 2),
        )
        assert max_drop([Fraction(1, 4), Fraction(1, 2)]) == (0, None)
        assert max_drop([]) == (0, None)
