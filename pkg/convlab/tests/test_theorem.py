"""
Tests for the randomized test of "stable convergence rules out counterinduction".
"""

import pytest

from convlab.convergence import theorem_property_test
from convlab.errors import InputError


class TestTheorem:
    """Test theorem_property_test."""

    def test_holds_over_ten_thousand_trials(self):
        """Test that no random method converges stably yet counterinduces."""
        report = theorem_property_test(trials=10_000, seed=42)

        assert report.holds
        assert report.counterexamples == ()
        assert 0 < report.antecedent_true < report.trials

    def test_builtin_results(self):
        """Test the recorded results for the named methods."""
        report = theorem_property_test(trials=1, seed=0)
        assert report.builtin_results["ordinary_induction"] == (True, True)
        assert report.builtin_results["skeptic"] == (False, True)

    def test_same_seed_same_report(self):
        """Test that a fixed seed reproduces the antecedent count."""
        first = theorem_property_test(trials=200, seed=7, max_states=4)
        second = theorem_property_test(trials=200, seed=7, max_states=4)
        assert first.antecedent_true == second.antecedent_true

    def test_rejects_zero_trials(self):
        """Test that trials < 1 raises InputError."""
        with pytest.raises(InputError):
            theorem_property_test(trials=0, seed=1)
