"""
Exact convergence checking, achievability, and the brute-force cross-check.
"""

from convlab.convergence.models import (
    DEFAULT_HIERARCHY,
    DISPLAY_NAMES,
    Achievability,
    AchievabilityReport,
    ConvergenceVerdict,
    Mode,
    ModeAchievability,
    Verdict,
)
from convlab.convergence.checker import (
    CHECKS,
    check_mode,
    check_pointwise,
    check_stability,
    check_stable_pointwise,
    check_uniform,
)
from convlab.convergence.achievability import (
    achievability,
    canonical_induction,
    settled_induction,
)
from convlab.convergence.oracle import OracleReport, OracleViolation, brute_force_oracle
from convlab.convergence.random_automata import random_method, random_problem, trial_rng
from convlab.convergence.theorem import TheoremReport, theorem_property_test

__all__ = [
    "DEFAULT_HIERARCHY",
    "DISPLAY_NAMES",
    "Achievability",
    "AchievabilityReport",
    "ConvergenceVerdict",
    "Mode",
    "ModeAchievability",
    "Verdict",
    "CHECKS",
    "check_mode",
    "check_pointwise",
    "check_stability",
    "check_stable_pointwise",
    "check_uniform",
    "achievability",
    "canonical_induction",
    "settled_induction",
    "OracleReport",
    "OracleViolation",
    "brute_force_oracle",
    "random_method",
    "random_problem",
    "trial_rng",
    "TheoremReport",
    "theorem_property_test",
]
