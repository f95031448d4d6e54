"""
Inference methods as finite-state transducers.
"""

from convlab.methods.models import SUSPEND, InferenceMethod, MethodOutput, is_suspend
from convlab.methods.service import apply, check_compatible, method_state, validate_method
from convlab.methods.builtins import (
    delayed_induction,
    occasional_counterinduction,
    ordinary_induction,
    skeptic,
)
from convlab.methods.counterinduction import (
    CounterinductionReport,
    counterinductive_nodes,
    is_counterinductive,
)

__all__ = [
    "SUSPEND",
    "InferenceMethod",
    "MethodOutput",
    "is_suspend",
    "apply",
    "check_compatible",
    "method_state",
    "validate_method",
    "delayed_induction",
    "occasional_counterinduction",
    "ordinary_induction",
    "skeptic",
    "CounterinductionReport",
    "counterinductive_nodes",
    "is_counterinductive",
]
