"""
Discrete Bayesian agents: priors, conditionalization and consistency checks.
"""

from convlab.bayes.models import (
    ALL_BLACK,
    TAIL,
    BayesConsistencyReport,
    BayesFailure,
    DiscretePrior,
    PosteriorTrace,
    TracePoint,
    cx_key,
    cx_position,
    hypothesis_of,
)
from convlab.bayes.priors import (
    PRIOR_FACTORIES,
    builtin_prior,
    geometric,
    prior_from_dict,
    prior_to_dict,
    read_prior,
    uniform_counterexamples,
    write_prior,
    zero_on_all_black,
)
from convlab.bayes.service import (
    bayes_consistency_sim,
    conditionalize,
    consistency_verdict,
    enumerate_worlds,
)

__all__ = [
    "ALL_BLACK",
    "TAIL",
    "BayesConsistencyReport",
    "BayesFailure",
    "DiscretePrior",
    "PosteriorTrace",
    "TracePoint",
    "cx_key",
    "cx_position",
    "hypothesis_of",
    "PRIOR_FACTORIES",
    "builtin_prior",
    "geometric",
    "prior_from_dict",
    "prior_to_dict",
    "read_prior",
    "uniform_counterexamples",
    "write_prior",
    "zero_on_all_black",
    "bayes_consistency_sim",
    "conditionalize",
    "consistency_verdict",
    "enumerate_worlds",
]
