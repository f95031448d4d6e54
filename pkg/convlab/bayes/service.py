"""
Conditionalization and Bayesian consistency checks.

Likelihoods are deterministic: a world-hypothesis either predicts the
evidence (likelihood 1) or rules it out (likelihood 0), decided by the
position of the first nonblack observation. All arithmetic is exact.
"""

import itertools
import logging
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from convlab.bayes.models import (
    ALL_BLACK,
    TAIL,
    BayesConsistencyReport,
    BayesFailure,
    DiscretePrior,
    PosteriorTrace,
    TracePoint,
    WorldKey,
    cx_position,
)
from convlab.errors import ConditioningOnNullError, InputError
from convlab.problems.builtins import BLACK, NONBLACK, NO, YES
from convlab.problems.models import (
    EmpiricalProblem,
    EvidenceSequence,
    HypothesisLabel,
    UltimatelyPeriodicWorld,
)
from convlab.problems.service import truth_of_world

logger = logging.getLogger(__name__)

UNIVERSAL_READING = (
    "'high chance' read as: every enumerated world in the family, "
    "posterior on the truth at the horizon"
)


def _first_counterexample(evidence: EvidenceSequence) -> Optional[int]:
    """1-based position of the first nonblack observation, if any."""
    for index, symbol in enumerate(evidence, start=1):
        if symbol not in (BLACK, NONBLACK):
            raise InputError(f"Observation '{symbol}' is not in the raven alphabet")
        if symbol == NONBLACK:
            return index
    return None


def _predicts(key: WorldKey, truncation: int, evidence: EvidenceSequence) -> bool:
    first = _first_counterexample(evidence)
    if key == ALL_BLACK:
        return first is None
    if key == TAIL:
        return first is None or first > truncation
    k = cx_position(key)
    return k > len(evidence) if first is None else first == k


def conditionalize(prior: DiscretePrior, e: EvidenceSequence) -> DiscretePrior:
    """
    Posterior after observing e on top of the prior's evidence.

    Conditioning on e then e' equals conditioning on e + e'.

    Raises:
        ConditioningOnNullError: If every world-hypothesis with mass rules the evidence out
        InputError: On an observation outside {black, nonblack}
    """
    evidence = prior.evidence + tuple(e)
    kept = {
        key: value if value and _predicts(key, prior.truncation, evidence) else Fraction(0)
        for key, value in prior.masses.items()
    }
    total = sum(kept.values(), Fraction(0))
    if total == 0:
        raise ConditioningOnNullError(
            f"Prior '{prior.name}' gives the evidence {' '.join(evidence) or '()'} probability zero"
        )
    return DiscretePrior(
        name=prior.name,
        truncation=prior.truncation,
        masses={key: value / total for key, value in kept.items()},
        evidence=evidence,
    )


def bayes_consistency_sim(
    prior: DiscretePrior,
    world: UltimatelyPeriodicWorld,
    horizon: int,
    truth: Optional[HypothesisLabel] = None,
) -> PosteriorTrace:
    """
    Posterior on the world's true hypothesis after each of its first `horizon` observations.

    Raises:
        ConditioningOnNullError: If the world leaves the prior's support
        InputError: If horizon < 1
    """
    if horizon < 1:
        raise InputError(f"horizon must be >= 1, got {horizon}")
    if truth is None:
        truth = NO if NONBLACK in world.prefix + world.cycle else YES

    points: List[TracePoint] = []
    posterior = prior
    for length in range(1, horizon + 1):
        posterior = conditionalize(posterior, (world.symbol_at(length - 1),))
        points.append(TracePoint(length=length, mass=posterior.hypothesis_mass(truth)))
    return PosteriorTrace(world=world, truth=truth, points=tuple(points), tail_mass=prior.tail_mass)


def enumerate_worlds(
    alphabet: Sequence[str], max_prefix: int, max_period: int
) -> Iterator[UltimatelyPeriodicWorld]:
    """All worlds with prefix length <= max_prefix and period <= max_period, shortest first."""
    for prefix_length in range(max_prefix + 1):
        for prefix in itertools.product(alphabet, repeat=prefix_length):
            for period in range(1, max_period + 1):
                for cycle in itertools.product(alphabet, repeat=period):
                    yield UltimatelyPeriodicWorld(prefix, cycle)


def _raven_shaped(problem: EmpiricalProblem) -> None:
    labels = {h.label for h in problem.hypotheses}
    if set(problem.alphabet) != {BLACK, NONBLACK} or labels != {YES, NO}:
        raise InputError(
            f"Bayesian consistency needs a raven-shaped problem "
            f"(alphabet black/nonblack, hypotheses yes/no); '{problem.name}' is not"
        )


def consistency_verdict(
    prior: DiscretePrior,
    problem: EmpiricalProblem,
    horizon: int,
    threshold: Fraction,
    max_prefix: int = 8,
    max_period: int = 2,
) -> BayesConsistencyReport:
    """
    Check that the posterior on the truth reaches `threshold` by `horizon` in every world.

    The family is the all-black world plus every world with bounded prefix
    and period. Worlds with the same first-counterexample position inside
    the horizon and the same truth produce the same trace, so one
    representative of each is simulated.

    Raises:
        InputError: If the problem is not raven-shaped or horizon < 1
    """
    _raven_shaped(problem)
    if horizon < 1:
        raise InputError(f"horizon must be >= 1, got {horizon}")
    threshold = Fraction(threshold)

    representatives: Dict[Tuple[Optional[int], HypothesisLabel], UltimatelyPeriodicWorld] = {}
    all_black = UltimatelyPeriodicWorld((), (BLACK,))
    family = itertools.chain([all_black], enumerate_worlds(problem.alphabet, max_prefix, max_period))
    for world in family:
        key = (_first_counterexample(world.take(horizon)), truth_of_world(problem, world))
        representatives.setdefault(key, world)

    traces: List[PosteriorTrace] = []
    failures: List[BayesFailure] = []
    for (_, truth), world in representatives.items():
        try:
            trace = bayes_consistency_sim(prior, world, horizon, truth=truth)
        except ConditioningOnNullError as exc:
            logger.warning(f"World {world}: {exc}")
            failures.append(BayesFailure(world=world, truth=truth, reason="conditioning_on_null"))
            continue
        traces.append(trace)
        if prior.hypothesis_mass(truth) == 0:
            failures.append(
                BayesFailure(world, truth, "zero_prior", final_mass=trace.final_mass, trace=trace)
            )
        elif trace.final_mass < threshold:
            failures.append(
                BayesFailure(world, truth, "below_threshold", final_mass=trace.final_mass, trace=trace)
            )

    report = BayesConsistencyReport(
        prior=prior.name,
        problem=problem.name,
        horizon=horizon,
        threshold=threshold,
        max_prefix=max_prefix,
        max_period=max_period,
        worlds_checked=len(representatives),
        tail_mass=prior.tail_mass,
        traces=tuple(traces),
        failures=tuple(failures),
        note=UNIVERSAL_READING,
    )
    if report.passed:
        logger.info(f"Prior '{prior.name}' is consistent on {report.worlds_checked} worlds")
    else:
        logger.warning(
            f"Prior '{prior.name}' fails Bayesian consistency on {len(failures)} of "
            f"{report.worlds_checked} worlds"
        )
    return report
