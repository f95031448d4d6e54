"""
Canonical JSON forms of problems, methods, verdicts and reports.

Rationals are written as "num/den" text (integers as plain digits) so
that reports read back exactly; a fixed six-place decimal accompanies
them where a human will read the number.
"""

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional

from convlab.bayes.models import BayesConsistencyReport, PosteriorTrace
from convlab.convergence.models import AchievabilityReport, ConvergenceVerdict
from convlab.convergence.oracle import OracleReport
from convlab.convergence.theorem import TheoremReport
from convlab.methods.counterinduction import CounterinductionReport
from convlab.methods.models import InferenceMethod
from convlab.problems.models import EmpiricalProblem, UltimatelyPeriodicWorld
from convlab.statistics.models import ConsistencyReport, ProgressivenessReport


def fraction_text(value: Fraction) -> str:
    return str(Fraction(value))


def decimal_text(value: Fraction) -> str:
    return f"{float(value):.6f}"


def dumps(data: Any) -> str:
    """Deterministic JSON text with a trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _world(world: Optional[UltimatelyPeriodicWorld]) -> Optional[Dict[str, List[str]]]:
    return world.to_dict() if world is not None else None


def _transitions(states, alphabet, table) -> List[List[str]]:
    return [
        [state, symbol, table[(state, symbol)]]
        for state in states
        for symbol in alphabet
        if (state, symbol) in table
    ]


def problem_to_dict(p: EmpiricalProblem) -> Dict[str, Any]:
    return {
        "name": p.name,
        "alphabet": list(p.alphabet),
        "hypotheses": [{"label": h.label, "name": h.name} for h in p.hypotheses],
        "truth": {
            "states": list(p.truth.states),
            "initial": p.truth.initial,
            "labels": {state: p.truth.labels[state] for state in p.truth.states},
            "transitions": _transitions(p.truth.states, p.alphabet, p.truth.transitions),
        },
    }


def method_to_dict(m: InferenceMethod) -> Dict[str, Any]:
    return {
        "name": m.name,
        "problem": m.problem,
        "alphabet": list(m.alphabet),
        "states": list(m.states),
        "initial": m.initial,
        "outputs": {state: m.outputs[state] for state in m.states},
        "transitions": _transitions(m.states, m.alphabet, m.transitions),
    }


def verdict_to_dict(v: ConvergenceVerdict) -> Dict[str, Any]:
    return {
        "mode": v.mode.value,
        "verdict": v.verdict.value,
        "witness": _world(v.witness),
        "witness_times": list(v.witness_times) if v.witness_times else None,
        "modulus": v.modulus,
        "alt_witness": _world(v.alt_witness),
        "pump": list(v.pump) if v.pump else None,
        "pumped_witness": _world(v.pumped_witness()) if v.pump else None,
        "clause": v.clause.value if v.clause else None,
    }


def achievability_to_dict(report: AchievabilityReport) -> Dict[str, Any]:
    modes = []
    for mode in report.hierarchy:
        entry = report.modes[mode]
        modes.append({
            "mode": mode.value,
            "status": entry.status.value,
            "witness_method": entry.witness_method.name if entry.witness_method else None,
            "verdict": verdict_to_dict(entry.verdict) if entry.verdict else None,
            "certificate": entry.certificate,
            "tried": list(entry.tried),
        })
    highest = report.highest_achievable
    return {
        "problem": report.problem,
        "hierarchy": [mode.value for mode in report.hierarchy],
        "highest_achievable": highest.value if highest else None,
        "modes": modes,
    }


def oracle_to_dict(report: OracleReport) -> Dict[str, Any]:
    return {
        "method": report.method,
        "problem": report.problem,
        "depth": report.depth,
        "max_period": report.max_period,
        "horizon": report.horizon,
        "max_worlds": report.max_worlds,
        "worlds_checked": report.worlds_checked,
        "complete": report.complete,
        "counts": {mode.value: count for mode, count in report.counts.items()},
        "examples": {
            mode.value: [
                {
                    "world": violation.world.to_dict(),
                    "truth": violation.truth,
                    "times": list(violation.times),
                }
                for violation in violations
            ]
            for mode, violations in report.examples.items()
        },
    }


def counterinduction_to_dict(report: CounterinductionReport) -> Dict[str, Any]:
    return {
        "method": report.method,
        "problem": report.problem,
        "depth_bound": report.depth_bound,
        "evidence": [list(e) for e in report.nodes],
        "certificate": [list(node) for node in report.certificate],
        "empty_at_every_depth": report.empty_at_every_depth,
    }


def theorem_to_dict(report: TheoremReport) -> Dict[str, Any]:
    return {
        "trials": report.trials,
        "seed": report.seed,
        "max_states": report.max_states,
        "antecedent_true": report.antecedent_true,
        "holds": report.holds,
        "counterexamples": [method_to_dict(m) for m in report.counterexamples],
        "builtin_results": {
            name: {"stable_pointwise": antecedent, "no_counterinduction": consequent}
            for name, (antecedent, consequent) in sorted(report.builtin_results.items())
        },
    }


def consistency_rows(report: ConsistencyReport) -> List[Dict[str, Any]]:
    return [
        {
            "p": fraction_text(row.p),
            "n": row.n,
            "replicates": row.replicates,
            "coverage": fraction_text(row.coverage),
            "coverage_decimal": decimal_text(row.coverage),
        }
        for row in report.rows
    ]


def consistency_summary(report: ConsistencyReport, margin: Fraction) -> Dict[str, Any]:
    return {
        "estimator": report.estimator,
        "epsilon": fraction_text(report.spec.epsilon),
        "delta": fraction_text(report.spec.delta),
        "analytic_n": report.analytic_n,
        "n": report.n,
        "replicates": report.replicates,
        "min_coverage": fraction_text(report.min_coverage),
        "coverage_margin": fraction_text(margin),
        "certified": report.certified(margin),
    }


def progressiveness_rows(report: ProgressivenessReport) -> List[Dict[str, Any]]:
    return [
        {
            "test": report.test,
            "p": fraction_text(report.p),
            "n": row.n,
            "replicates": row.replicates,
            "chance": fraction_text(row.chance),
            "chance_decimal": decimal_text(row.chance),
        }
        for row in report.rows
    ]


def progressiveness_summary(report: ProgressivenessReport) -> Dict[str, Any]:
    return {
        "test": report.test,
        "p": fraction_text(report.p),
        "truth": report.truth,
        "replicates": report.replicates,
        "max_drop": fraction_text(report.max_drop),
        "max_drop_decimal": decimal_text(report.max_drop),
        "drop_threshold": fraction_text(report.drop_threshold),
        "drop_at": list(report.drop_at) if report.drop_at else None,
        "flagged": report.flagged,
    }


def trace_rows(trace: PosteriorTrace) -> List[Dict[str, Any]]:
    world = str(trace.world)
    return [
        {
            "world": world,
            "truth": trace.truth,
            "length": point.length,
            "mass_numerator": point.mass.numerator,
            "mass_denominator": point.mass.denominator,
            "mass": decimal_text(point.mass),
        }
        for point in trace.points
    ]


def bayes_summary(report: BayesConsistencyReport) -> Dict[str, Any]:
    return {
        "prior": report.prior,
        "problem": report.problem,
        "horizon": report.horizon,
        "threshold": fraction_text(report.threshold),
        "max_prefix": report.max_prefix,
        "max_period": report.max_period,
        "worlds_checked": report.worlds_checked,
        "tail_mass": fraction_text(report.tail_mass),
        "passed": report.passed,
        "note": report.note,
        "failures": [
            {
                "world": failure.world.to_dict(),
                "truth": failure.truth,
                "reason": failure.reason,
                "final_mass": fraction_text(failure.final_mass)
                if failure.final_mass is not None else None,
            }
            for failure in report.failures
        ],
    }
