"""
Command-line entry point.

Exit codes: 0 every check passed, 1 a property was violated, 2 usage or
configuration error (including report schema mismatches), 3 an input
file failed to parse or validate. Human summaries go to standard output,
logs and diagnostics to standard error, machine-readable reports to files.
"""

import json
import logging
import sys
from enum import IntEnum
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import click
from dotenv import load_dotenv

from convlab import __version__
from convlab.bayes import builtin_prior, consistency_verdict, read_prior
from convlab.bayes.priors import PRIOR_FACTORIES
from convlab.config import Config, ConfigurationError, get_config, reload_config
from convlab.convergence import (
    Mode,
    achievability,
    brute_force_oracle,
    check_mode,
    theorem_property_test,
)
from convlab.dsl import LoadedDocument, load_file, resolve_problem
from convlab.errors import ConvlabError, DslError, InputError, PriorError, ReportSchemaError
from convlab.methods import counterinductive_nodes
from convlab.methods.models import InferenceMethod
from convlab.problems.models import EmpiricalProblem
from convlab.registry import parse_method_spec
from convlab.reports import REPORT_COLUMNS, build_envelope, merge_reports, write_csv, write_report, write_svg
from convlab.serialization import (
    achievability_to_dict,
    bayes_summary,
    consistency_rows,
    consistency_summary,
    counterinduction_to_dict,
    method_to_dict,
    oracle_to_dict,
    problem_to_dict,
    progressiveness_rows,
    progressiveness_summary,
    theorem_to_dict,
    trace_rows,
    verdict_to_dict,
)
from convlab.statistics import (
    DEFAULT_N_GRID,
    GT_HALF,
    LE_HALF,
    ConsistencySpec,
    Urn,
    constant_estimator,
    constant_test,
    frequency_estimate,
    frequency_threshold_test,
    hoeffding_sample_size,
    monte_carlo_consistency,
    odd_n_adversarial_test,
    parse_n_grid,
    progressiveness_curve,
)

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s - %(message)s"
DEFAULT_P_GRID = "0:1:1/20"


class ExitCode(IntEnum):
    PASS = 0
    VIOLATED = 1
    USAGE = 2
    PARSE = 3


class CodedError(click.ClickException):
    """A fatal error carrying its exit code."""

    def __init__(self, message: str, exit_code: int = ExitCode.USAGE):
        super().__init__(message)
        self.exit_code = int(exit_code)


def _configure_logging(level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format=LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )


def _load_documents(paths: Sequence[str]) -> List[Tuple[str, LoadedDocument]]:
    """Load .cvl files, echoing every diagnostic to standard error."""
    loaded = []
    failed = False
    for path in paths:
        try:
            loaded.append((path, load_file(path)))
        except DslError as exc:
            failed = True
            source = Path(path).read_text(encoding="utf-8")
            for diagnostic in exc.diagnostics:
                click.echo(diagnostic.render(source, path), err=True)
                if diagnostic.suggestion:
                    click.echo(f"  suggestion: {diagnostic.suggestion}", err=True)
    if failed:
        raise CodedError("input file(s) failed to parse or validate", ExitCode.PARSE)
    return loaded


def _find_problem(documents: Sequence[Tuple[str, LoadedDocument]], name: str) -> EmpiricalProblem:
    for _, loaded in documents:
        if name in loaded.problems:
            return loaded.problems[name]
    problem = resolve_problem(None, name)
    if problem is None:
        raise CodedError(f"Unknown problem '{name}'")
    return problem


def _run_config(**flags: Any) -> Config:
    try:
        return get_config().with_overrides(**flags)
    except ConfigurationError as exc:
        raise CodedError(str(exc)) from exc


def _require_seed(config: Config) -> int:
    if config.SEED is None:
        raise CodedError("A master seed is required: pass --seed or set CONVLAB_SEED")
    return config.SEED


def _write(config: Config, envelope: Dict[str, Any], stem: str) -> None:
    for path in write_report(envelope, Path(config.OUT), stem, config.FORMATS):
        click.echo(f"wrote {path}")


def _safe_stem(*parts: str) -> str:
    return "_".join(part.replace("/", "_").replace(":", "-") for part in parts if part)


def seed_option(func):
    return click.option("--seed", type=int, default=None, help="Master seed (CONVLAB_SEED)")(func)


def output_options(func):
    func = click.option("--format", "format_", default=None, help="Comma-separated: json,csv,svg")(func)
    func = click.option("--out", default=None, help="Output directory (CONVLAB_OUT)")(func)
    return func


@click.group()
@click.option(
    "--config", "config_path",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="JSON file with settings keyed by flag name",
)
@click.option("--log-level", default=None, help="DEBUG, INFO, WARNING, ERROR or CRITICAL")
@click.version_option(__version__, prog_name="convlab")
def cli(config_path: Optional[str], log_level: Optional[str]):
    """Convergentist evaluation of inference methods."""
    file_values: Dict[str, Any] = {}
    if config_path:
        try:
            file_values = json.loads(Path(config_path).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise CodedError(f"Config file {config_path} is not valid JSON: {exc}") from exc
        if not isinstance(file_values, dict):
            raise CodedError(f"Config file {config_path} must hold a JSON object")
    try:
        config = reload_config(file_values).with_overrides(log_level=log_level)
    except ConfigurationError as exc:
        raise CodedError(str(exc)) from exc
    _configure_logging(config.LOG_LEVEL)


@cli.command()
@click.argument("files", nargs=-1, type=click.Path(exists=True, dir_okay=False))
@click.option("--method", "method_specs", multiple=True, help="Built-in method spec, or a method declared in FILES")
@click.option("--problem", "problem_name", default="raven", show_default=True,
              help="Problem for canonical_induction / settled_induction specs")
@click.option("--mode", "modes", multiple=True, type=click.Choice([mode.value for mode in Mode]),
              help="Modes to check (default: all)")
@click.option("--oracle", "oracle_depth", type=click.IntRange(min=1), default=None,
              help="Cross-check with brute-force enumeration up to this prefix length")
@click.option("--oracle-period", type=click.IntRange(min=1), default=2, show_default=True)
@click.option("--scan-depth", type=click.IntRange(min=0), default=10, show_default=True,
              help="Longest evidence listed by the counterinduction scan")
@output_options
@click.pass_context
def check(ctx, files, method_specs, problem_name, modes, oracle_depth, oracle_period, scan_depth,
          out, format_):
    """Decide which modes of convergence each method achieves."""
    config = _run_config(out=out, format=format_)
    documents = _load_documents(files)

    methods: List[InferenceMethod] = []
    declared = {name: m for _, loaded in documents for name, m in loaded.methods.items()}
    if method_specs:
        for spec in method_specs:
            if spec in declared:
                methods.append(declared[spec])
                continue
            try:
                methods.append(parse_method_spec(spec, _find_problem(documents, problem_name)))
            except InputError as exc:
                raise CodedError(str(exc)) from exc
    else:
        methods = list(declared.values())
    if not methods:
        raise CodedError("Nothing to check: give .cvl files declaring methods, or --method")

    selected = [Mode(mode) for mode in modes] or list(Mode)
    all_passed = True
    for method in methods:
        problem = _find_problem(documents, method.problem)
        try:
            verdicts = [check_mode(method, problem, mode) for mode in selected]
            scan = counterinductive_nodes(method, problem, scan_depth)
        except ConvlabError as exc:
            raise CodedError(str(exc)) from exc

        summary: Dict[str, Any] = {
            "method": method_to_dict(method),
            "problem": problem_to_dict(problem),
            "verdicts": [verdict_to_dict(v) for v in verdicts],
            "counterinduction": counterinduction_to_dict(scan),
        }
        rows = [
            {
                "method": method.name,
                "problem": problem.name,
                "mode": v.mode.value,
                "verdict": v.verdict.value,
                "witness": str(v.witness) if v.witness else None,
                "witness_times": list(v.witness_times) if v.witness_times else None,
                "modulus": v.modulus,
            }
            for v in verdicts
        ]
        for v in verdicts:
            line = f"{method.name} on {problem.name}: {v.mode.value} {v.verdict.value}"
            if v.witness is not None:
                line += f" (witness {v.witness}, times {v.witness_times[0]},{v.witness_times[1]})"
            elif v.modulus is not None:
                line += f" (modulus {v.modulus})"
            click.echo(line)
            all_passed = all_passed and v.passed
        if scan.nodes:
            click.echo(
                f"{method.name} on {problem.name}: counterinductive at "
                f"{len(scan.nodes)} evidence sequence(s) up to length {scan_depth}, first {scan.nodes[0]}"
            )

        if oracle_depth is not None:
            report = brute_force_oracle(
                method, problem, oracle_depth, oracle_period, max_worlds=config.ORACLE_MAX_WORLDS
            )
            summary["oracle"] = oracle_to_dict(report)
            if not report.complete:
                logger.warning(
                    f"Oracle stopped after {report.worlds_checked} worlds; coverage is partial"
                )
            for v in verdicts:
                if v.passed and report.found(v.mode):
                    logger.error(
                        f"Oracle found a {v.mode.value} violation of '{method.name}' "
                        f"that the checker passed"
                    )
                    all_passed = False
            click.echo(
                f"oracle: {report.worlds_checked} worlds, "
                + ", ".join(f"{mode.value}={count}" for mode, count in report.counts.items())
            )

        run = {**config.as_dict(), "command": "check", "method": method.name,
               "problem": problem.name, "modes": [m.value for m in selected],
               "oracle": [oracle_depth, oracle_period]}
        envelope = build_envelope("check", rows, run, summary=summary)
        _write(config, envelope, _safe_stem("check", method.name, problem.name))

    ctx.exit(ExitCode.PASS if all_passed else ExitCode.VIOLATED)


@cli.command()
@click.argument("files", nargs=-1, type=click.Path(exists=True, dir_okay=False))
@click.option("--problem", "problem_names", multiple=True,
              help="Problem to evaluate (default: every problem in FILES, else raven)")
@output_options
@click.pass_context
def achieve(ctx, files, problem_names, out, format_):
    """Find the highest achievable mode of convergence of each problem."""
    config = _run_config(out=out, format=format_)
    documents = _load_documents(files)
    names = list(problem_names) or [
        name for _, loaded in documents for name in loaded.problems
    ] or ["raven"]

    for name in names:
        problem = _find_problem(documents, name)
        try:
            report = achievability(problem)
        except ConvlabError as exc:
            raise CodedError(str(exc), ExitCode.PARSE) from exc

        highest = report.highest_achievable
        if highest is None:
            click.echo(f"{problem.name}: no mode shown achievable")
        else:
            entry = report.modes[highest]
            line = f"{problem.name}: highest achievable: {highest.display_name}"
            if highest == Mode.UNIFORM:
                line += f", modulus {entry.verdict.modulus}"
            click.echo(f"{line} (witness: {entry.witness_method.name})")

        rows = [
            {
                "problem": problem.name,
                "mode": mode.value,
                "status": report.modes[mode].status.value,
                "witness_method": report.modes[mode].witness_method.name
                if report.modes[mode].witness_method else None,
                "certificate": report.modes[mode].certificate,
            }
            for mode in report.hierarchy
        ]
        run = {**config.as_dict(), "command": "achieve", "problem": problem.name}
        envelope = build_envelope("achieve", rows, run, summary=achievability_to_dict(report))
        _write(config, envelope, _safe_stem("achieve", problem.name))


@cli.group()
def simulate():
    """Monte Carlo and exact checks of statistical and Bayesian standards."""


def _p_grid(text: str) -> List[Fraction]:
    try:
        if ":" in text:
            start, stop, step = (Fraction(part) for part in text.split(":"))
            if step <= 0:
                raise CodedError(f"p-grid step must be positive, got {step}")
            grid = []
            value = start
            while value <= stop:
                grid.append(value)
                value += step
            return grid
        return [Fraction(part) for part in text.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise CodedError(f"Malformed p-grid '{text}'") from exc


@simulate.command()
@seed_option
@click.option("--replicates", type=int, default=None)
@click.option("--epsilon", default=None)
@click.option("--delta", default=None)
@click.option("--coverage-margin", default=None)
@click.option("--n", "sample_size", default="auto", show_default=True,
              help="Sample size, or 'auto' for the Hoeffding bound")
@click.option("--p-grid", default=DEFAULT_P_GRID, show_default=True,
              help="start:stop:step or comma-separated rationals")
@click.option("--estimator", default="frequency", show_default=True,
              help="'frequency' or 'constant:VALUE'")
@output_options
@click.pass_context
def consistency(ctx, seed, replicates, epsilon, delta, coverage_margin, sample_size, p_grid,
                estimator, out, format_):
    """Check the estimator's coverage against epsilon/delta consistency."""
    config = _run_config(
        seed=seed, replicates=replicates, epsilon=epsilon, delta=delta,
        coverage_margin=coverage_margin, out=out, format=format_,
    )
    master_seed = _require_seed(config)
    spec = ConsistencySpec(config.EPSILON, config.DELTA)
    try:
        n = hoeffding_sample_size(spec) if sample_size == "auto" else int(sample_size)
    except ValueError as exc:
        raise CodedError(f"--n must be an integer or 'auto', got '{sample_size}'") from exc

    if estimator == "frequency":
        estimate, name = frequency_estimate, "frequency"
    elif estimator.startswith("constant:"):
        try:
            estimate = constant_estimator(estimator.partition(":")[2])
        except InputError as exc:
            raise CodedError(str(exc)) from exc
        name = estimate.__name__
    else:
        raise CodedError(f"Unknown estimator '{estimator}'")

    try:
        report = monte_carlo_consistency(
            estimate, _p_grid(p_grid), spec, n, config.REPLICATES, master_seed, name=name
        )
    except InputError as exc:
        raise CodedError(str(exc)) from exc

    certified = report.certified(config.COVERAGE_MARGIN)
    click.echo(
        f"{name}: n={n} (Hoeffding {report.analytic_n}), min coverage "
        f"{float(report.min_coverage):.4f}, required {float(1 - spec.delta - config.COVERAGE_MARGIN):.4f}: "
        f"{'certified' if certified else 'NOT certified'}"
    )
    if not certified:
        logger.warning(f"Consistency of '{name}' not certified at n={n}")

    run = {**config.as_dict(), "command": "simulate consistency", "n": n,
           "p_grid": p_grid, "estimator": estimator}
    envelope = build_envelope(
        "consistency", consistency_rows(report), run, master_seed=master_seed,
        prng=report.prng, summary=consistency_summary(report, config.COVERAGE_MARGIN),
    )
    _write(config, envelope, _safe_stem("consistency", name))
    ctx.exit(ExitCode.PASS if certified else ExitCode.VIOLATED)


TEST_CHOICES = ("frequency_threshold", "odd_n_adversarial", f"constant:{GT_HALF}", f"constant:{LE_HALF}")


@simulate.command()
@seed_option
@click.option("--replicates", type=int, default=None)
@click.option("--drop-threshold", default=None)
@click.option("--test", "test_name", type=click.Choice(TEST_CHOICES), default="frequency_threshold",
              show_default=True)
@click.option("--p", "p_text", default="0.6", show_default=True, help="Urn proportion")
@click.option("--n-grid", default=DEFAULT_N_GRID, show_default=True,
              help="start:stop:step (stop inclusive) or comma-separated sizes")
@output_options
@click.pass_context
def progressiveness(ctx, seed, replicates, drop_threshold, test_name, p_text, n_grid, out, format_):
    """Track the chance of outputting the truth as the sample grows."""
    config = _run_config(
        seed=seed, replicates=replicates, drop_threshold=drop_threshold,
        out=out, format=format_,
    )
    master_seed = _require_seed(config)
    if test_name == "frequency_threshold":
        test = frequency_threshold_test()
    elif test_name == "odd_n_adversarial":
        test = odd_n_adversarial_test()
    else:
        test = constant_test(test_name.partition(":")[2])

    try:
        report = progressiveness_curve(
            test, Urn(p_text), parse_n_grid(n_grid), config.REPLICATES, master_seed,
            drop_threshold=config.DROP_THRESHOLD,
        )
    except InputError as exc:
        raise CodedError(str(exc)) from exc

    line = f"{test.name} at p={report.p}: max drop {float(report.max_drop):.4f}"
    if report.drop_at:
        line += f" between n={report.drop_at[0]} and n={report.drop_at[1]}"
    click.echo(f"{line}: {'FLAGGED' if report.flagged else 'progressive'}")

    run = {**config.as_dict(), "command": "simulate progressiveness", "test": test_name,
           "p": str(report.p), "n_grid": n_grid}
    envelope = build_envelope(
        "progressiveness", progressiveness_rows(report), run, master_seed=master_seed,
        prng=report.prng, summary=progressiveness_summary(report),
    )
    _write(config, envelope, _safe_stem("progressiveness", test.name))
    ctx.exit(ExitCode.VIOLATED if report.flagged else ExitCode.PASS)


@simulate.command()
@click.option("--prior", "prior_name", type=click.Choice(sorted(PRIOR_FACTORIES)), default="geometric",
              show_default=True)
@click.option("--prior-file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="JSON prior; overrides --prior")
@click.option("--threshold", default=None)
@click.option("--horizon", type=int, default=None)
@click.option("--prior-truncation", type=int, default=None)
@click.option("--problem", "problem_name", default="raven", show_default=True)
@click.option("--max-prefix", type=click.IntRange(min=0), default=8, show_default=True)
@click.option("--max-period", type=click.IntRange(min=1), default=2, show_default=True)
@output_options
@click.pass_context
def bayes(ctx, prior_name, prior_file, threshold, horizon, prior_truncation, problem_name,
          max_prefix, max_period, out, format_):
    """Check that posteriors on the truth reach the threshold in every world."""
    config = _run_config(
        threshold=threshold, horizon=horizon, prior_truncation=prior_truncation,
        out=out, format=format_,
    )
    try:
        prior = read_prior(prior_file) if prior_file else builtin_prior(prior_name, config.PRIOR_TRUNCATION)
    except PriorError as exc:
        raise CodedError(str(exc), ExitCode.PARSE) from exc
    problem = _find_problem((), problem_name)

    try:
        report = consistency_verdict(
            prior, problem, config.HORIZON, config.THRESHOLD, max_prefix=max_prefix, max_period=max_period
        )
    except InputError as exc:
        raise CodedError(str(exc)) from exc

    click.echo(
        f"{prior.name} on {problem.name}: {report.worlds_checked} worlds, horizon {report.horizon}, "
        f"threshold {float(report.threshold):.4f}: "
        f"{'consistent' if report.passed else f'{len(report.failures)} failing world(s)'}"
    )
    for failure in report.failures:
        click.echo(f"  {failure.reason}: {failure.world} (truth {failure.truth})")

    rows = [row for trace in report.traces for row in trace_rows(trace)]
    run = {**config.as_dict(), "command": "simulate bayes", "prior": prior.name,
           "problem": problem.name, "max_prefix": max_prefix, "max_period": max_period}
    envelope = build_envelope("bayes", rows, run, summary=bayes_summary(report))
    _write(config, envelope, _safe_stem("bayes", prior.name))
    ctx.exit(ExitCode.PASS if report.passed else ExitCode.VIOLATED)


@cli.command()
@click.argument("inputs", nargs=-1, required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--name", default="merged", show_default=True, help="Output file stem")
@output_options
@click.pass_context
def report(ctx, inputs, name, out, format_):
    """Merge JSON reports of one kind into CSV (and SVG charts)."""
    config = _run_config(out=out, format=format_)
    try:
        kind, rows = merge_reports(inputs)
    except ReportSchemaError as exc:
        raise CodedError(str(exc), ExitCode.USAGE) from exc

    out_dir = Path(config.OUT)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = [write_csv(out_dir / f"{name}.csv", rows, ("source",) + REPORT_COLUMNS[kind])]
    if "svg" in config.FORMATS:
        svg_path = write_svg(out_dir / f"{name}.svg", kind, rows)
        if svg_path is not None:
            written.append(svg_path)
    for path in written:
        click.echo(f"wrote {path}")
    click.echo(f"merged {len(inputs)} '{kind}' report(s), {len(rows)} rows")


@cli.command()
@seed_option
@click.option("--trials", type=click.IntRange(min=1), default=10000, show_default=True)
@click.option("--max-states", type=click.IntRange(min=1), default=5, show_default=True)
@output_options
@click.pass_context
def theorem(ctx, seed, trials, max_states, out, format_):
    """Check that stable pointwise convergence rules out counterinduction on random methods."""
    config = _run_config(seed=seed, out=out, format=format_)
    master_seed = _require_seed(config)
    result = theorem_property_test(trials, master_seed, max_states=max_states)

    click.echo(
        f"{result.trials} random methods, {result.antecedent_true} converge stably and pointwise, "
        f"{len(result.counterexamples)} counterexample(s): {'holds' if result.holds else 'VIOLATED'}"
    )
    row = {
        "trials": result.trials,
        "seed": result.seed,
        "max_states": result.max_states,
        "antecedent_true": result.antecedent_true,
        "counterexamples": len(result.counterexamples),
        "holds": result.holds,
    }
    run = {**config.as_dict(), "command": "theorem", "trials": trials, "max_states": max_states}
    envelope = build_envelope(
        "theorem", [row], run, master_seed=master_seed, summary=theorem_to_dict(result)
    )
    _write(config, envelope, "theorem")
    ctx.exit(ExitCode.PASS if result.holds else ExitCode.VIOLATED)


def main(args=None, env_file: Optional[str] = None, standalone_mode: bool = True):
    """Console entry point: honour .env, then dispatch."""
    load_dotenv(env_file)
    return cli.main(args=args, prog_name="convlab", obj={}, standalone_mode=standalone_mode)


if __name__ == "__main__":
    main()
