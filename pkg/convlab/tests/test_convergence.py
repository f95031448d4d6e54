"""
Tests for the exact convergence checks and achievability.

This module tests:
- Verdicts and witnesses of the built-in raven methods
- The stable_pointwise clause reporting
- Uniform convergence without stability on the first-observation problem
- Achievability reports for the built-in problems
- Relations between modes over random methods
"""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convlab.convergence import (
    Achievability,
    Mode,
    Verdict,
    achievability,
    canonical_induction,
    check_mode,
    check_pointwise,
    check_stability,
    check_stable_pointwise,
    check_uniform,
    random_method,
    random_problem,
    trial_rng,
)
from convlab.errors import InputError, InvalidModelError
from convlab.methods import (
    InferenceMethod,
    SUSPEND,
    apply,
    delayed_induction,
    occasional_counterinduction,
    ordinary_induction,
    skeptic,
)
from convlab.problems import (
    UltimatelyPeriodicWorld,
    first_observation_problem,
    raven_problem,
    truth_of_world,
)
from convlab.problems.builtins import BLACK, NONBLACK, YES


def hesitant_copy() -> InferenceMethod:
    """Answers "A" at once, suspends for one step, then copies the first observation."""
    return InferenceMethod(
        name="hesitant_copy",
        problem="first_observation",
        alphabet=("a", "b"),
        states=("m0", "ma1", "mb1", "ma", "mb"),
        initial="m0",
        transitions={
            ("m0", "a"): "ma1",
            ("m0", "b"): "mb1",
            ("ma1", "a"): "ma",
            ("ma1", "b"): "ma",
            ("mb1", "a"): "mb",
            ("mb1", "b"): "mb",
            ("ma", "a"): "ma",
            ("ma", "b"): "ma",
            ("mb", "a"): "mb",
            ("mb", "b"): "mb",
        },
        outputs={"m0": "A", "ma1": SUSPEND, "mb1": SUSPEND, "ma": "A", "mb": "B"},
    )


def late_slip() -> InferenceMethod:
    """Answers "A" on a-runs, slips to "B" for one step after the first b, then answers "A" again."""
    return InferenceMethod(
        name="late_slip",
        problem="first_observation",
        alphabet=("a", "b"),
        states=("m0", "m1", "m2", "m3", "mb"),
        initial="m0",
        transitions={
            ("m0", "a"): "m1",
            ("m0", "b"): "mb",
            ("m1", "a"): "m1",
            ("m1", "b"): "m2",
            ("m2", "a"): "m3",
            ("m2", "b"): "m3",
            ("m3", "a"): "m3",
            ("m3", "b"): "m3",
            ("mb", "a"): "mb",
            ("mb", "b"): "mb",
        },
        outputs={"m0": "A", "m1": "A", "m2": "B", "m3": "A", "mb": "B"},
    )


def _wrong_at(m, p, world, t):
    return apply(m, world.take(t)) != truth_of_world(p, world)


class TestRavenVerdicts:
    """Test verdicts of the named raven methods."""

    def setup_method(self):
        self.p = raven_problem()

    def test_ordinary_induction_converges_stably(self):
        """Test that ordinary induction passes pointwise, stable and stable_pointwise."""
        m = ordinary_induction()
        for mode in (Mode.POINTWISE, Mode.STABLE, Mode.STABLE_POINTWISE):
            assert check_mode(m, self.p, mode).passed, mode

    def test_ordinary_induction_not_uniform(self):
        """Test the uniform failure witness, its alternative world and its pump."""
        m = ordinary_induction()
        verdict = check_uniform(m, self.p)

        assert verdict.verdict == Verdict.FAIL
        first, second = verdict.witness_times
        assert (first, second) == (1, 2)
        assert _wrong_at(m, self.p, verdict.witness, first)
        assert _wrong_at(m, self.p, verdict.pumped_witness(), second)
        # the witness itself is already right again at the second time
        assert not _wrong_at(m, self.p, verdict.witness, second)
        assert verdict.alt_witness is not None
        assert verdict.alt_witness.take(first) == verdict.witness.take(first)
        assert truth_of_world(self.p, verdict.alt_witness) != truth_of_world(self.p, verdict.witness)

        start, length = verdict.pump
        prefix = verdict.witness.prefix
        for k in (1, 3):
            pumped = UltimatelyPeriodicWorld(
                prefix[:start] + prefix[start:start + length] * (k + 1) + prefix[start + length:],
                verdict.witness.cycle,
            )
            assert verdict.pumped_witness(k) == pumped
            assert _wrong_at(m, self.p, pumped, first + k * length)

    def test_skeptic_pointwise_witness(self):
        """Test the skeptic's pointwise witness: the all-black world from time 0."""
        verdict = check_pointwise(skeptic(), self.p)

        assert verdict.verdict == Verdict.FAIL
        assert verdict.witness == UltimatelyPeriodicWorld((), (BLACK,))
        assert verdict.witness_times == (0, 1)

    def test_occasional_counterinduction_unstable(self):
        """Test the stability witness for a flip at depth 2."""
        m = occasional_counterinduction([2])
        verdict = check_stability(m, self.p)

        assert verdict.verdict == Verdict.FAIL
        assert verdict.witness == UltimatelyPeriodicWorld((BLACK, BLACK, BLACK), (BLACK,))
        assert verdict.witness_times == (0, 2)
        assert truth_of_world(self.p, verdict.witness) == YES
        assert check_pointwise(m, self.p).passed

    def test_stable_pointwise_names_failing_clause(self):
        """Test that stable_pointwise reports which clause failed."""
        unstable = check_stable_pointwise(occasional_counterinduction([2]), self.p)
        assert unstable.clause == Mode.STABLE

        divergent = check_stable_pointwise(skeptic(), self.p)
        assert divergent.clause == Mode.POINTWISE
        assert divergent.witness == UltimatelyPeriodicWorld((), (BLACK,))

    def test_delayed_induction_converges_stably(self):
        """Test that suspending first does not break stability."""
        assert check_stable_pointwise(delayed_induction(4), self.p).passed

    def test_alphabet_mismatch(self):
        """Test that checking a method on a foreign problem raises InputError."""
        with pytest.raises(InputError):
            check_pointwise(ordinary_induction(), first_observation_problem())


class TestFirstObservation:
    """Test uniform convergence and stability on the first-observation problem."""

    def setup_method(self):
        self.p = first_observation_problem()

    def test_uniform_without_stability(self):
        """Test a method that converges uniformly yet retracts a true answer."""
        m = hesitant_copy()

        uniform = check_uniform(m, self.p)
        assert uniform.passed
        assert uniform.modulus == 2

        stability = check_stability(m, self.p)
        assert stability.verdict == Verdict.FAIL
        assert stability.witness == UltimatelyPeriodicWorld(("a", "a"), ("a",))
        assert stability.witness_times == (0, 1)

    def test_modulus_is_exact(self):
        """Test that the method is right on every sequence from the modulus on."""
        m = hesitant_copy()
        for length in range(2, 6):
            for e in itertools.product(("a", "b"), repeat=length):
                assert apply(m, e) == e[0].upper()
        assert apply(m, ("a",)) == SUSPEND

    def test_canonical_induction_modulus(self):
        """Test that canonical induction converges uniformly after one observation."""
        verdict = check_uniform(canonical_induction(self.p), self.p)
        assert verdict.passed
        assert verdict.modulus == 1

    def test_single_late_error_fails_uniform(self):
        """Test a method wrong exactly once per world, at an unbounded time."""
        m = late_slip()
        verdict = check_uniform(m, self.p)

        assert check_pointwise(m, self.p).passed
        assert verdict.verdict == Verdict.FAIL
        assert verdict.witness == UltimatelyPeriodicWorld(("a", "a", "b", "a"), ("a",))
        assert verdict.witness_times == (3, 4)
        assert verdict.pump == (1, 1)
        assert verdict.alt_witness is None

        for k, world in enumerate([verdict.witness, verdict.pumped_witness(), verdict.pumped_witness(2)]):
            errors = [t for t in range(12) if _wrong_at(m, self.p, world, t)]
            assert errors == [3 + k]

    def test_pumped_witness_needs_pump(self):
        """Test that verdicts without a pump refuse to pump."""
        with pytest.raises(ValueError):
            check_stability(hesitant_copy(), self.p).pumped_witness()


class TestAchievability:
    """Test problem-level achievability."""

    def test_raven(self):
        """Test that uniform convergence is impossible but stable_pointwise is reached."""
        report = achievability(raven_problem())

        uniform = report.modes[Mode.UNIFORM]
        assert uniform.status == Achievability.UNACHIEVABLE
        assert uniform.certificate == "q0"
        assert report.highest_achievable == Mode.STABLE_POINTWISE
        assert report.modes[Mode.STABLE_POINTWISE].witness_method.name == "canonical_induction"
        assert report.achievable() == [Mode.STABLE_POINTWISE, Mode.POINTWISE]

    def test_first_observation(self):
        """Test that uniform convergence is achievable with modulus 1."""
        report = achievability(first_observation_problem())
        uniform = report.modes[Mode.UNIFORM]

        assert report.highest_achievable == Mode.UNIFORM
        assert uniform.witness_method.name == "canonical_induction"
        assert uniform.verdict.modulus == 1
        assert Mode.UNIFORM.display_name == "uniform convergence"

    def test_invalid_problem(self):
        """Test that an invalid problem raises InvalidModelError."""
        p = raven_problem()
        broken = type(p)(
            name="broken",
            alphabet=p.alphabet,
            hypotheses=p.hypotheses,
            truth=type(p.truth)(
                states=("q0",),
                initial="q0",
                transitions={("q0", BLACK): "q0"},
                labels={"q0": YES},
            ),
        )
        with pytest.raises(InvalidModelError):
            achievability(broken)

    def test_canonical_induction_matches_ordinary_induction(self):
        """Test that on the raven problem the two methods agree to depth 10."""
        canonical = canonical_induction(raven_problem())
        ordinary = ordinary_induction()
        for length in range(11):
            for e in itertools.product((BLACK, NONBLACK), repeat=length):
                assert apply(canonical, e) == apply(ordinary, e)


class TestModeRelations:
    """Quantified relations between modes over random methods and problems."""

    @settings(max_examples=150, deadline=None)
    @given(seed=st.integers(0, 100_000))
    def test_uniform_implies_pointwise(self, seed):
        """Test that a uniform pass always comes with a pointwise pass."""
        rng = trial_rng(seed, 0)
        p = random_problem(rng)
        m = random_method(rng, p)
        if check_uniform(m, p).passed:
            assert check_pointwise(m, p).passed

    @settings(max_examples=150, deadline=None)
    @given(seed=st.integers(0, 100_000))
    def test_stable_pointwise_is_conjunction(self, seed):
        """Test that stable_pointwise passes iff both components pass."""
        rng = trial_rng(seed, 1)
        p = random_problem(rng)
        m = random_method(rng, p)
        both = check_pointwise(m, p).passed and check_stability(m, p).passed
        assert check_stable_pointwise(m, p).passed == both

    @settings(max_examples=150, deadline=None)
    @given(seed=st.integers(0, 100_000))
    def test_witnesses_exhibit_their_failures(self, seed):
        """Test that every failing verdict's witness shows the failure it claims."""
        rng = trial_rng(seed, 2)
        p = random_problem(rng)
        m = random_method(rng, p)

        pointwise = check_pointwise(m, p)
        if not pointwise.passed:
            for t in pointwise.witness_times:
                assert _wrong_at(m, p, pointwise.witness, t)

        stability = check_stability(m, p)
        if not stability.passed:
            i, j = stability.witness_times
            truth = truth_of_world(p, stability.witness)
            assert i < j
            assert apply(m, stability.witness.take(i)) == truth
            assert apply(m, stability.witness.take(j)) != truth

        uniform = check_uniform(m, p)
        if not uniform.passed:
            first, second = uniform.witness_times
            assert _wrong_at(m, p, uniform.witness, first)
            assert _wrong_at(m, p, uniform.pumped_witness(), second)
            assert second - first == uniform.pump[1]
