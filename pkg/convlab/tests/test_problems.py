"""
Tests for empirical problems.

This module tests:
- Validation of truth automata (mixed SCCs, unreachable states, totality)
- Runs, truth of worlds and possible truths on the raven problem
- Unrolling invariance and monotone possible truths on random problems
"""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convlab.convergence.random_automata import random_problem, trial_rng
from convlab.errors import InputError
from convlab.problems import (
    EmpiricalProblem,
    Hypothesis,
    TruthAutomaton,
    UltimatelyPeriodicWorld,
    first_observation_problem,
    possible_truths,
    raven_problem,
    run_state,
    truth_of_world,
    validate_problem,
)
from convlab.problems.builtins import BLACK, NO, NONBLACK, YES


def _problem(transitions, labels, states=("q0", "q1"), initial="q0"):
    return EmpiricalProblem(
        name="test",
        alphabet=(BLACK, NONBLACK),
        hypotheses=(Hypothesis(YES), Hypothesis(NO)),
        truth=TruthAutomaton(states=states, initial=initial, transitions=transitions, labels=labels),
    )


def _brute_force_truth(p, world):
    """Simulate well past the lead-in and read the label at the last cycle boundary."""
    steps = len(world.prefix) + 2 * len(p.truth.states) * len(world.cycle)
    state = p.truth.initial
    for t in range(steps):
        state = p.truth.step(state, world.symbol_at(t))
    while (steps - len(world.prefix)) % len(world.cycle):
        state = p.truth.step(state, world.symbol_at(steps))
        steps += 1
    return p.truth.labels[state]


class TestValidation:
    """Test validate_problem."""

    def test_raven_problem_is_valid(self):
        """Test that the raven problem has no violations."""
        p = raven_problem()
        assert validate_problem(p) == []
        assert len(p.truth.states) == 2

    def test_mixed_scc(self):
        """Test that an SCC carrying two labels is reported with its members."""
        p = _problem(
            transitions={
                ("q0", BLACK): "q0",
                ("q0", NONBLACK): "q1",
                ("q1", BLACK): "q0",
                ("q1", NONBLACK): "q1",
            },
            labels={"q0": YES, "q1": NO},
        )
        violations = validate_problem(p)

        assert [v.code for v in violations] == ["mixed_scc"]
        assert set(violations[0].states) == {"q0", "q1"}

    def test_unreachable_state(self):
        """Test that a state nothing leads to is reported."""
        p = _problem(
            states=("q0", "q1", "q2"),
            transitions={
                ("q0", BLACK): "q0",
                ("q0", NONBLACK): "q1",
                ("q1", BLACK): "q1",
                ("q1", NONBLACK): "q1",
                ("q2", BLACK): "q1",
                ("q2", NONBLACK): "q1",
            },
            labels={"q0": YES, "q1": NO, "q2": NO},
        )
        violations = validate_problem(p)

        assert [v.code for v in violations] == ["unreachable_state"]
        assert violations[0].states == ("q2",)

    def test_missing_transition_and_unknown_label(self):
        """Test totality and label checks."""
        p = _problem(
            transitions={("q0", BLACK): "q0", ("q0", NONBLACK): "q1", ("q1", BLACK): "q1"},
            labels={"q0": YES, "q1": "maybe"},
        )
        codes = {v.code for v in validate_problem(p)}

        assert "missing_transition" in codes
        assert "unknown_label" in codes

    def test_too_few_hypotheses(self):
        """Test that a single hypothesis is rejected."""
        p = EmpiricalProblem(
            name="lonely",
            alphabet=("a",),
            hypotheses=(Hypothesis("h"),),
            truth=TruthAutomaton(("s",), "s", {("s", "a"): "s"}, {"s": "h"}),
        )
        assert [v.code for v in validate_problem(p)] == ["too_few_hypotheses"]


class TestRaven:
    """Test runs and truths on the raven problem."""

    def setup_method(self):
        self.p = raven_problem()

    def test_run_state(self):
        """Test the states reached by short evidence."""
        assert run_state(self.p, (BLACK, BLACK)) == "q0"
        assert run_state(self.p, (BLACK, NONBLACK)) == "q1"
        assert run_state(self.p, ()) == "q0"

    def test_run_state_rejects_foreign_symbols(self):
        """Test that a symbol outside the alphabet raises InputError."""
        with pytest.raises(InputError):
            run_state(self.p, (BLACK, "white"))

    def test_truth_of_world(self):
        """Test the truths of the three example worlds."""
        assert truth_of_world(self.p, UltimatelyPeriodicWorld((), (BLACK,))) == YES
        assert truth_of_world(
            self.p, UltimatelyPeriodicWorld((BLACK, BLACK, NONBLACK), (BLACK,))
        ) == NO
        assert truth_of_world(self.p, UltimatelyPeriodicWorld((NONBLACK,), (NONBLACK,))) == NO

    def test_possible_truths(self):
        """Test the labels still reachable after evidence."""
        assert possible_truths(self.p, (BLACK,)) == {YES, NO}
        assert possible_truths(self.p, (NONBLACK,)) == {NO}
        assert possible_truths(self.p, ()) == {YES, NO}

    def test_possible_truths_exhaustive(self):
        """Test that {no} is possible exactly after a counterexample, to depth 8."""
        for length in range(9):
            for e in itertools.product((BLACK, NONBLACK), repeat=length):
                expected = {NO} if NONBLACK in e else {YES, NO}
                assert possible_truths(self.p, e) == expected

    def test_world_requires_cycle(self):
        """Test that an empty cycle is rejected."""
        with pytest.raises(InputError):
            UltimatelyPeriodicWorld((BLACK,), ())

    def test_world_take_and_unroll(self):
        """Test take(), symbol_at() and unrolled()."""
        w = UltimatelyPeriodicWorld((NONBLACK,), (BLACK, NONBLACK))
        assert w.take(4) == (NONBLACK, BLACK, NONBLACK, BLACK)
        assert w.symbol_at(6) == NONBLACK
        assert w.unrolled(2).prefix == (NONBLACK, BLACK, NONBLACK, BLACK, NONBLACK)
        assert w.unrolled(2).take(9) == w.take(9)


class TestFirstObservation:
    """Test the problem whose truth is fixed by the first observation."""

    def test_valid_and_settled(self):
        """Test validity and that the truth settles after one observation."""
        p = first_observation_problem()
        assert validate_problem(p) == []
        assert possible_truths(p, ()) == {"A", "B"}
        assert possible_truths(p, ("b",)) == {"B"}
        assert truth_of_world(p, UltimatelyPeriodicWorld(("a",), ("b",))) == "A"


worlds = st.builds(
    UltimatelyPeriodicWorld,
    st.lists(st.sampled_from(("a", "b")), max_size=6).map(tuple),
    st.lists(st.sampled_from(("a", "b")), min_size=1, max_size=3).map(tuple),
)


class TestProperties:
    """Quantified properties over random problems and worlds."""

    @settings(max_examples=200, deadline=None)
    @given(seed=st.integers(0, 10_000), world=worlds, times=st.integers(1, 3))
    def test_truth_invariant_under_unrolling(self, seed, world, times):
        """Test that unrolling the cycle into the prefix never changes the truth."""
        p = random_problem(trial_rng(seed, 0))
        assert truth_of_world(p, world.unrolled(times)) == truth_of_world(p, world)

    @settings(max_examples=200, deadline=None)
    @given(seed=st.integers(0, 10_000), world=worlds)
    def test_truth_agrees_with_simulation(self, seed, world):
        """Test truth_of_world against a long direct simulation."""
        p = random_problem(trial_rng(seed, 1))
        assert truth_of_world(p, world) == _brute_force_truth(p, world)

    @settings(max_examples=200, deadline=None)
    @given(
        seed=st.integers(0, 10_000),
        e=st.lists(st.sampled_from(("a", "b")), max_size=6).map(tuple),
        x=st.sampled_from(("a", "b")),
    )
    def test_possible_truths_shrink(self, seed, e, x):
        """Test that extending evidence never adds a possible truth."""
        p = random_problem(trial_rng(seed, 2))
        assert possible_truths(p, e + (x,)) <= possible_truths(p, e)

    @settings(max_examples=50, deadline=None)
    @given(seed=st.integers(0, 10_000))
    def test_random_problems_are_valid(self, seed):
        """Test that generated problems pass validation."""
        assert validate_problem(random_problem(trial_rng(seed, 3))) == []
