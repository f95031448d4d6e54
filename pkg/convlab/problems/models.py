"""
Data model for empirical problems.

An empirical problem is a finite automaton over an observation alphabet
whose states carry hypothesis labels. Every infinite branch (possible
world) is eventually trapped in one cyclic strongly connected component,
and the label of that component is the hypothesis true in the world.
Worlds excluded by the background assumption simply have no branch.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, List, Mapping, Optional, Set, Tuple

from convlab.automata.graph import (
    cyclic_nodes,
    reachable,
    strongly_connected_components,
)
from convlab.errors import InputError

Observation = str
State = str
HypothesisLabel = str
EvidenceSequence = Tuple[Observation, ...]


@dataclass(frozen=True)
class Hypothesis:
    """
    A competing hypothesis.

    Attributes:
        label: Identifier used in automata and method outputs (e.g. "yes")
        name: Human-readable statement
    """
    label: HypothesisLabel
    name: str = ""


@dataclass(frozen=True)
class UltimatelyPeriodicWorld:
    """
    The infinite branch prefix . cycle . cycle . ...

    Attributes:
        prefix: Finite lead-in (possibly empty)
        cycle: Non-empty repeating block
    """
    prefix: EvidenceSequence
    cycle: EvidenceSequence

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "cycle", tuple(self.cycle))
        if not self.cycle:
            raise InputError("A world's cycle must contain at least one observation")

    def symbol_at(self, t: int) -> Observation:
        """Observation number t (0-based)."""
        if t < len(self.prefix):
            return self.prefix[t]
        return self.cycle[(t - len(self.prefix)) % len(self.cycle)]

    def take(self, n: int) -> EvidenceSequence:
        """The first n observations of the world."""
        return tuple(self.symbol_at(t) for t in range(n))

    def unrolled(self, times: int = 1) -> "UltimatelyPeriodicWorld":
        """Same branch with `times` extra copies of the cycle in the prefix."""
        return UltimatelyPeriodicWorld(self.prefix + self.cycle * times, self.cycle)

    def to_dict(self) -> Dict[str, List[str]]:
        return {"prefix": list(self.prefix), "cycle": list(self.cycle)}

    def __str__(self) -> str:
        prefix = " ".join(self.prefix) or "()"
        return f"{prefix} ({' '.join(self.cycle)})^w"


@dataclass(frozen=True)
class AutomatonStructure:
    """
    Derived SCC facts about a truth automaton, restricted to reachable states.

    Attributes:
        components: SCCs, sinks first
        component_of: state -> index into components
        cyclic: states lying on a cycle
        trapped_labels: state -> labels of cyclic SCCs reachable from it
    """
    components: Tuple[Tuple[State, ...], ...]
    component_of: Mapping[State, int]
    cyclic: FrozenSet[State]
    trapped_labels: Mapping[State, FrozenSet[HypothesisLabel]]

    def is_settled(self, state: State) -> bool:
        return len(self.trapped_labels[state]) == 1

    def settled_label(self, state: State) -> Optional[HypothesisLabel]:
        labels = self.trapped_labels[state]
        return next(iter(labels)) if len(labels) == 1 else None


@dataclass(frozen=True)
class TruthAutomaton:
    """
    Finite automaton whose state labels fix the truth of every branch.

    Attributes:
        states: State names in declaration order
        initial: Initial state
        transitions: (state, observation) -> state
        labels: state -> hypothesis label
    """
    states: Tuple[State, ...]
    initial: State
    transitions: Mapping[Tuple[State, Observation], State] = field(hash=False)
    labels: Mapping[State, HypothesisLabel] = field(hash=False)

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "transitions", dict(self.transitions))
        object.__setattr__(self, "labels", dict(self.labels))

    def step(self, state: State, symbol: Observation) -> State:
        return self.transitions[(state, symbol)]

    def successors_for(self, alphabet: Tuple[Observation, ...]):
        """Successor function over the given alphabet, skipping missing edges."""
        def successors(state: State):
            return [
                (symbol, self.transitions[(state, symbol)])
                for symbol in alphabet
                if (state, symbol) in self.transitions
            ]
        return successors


@dataclass(frozen=True)
class EmpiricalProblem:
    """
    Competing hypotheses, evidence protocol and background assumption.

    Attributes:
        name: Problem name (e.g. "raven")
        alphabet: Observation symbols in declaration order
        hypotheses: Competing hypotheses in declaration order
        truth: The truth-labeled automaton
    """
    name: str
    alphabet: Tuple[Observation, ...]
    hypotheses: Tuple[Hypothesis, ...]
    truth: TruthAutomaton

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "hypotheses", tuple(self.hypotheses))

    @property
    def hypothesis_labels(self) -> Tuple[HypothesisLabel, ...]:
        return tuple(h.label for h in self.hypotheses)

    def hypothesis(self, label: HypothesisLabel) -> Hypothesis:
        for hypothesis in self.hypotheses:
            if hypothesis.label == label:
                return hypothesis
        raise InputError(f"Problem '{self.name}' has no hypothesis '{label}'")

    @property
    def successors(self):
        return self.truth.successors_for(self.alphabet)

    @cached_property
    def structure(self) -> AutomatonStructure:
        """SCC analysis of the reachable part of the truth automaton."""
        successors = self.successors
        live = reachable([self.truth.initial], successors)
        components = strongly_connected_components(live, successors)
        component_of = {}
        for index, component in enumerate(components):
            for state in component:
                component_of[state] = index
        cyclic = cyclic_nodes(components, successors)

        # components come sinks first, so successors' facts are ready
        component_labels: List[Set[HypothesisLabel]] = []
        for index, component in enumerate(components):
            labels: Set[HypothesisLabel] = set()
            if component[0] in cyclic:
                labels.update(self.truth.labels[state] for state in component)
            for state in component:
                for _, target in successors(state):
                    target_index = component_of[target]
                    if target_index != index:
                        labels |= component_labels[target_index]
            component_labels.append(labels)

        trapped = {
            state: frozenset(component_labels[component_of[state]]) for state in live
        }
        return AutomatonStructure(
            components=tuple(tuple(c) for c in components),
            component_of=component_of,
            cyclic=frozenset(cyclic),
            trapped_labels=trapped,
        )


@dataclass(frozen=True)
class Violation:
    """
    One failed well-formedness condition.

    Attributes:
        code: Stable identifier (e.g. "mixed_scc")
        message: Human-readable explanation
        states: States (or SCC members) involved
    """
    code: str
    message: str
    states: Tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"[{self.code}] {self.message}"
