"""
Inference methods as finite-state transducers.

A method reads evidence one observation at a time; its output at evidence
e is the output of the state reached after reading e, and its output at the
root is the output of the initial state.
"""

from dataclasses import dataclass, field
from typing import Mapping, Tuple

from convlab.problems.models import HypothesisLabel, Observation

SUSPEND = "?"

# A hypothesis label or SUSPEND. Hypothesis labels are DSL names and can
# never be "?".
MethodOutput = HypothesisLabel


def is_suspend(output: MethodOutput) -> bool:
    return output == SUSPEND


@dataclass(frozen=True)
class InferenceMethod:
    """
    Finite-state transducer from evidence sequences to outputs.

    Attributes:
        name: Method name
        problem: Name of the problem the method targets
        alphabet: Observation symbols (the target problem's alphabet)
        states: State names in declaration order
        initial: Initial state
        transitions: (state, observation) -> state
        outputs: state -> hypothesis label or SUSPEND
    """
    name: str
    problem: str
    alphabet: Tuple[Observation, ...]
    states: Tuple[str, ...]
    initial: str
    transitions: Mapping[Tuple[str, Observation], str] = field(hash=False)
    outputs: Mapping[str, MethodOutput] = field(hash=False)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "transitions", dict(self.transitions))
        object.__setattr__(self, "outputs", dict(self.outputs))

    def step(self, state: str, symbol: Observation) -> str:
        return self.transitions[(state, symbol)]

    def successors(self, state: str):
        return [
            (symbol, self.transitions[(state, symbol)])
            for symbol in self.alphabet
            if (state, symbol) in self.transitions
        ]
