"""
Canonical printing of .cvl documents.

Declarations keep their order, each edge gets its own line in canonical
order, wildcard edges stay wildcards, declarations are separated by one
blank line, and the text ends with a newline.
"""

from typing import Iterable, List

from convlab.dsl.models import Document, EdgeDecl, MethodDecl, ProblemDecl, StateDecl
from convlab.methods.models import InferenceMethod
from convlab.problems.models import EmpiricalProblem

INDENT = "  "


def _states(states: Iterable[StateDecl]) -> str:
    return ", ".join(f"{state.name} [{state.tag}]" for state in states)


def _edge(edge: EdgeDecl) -> str:
    return f"{INDENT}{edge.source} --{edge.symbol}--> {edge.target};"


def _problem(decl: ProblemDecl) -> List[str]:
    return [
        f"problem {decl.name} {{",
        f"{INDENT}alphabet: {', '.join(decl.alphabet)};",
        f"{INDENT}hypotheses: {', '.join(decl.hypotheses)};",
        f"{INDENT}states: {_states(decl.states)};",
        f"{INDENT}init: {decl.init};",
        *(_edge(edge) for edge in decl.edges),
        "}",
    ]


def _method(decl: MethodDecl) -> List[str]:
    return [
        f"method {decl.name} {{",
        f"{INDENT}problem: {decl.problem};",
        f"{INDENT}states: {_states(decl.states)};",
        f"{INDENT}init: {decl.init};",
        *(_edge(edge) for edge in decl.edges),
        "}",
    ]


def print_document(document: Document) -> str:
    """Canonical text of a document; reparses to an equal document."""
    blocks = []
    for decl in document.declarations:
        lines = _problem(decl) if isinstance(decl, ProblemDecl) else _method(decl)
        blocks.append("\n".join(lines) + "\n")
    return "\n".join(blocks)


def problem_to_decl(p: EmpiricalProblem) -> ProblemDecl:
    """Declaration of a problem object, with every edge explicit."""
    return ProblemDecl(
        name=p.name,
        alphabet=p.alphabet,
        hypotheses=p.hypothesis_labels,
        states=tuple(StateDecl(state, p.truth.labels[state]) for state in p.truth.states),
        init=p.truth.initial,
        edges=tuple(
            EdgeDecl(state, symbol, p.truth.transitions[(state, symbol)])
            for state in p.truth.states
            for symbol in p.alphabet
        ),
    )


def method_to_decl(m: InferenceMethod) -> MethodDecl:
    """Declaration of a method object, with every edge explicit."""
    return MethodDecl(
        name=m.name,
        problem=m.problem,
        states=tuple(StateDecl(state, m.outputs[state]) for state in m.states),
        init=m.initial,
        edges=tuple(
            EdgeDecl(state, symbol, m.transitions[(state, symbol)])
            for state in m.states
            for symbol in m.alphabet
        ),
    )
