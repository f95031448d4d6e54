"""
Elaboration of parsed documents into problem and method objects.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from convlab.dsl.models import Diagnostic, Document, EdgeDecl, MethodDecl, ProblemDecl, StateDecl
from convlab.dsl.parser import parse
from convlab.errors import DslError
from convlab.methods.models import InferenceMethod
from convlab.methods.service import validate_method
from convlab.problems.models import EmpiricalProblem, Hypothesis, TruthAutomaton
from convlab.problems.service import validate_problem
from convlab.registry import builtin_problems

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LoadedDocument:
    """
    Attributes:
        document: The parsed syntax tree
        problems: Problems declared in the document, by name
        methods: Methods declared in the document, by name
    """
    document: Document
    problems: Dict[str, EmpiricalProblem] = field(hash=False)
    methods: Dict[str, InferenceMethod] = field(hash=False)


def _lower_edges(
    states: Tuple[StateDecl, ...],
    edges: Tuple[EdgeDecl, ...],
    alphabet: Tuple[str, ...],
) -> Dict[Tuple[str, str], str]:
    """Explicit transition table; a wildcard covers the symbols its state does not name."""
    transitions = {}
    for edge in edges:
        if not edge.is_wildcard:
            transitions[(edge.source, edge.symbol)] = edge.target
    for edge in edges:
        if edge.is_wildcard:
            for symbol in alphabet:
                transitions.setdefault((edge.source, symbol), edge.target)
    return transitions


def elaborate_problem(decl: ProblemDecl) -> EmpiricalProblem:
    return EmpiricalProblem(
        name=decl.name,
        alphabet=decl.alphabet,
        hypotheses=tuple(Hypothesis(label) for label in decl.hypotheses),
        truth=TruthAutomaton(
            states=tuple(state.name for state in decl.states),
            initial=decl.init,
            transitions=_lower_edges(decl.states, decl.edges, decl.alphabet),
            labels={state.name: state.tag for state in decl.states},
        ),
    )


def elaborate_method(decl: MethodDecl, problem: EmpiricalProblem) -> InferenceMethod:
    return InferenceMethod(
        name=decl.name,
        problem=decl.problem,
        alphabet=problem.alphabet,
        states=tuple(state.name for state in decl.states),
        initial=decl.init,
        transitions=_lower_edges(decl.states, decl.edges, problem.alphabet),
        outputs={state.name: state.tag for state in decl.states},
    )


def load_document(text: str) -> LoadedDocument:
    """
    Parse, elaborate and validate a document.

    Raises:
        DslError: With parse diagnostics, or E110/E111 for declarations
            that parse but fail validation
    """
    registry = builtin_problems()
    document = parse(text, registry)

    diagnostics: List[Diagnostic] = []
    problems: Dict[str, EmpiricalProblem] = {}
    for decl in document.problems:
        problem = elaborate_problem(decl)
        for violation in validate_problem(problem):
            diagnostics.append(
                Diagnostic("E110", f"problem '{decl.name}': {violation.message}", decl.span)
            )
        problems[decl.name] = problem

    methods: Dict[str, InferenceMethod] = {}
    for decl in document.methods:
        target = problems.get(decl.problem) or registry[decl.problem]
        method = elaborate_method(decl, target)
        for violation in validate_method(method, target):
            diagnostics.append(
                Diagnostic("E111", f"method '{decl.name}': {violation.message}", decl.span)
            )
        methods[decl.name] = method

    if diagnostics:
        raise DslError(diagnostics)
    logger.info(f"Loaded {len(problems)} problem(s) and {len(methods)} method(s)")
    return LoadedDocument(document=document, problems=problems, methods=methods)


def load_file(path: Union[str, Path]) -> LoadedDocument:
    """Load a .cvl file (UTF-8)."""
    return load_document(Path(path).read_text(encoding="utf-8"))


def resolve_problem(loaded: Optional[LoadedDocument], name: str) -> Optional[EmpiricalProblem]:
    """A problem from the document, falling back to the built-in registry."""
    if loaded is not None and name in loaded.problems:
        return loaded.problems[name]
    return builtin_problems().get(name)
