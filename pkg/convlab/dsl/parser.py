"""
Recursive-descent parser for .cvl documents.

    document   := { decl } ;
    decl       := problem | method ;
    problem    := "problem" NAME "{" "alphabet" ":" namelist ";"
                  "hypotheses" ":" namelist ";" "states" ":" statelist ";"
                  "init" ":" NAME ";" { edge } "}" ;
    method     := "method" NAME "{" "problem" ":" NAME ";"
                  "states" ":" statelist ";" "init" ":" NAME ";" { edge } "}" ;
    statelist  := state { "," state } ;
    state      := NAME "[" ( NAME | "?" ) "]" ;
    edge       := NAME "--" ( NAME | "*" ) "-->" NAME ";" ;
    namelist   := NAME { "," NAME } ;

The grammar is LL(1), so one token of lookahead decides every branch.
Syntax errors stop parsing at the first offending token; the checks that
follow (resolution, duplicates, totality) report everything they find.
"""

import difflib
import logging
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from convlab.dsl.lexer import EOF, KIND_TEXT, NAME, Token, tokenize
from convlab.dsl.models import (
    Diagnostic,
    Document,
    EdgeDecl,
    MethodDecl,
    ProblemDecl,
    SourceSpan,
    StateDecl,
)
from convlab.errors import DslError
from convlab.methods.models import SUSPEND
from convlab.problems.models import EmpiricalProblem
from convlab.registry import builtin_problems as registry_problems

logger = logging.getLogger(__name__)


class _SyntaxAbort(Exception):
    pass


class _Parser:
    """Builds the syntax tree; raises _SyntaxAbort after recording one E002."""

    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.position = 0
        self.diagnostics: List[Diagnostic] = []

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def _advance(self) -> Token:
        token = self.current
        if token.kind != EOF:
            self.position += 1
        return token

    def _fail(self, expected: str) -> None:
        token = self.current
        self.diagnostics.append(
            Diagnostic(
                "E002",
                f"expected {expected}, found {token.describe()}",
                token.span,
            )
        )
        raise _SyntaxAbort()

    def _expect(self, kind: str) -> Token:
        if self.current.kind != kind:
            self._fail(f"'{KIND_TEXT[kind]}'" if kind != NAME else "a name")
        return self._advance()

    def _keyword(self, word: str) -> Token:
        if self.current.kind != NAME or self.current.text != word:
            self._fail(f"'{word}'")
        return self._advance()

    def _field(self, word: str) -> None:
        self._keyword(word)
        self._expect("COLON")

    def parse_document(self) -> Document:
        declarations = []
        while self.current.kind != EOF:
            if self.current.kind == NAME and self.current.text == "problem":
                declarations.append(self.parse_problem())
            elif self.current.kind == NAME and self.current.text == "method":
                declarations.append(self.parse_method())
            else:
                self._fail("'problem' or 'method'")
        return Document(tuple(declarations))

    def parse_problem(self) -> ProblemDecl:
        self._keyword("problem")
        name = self._expect(NAME)
        self._expect("LBRACE")
        self._field("alphabet")
        alphabet = self.parse_namelist()
        self._expect("SEMI")
        self._field("hypotheses")
        hypotheses = self.parse_namelist()
        self._expect("SEMI")
        self._field("states")
        states = self.parse_statelist()
        self._expect("SEMI")
        self._field("init")
        init = self._expect(NAME)
        self._expect("SEMI")
        edges = self.parse_edges()
        end = self._expect("RBRACE")
        return ProblemDecl(
            name=name.text,
            alphabet=tuple(token.text for token in alphabet),
            hypotheses=tuple(token.text for token in hypotheses),
            states=states,
            init=init.text,
            edges=edges,
            span=name.span,
            alphabet_spans=tuple(token.span for token in alphabet),
            hypothesis_spans=tuple(token.span for token in hypotheses),
            init_span=init.span,
            end_span=end.span,
        )

    def parse_method(self) -> MethodDecl:
        self._keyword("method")
        name = self._expect(NAME)
        self._expect("LBRACE")
        self._field("problem")
        problem = self._expect(NAME)
        self._expect("SEMI")
        self._field("states")
        states = self.parse_statelist()
        self._expect("SEMI")
        self._field("init")
        init = self._expect(NAME)
        self._expect("SEMI")
        edges = self.parse_edges()
        end = self._expect("RBRACE")
        return MethodDecl(
            name=name.text,
            problem=problem.text,
            states=states,
            init=init.text,
            edges=edges,
            span=name.span,
            problem_span=problem.span,
            init_span=init.span,
            end_span=end.span,
        )

    def parse_namelist(self) -> List[Token]:
        names = [self._expect(NAME)]
        while self.current.kind == "COMMA":
            self._advance()
            names.append(self._expect(NAME))
        return names

    def parse_statelist(self) -> Tuple[StateDecl, ...]:
        states = [self.parse_state()]
        while self.current.kind == "COMMA":
            self._advance()
            states.append(self.parse_state())
        return tuple(states)

    def parse_state(self) -> StateDecl:
        name = self._expect(NAME)
        self._expect("LBRACKET")
        if self.current.kind == "QUESTION":
            tag = self._advance()
        else:
            tag = self._expect(NAME)
        self._expect("RBRACKET")
        return StateDecl(name.text, tag.text, name.span, tag.span)

    def parse_edges(self) -> Tuple[EdgeDecl, ...]:
        edges = []
        while self.current.kind == NAME:
            edges.append(self.parse_edge())
        if self.current.kind != "RBRACE":
            self._fail("an edge or '}'")
        return tuple(edges)

    def parse_edge(self) -> EdgeDecl:
        source = self._expect(NAME)
        self._expect("DASHES")
        if self.current.kind == "STAR":
            symbol = self._advance()
        else:
            symbol = self._expect(NAME)
        self._expect("ARROW")
        target = self._expect(NAME)
        self._expect("SEMI")
        return EdgeDecl(
            source.text, symbol.text, target.text, source.span, symbol.span, target.span
        )


def _suggest(name: str, candidates: Iterable[str]) -> Optional[str]:
    matches = difflib.get_close_matches(name, list(candidates), n=1)
    return matches[0] if matches else None


class _Checker:
    """Resolution, duplicate and totality checks over a parsed document."""

    def __init__(self, builtin_problems: Dict[str, EmpiricalProblem]):
        self.builtin_problems = builtin_problems
        self.diagnostics: List[Diagnostic] = []

    def _report(self, code: str, message: str, span: SourceSpan, suggestion: Optional[str] = None):
        self.diagnostics.append(Diagnostic(code, message, span, suggestion))

    def _unique(
        self,
        names: Sequence[str],
        spans: Sequence[SourceSpan],
        code: str,
        what: str,
    ) -> Set[str]:
        seen: Set[str] = set()
        for name, span in zip(names, spans):
            if name in seen:
                self._report(code, f"duplicate {what} '{name}'", span)
            seen.add(name)
        return seen

    def _check_edges(
        self,
        decl_name: str,
        states: Tuple[StateDecl, ...],
        edges: Tuple[EdgeDecl, ...],
        alphabet: Optional[Sequence[str]],
        end_span: SourceSpan,
    ) -> None:
        state_names = [state.name for state in states]
        declared = set(state_names)
        covered: Dict[str, Set[str]] = {name: set() for name in state_names}
        wildcard: Dict[str, EdgeDecl] = {}

        for edge in edges:
            for name, span in ((edge.source, edge.source_span), (edge.target, edge.target_span)):
                if name not in declared:
                    self._report(
                        "E104",
                        f"unresolved state '{name}' in '{decl_name}'",
                        span,
                        _suggest(name, state_names),
                    )
            if edge.is_wildcard:
                if edge.source in wildcard:
                    self._report(
                        "E102",
                        f"second wildcard edge from '{edge.source}'",
                        edge.symbol_span,
                    )
                wildcard.setdefault(edge.source, edge)
                continue
            if alphabet is not None and edge.symbol not in alphabet:
                self._report(
                    "E101",
                    f"unknown symbol '{edge.symbol}' in '{decl_name}'",
                    edge.symbol_span,
                    _suggest(edge.symbol, alphabet),
                )
                continue
            if edge.source in covered:
                if edge.symbol in covered[edge.source]:
                    self._report(
                        "E102",
                        f"duplicate edge '{edge.source} --{edge.symbol}-->'",
                        edge.symbol_span,
                    )
                covered[edge.source].add(edge.symbol)

        if alphabet is None:
            return
        for name in state_names:
            missing = [symbol for symbol in alphabet if symbol not in covered.get(name, ())]
            if name in wildcard:
                if not missing:
                    edge = wildcard[name]
                    self._report(
                        "E102",
                        f"wildcard edge from '{name}' covers no remaining symbol",
                        edge.symbol_span,
                    )
                continue
            for symbol in missing:
                self._report(
                    "E103",
                    f"state '{name}' of '{decl_name}' has no transition on '{symbol}'",
                    end_span,
                    f"{name} --{symbol}--> {name}; }}",
                )

    def check_problem(self, decl: ProblemDecl) -> None:
        alphabet = self._unique(decl.alphabet, decl.alphabet_spans, "E109", "symbol")
        hypotheses = self._unique(decl.hypotheses, decl.hypothesis_spans, "E109", "hypothesis")
        self._unique(
            [state.name for state in decl.states],
            [state.span for state in decl.states],
            "E108",
            "state",
        )
        for state in decl.states:
            if state.tag not in hypotheses:
                self._report(
                    "E106",
                    f"state '{state.name}' carries unknown label '{state.tag}'",
                    state.tag_span,
                    _suggest(state.tag, decl.hypotheses),
                )
        self._check_init(decl.name, decl.init, decl.init_span, decl.states)
        self._check_edges(
            decl.name, decl.states, decl.edges, [s for s in decl.alphabet if s in alphabet], decl.end_span
        )

    def check_method(self, decl: MethodDecl, problems: Dict[str, Tuple[Sequence[str], Sequence[str]]]) -> None:
        self._unique(
            [state.name for state in decl.states],
            [state.span for state in decl.states],
            "E108",
            "state",
        )
        target = problems.get(decl.problem)
        if target is None:
            self._report(
                "E105",
                f"method '{decl.name}' targets unknown problem '{decl.problem}'",
                decl.problem_span,
                _suggest(decl.problem, problems),
            )
            alphabet = None
        else:
            alphabet, hypotheses = target
            allowed = list(hypotheses) + [SUSPEND]
            for state in decl.states:
                if state.tag not in allowed:
                    self._report(
                        "E106",
                        f"state '{state.name}' outputs '{state.tag}', not a hypothesis of '{decl.problem}'",
                        state.tag_span,
                        _suggest(state.tag, allowed),
                    )
        self._check_init(decl.name, decl.init, decl.init_span, decl.states)
        self._check_edges(decl.name, decl.states, decl.edges, alphabet, decl.end_span)

    def _check_init(self, decl_name: str, init: str, span: SourceSpan, states: Tuple[StateDecl, ...]):
        names = [state.name for state in states]
        if init not in names:
            self._report(
                "E104",
                f"unresolved initial state '{init}' in '{decl_name}'",
                span,
                _suggest(init, names),
            )

    def check_document(self, document: Document) -> None:
        seen = {"problem": set(), "method": set()}
        problems: Dict[str, Tuple[Sequence[str], Sequence[str]]] = {
            name: (p.alphabet, p.hypothesis_labels) for name, p in self.builtin_problems.items()
        }
        for decl in document.declarations:
            if decl.name in seen[decl.kind]:
                self._report(
                    "E107",
                    f"duplicate {decl.kind} declaration '{decl.name}'",
                    decl.span,
                    f"{decl.name}_2",
                )
            seen[decl.kind].add(decl.name)
            if isinstance(decl, ProblemDecl):
                self.check_problem(decl)
                problems[decl.name] = (decl.alphabet, decl.hypotheses)
        for decl in document.methods:
            self.check_method(decl, problems)


def parse(text: str, builtin_problems: Optional[Dict[str, EmpiricalProblem]] = None) -> Document:
    """
    Parse and check a .cvl document.

    Methods may target problems declared anywhere in the document or
    the built-in registry problems.

    Raises:
        DslError: Carrying every diagnostic found, sorted by position
    """
    if builtin_problems is None:
        builtin_problems = registry_problems()

    tokens, diagnostics = tokenize(text)
    parser = _Parser(tokens)
    document = None
    try:
        document = parser.parse_document()
    except _SyntaxAbort:
        pass
    diagnostics.extend(parser.diagnostics)

    if document is not None and not diagnostics:
        checker = _Checker(builtin_problems)
        checker.check_document(document)
        diagnostics.extend(checker.diagnostics)

    if diagnostics:
        diagnostics.sort(key=lambda d: (d.span.offset, d.code))
        logger.debug(f"Parse produced {len(diagnostics)} diagnostic(s)")
        raise DslError(diagnostics)
    return document
