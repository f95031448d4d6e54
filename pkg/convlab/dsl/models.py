"""
Syntax tree, source spans and diagnostics for .cvl documents.

Declarations compare structurally: spans are carried for diagnostics but
excluded from equality, and edges are kept in canonical order (source
state by declaration, then symbol, with the "*" wildcard last), so a
document equals its reparsed canonical print.
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

WILDCARD = "*"

DIAGNOSTIC_CODES = {
    "E001": "unexpected character",
    "E002": "syntax error",
    "E101": "unknown symbol",
    "E102": "duplicate edge",
    "E103": "missing transition",
    "E104": "unresolved state",
    "E105": "unresolved problem",
    "E106": "unknown label or output",
    "E107": "duplicate declaration",
    "E108": "duplicate state",
    "E109": "duplicate symbol or hypothesis",
    "E110": "invalid problem",
    "E111": "invalid method",
}


@dataclass(frozen=True)
class SourceSpan:
    """
    A stretch of source text.

    Attributes:
        line: 1-based line
        column: 1-based column (characters)
        offset: 0-based byte offset into the UTF-8 encoding
        length: Length in characters
    """
    line: int
    column: int
    offset: int
    length: int = 0

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


NO_SPAN = SourceSpan(1, 1, 0, 0)


@dataclass(frozen=True)
class Diagnostic:
    """
    A problem found in a document.

    Attributes:
        code: Stable code (see DIAGNOSTIC_CODES)
        message: Human-readable explanation
        span: Where it was found
        suggestion: Replacement text for the span that removes the diagnostic
    """
    code: str
    message: str
    span: SourceSpan
    suggestion: Optional[str] = None

    def __str__(self) -> str:
        text = f"{self.span}: {self.code} {self.message}"
        if self.suggestion is not None:
            text += f" (did you mean '{self.suggestion}'?)"
        return text

    def render(self, source: str, path: str = "<input>") -> str:
        """Compiler-style rendering with the offending line and a caret."""
        lines = source.splitlines()
        header = f"{path}:{self}"
        if not 1 <= self.span.line <= len(lines):
            return header
        line = lines[self.span.line - 1]
        caret = " " * (self.span.column - 1) + "^" * max(1, self.span.length)
        return f"{header}\n  {line}\n  {caret}"


@dataclass(frozen=True)
class StateDecl:
    name: str
    tag: str
    span: SourceSpan = field(default=NO_SPAN, compare=False)
    tag_span: SourceSpan = field(default=NO_SPAN, compare=False)


@dataclass(frozen=True)
class EdgeDecl:
    source: str
    symbol: str
    target: str
    source_span: SourceSpan = field(default=NO_SPAN, compare=False)
    symbol_span: SourceSpan = field(default=NO_SPAN, compare=False)
    target_span: SourceSpan = field(default=NO_SPAN, compare=False)

    @property
    def is_wildcard(self) -> bool:
        return self.symbol == WILDCARD


def _canonical_edges(
    states: Tuple[StateDecl, ...],
    edges: Tuple[EdgeDecl, ...],
) -> Tuple[EdgeDecl, ...]:
    position = {}
    for index, state in enumerate(states):
        position.setdefault(state.name, index)

    def key(edge: EdgeDecl):
        return (position.get(edge.source, len(states)), edge.source, edge.is_wildcard, edge.symbol)

    return tuple(sorted(edges, key=key))


@dataclass(frozen=True)
class ProblemDecl:
    name: str
    alphabet: Tuple[str, ...]
    hypotheses: Tuple[str, ...]
    states: Tuple[StateDecl, ...]
    init: str
    edges: Tuple[EdgeDecl, ...]
    span: SourceSpan = field(default=NO_SPAN, compare=False)
    alphabet_spans: Tuple[SourceSpan, ...] = field(default=(), compare=False)
    hypothesis_spans: Tuple[SourceSpan, ...] = field(default=(), compare=False)
    init_span: SourceSpan = field(default=NO_SPAN, compare=False)
    end_span: SourceSpan = field(default=NO_SPAN, compare=False)

    kind = "problem"

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "hypotheses", tuple(self.hypotheses))
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "edges", _canonical_edges(self.states, tuple(self.edges)))


@dataclass(frozen=True)
class MethodDecl:
    name: str
    problem: str
    states: Tuple[StateDecl, ...]
    init: str
    edges: Tuple[EdgeDecl, ...]
    span: SourceSpan = field(default=NO_SPAN, compare=False)
    problem_span: SourceSpan = field(default=NO_SPAN, compare=False)
    init_span: SourceSpan = field(default=NO_SPAN, compare=False)
    end_span: SourceSpan = field(default=NO_SPAN, compare=False)

    kind = "method"

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "edges", _canonical_edges(self.states, tuple(self.edges)))


Declaration = Union[ProblemDecl, MethodDecl]


@dataclass(frozen=True)
class Document:
    """Problem and method declarations in source order."""
    declarations: Tuple[Declaration, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "declarations", tuple(self.declarations))

    @property
    def problems(self) -> Tuple[ProblemDecl, ...]:
        return tuple(d for d in self.declarations if isinstance(d, ProblemDecl))

    @property
    def methods(self) -> Tuple[MethodDecl, ...]:
        return tuple(d for d in self.declarations if isinstance(d, MethodDecl))
