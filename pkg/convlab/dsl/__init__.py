"""
The .cvl language: parsing, canonical printing and elaboration.
"""

from convlab.dsl.models import (
    DIAGNOSTIC_CODES,
    WILDCARD,
    Diagnostic,
    Document,
    EdgeDecl,
    MethodDecl,
    ProblemDecl,
    SourceSpan,
    StateDecl,
)
from convlab.dsl.lexer import Token, tokenize
from convlab.dsl.parser import parse
from convlab.dsl.printer import method_to_decl, print_document, problem_to_decl
from convlab.dsl.loader import (
    LoadedDocument,
    elaborate_method,
    elaborate_problem,
    load_document,
    load_file,
    resolve_problem,
)

__all__ = [
    "DIAGNOSTIC_CODES",
    "WILDCARD",
    "Diagnostic",
    "Document",
    "EdgeDecl",
    "MethodDecl",
    "ProblemDecl",
    "SourceSpan",
    "StateDecl",
    "Token",
    "tokenize",
    "parse",
    "method_to_decl",
    "print_document",
    "problem_to_decl",
    "LoadedDocument",
    "elaborate_method",
    "elaborate_problem",
    "load_document",
    "load_file",
    "resolve_problem",
]
