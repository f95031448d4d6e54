"""
Tokenizer for .cvl text.
"""

import re
from dataclasses import dataclass
from typing import List, Tuple

from convlab.dsl.models import Diagnostic, SourceSpan

NAME = "NAME"
EOF = "EOF"

# "-->" must be tried before "--"
PUNCTUATION = (
    ("-->", "ARROW"),
    ("--", "DASHES"),
    ("{", "LBRACE"),
    ("}", "RBRACE"),
    ("[", "LBRACKET"),
    ("]", "RBRACKET"),
    (":", "COLON"),
    (";", "SEMI"),
    (",", "COMMA"),
    ("*", "STAR"),
    ("?", "QUESTION"),
)

KIND_TEXT = {kind: text for text, kind in PUNCTUATION}
KIND_TEXT[NAME] = "name"
KIND_TEXT[EOF] = "end of input"

_TOKEN_RE = re.compile(
    r"(?P<space>[ \t\r]+)"
    r"|(?P<newline>\n)"
    r"|(?P<comment>#[^\n]*)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<punct>" + "|".join(re.escape(text) for text, _ in PUNCTUATION) + r")"
)
_PUNCT_KIND = dict(PUNCTUATION)

# look-alikes with the token they most likely stand for
LOOKALIKES = {
    "->": "-->",
    "→": "-->",
    "–": "--",
    "—": "--",
    "=": ":",
    "(": "[",
    ")": "]",
    "：": ":",
    "；": ";",
    "，": ",",
}
EXPECTED_TEXT = "a name, a '#' comment or one of " + " ".join(text for text, _ in PUNCTUATION)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    span: SourceSpan

    def describe(self) -> str:
        if self.kind == EOF:
            return "end of input"
        return f"'{self.text}'"


def tokenize(text: str) -> Tuple[List[Token], List[Diagnostic]]:
    """
    Split text into tokens, ending with an EOF token.

    Unexpected characters produce E001 diagnostics and are skipped so
    the rest of the text is still tokenized.
    """
    tokens: List[Token] = []
    diagnostics: List[Diagnostic] = []
    position = 0
    line = 1
    column = 1
    offset = 0

    while position < len(text):
        match = _TOKEN_RE.match(text, position)
        if match is None:
            length = 2 if text.startswith("->", position) else 1
            found = text[position:position + length]
            diagnostics.append(
                Diagnostic(
                    "E001",
                    f"unexpected character {found!r}; expected {EXPECTED_TEXT}",
                    SourceSpan(line, column, offset, length),
                    suggestion=LOOKALIKES.get(found),
                )
            )
            position += length
            column += length
            offset += len(found.encode("utf-8"))
            continue

        lexeme = match.group()
        group = match.lastgroup
        span = SourceSpan(line, column, offset, len(lexeme))
        if group == "name":
            tokens.append(Token(NAME, lexeme, span))
        elif group == "punct":
            tokens.append(Token(_PUNCT_KIND[lexeme], lexeme, span))

        position = match.end()
        offset += len(lexeme.encode("utf-8"))
        if group == "newline":
            line += 1
            column = 1
        else:
            column += len(lexeme)

    tokens.append(Token(EOF, "", SourceSpan(line, column, offset, 0)))
    return tokens, diagnostics
