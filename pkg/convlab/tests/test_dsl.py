"""
Tests for the .cvl language.

This module tests:
- Tokenizing and diagnostics rendering
- The canonical printer on the bundled fixtures
- Parse/print round trips over generated documents
- One negative fixture per diagnostic code
"""

from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convlab.convergence import check_uniform, random_method, random_problem, trial_rng
from convlab.dsl import (
    DIAGNOSTIC_CODES,
    Document,
    load_document,
    load_file,
    method_to_decl,
    parse,
    print_document,
    problem_to_decl,
    tokenize,
)
from convlab.errors import DslError
from convlab.methods import apply, ordinary_induction
from convlab.problems import first_observation_problem

PACKAGE_FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
NEGATIVE_FIXTURES = Path(__file__).resolve().parent / "fixtures"


def _diagnostics(text):
    with pytest.raises(DslError) as exc_info:
        load_document(text)
    return exc_info.value.diagnostics


class TestTokenize:
    """Test the tokenizer."""

    def test_edge_tokens(self):
        """Test that "--" and "-->" are told apart around a wildcard."""
        tokens, diagnostics = tokenize("s0 --*--> s1;")
        assert [token.kind for token in tokens] == [
            "NAME", "DASHES", "STAR", "ARROW", "NAME", "SEMI", "EOF",
        ]
        assert diagnostics == []

    def test_comments_and_positions(self):
        """Test that comments are skipped and spans track lines and columns."""
        tokens, _ = tokenize("# note\n  init: q0;")
        init = tokens[0]
        assert init.text == "init"
        assert (init.span.line, init.span.column) == (2, 3)

    def test_unexpected_character_is_skipped(self):
        """Test that E001 is reported and tokenizing continues."""
        tokens, diagnostics = tokenize("a @ b")
        assert [d.code for d in diagnostics] == ["E001"]
        assert [token.text for token in tokens if token.kind == "NAME"] == ["a", "b"]

    def test_unexpected_character_names_the_allowed_tokens(self):
        """Test that E001 quotes the character and lists what may appear instead."""
        _, diagnostics = tokenize("a @ b")
        message = diagnostics[0].message
        assert "'@'" in message
        assert "a name" in message
        assert "-->" in message
        assert diagnostics[0].suggestion is None

    @pytest.mark.parametrize(
        "text, found, replacement",
        [
            ("s0 --black-> s1;", "'->'", "-->"),
            ("init = s0;", "'='", ":"),
            ("states: s0 (yes);", "'('", "["),
            ("s0 –black--> s1;", "'–'", "--"),
        ],
    )
    def test_lookalike_suggestion(self, text, found, replacement):
        """Test that look-alike characters come with the token they stand for."""
        _, diagnostics = tokenize(text)
        first = diagnostics[0]
        assert first.code == "E001"
        assert found in first.message
        assert first.suggestion == replacement
        assert f"did you mean '{replacement}'?" in str(first)



class TestPrinter:
    """Test canonical printing."""

    def test_raven_fixture_is_canonical(self):
        """Test that the raven fixture prints back byte for byte."""
        text = (PACKAGE_FIXTURES / "raven.cvl").read_text(encoding="utf-8")
        assert print_document(parse(text)) == text

    def test_printing_is_idempotent(self):
        """Test that printing a reparsed print changes nothing."""
        text = (PACKAGE_FIXTURES / "first_observation.cvl").read_text(encoding="utf-8")
        once = print_document(parse(text))
        assert print_document(parse(once)) == once
        assert not once.startswith("#")

    def test_edges_are_sorted(self):
        """Test that edges print in state order, named symbols before the wildcard."""
        text = (
            "method m {\n  problem: raven;\n  states: a [yes], b [no];\n  init: a;\n"
            "  b --*--> b;\n  a --nonblack--> b;\n  a --black--> a;\n}\n"
        )
        printed = print_document(parse(text))
        assert printed.index("a --black--> a") < printed.index("a --nonblack--> b")
        assert printed.index("a --nonblack--> b") < printed.index("b --*--> b")

    def test_method_object_round_trip(self):
        """Test that a printed method object loads back with the same outputs."""
        m = ordinary_induction()
        text = print_document(Document((method_to_decl(m),)))
        loaded = load_document(text).methods["ordinary_induction"]
        assert loaded.outputs == m.outputs
        assert loaded.transitions == m.transitions


class TestLoader:
    """Test elaboration of the bundled fixtures."""

    def test_raven_fixture(self):
        """Test that the raven fixture yields one problem and four methods."""
        loaded = load_file(PACKAGE_FIXTURES / "raven.cvl")
        assert list(loaded.problems) == ["raven"]
        assert sorted(loaded.methods) == [
            "delayed_induction", "occasional_counterinduction", "ordinary_induction", "skeptic",
        ]
        assert apply(loaded.methods["occasional_counterinduction"], ("black", "black")) == "no"

    def test_first_observation_fixture(self):
        """Test that copy_first converges uniformly on its own problem."""
        loaded = load_file(PACKAGE_FIXTURES / "first_observation.cvl")
        p = loaded.problems["first_observation"]
        assert check_uniform(loaded.methods["copy_first"], p).modulus == 1

    def test_builtin_problem_target(self):
        """Test that methods may target a built-in problem without declaring it."""
        text = (
            "method copy {\n  problem: first_observation;\n  states: m [A], x [B];\n"
            "  init: m;\n  m --a--> m;\n  m --b--> x;\n  x --*--> x;\n}\n"
        )
        m = load_document(text).methods["copy"]
        assert m.alphabet == first_observation_problem().alphabet


class TestDiagnostics:
    """One negative fixture per diagnostic code."""

    @pytest.mark.parametrize("code", sorted(DIAGNOSTIC_CODES))
    def test_fixture(self, code):
        """Test that each fixture produces its code and nothing else."""
        [path] = NEGATIVE_FIXTURES.glob(f"{code}_*.cvl")
        diagnostics = _diagnostics(path.read_text(encoding="utf-8"))
        assert {d.code for d in diagnostics} == {code}

    def test_syntax_error_message(self):
        """Test the expected/found wording of E002."""
        text = (NEGATIVE_FIXTURES / "E002_missing_semicolon.cvl").read_text(encoding="utf-8")
        [diagnostic] = _diagnostics(text)
        assert diagnostic.message == "expected ';', found 's0'"
        assert diagnostic.span.line == 5

    def test_suggestions(self):
        """Test near-miss suggestions for symbols and problems."""
        symbol = _diagnostics((NEGATIVE_FIXTURES / "E101_unknown_symbol.cvl").read_text())[0]
        problem = _diagnostics((NEGATIVE_FIXTURES / "E105_unresolved_problem.cvl").read_text())[0]
        assert symbol.suggestion == "black"
        assert problem.suggestion == "raven"

    def test_render(self):
        """Test compiler-style rendering with a caret under the span."""
        text = (NEGATIVE_FIXTURES / "E101_unknown_symbol.cvl").read_text()
        rendered = _diagnostics(text)[0].render(text, "sentinel.cvl")
        header, line, caret = rendered.split("\n")
        assert header.startswith("sentinel.cvl:6:8: E101")
        assert line.strip() == "s0 --blak--> s1;"
        assert caret.strip() == "^^^^"

    def test_checks_report_every_finding(self):
        """Test that checking continues past the first finding."""
        text = (
            "method m {\n  problem: raven;\n  states: a [yes], a [maybe];\n  init: b;\n"
            "  a --*--> a;\n}\n"
        )
        codes = [d.code for d in _diagnostics(text)]
        assert codes == ["E108", "E106", "E104"]


names = st.integers(0, 10_000)


class TestRoundTrip:
    """Parse/print round trips over generated documents."""

    @settings(max_examples=500, deadline=None)
    @given(seed=names, method_states=st.integers(1, 5))
    def test_print_parse_round_trip(self, seed, method_states):
        """Test that parse(print(d)) == d and printing is stable."""
        rng = trial_rng(seed, 11)
        p = random_problem(rng, name=f"problem_{seed}")
        m = random_method(rng, p, max_states=method_states, name=f"method_{seed}")
        document = Document((problem_to_decl(p), method_to_decl(m)))

        text = print_document(document)
        reparsed = parse(text)

        assert reparsed == document
        assert print_document(reparsed) == text

    @settings(max_examples=100, deadline=None)
    @given(seed=names)
    def test_loaded_method_behaves_the_same(self, seed):
        """Test that elaborating a printed method preserves its outputs."""
        rng = trial_rng(seed, 12)
        p = random_problem(rng, name="generated")
        m = random_method(rng, p, name="candidate")
        loaded = load_document(print_document(Document((problem_to_decl(p), method_to_decl(m)))))

        for e in (("a",), ("b", "a"), ("a", "a", "b", "b")):
            assert apply(loaded.methods["candidate"], e) == apply(m, e)
