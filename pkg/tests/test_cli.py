"""CLI behavior: output format, exit codes, golden agreement with the library."""

import pytest

from pkb.backward import truep
from pkb.cli import _render_answers, main
from pkb.kb import KnowledgeBase
from pkb.sexpr import parse_sentence as S

FOO_KB = """
(fact (foo fred) (0.3 . 0.2))
(fact (foo harry) (0.7 . 0.0))
"""

TWEETY_KB = """
(rule (bird $x) (flies $x) (0.7 . 0.0))
(rule (ostrich $x) (flies $x) (0 . 1))
(fact (bird Tweety) (1 . 0))
(fact (ostrich Tweety) (1 . 0))
"""


@pytest.fixture
def foo_file(tmp_path):
    path = tmp_path / "foo.pkb"
    path.write_text(FOO_KB)
    return str(path)


@pytest.fixture
def tweety_file(tmp_path):
    path = tmp_path / "tweety.pkb"
    path.write_text(TWEETY_KB)
    return str(path)


class TestQuery:
    def test_lookup_example(self, foo_file, capsys):
        code = main(["--kb", foo_file, "query", "(foo $x)", "--cutoff", "0.5"])
        out = capsys.readouterr().out
        assert code == 0
        assert out == "{$x=harry} 0.7\n"

    def test_tweety_not_tag(self, tweety_file, capsys):
        code = main(["--kb", tweety_file, "query", "(flies Tweety)", "--tag", "not"])
        out = capsys.readouterr().out.strip()
        assert code == 0
        binding, value = out.rsplit(" ", 1)
        assert binding == "{}"
        assert float(value) == pytest.approx(1.0, abs=1e-9)

    def test_absent_fact_exits_one(self, capsys):
        code = main(["query", "(zzz q)"])
        assert capsys.readouterr().out == ""
        assert code == 1

    def test_answers_sorted_by_value(self, foo_file, capsys):
        code = main(["--kb", foo_file, "query", "(foo $x)", "--cutoff", "0.0"])
        out = capsys.readouterr().out.splitlines()
        assert code == 0
        assert out == ["{$x=harry} 0.7", "{$x=fred} 0.3"]

    def test_matches_library_rendering(self, tweety_file, capsys):
        code = main(["--kb", tweety_file, "query", "(flies $x)", "--tag", "not", "--cutoff", "0.5"])
        out = capsys.readouterr().out
        assert code == 0
        kb = KnowledgeBase()
        kb.load_text(TWEETY_KB)
        answers = truep(kb, S("(flies $x)"), "not", 0.5)
        expected = "".join(line + "\n" for line in _render_answers(answers))
        assert out == expected

    def test_method_override(self, tweety_file, capsys):
        code = main(["--kb", tweety_file, "query", "(flies Tweety)", "--method", "bc", "--tag", "not", "--cutoff", "0.9"])
        assert code == 0
        assert capsys.readouterr().out.startswith("{}")

    def test_parse_error_exits_two(self, capsys):
        code = main(["query", "(unbalanced"])
        err = capsys.readouterr().err
        assert code == 2
        assert "error:" in err


class TestAssertSetWhy:
    def test_assert_is_session_local_noop_without_query(self, capsys):
        code = main(["assert", "(foo fred)", "(0.4 . 0.1)"])
        assert code == 0

    def test_bad_truth_value_exits_two(self, capsys):
        code = main(["assert", "(foo fred)", "(0.9 . 0.3)"])
        assert code == 2
        assert "error:" in capsys.readouterr().err

    def test_why_lists_justifications(self, tweety_file, capsys):
        code = main(["--kb", tweety_file, "why", "(flies Tweety)"])
        out = capsys.readouterr().out.splitlines()
        assert code == 0
        assert out == [
            "rule=r1 bind={$x=Tweety} premise=(1 . 0) contrib=(0.7 . 0)",
            "rule=r2 bind={$x=Tweety} premise=(1 . 0) contrib=(0 . 1)",
        ]

    def test_why_without_matches_exits_one(self, foo_file, capsys):
        code = main(["--kb", foo_file, "why", "(foo fred)"])
        assert code == 1

    def test_missing_kb_file_exits_two(self, capsys):
        code = main(["--kb", "/nonexistent/kb.pkb", "query", "(p)"])
        assert code == 2


class TestSetvarAndLoad:
    def test_load_validates(self, foo_file):
        assert main(["load", foo_file]) == 0

    def test_load_bad_file_exits_two(self, tmp_path, capsys):
        path = tmp_path / "bad.pkb"
        path.write_text("(fact (foo fred) (0.9 . 0.5))")
        assert main(["load", str(path)]) == 2

    def test_setvar_ok(self):
        assert main(["setvar", "inference-cutoff", "0.2"]) == 0

    def test_setvar_out_of_range(self, capsys):
        assert main(["setvar", "accept-as-true", "0"]) == 2


class TestTraceAndRepl:
    def test_trace_streams_to_stderr(self, tweety_file, capsys, monkeypatch):
        monkeypatch.setenv("PKB_TRACE", "1")
        code = main(["--kb", tweety_file, "query", "(flies Tweety)", "--tag", "not"])
        captured = capsys.readouterr()
        assert code == 0
        assert "FIRE rule=r1" in captured.err
        assert "FIRE" not in captured.out

    def test_repl_session(self, foo_file, capsys, monkeypatch):
        lines = iter(
            [
                f"load {foo_file}",
                'query "(foo $x)" --cutoff 0.5',
                'assert "(foo burt)" "(0.9 . 0.0)"',
                'query "(foo burt)" --cutoff 0.8',
                "quit",
            ]
        )
        monkeypatch.setattr("builtins.input", lambda prompt="": next(lines))
        code = main([])
        out = capsys.readouterr().out
        assert code == 0
        assert "{$x=harry} 0.7" in out
        assert "{} 0.9" in out

    def test_repl_recovers_from_errors(self, capsys, monkeypatch):
        lines = iter(["query (((", "nonsense walrus", "exit"])
        monkeypatch.setattr("builtins.input", lambda prompt="": next(lines))
        code = main([])
        assert code == 0
