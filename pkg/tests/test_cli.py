from __future__ import annotations

import io
import json

import pytest

from iterline import build, to_text
from iterline.cli import main
from iterline.errors import MethodDisagreement, ResourceLimit


@pytest.fixture
def cycle_file(tmp_path):
    path = tmp_path / "c3.txt"
    path.write_text(to_text(build(3, [(0, 1), (1, 2), (2, 0)])))
    return str(path)


class TestGen:
    def test_debruijn_to_stdout(self, capsys):
        assert main(["gen", "--family", "debruijn", "--sigma", "2", "--n", "3"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("digraph 8 16\n")
        assert "label 0 000" in out

    def test_output_file(self, tmp_path, capsys):
        target = tmp_path / "g.txt"
        code = main(
            ["gen", "--family", "starcycle", "--n", "9", "-o", str(target)]
        )
        assert code == 0
        assert target.read_text().startswith("digraph 9 16\n")

    def test_missing_parameter(self, capsys):
        assert main(["gen", "--family", "kautz", "--d", "2"]) == 2
        assert "missing parameter" in capsys.readouterr().err

    def test_bad_parameter_value(self, capsys):
        assert main(["gen", "--family", "starcycle", "--n", "1"]) == 2


class TestSeq:
    def test_plain_terms(self, cycle_file, capsys):
        assert main(["seq", cycle_file, "--k", "4"]) == 0
        assert capsys.readouterr().out == "3 3 3 3 3\n"

    def test_custom_separator(self, cycle_file, capsys):
        assert main(["seq", cycle_file, "--k", "2", "--sep", ","]) == 0
        assert capsys.readouterr().out == "3,3,3\n"

    def test_json(self, cycle_file, capsys):
        assert main(["seq", cycle_file, "--k", "3", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["terms"] == ["3", "3", "3", "3"]
        assert payload["classification"] == "eventually_periodic"

    def test_table(self, cycle_file, capsys):
        assert main(["seq", cycle_file, "--k", "2", "--table"]) == 0
        assert capsys.readouterr().out.startswith("| ")

    def test_stdin(self, monkeypatch, capsys):
        monkeypatch.setattr(
            "sys.stdin", io.StringIO(to_text(build(2, [(0, 1), (1, 0)])))
        )
        assert main(["seq", "-", "--k", "3"]) == 0
        assert capsys.readouterr().out == "2 2 2 2\n"

    def test_missing_file(self, tmp_path, capsys):
        assert main(["seq", str(tmp_path / "nope.txt")]) == 2

    def test_resource_limit_exit_code(self, cycle_file, monkeypatch, capsys):
        def boom(*args, **kwargs):
            raise ResourceLimit("too big")

        monkeypatch.setattr("iterline.cli.order_sequence", boom)
        assert main(["seq", cycle_file]) == 3

    def test_disagreement_exit_code(self, cycle_file, monkeypatch, capsys):
        def boom(*args, **kwargs):
            raise MethodDisagreement(2, {"direct": 5, "walk": 6})

        monkeypatch.setattr("iterline.cli.order_sequence", boom)
        assert main(["seq", cycle_file]) == 4


class TestForbid:
    def test_csv(self, capsys):
        code = main(
            [
                "forbid",
                "--sigma", "2",
                "--n", "3",
                "--avoid", "000,001,010,100",
                "--k", "7",
                "--format", "csv",
            ]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert '"4, 6, 9, 13, 19, 28, 41, 60"' in out

    def test_table_with_local_db(self, oeis_db, capsys):
        code = main(
            [
                "forbid",
                "--sigma", "2",
                "--n", "3",
                "--avoid", "000,001,100",
                "--oeis-db", oeis_db,
            ]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert out.startswith("| 000, 001, 100 | 5, 8, 13, 21,")
        assert "A000045" in out

    def test_not_in_oeis_verdict(self, oeis_db, capsys):
        code = main(
            [
                "forbid",
                "--sigma", "2",
                "--n", "4",
                "--avoid", "0111,100",
                "--k", "9",
                "--oeis-db", oeis_db,
            ]
        )
        assert code == 0
        assert "not in OEIS" in capsys.readouterr().out

    def test_no_db_prints_dash(self, capsys):
        assert main(["forbid", "--sigma", "2", "--n", "3", "--avoid", "000"]) == 0
        assert capsys.readouterr().out.rstrip().endswith("| - |")

    def test_bad_word_is_usage_error(self, capsys):
        code = main(["forbid", "--sigma", "2", "--n", "3", "--avoid", "012"])
        assert code == 2


class TestMetrics:
    def test_report(self, cycle_file, capsys):
        assert main(["metrics", cycle_file]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["inner_diameter"] == 2
        assert payload["is_directed_cycle"] is True

    def test_line_iterate_option(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text(to_text(build(3, [(0, 1), (1, 2)])))
        assert main(["metrics", str(path), "--line", "1"]) == 0
        assert json.loads(capsys.readouterr().out)["inner_diameter"] == 1

    def test_vanished_iterate_is_usage_error(self, tmp_path, capsys):
        path = tmp_path / "p.txt"
        path.write_text(to_text(build(2, [(0, 1)])))
        assert main(["metrics", str(path), "--line", "2"]) == 2


class TestRecur:
    def test_cycle(self, cycle_file, capsys):
        assert main(["recur", cycle_file]) == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "m(x) = x^3 - 1"
        assert "(order 1, start" in out

    def test_narayana_digraph(self, tmp_path, capsys):
        from iterline import ForbiddenWordSpec, forbidden_word_digraph

        g = forbidden_word_digraph(
            ForbiddenWordSpec(2, 3, ("000", "001", "010", "100"))
        )
        path = tmp_path / "n.txt"
        path.write_text(to_text(g))
        assert main(["recur", str(path)]) == 0
        out = capsys.readouterr().out
        assert "n_k = n_{k-1} + n_{k-3}" in out


class TestOeis:
    def test_local_hit(self, oeis_db, capsys):
        code = main(
            ["oeis", "--terms", "5,8,13,21,34,55,89,144", "--local", oeis_db]
        )
        assert code == 0
        out = capsys.readouterr().out
        assert "A000045" in out and "matched=8" in out

    def test_local_miss(self, oeis_db, capsys):
        code = main(
            ["oeis", "--terms", "11,16,22,30,41,55,74,99", "--local", oeis_db]
        )
        assert code == 0
        assert capsys.readouterr().out == "not in OEIS\n"

    def test_needs_a_source(self, capsys):
        assert main(["oeis", "--terms", "1,2,3,4,5,6,7,8"]) == 2

    def test_min_overlap(self, oeis_db, capsys):
        code = main(
            [
                "oeis",
                "--terms", "5,8,13,21,34",
                "--local", oeis_db,
                "--min-overlap", "5",
            ]
        )
        assert code == 0
        assert "A000045" in capsys.readouterr().out
