"""End-to-end command-line behaviour: output shapes, exit codes, config."""

from __future__ import annotations

import io
import json

import pytest

import stanlab.cli as cli
from stanlab.errors import CapExceeded

WORKED_ROWS = [[0, 6], [3, 6], [4, 7], [10, 3], [11, 5]]
WORKED_WORD = "UUUUUDDDUUUDUUDDDDDDUUDUUUDDDD"


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def lines(out: str) -> list[dict]:
    return [json.loads(line) for line in out.splitlines() if line]


class TestEnumerate:
    def test_stream_shape_and_count(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--family", "stanley",
                           "--measure", "columns", "--value", "4")
        assert code == 0
        rows = lines(out)
        assert len(rows) == 5
        assert all(set(r) == {"object", "stats"} for r in rows)
        assert all(r["stats"]["col"] == 4 for r in rows)

    def test_group_by_emits_bare_counts(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--family", "stanley",
                           "--measure", "area", "--value", "6",
                           "--group-by", "row")
        assert code == 0
        assert out == '{"1":1,"2":4,"3":1}\n'

    def test_empty_dyck_path(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--family", "dyck",
                           "--measure", "semilength", "--value", "0")
        assert code == 0
        rows = lines(out)
        assert len(rows) == 1
        assert rows[0]["object"]["word"] == ""

    def test_limit_truncates_stream(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--family", "dyck",
                           "--measure", "semilength", "--value", "5",
                           "--limit", "3")
        assert code == 0
        assert len(lines(out)) == 3

    def test_unsupported_pair_exit_two(self, capsys):
        code, _, err = run(capsys, "enumerate", "--family", "stanley",
                           "--measure", "rows", "--value", "4")
        assert code == 2
        assert err

    def test_cap_exit_three(self, capsys, monkeypatch):
        def blow_up(bound, **kwargs):
            raise CapExceeded("too many objects")

        monkeypatch.setattr(cli, "enumerate_family", blow_up)
        code, _, err = run(capsys, "enumerate", "--family", "dyck",
                           "--measure", "semilength", "--value", "3")
        assert code == 3
        assert "too many" in err

    def test_jobs_do_not_change_bytes(self, capsys):
        _, serial, _ = run(capsys, "enumerate", "--family", "stanley",
                           "--measure", "columns", "--value", "6",
                           "--jobs", "1")
        _, parallel, _ = run(capsys, "enumerate", "--family", "stanley",
                             "--measure", "columns", "--value", "6",
                             "--jobs", "2")
        assert serial == parallel

    def test_timestamp_prologue(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--family", "dyck",
                           "--measure", "semilength", "--value", "1",
                           "--timestamps")
        assert code == 0
        rows = lines(out)
        assert set(rows[0]) == {"timestamp"}
        assert len(rows) == 2


class TestMap:
    def feed(self, monkeypatch, text: str) -> None:
        monkeypatch.setattr(cli.sys, "stdin", io.StringIO(text))

    def test_phi_on_worked_example(self, capsys, monkeypatch):
        self.feed(monkeypatch, json.dumps({"rows": WORKED_ROWS}) + "\n")
        code, out, _ = run(capsys, "map", "--bijection", "phi")
        assert code == 0
        rec = lines(out)[0]
        assert set(rec) == {"in", "out", "stats_in", "stats_out"}
        assert rec["out"]["word"] == WORKED_WORD
        assert rec["stats_in"]["sper"] == 21
        assert rec["stats_out"]["semilength"] == 15

    def test_phi_inv_on_empty_path(self, capsys, monkeypatch):
        self.feed(monkeypatch, '{"word": ""}\n')
        code, out, _ = run(capsys, "map", "--bijection", "phi-inv")
        assert code == 0
        assert lines(out)[0]["out"]["rows"] == [[0, 1]]

    def test_input_file_flag(self, capsys, tmp_path):
        src = tmp_path / "paths.jsonl"
        src.write_text('{"word": "UD"}\n{"word": "UUDD"}\n')
        code, out, _ = run(capsys, "map", "--bijection", "phi-inv",
                           "--in", str(src))
        assert code == 0
        assert len(lines(out)) == 2

    def test_invalid_line_exit_four(self, capsys, monkeypatch):
        self.feed(monkeypatch, '{"word": "UD"}\nnot json\n')
        code, out, err = run(capsys, "map", "--bijection", "phi-inv")
        assert code == 4
        assert "line 2" in err
        assert len(lines(out)) == 1

    def test_domain_error_exit_four(self, capsys, monkeypatch):
        # chi-prime refuses a path with a triple rise
        self.feed(monkeypatch, '{"word": "UUUDDD"}\n')
        code, _, err = run(capsys, "map", "--bijection", "chi-prime")
        assert code == 4
        assert "line 1" in err

    def test_skip_invalid_keeps_going(self, capsys, monkeypatch):
        self.feed(monkeypatch,
                  '{"word": "UD"}\nbroken\n{"word": "UUDD"}\n')
        code, out, err = run(capsys, "map", "--bijection", "phi-inv",
                             "--skip-invalid")
        assert code == 0
        assert len(lines(out)) == 2
        assert "line 2" in err


class TestSeries:
    def test_columns_order_one(self, capsys):
        code, out, _ = run(capsys, "series", "--gf", "columns", "--order", "1")
        assert code == 0
        rec = lines(out)[0]
        assert rec["series"]["terms"] == [{"e": [1, 1], "c": 1}]

    def test_area_matches_frozen_values(self, capsys):
        code, out, _ = run(capsys, "series", "--gf", "area", "--order", "11")
        assert code == 0
        rec = lines(out)[0]
        coeffs = [t["c"] for t in rec["series"]["terms"]]
        assert coeffs == [1, 1, 1, 2, 3, 6, 10, 19, 34, 63, 115]

    def test_verify_flag_reports_oracle(self, capsys):
        code, out, _ = run(capsys, "series", "--gf", "columns",
                           "--order", "5", "--verify")
        assert code == 0
        assert lines(out)[0]["verified_against_oracle"] is True

    def test_corollaries_verify_reports_false(self, capsys):
        # one closed form disagrees with enumeration, and the flag says so
        code, out, _ = run(capsys, "series", "--gf", "corollaries",
                           "--order", "6", "--verify")
        assert code == 0
        assert lines(out)[0]["verified_against_oracle"] is False

    def test_order_zero_exit_two(self, capsys):
        code, _, _ = run(capsys, "series", "--gf", "columns", "--order", "0")
        assert code == 2

    def test_unstable_depth_exit_five(self, capsys):
        code, _, err = run(capsys, "series", "--gf", "cf-a",
                           "--order", "4", "--depth", "1")
        assert code == 5
        assert "theorem check failed" in err


class TestVerify:
    def test_passing_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "table1",
                           "--max-size", "6")
        assert code == 0
        report = lines(out)[0]
        assert report["suite"] == "table1"
        assert report["checks"]
        assert all(c["status"] == "pass" for c in report["checks"])

    def test_failing_suite_exit_one(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "semiperimeter",
                           "--max-size", "8")
        assert code == 1
        statuses = {c["status"] for c in lines(out)[0]["checks"]}
        assert statuses == {"pass", "fail"}


class TestConfig:
    def test_config_file_sets_jobs(self, capsys, monkeypatch, tmp_path):
        cfg = tmp_path / "lab.cfg"
        cfg.write_text("jobs=2\n")
        monkeypatch.setenv("STANLEY_LAB_CONFIG", str(cfg))
        code, out, _ = run(capsys, "enumerate", "--family", "stanley",
                           "--measure", "columns", "--value", "5")
        assert code == 0
        assert len(lines(out)) == 14

    def test_unknown_key_warns(self, capsys, monkeypatch, tmp_path):
        cfg = tmp_path / "lab.cfg"
        cfg.write_text("jobs=1\ncolour=blue\n")
        monkeypatch.setenv("STANLEY_LAB_CONFIG", str(cfg))
        code, _, err = run(capsys, "enumerate", "--family", "dyck",
                           "--measure", "semilength", "--value", "2")
        assert code == 0
        assert "colour" in err

    def test_malformed_config_exit_two(self, capsys, monkeypatch, tmp_path):
        cfg = tmp_path / "lab.cfg"
        cfg.write_text("jobs two\n")
        monkeypatch.setenv("STANLEY_LAB_CONFIG", str(cfg))
        code, _, _ = run(capsys, "enumerate", "--family", "dyck",
                         "--measure", "semilength", "--value", "2")
        assert code == 2

    def test_cache_dir_round_trip(self, capsys, tmp_path):
        cache = tmp_path / "cache"
        args = ("enumerate", "--family", "parallelogram", "--measure",
                "area", "--value", "6", "--cache-dir", str(cache))
        _, cold, _ = run(capsys, *args)
        assert any(cache.iterdir())
        _, warm, _ = run(capsys, *args)
        assert cold == warm
