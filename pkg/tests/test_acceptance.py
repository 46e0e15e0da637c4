"""One test per shipped acceptance criterion, each reporting a PASS/FAIL line.

Two criteria contain clauses that the library deliberately reports as failed:
the no-internal-edge count by semiperimeter does not follow the claimed
Fibonacci closed form, and the triple-run-free Dyck map is not injective.
Those clauses get their own red tests so the summary stays honest; every
other clause of the same criteria is asserted green.
"""

from __future__ import annotations

import pytest

from conftest import ACCEPTANCE_LINES

from stanlab.catalog import catalan
from stanlab.enumeration import cached_count
from stanlab.verification import run_suite, _fountain_brute_checks

SPER_RED = "polyominoes with no internal edge by semiperimeter are counted by Fibonacci numbers"
BIJ_REDS = {
    "triple-run-free map is injective at each source size",
    "triple-run-free map image counts match semiperimeter counts",
}

_suite_cache: dict[tuple[str, int], dict] = {}


def suite(name: str, max_size: int) -> dict:
    key = (name, max_size)
    if key not in _suite_cache:
        _suite_cache[key] = run_suite(name, max_size=max_size)
    return _suite_cache[key]


def record(num: int, label: str, ok: bool) -> bool:
    verdict = "PASS" if ok else "FAIL"
    ACCEPTANCE_LINES.append(f"criterion {num:2d} [{verdict}] {label}")
    return ok


def failures(report: dict) -> list[str]:
    return [c["name"] for c in report["checks"] if c["status"] != "pass"]


def describe(report: dict) -> str:
    bad = failures(report)
    return "; ".join(bad) if bad else "all checks pass"


def test_criterion_1_column_counts_are_catalan():
    ok = all(
        cached_count("stanley", "columns", n + 1) == catalan(n)
        for n in range(1, 13)
    )
    assert record(1, "column counts follow the Catalan numbers through 13 columns", ok)


def test_criterion_2_statistic_transport_suite():
    report = suite("table1", 9)
    ok = not failures(report)
    assert record(2, "statistic transport suite at size 9", ok), describe(report)


def test_criterion_3_five_variable_series_suite():
    report = suite("thm-full", 6)
    ok = not failures(report)
    assert record(3, "five-variable series suite at size 6", ok), describe(report)


def test_criterion_4_columns_suite():
    report = suite("columns", 12)
    ok = not failures(report)
    assert record(4, "columns suite at size 12", ok), describe(report)


def test_criterion_5_semiperimeter_suite_green_clauses():
    report = suite("semiperimeter", 12)
    bad = [name for name in failures(report) if name != SPER_RED]
    record(5, "semiperimeter suite at size 12 (one clause is a known red)",
           not failures(report))
    assert not bad, "; ".join(bad)


def test_criterion_5_no_internal_edge_fibonacci_clause():
    report = suite("semiperimeter", 12)
    red = next(c for c in report["checks"] if c["name"] == SPER_RED)
    if red["status"] != "pass":
        pytest.fail(
            "known red: the stated Fibonacci closed form disagrees with "
            f"enumeration (expected {red['expected']}, actual {red['actual']})"
        )


def test_criterion_6_bijection_suite_green_clauses():
    report = suite("bijections", 12)
    bad = [name for name in failures(report) if name not in BIJ_REDS]
    record(6, "bijection suite at size 12 (two clauses are known reds)",
           not failures(report))
    assert not bad, "; ".join(bad)


def test_criterion_6_triple_run_free_injectivity_clauses():
    report = suite("bijections", 12)
    reds = [c for c in report["checks"] if c["name"] in BIJ_REDS]
    assert len(reds) == len(BIJ_REDS)
    if any(c["status"] != "pass" for c in reds):
        detail = "; ".join(f"{c['name']}: {c['actual']}" for c in reds
                           if c["status"] != "pass")
        pytest.fail(
            "known red: the stated recursion merges distinct sources from "
            f"semilength 5 on ({detail})"
        )


def test_criterion_7_area_suite():
    report = suite("area", 14)
    ok = not failures(report)
    assert record(7, "area suite at size 14", ok), describe(report)


def test_criterion_8_continued_fraction_suite():
    report = suite("cf", 10)
    ok = not failures(report)
    assert record(8, "continued-fraction suite at size 10", ok), describe(report)


def test_criterion_9_area_row_triple_match_suite():
    report = suite("corollary-2-13", 12)
    ok = not failures(report)
    assert record(9, "area-by-row triple-family match suite at size 12", ok), \
        describe(report)


def test_criterion_10_fountain_physics_brute_force():
    checks: list[dict] = []
    _fountain_brute_checks(checks, jobs=1, cache_dir=None)
    ok = bool(checks) and all(c["status"] == "pass" for c in checks)
    assert record(10, "fountain acceptance matches gravity simulation to 18 coins",
                  ok)
