import json
import re
from pathlib import Path

import pytest

from tandyn.verify import CHECKS, CheckResult, VerifyReport, run_all, run_check

README = Path(__file__).resolve().parents[1] / "README.md"


@pytest.fixture(scope="module")
def report1():
    return run_all(1)


def test_pi_equivariance_example():
    r = run_check("pi-equivariance", 1)
    assert r.passed and r.max_error < 1e-12 and r.samples == 10_000


def test_g_map_example():
    r = run_check("g-map", 1)
    assert r.passed
    assert "y0=-0.7524" in r.note


def test_estimates_2_example():
    r = run_check("estimates-2", 1)
    assert r.passed and r.violations == 0, r.line()


def test_run_all_passes(report1):
    assert report1.all_passed, "\n" + report1.to_text()


def test_tightened_tolerance_fails():
    r = run_all(1, {"fixed-multiplier": 1e-16})
    assert not r.all_passed
    assert not next(x for x in r.results if x.name == "fixed-multiplier").passed


def test_seed_changes_samples_not_outcomes(report1):
    r2 = run_all(2)
    assert [x.passed for x in r2.results] == [x.passed for x in report1.results]
    assert [x.name for x in r2.results] == list(CHECKS)


def test_deterministic(report1):
    again = run_all(1)
    assert again.to_json() == report1.to_json()


def test_unknown_name():
    with pytest.raises(KeyError, match="pi-equivariance"):
        run_check("no-such-check")


def test_passed_matches_fields(report1):
    for r in report1.results:
        assert r.passed == (r.max_error <= r.tolerance and r.violations == 0)
    assert report1.all_passed == all(r.passed for r in report1.results)


def test_report_formats(report1):
    lines = report1.to_text().splitlines()
    assert len(lines) == len(CHECKS)
    for line, r in zip(lines, report1.results):
        assert line.startswith(r.name) and ("PASS" if r.passed else "FAIL") in line
    data = json.loads(report1.to_json())
    assert data["all_passed"] == report1.all_passed
    assert [d["name"] for d in data["results"]] == list(CHECKS)


def test_empty_report():
    assert VerifyReport().all_passed
    assert CheckResult("x", 0.0, 0.0, 1, True).line().endswith("PASS")


def test_readme_table_matches_registry():
    text = README.read_text()
    block = text.split("<!-- checks-table -->")[1].split("<!-- /checks-table -->")[0]
    names = re.findall(r"^\| `([a-z0-9-]+)` \|", block, flags=re.M)
    assert names == list(CHECKS)
