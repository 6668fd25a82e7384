"""The numerical checks, one line each, plus a JSON copy of the report."""
from pathlib import Path

from tandyn import CHECKS, run_all, run_check

report = run_all(seed=1)
print(report.to_text())
Path("checks.json").write_text(report.to_json())

failed = [r.name for r in report.results if not r.passed]
print("\nfailed:", failed or "none")

# A check is a pure function of (name, seed); tolerances can be overridden.
print(run_check("fixed-multiplier", seed=3).line())
print(run_check("fixed-multiplier", seed=3, tol=1e-16).line())
print(len(CHECKS), "checks registered")
