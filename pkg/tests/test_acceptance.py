"""Acceptance criteria, one test each.

Every test prints a single PASS/FAIL summary line (visible with ``-s`` or in
the captured output of a failure) and lists the failing checks on failure.
"""

import pytest

from casimir_zeta.verify import CRITERIA, run_criterion, summary_line


@pytest.mark.parametrize("n", sorted(CRITERIA), ids=lambda n: f"criterion_{n:02d}")
def test_criterion(n):
    results = run_criterion(n)
    print(summary_line(n, results))
    failed = [r for r in results if not r.passed]
    detail = "\n".join(
        f"{r.name}: engine={r.engine!r} reference={r.reference!r} error={r.error:.3e} tol={r.tol:.1e}"
        for r in failed
    )
    assert not failed, detail
    assert results
