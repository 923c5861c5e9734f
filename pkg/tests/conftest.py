"""Shared fixtures plus a per-criterion acceptance summary.

The acceptance tests live in test_acceptance.py as ``test_criterion_<n>``
functions.  This plugin collects their outcomes and prints one PASS/FAIL
line per criterion at the end of the run, together with any notes the
tests queued (abstention rates and similar reported figures).
"""

from __future__ import annotations

import re
from pathlib import Path

import pytest

from polygraph import presentations
from polygraph.rewriting import Converged, complete, encode

DATA = Path(__file__).parent / "data"

_CRITERIA = {
    1: "hand-checked six-rule braid system verifies convergent",
    2: "completion reproduces the three-generator braid system",
    3: "completion gives up honestly on the two-generator braid",
    4: "generator-rewiring script preserves word equality",
    5: "finite enumerations: 5, 10, and 8 elements",
    6: "Cayley graph invariants and the cycle-rank formula",
    7: "Cayley complex homology and Euler characteristics",
    8: "normal-form engine agrees with the breadth-first oracle",
    9: "randomized property suites, >= 1000 cases each",
}
_RESULTS: dict[int, list[str]] = {}
_NOTES: list[str] = []
_NODE_RE = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


def note(message: str) -> None:
    """Queue a line for the acceptance summary (reported rates etc.)."""
    _NOTES.append(message)


def load(name: str):
    """Parse one of the bundled example presentations."""
    return presentations.parse((DATA / name).read_text(encoding="utf-8"))


def completed(name: str, precedence=None, inverses: bool = True):
    out = complete(encode(load(name), precedence, inverses=inverses))
    assert isinstance(out, Converged), f"{name} should complete"
    return out.system


@pytest.fixture(scope="session")
def z5():
    return load("z5.plg")


@pytest.fixture(scope="session")
def d5():
    return load("d5.plg")


@pytest.fixture(scope="session")
def q8():
    return load("q8.plg")


@pytest.fixture(scope="session")
def b3():
    return load("b3.plg")


@pytest.fixture(scope="session")
def z5_system():
    return completed("z5.plg")


@pytest.fixture(scope="session")
def d5_system():
    return completed("d5.plg")


@pytest.fixture(scope="session")
def q8_system():
    return completed("q8.plg")


@pytest.fixture(scope="session")
def b3_monoid_system():
    """Convergent positive-word system for the three-strand braid monoid,
    over the three-generator presentation with c defined as a b."""
    return completed("b3_abc.plg", ["a", "b", "c"], inverses=False)


def pytest_runtest_logreport(report):
    match = _NODE_RE.search(report.nodeid)
    if not match:
        return
    outcomes = _RESULTS.setdefault(int(match.group(1)), [])
    if report.when == "call":
        if hasattr(report, "wasxfail"):
            outcomes.append("xfail" if report.skipped else "xpass")
        elif report.passed:
            outcomes.append("passed")
        elif report.failed:
            outcomes.append("failed")
        else:
            outcomes.append("skipped")
    elif report.failed:
        outcomes.append("failed")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        outcomes = _RESULTS.get(n)
        if not outcomes:
            continue
        if any(o in ("failed", "xpass") for o in outcomes):
            status = "FAIL"
        elif all(o == "skipped" for o in outcomes):
            status = "SKIP"
        else:
            status = "PASS"
        documented = sum(1 for o in outcomes if o == "xfail")
        suffix = ""
        if documented and status == "PASS":
            plural = "s" if documented > 1 else ""
            suffix = (
                f"  [{documented} unattainable sub-claim{plural}"
                " recorded as expected failure]"
            )
        terminalreporter.write_line(
            f"criterion {n}: {status} - {_CRITERIA[n]}{suffix}"
        )
    for line in _NOTES:
        terminalreporter.write_line(line)
