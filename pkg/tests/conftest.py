import time

import pytest

from gbsat.problem import parse_polynomial
from gbsat.ring import FieldSpec, PolyRing


@pytest.fixture
def R7():
    return PolyRing(("x", "y"), FieldSpec(7))


@pytest.fixture
def R3():
    return PolyRing(("x", "y", "z"), FieldSpec(65521))


def polys(ring, *texts):
    return [parse_polynomial(t, ring) for t in texts]


def strs(G):
    return sorted(str(g) for g in G)


# -- acceptance report -----------------------------------------------------------
# The acceptance tests record a verdict per criterion; the summary prints one
# line each, and a suite slower than the time budget fails the session.

ACCEPTANCE: dict = {}
SUITE_BUDGET = 600.0
_START = time.monotonic()


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    ACCEPTANCE[number] = (title, ok, detail)
    print(f"criterion {number} ({title}): {'PASS' if ok else 'FAIL'} {detail}".rstrip())


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    elapsed = time.monotonic() - _START
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[number]
        if number == 8:
            ok = ok and elapsed < SUITE_BUDGET
            detail = f"{detail}; full suite {elapsed:.1f}s (budget {SUITE_BUDGET:.0f}s)"
        terminalreporter.write_line(
            f"criterion {number} ({title}): {'PASS' if ok else 'FAIL'} {detail}".rstrip())


def pytest_sessionfinish(session, exitstatus):
    if ACCEPTANCE and time.monotonic() - _START >= SUITE_BUDGET and exitstatus == 0:
        session.exitstatus = 1
