import re

import pytest
from hypothesis import HealthCheck, settings

from zetadesk.arith import build_tables, mertens_prefix

settings.register_profile(
    "suite", deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture])
settings.load_profile("suite")

_ACCEPTANCE_RE = re.compile(r"test_acceptance_(\d{2})_(\w+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion, capture-proof."""
    rows = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, ()):
            match = _ACCEPTANCE_RE.search(getattr(report, "nodeid", ""))
            if match is None:
                continue
            number, name = int(match.group(1)), match.group(2)
            ok = outcome == "passed" and rows.get(number, (name, True))[1]
            rows[number] = (name, ok)
    if rows:
        terminalreporter.write_sep("-", "acceptance summary")
        for number in sorted(rows):
            name, ok = rows[number]
            terminalreporter.write_line(
                f"ACCEPTANCE {number:02d} {name}: {'PASS' if ok else 'FAIL'}")


@pytest.fixture(scope="session")
def table4():
    return build_tables(10_000)


@pytest.fixture(scope="session")
def table6():
    return build_tables(1_000_000)


@pytest.fixture(scope="session")
def table7():
    return build_tables(10_000_000)


@pytest.fixture(scope="session")
def prefix4(table4):
    return mertens_prefix(table4)


@pytest.fixture(scope="session")
def prefix6(table6):
    return mertens_prefix(table6)


@pytest.fixture(scope="session")
def prefix7(table7):
    return mertens_prefix(table7)
