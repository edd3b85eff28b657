"""Shared fixtures: the expensive zero scans run once per session."""

from __future__ import annotations

import math

import pytest

from rzs import build_report, scan_zeros


@pytest.fixture(scope="session")
def table_500():
    """Zero table over (0, 500]; 269 zeros."""
    return scan_zeros(0.0, 500.0, 1.0e-8)


@pytest.fixture(scope="session")
def full_table():
    """Zero table deep enough to cover the first 5000 zeros."""
    return scan_zeros(0.0, 5520.0, 1.0e-8)


@pytest.fixture(scope="session")
def report_2pi(full_table):
    """Correspondence report at the matched mass m^2 = 2*pi, n <= 5000."""
    return build_report(full_table, 2.0 * math.pi, 5000)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Repeat the acceptance-criterion verdicts at the bottom of the run."""
    import acceptance_log

    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.LINES:
            terminalreporter.write_line(line)
