from pathlib import Path

import pytest
from hypothesis import settings

from riordanmoments.exactalg import parse
from riordanmoments.matrix import Matrix

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"


def load_list(name):
    """One polynomial per line, as transcribed."""
    return [parse(line) for line in (FIXTURES / name).read_text().splitlines() if line.strip()]


def load_matrix(name):
    """Rows of ``&``-separated entries, as transcribed."""
    rows = []
    for line in (FIXTURES / name).read_text().splitlines():
        if line.strip():
            rows.append([parse(cell) for cell in line.split("&")])
    return Matrix(rows)


def canonical(items):
    return [str(p) for p in items]


@pytest.fixture
def fixture_list():
    return load_list


@pytest.fixture
def fixture_matrix():
    return load_matrix


ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture
def record_criterion(request):
    """Append a one-line verdict to the session's acceptance summary."""
    lines = request.config.stash.setdefault(ACCEPTANCE_KEY, [])
    return lines.append


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
