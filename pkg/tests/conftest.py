import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ordfact._accel import HAVE_NUMBA  # noqa: E402

BACKENDS = ["numpy"] + (["numba"] if HAVE_NUMBA else [])


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


# Table 1, n = 1..12
TABLE1 = {
    "K": [1, 1, 1, 2, 1, 3, 1, 4, 2, 3, 1, 8],
    "kappa0": [1, 2, 2, 4, 2, 6, 2, 8, 4, 6, 2, 16],
    "tau1": [1] * 12,
    "tau2": [1, 2, 2, 3, 2, 4, 2, 4, 3, 4, 2, 6],
    "tau3": [1, 3, 3, 6, 3, 9, 3, 10, 6, 9, 3, 18],
    "tau4": [1, 4, 4, 10, 4, 16, 4, 20, 10, 16, 4, 40],
    "upsilon1": [1] * 12,
    "upsilon2": [0, 1, 1, 2, 1, 3, 1, 3, 2, 3, 1, 5],
    "upsilon3": [0, 0, 0, 1, 0, 2, 0, 3, 1, 2, 0, 7],
    "upsilon4": [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 3],
}

# closing list of the discussion, kappa0(n) / 2**alpha*(n) for n = 1..30
KAPPA_OVER_2_ALPHA_30 = [1, 1, 1, 1, 1, 3, 1, 1, 1, 3, 1, 4, 1, 3, 3,
                         1, 1, 4, 1, 4, 3, 3, 1, 5, 1, 3, 1, 4, 1, 13]


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
