import numpy as np
import pytest

# Matrices used throughout: the shift and the two 3x3 examples built from
# their SVDs (EX2 is not half-radial, EX3 is).
J = np.array([[0, 1], [0, 0]], dtype=complex)
EX2 = np.array([[0, 0, 0], [0, 0.9, 0], [1, 0, 0]], dtype=complex)
EX3 = np.array([[0, 1, 0], [0, 0, 0], [0, 0, 0.5]], dtype=complex)


def ginibre(n, rng, scale=1.0):
    return scale * (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))


def unit(n, i):
    e = np.zeros(n, dtype=complex)
    e[i] = 1
    return e


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
        terminalreporter.write_line(line)
