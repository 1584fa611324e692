from fractions import Fraction
from itertools import permutations

import pytest

from brownian import BrownianParams, Variant


def leibniz_det(rows):
    """Determinant by summing over all permutations (tiny orders only)."""
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for x in range(n) for y in range(x + 1, n) if perm[x] > perm[y])
        term = Fraction(-1 if inversions % 2 else 1)
        for i, j in enumerate(perm):
            term *= rows[i][j]
        total += term
    return total


def adjugate_inverse(rows):
    """Inverse as adjugate / determinant via cofactors."""
    n = len(rows)
    det = leibniz_det(rows)
    if n == 1:
        return [[1 / Fraction(rows[0][0])]]
    inv = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [r[:j] + r[j + 1:] for k, r in enumerate(rows) if k != i]
            inv[j][i] = (-1) ** (i + j) * leibniz_det(minor) / det
    return inv


@pytest.fixture
def a1_n3():
    return BrownianParams(Variant.A1, [1, 2, 3], [1, 1], [1, 1, 1])


@pytest.fixture
def a2_n3():
    return BrownianParams(Variant.A2, [3, 2, 1], [1, 1], [1, 1, 1])


@pytest.fixture
def a1_n2():
    return BrownianParams(Variant.A1, [1, 2], [1], [1, 1])


CRITERIA = {}


def record(number, ok, detail=""):
    CRITERIA[number] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        ok, detail = CRITERIA[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
