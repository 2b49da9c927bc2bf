import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from nodalquartic.qpoly import HomogPoly, monomial_basis  # noqa: E402

ACCEPTANCE_LINES = []


def record_acceptance(criterion: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_fraction(rng: random.Random, height=20) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def random_poly(rng: random.Random, degree=None, max_terms=8) -> HomogPoly:
    d = rng.randint(0, 6) if degree is None else degree
    basis = monomial_basis(d)
    k = rng.randint(1, min(max_terms, len(basis)))
    return HomogPoly(d, [(e, random_fraction(rng)) for e in rng.sample(basis, k)])


def random_invertible(rng: random.Random, n=4, lo=-3, hi=3):
    from nodalquartic import linalg

    while True:
        M = [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]
        if linalg.det(M) != 0:
            return M


@pytest.fixture
def rng():
    return random.Random(20261016)
