from itertools import combinations
from math import gcd

import pytest

from ternjump.modular import is_prime, validate_triple

SMALL_PRIMES = [p for p in range(3, 32) if is_prime(p)]

# Triples with exhaustive per-index checks.
EXHAUSTIVE = [(3, 5, 7), (3, 5, 11), (3, 7, 11), (5, 7, 11), (3, 11, 23), (7, 11, 13)]


def prime_triples(limit):
    return [t for t in combinations([p for p in SMALL_PRIMES if p <= limit], 3)]


def coprime_triples(limit):
    return [
        t
        for t in combinations(range(3, limit + 1), 3)
        if gcd(t[0], t[1]) == gcd(t[0], t[2]) == gcd(t[1], t[2]) == 1
    ]


@pytest.fixture
def t357():
    return validate_triple(3, 5, 7)


@pytest.fixture
def t31123():
    return validate_triple(3, 11, 23)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
