from itertools import combinations

import numpy as np
import pytest
import sympy

from ternjump.errors import FlatnessViolation, InexactDivision, TooLarge
from ternjump.modular import Triple, validate_triple
from ternjump.poly import (
    CoefficientTable,
    coefficients,
    coefficients_csv,
    is_palindromic,
    jump_scan,
    jumps_csv,
    numerator,
    reconstruct_numerator,
)

from conftest import EXHAUSTIVE, coprime_triples, prime_triples

X = sympy.Symbol("x")

# Frozen from the oracle, cross-checked against sympy below.
PHI105_UPS = (0, 8, 10, 12, 21, 23, 25, 27, 29, 31, 42, 44, 46)


def _long_division(t):
    """Schoolbook division of the product formula, plain Python ints."""
    num = [0] * (t.n + t.p + t.q + t.r + 1)
    for size in range(5):
        for subset in combinations((t.n, t.p, t.q, t.r), size):
            num[sum(subset)] += (-1) ** size
    den = [1]
    for d in (t.q * t.r, t.r * t.p, t.p * t.q, 1):
        nxt = [0] * (len(den) + d)
        for i, c in enumerate(den):
            nxt[i] += c
            nxt[i + d] -= c
        den = nxt
    quot = [0] * (len(num) - len(den) + 1)
    rem = num[:]
    for i in range(len(quot) - 1, -1, -1):
        c = rem[i + len(den) - 1] // den[-1]
        quot[i] = c
        for j, dj in enumerate(den):
            rem[i + j] -= c * dj
    assert not any(rem)
    return quot


def test_phi105(t357):
    ct = coefficients(t357)
    assert len(ct.coeffs) == 49
    assert (ct(0), ct(1), ct(7), ct(48)) == (1, 1, -2, 1)
    assert ct(-1) == ct(49) == 0
    s = jump_scan(ct)
    assert (s.height, s.theta, s.J) == (2, 33, 13)
    assert s.jump_ups == PHI105_UPS
    assert len(s.jump_downs) == 13


@pytest.mark.parametrize("trip", prime_triples(13) + [(3, 11, 23)])
def test_matches_sympy(trip):
    t = validate_triple(*trip)
    poly = sympy.Poly(sympy.cyclotomic_poly(t.n, X), X)
    expected = [int(c) for c in reversed(poly.all_coeffs())]
    assert coefficients(t).coeffs.tolist() == expected


@pytest.mark.parametrize("trip", [(3, 17, 35), (4, 23, 47), (4, 5, 9), (8, 9, 25)])
def test_matches_long_division(trip):
    t = validate_triple(*trip)
    ct = coefficients(t)
    assert ct.coeffs.tolist() == _long_division(t)


@pytest.mark.parametrize("trip", EXHAUSTIVE + coprime_triples(15) + [(3, 17, 35)])
def test_table_invariants(trip):
    t = validate_triple(*trip)
    ct = coefficients(t)
    c = ct.coeffs
    assert c[0] == c[-1] == 1
    assert is_palindromic(ct)
    v = ct.differences()
    assert np.abs(v).max() <= 1
    # V(k) = -V(phi + 1 - k)
    full = np.diff(ct.padded(-1, t.phi + 2))
    assert np.array_equal(full, -full[::-1])
    assert np.array_equal(reconstruct_numerator(ct), numerator(t))
    s = jump_scan(ct)
    assert len(s.jump_ups) == len(s.jump_downs)
    assert s.jump_ups[0] == 0
    assert s.theta >= 2 and s.odd <= s.theta


def test_too_large(t357, monkeypatch):
    with pytest.raises(TooLarge):
        coefficients(t357, limit=100)
    monkeypatch.setenv("TERNJUMP_MAX_N", "50")
    with pytest.raises(TooLarge):
        coefficients(t357)


def test_inexact_division():
    # bypasses validation: 3 and 9 share a factor, so the quotient has a tail
    bad = Triple(3, 5, 9)
    with pytest.raises(InexactDivision):
        coefficients(bad)


def test_flatness_violation(t357):
    ct = coefficients(t357)
    spiked = CoefficientTable(t357, ct.coeffs.copy())
    spiked.coeffs[5] += 3
    with pytest.raises(FlatnessViolation):
        jump_scan(spiked)


def test_csv_exports(t357):
    ct = coefficients(t357)
    lines = coefficients_csv(ct).splitlines()
    assert lines[0] == "k,a" and lines[8] == "7,-2" and len(lines) == 50
    jl = jumps_csv(ct).splitlines()
    assert jl[0] == "k,V" and jl[1] == "0,1"
    ups = [int(line.split(",")[0]) for line in jl[1:] if line.endswith(",1")]
    assert tuple(ups) == PHI105_UPS
