import random

import pytest
from hypothesis import given, strategies as st

from ternjump.errors import Inconsistent, OutOfRange
from ternjump.modular import validate_triple
from ternjump.representation import (
    decompose,
    eight_term_sum,
    jump_from_octuple,
    octuple,
    proposition_residuals,
    shift_equivalent,
)

from conftest import EXHAUSTIVE


@pytest.mark.parametrize(
    "k, expected",
    [(0, (0, 0, 0, 0)), (1, (1, 2, 1, 1)), (7, (1, 2, 2, 0))],
)
def test_decompose_examples(t357, k, expected):
    rep = decompose(t357, k)
    assert (rep.F, rep.a, rep.b, rep.c) == expected
    assert k + rep.F * 105 == rep.a * 35 + rep.b * 21 + rep.c * 15


def _brute_decompose(t, k):
    """Search all residue triples; the defining equation must hold for exactly one."""
    p, q, r = t.moduli
    hits = []
    for a in range(p):
        for b in range(q):
            for c in range(r):
                F, rem = divmod(a * q * r + b * r * p + c * p * q - k, t.n)
                if rem == 0:
                    hits.append((F, a, b, c))
    return hits


@pytest.mark.parametrize("k", [-200, -71, -1, 0, 13, 52, 104, 105, 333])
def test_decompose_unique(t357, k):
    (hit,) = _brute_decompose(t357, k)
    assert tuple(decompose(t357, k))[1:] == hit


@given(st.sampled_from(EXHAUSTIVE), st.integers(-10**6, 10**6))
def test_decompose_shift_by_n(trip, k):
    t = validate_triple(*trip)
    lo, hi = decompose(t, k), decompose(t, k + t.n)
    # k + F*n is fixed by the residues, so raising k by n lowers F by one
    assert hi.F == lo.F - 1
    assert (hi.a, hi.b, hi.c) == (lo.a, lo.b, lo.c)


@pytest.mark.parametrize("trip", EXHAUSTIVE)
def test_F_range(trip):
    t = validate_triple(*trip)
    lo = -(t.p * t.q + t.q * t.r + t.r * t.p)
    for k in range(lo + 1, t.n):
        assert decompose(t, k).F in (0, 1, 2)


def test_octuple_range(t357):
    with pytest.raises(OutOfRange):
        octuple(t357, 105)
    with pytest.raises(OutOfRange):
        octuple(t357, -1)
    o = octuple(t357, 0)
    assert o[0] == 0 and eight_term_sum(o) == 0


@pytest.mark.parametrize(
    "o, v",
    [
        ((0, 1, 1, 1, 1, 2, 2, 2), 1),
        ((0, 0, 0, 1, 1, 1, 1, 2), -1),
        ((1, 0, 1, 1, 0, 1, 1, 1), 0),
    ],
)
def test_jump_from_octuple(o, v):
    assert jump_from_octuple(o) == v


def test_jump_from_octuple_inconsistent():
    with pytest.raises(Inconsistent):
        jump_from_octuple((0, 0, 0, 0, 0, 0, 0, 1))
    with pytest.raises(Inconsistent):
        jump_from_octuple((3, 0, 0, 0, 0, 0, 0, 0))


def test_shift_equivalent():
    assert shift_equivalent((1, 2, 3), (0, 1, 2))
    assert shift_equivalent((1, 2, 3), (1, 2, 3))
    assert not shift_equivalent((1, 2, 3), (0, 1, 1))


def test_propositions_357(t357):
    assert proposition_residuals(t357, 7).ok
    assert proposition_residuals(t357, 0).eight_term


def test_propositions_sampled():
    t = validate_triple(3, 11, 23)
    rng = random.Random(7)
    for k in rng.sample(range(t.n), 200):
        assert proposition_residuals(t, k).ok
