"""
CRT coordinates of an index: ``k + F*pqr = a*qr + b*rp + c*pq`` with
``a in [0,p)``, ``b in [0,q)``, ``c in [0,r)``, the eight-entry F-octuple and
the jump value read off an octuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import Inconsistent, OutOfRange
from .modular import Triple, mod_inverse

# Positional order of the octuple, as subsets of the roles (p, q, r).
OCTUPLE_SHIFTS: tuple[frozenset[str], ...] = (
    frozenset(),
    frozenset("p"),
    frozenset("q"),
    frozenset("r"),
    frozenset("qr"),
    frozenset("rp"),
    frozenset("pq"),
    frozenset("pqr"),
)
# F_k, F_{k-q-r}, F_{k-r-p}, F_{k-p-q}
EVEN_POSITIONS = (0, 4, 5, 6)
# F_{k-p}, F_{k-q}, F_{k-r}, F_{k-p-q-r}
ODD_POSITIONS = (1, 2, 3, 7)


class Representation(NamedTuple):
    k: int
    F: int
    a: int
    b: int
    c: int


Octuple = tuple[int, int, int, int, int, int, int, int]


def decompose(t: Triple, k: int) -> Representation:
    p, q, r = t.moduli
    a = k * mod_inverse(q * r, p) % p
    b = k * mod_inverse(r * p, q) % q
    c = k * mod_inverse(p * q, r) % r
    F, rem = divmod(a * q * r + b * r * p + c * p * q - k, t.n)
    assert rem == 0
    return Representation(k, F, a, b, c)


def shift_amounts(t: Triple) -> tuple[int, ...]:
    """Subset sums of {p, q, r} in octuple positional order."""
    role = dict(zip("pqr", t.moduli))
    return tuple(sum(role[x] for x in s) for s in OCTUPLE_SHIFTS)


def octuple(t: Triple, k: int) -> Octuple:
    if not 0 <= k < t.n:
        raise OutOfRange(f"k = {k} outside [0, {t.n})")
    return tuple(decompose(t, k - s).F for s in shift_amounts(t))  # type: ignore[return-value]


def shift_equivalent(x: tuple[int, ...], y: tuple[int, ...]) -> bool:
    """True iff ``x`` and ``y`` differ by one constant added to every entry."""
    if len(x) != len(y):
        return False
    u = x[0] - y[0]
    return all(a - b == u for a, b in zip(x, y))


def eight_term_sum(o: Octuple) -> int:
    return sum(o[i] for i in EVEN_POSITIONS) - sum(o[i] for i in ODD_POSITIONS)


def jump_from_octuple(o: Octuple) -> int:
    """Coefficient difference ``a(k) - a(k-1)`` determined by ``octuple(k)``.

    Three expressions (counting 0s, 2s and halved 1s) are evaluated and must
    coincide; otherwise :class:`Inconsistent` is raised.
    """
    if any(v not in (0, 1, 2) for v in o):
        raise Inconsistent(f"octuple entries must lie in {{0,1,2}}: {o}")
    even = [o[i] for i in EVEN_POSITIONS]
    odd = [o[i] for i in ODD_POSITIONS]
    by_zeros = even.count(0) - odd.count(0)
    by_twos = even.count(2) - odd.count(2)
    ones = odd.count(1) - even.count(1)
    if ones % 2 or ones // 2 != by_zeros or by_twos != by_zeros:
        raise Inconsistent(f"jump expressions disagree for {o}: {by_zeros}, {by_twos}, {ones}/2")
    return by_zeros


@dataclass(frozen=True)
class PropositionCheck:
    """Outcome of the structural identities at one index (failures are data)."""

    k: int
    range_ok: bool
    single_shift: dict[str, bool]
    four_term: dict[str, bool]
    eight_term: bool

    @property
    def ok(self) -> bool:
        return (
            self.range_ok
            and all(self.single_shift.values())
            and all(self.four_term.values())
            and self.eight_term
        )


def _zone_index(value: int, bounds: tuple[int, ...]) -> int:
    for j in range(5):
        if bounds[j] <= value < bounds[j + 1]:
            return j
    raise AssertionError(f"{value} outside {bounds}")


def proposition_residuals(t: Triple, k: int) -> PropositionCheck:
    """Evaluate the single-shift, four-term and eight-term F identities at ``k``.

    Each identity is checked in every symmetric version; the zone membership
    needed by the four-term rule is recomputed here from the raw inverses.
    """
    role = dict(zip("pqr", t.moduli))
    rep = decompose(t, k)
    resid = {"p": rep.a, "q": rep.b, "r": rep.c}

    def F(*shift: str) -> int:
        return decompose(t, k - sum(role[s] for s in shift)).F

    single: dict[str, bool] = {}
    four: dict[str, bool] = {}
    for y in "pqr":
        x, z = (s for s in "pqr" if s != y)
        # F_k - F_{k-y}: both residues of the other moduli against the
        # inverse of each other.
        lo_x = resid[x] < mod_inverse(role[z], role[x])
        lo_z = resid[z] < mod_inverse(role[x], role[z])
        expected = -1 if (lo_x and lo_z) else 1 if (not lo_x and not lo_z) else 0
        single[y] = F() - F(y) == expected
    for x in "pqr":
        y, z = (s for s in "pqr" if s != x)
        u = mod_inverse(role[y], role[x])
        v = mod_inverse(role[z], role[x])
        m = role[x]
        bounds = (0, max(u + v - m, 0), min(u, v), max(u, v), min(u + v, m), m)
        zone = _zone_index(resid[x], bounds)
        expected = -1 if zone == 1 else 1 if zone == 3 else 0
        four[x] = F() - F(y) - F(z) + F(y, z) == expected
    o = (F(), F("p"), F("q"), F("r"), F("q", "r"), F("r", "p"), F("p", "q"), F("p", "q", "r"))
    lo = -(t.p * t.q + t.q * t.r + t.r * t.p)
    in_range = [k - s for s in shift_amounts(t) if lo < k - s < t.n]
    range_ok = all(decompose(t, j).F in (0, 1, 2) for j in in_range)
    return PropositionCheck(k, range_ok, single, four, eight_term_sum(o) == 0)
