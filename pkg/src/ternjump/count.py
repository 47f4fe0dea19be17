"""
Closed-form number of jump-up coefficients and the cube-root bound checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from typing import Callable

from .modular import Triple, icbrt
from .table import TABLE, evaluate
from .zones import ROLES, ZoneProfile, role_flags, zone_profile

Perm = tuple[int, int, int]


def cyclic(t: Triple) -> tuple[Perm, Perm, Perm]:
    """The three cyclic relabelings (p,q,r), (r,p,q), (q,r,p)."""
    p, q, r = t.moduli
    return ((p, q, r), (r, p, q), (q, r, p))


def all_perms(t: Triple) -> list[Perm]:
    return list(permutations(t.moduli))


def sum_cyclic(t: Triple, f: Callable[[int, int, int], int]) -> int:
    return sum(f(*s) for s in cyclic(t))


def sum_perm(t: Triple, f: Callable[[int, int, int], int]) -> int:
    return sum(f(*s) for s in all_perms(t))


@dataclass(frozen=True)
class JumpComponents:
    R: int
    S: int
    T: int
    main: int
    as_printed_main: int
    cells: dict[str, int] = field(default_factory=dict, compare=False)

    @property
    def J(self) -> int:
        return self.R + self.S + self.T + self.main

    @property
    def J_as_printed(self) -> int:
        return self.R + self.S + self.T + self.as_printed_main

    def as_dict(self) -> dict[str, int]:
        return {
            "R": self.R,
            "S": self.S,
            "T": self.T,
            "main": self.main,
            "as_printed_main": self.as_printed_main,
            "J": self.J,
        }


def cell_counts(zp: ZoneProfile) -> dict[str, int]:
    """Jump-up indices per table row, summed over all 125 cells.

    Every cell is mapped to its row through the same normalization used for
    single indices, so this is the table read off in bulk.
    """
    t = zp.t
    out: dict[str, int] = {}
    for cell in product(range(5), repeat=3):
        size = 1
        for x, j in zip(t.moduli, cell):
            size *= zp.size(x, j)
        if size == 0:
            continue
        order = sorted(range(3), key=lambda i: (cell[i], i))
        row = "".join(str(cell[i]) for i in order)
        perm = tuple(t.moduli[i] for i in order)
        if evaluate(TABLE[row][1], role_flags(zp, perm)) == 1:  # type: ignore[arg-type]
            out[row] = out.get(row, 0) + size
    return out


def nine_term_J(zp: ZoneProfile) -> int:
    """Jump-up count as the nine weighted cell sums, term by term."""
    t, d = zp.t, zp.delta

    def S(cell: str, weight: Callable[[int, int, int], int] = lambda x, y, z: 1):
        def f(x: int, y: int, z: int) -> int:
            sizes = zp.size(x, int(cell[0])) * zp.size(y, int(cell[1])) * zp.size(z, int(cell[2]))
            return weight(x, y, z) * sizes

        return f

    return (
        sum_cyclic(t, S("001"))
        + sum_cyclic(t, S("011"))
        + sum_cyclic(t, S("334"))
        + sum_cyclic(t, S("344"))
        + sum_perm(t, S("123", lambda x, y, z: d[x, z]))
        + sum_perm(t, S("012", lambda x, y, z: d[y, x]))
        + sum_perm(t, S("234", lambda x, y, z: d[z, y]))
        + sum_cyclic(t, S("122", lambda x, y, z: d[x, y] * d[x, z]))
        + sum_cyclic(t, S("223", lambda x, y, z: d[x, z] * d[y, z]))
    )


def closed_J(t: Triple, zp: ZoneProfile | None = None) -> JumpComponents:
    zp = zp or zone_profile(t)
    a, b, size, d = zp.alpha, zp.beta, zp.size, zp.delta

    R = sum_cyclic(t, lambda x, y, z: a(x) * (size(y, 0) * size(z, 0) + size(y, 4) * size(z, 4)))
    S = sum_cyclic(
        t, lambda x, y, z: zp.delta_agg(x, y, z) * a(x) * (b(y) - a(y)) * (b(z) - a(z))
    )
    T = sum_perm(
        t, lambda x, y, z: d[y, z] * (b(x) - a(x)) * (a(y) * size(z, 0) + a(z) * size(y, 4))
    )
    main = sum_cyclic(t, lambda x, y, z: a(x) * a(y) * (z - 2 * a(z)))
    printed = sum_cyclic(t, lambda x, y, z: a(x) * a(y) * (z - a(z) - b(z)))
    return JumpComponents(R, S, T, main, printed, cell_counts(zp))


def R_displayed(t: Triple, zp: ZoneProfile, distinguished: int) -> int:
    """``alpha_x (y - alpha_y - beta_y)(z - alpha_z - beta_z)`` for the modulus
    ``x`` whose inverse-sum inequality is the only true or only false one."""
    y, z = t.others(distinguished)
    a, b = zp.alpha, zp.beta
    return a(distinguished) * (y - a(y) - b(y)) * (z - a(z) - b(z))


@dataclass(frozen=True)
class BoundReport:
    n: int
    cbrt_floor: int
    J: int
    theta: int
    J_pass: bool
    theta_pass: bool
    J_ratio: Fraction
    theta_ratio: Fraction

    @property
    def violation(self) -> bool:
        return not (self.J_pass and self.theta_pass)


def bound_report(t: Triple, J: int, theta: int) -> BoundReport:
    n = t.n
    return BoundReport(
        n=n,
        cbrt_floor=icbrt(n),
        J=J,
        theta=theta,
        J_pass=J**3 > n,
        theta_pass=theta**3 > n,
        J_ratio=Fraction(J**3, n),
        theta_ratio=Fraction(theta**3, n),
    )


__all__ = [
    "ROLES",
    "BoundReport",
    "JumpComponents",
    "R_displayed",
    "bound_report",
    "cell_counts",
    "closed_J",
    "nine_term_J",
    "sum_cyclic",
    "sum_perm",
]
