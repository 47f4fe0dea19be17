"""
Five-zone partition of each residue range, order flags between inverses, cell
classification of an index and evaluation of the jump table on that cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import NamedTuple

from .errors import EmptyCell, InternalInconsistency, LemmaViolation
from .modular import Triple, mod_inverse
from .representation import OCTUPLE_SHIFTS, Octuple, Representation
from .table import TABLE, evaluate

ROLES = ("p", "q", "r")


@dataclass(frozen=True)
class Zone:
    """Zones ``A_0..A_4`` of ``[0, modulus)`` cut by the inverses of the other two."""

    modulus: int
    inverses: tuple[int, int]  # y^{-1}(x), z^{-1}(x) for the other moduli y < z
    bounds: tuple[int, int, int, int, int, int]

    @classmethod
    def build(cls, x: int, y: int, z: int) -> "Zone":
        u, v = mod_inverse(y, x), mod_inverse(z, x)
        bounds = (0, max(u + v - x, 0), min(u, v), max(u, v), min(u + v, x), x)
        return cls(x, (u, v), bounds)

    @property
    def sizes(self) -> tuple[int, ...]:
        b = self.bounds
        return tuple(b[j + 1] - b[j] for j in range(5))

    @property
    def alpha(self) -> int:
        u, v = self.inverses
        x = self.modulus
        return min(u, v, x - u, x - v)

    @property
    def beta(self) -> int:
        return self.alpha + self.sizes[2]

    def index(self, residue: int) -> int:
        b = self.bounds
        for j in range(5):
            if b[j] <= residue < b[j + 1]:
                return j
        raise ValueError(f"residue {residue} outside [0, {self.modulus})")


@dataclass(frozen=True)
class ZoneProfile:
    t: Triple
    zones: dict[int, Zone]
    delta: dict[tuple[int, int], int]

    def zone(self, x: int) -> Zone:
        return self.zones[x]

    def alpha(self, x: int) -> int:
        return self.zones[x].alpha

    def beta(self, x: int) -> int:
        return self.zones[x].beta

    def size(self, x: int, j: int) -> int:
        return self.zones[x].sizes[j]

    def delta_agg(self, x: int, y: int, z: int) -> int:
        """``d_xy*d_xz + d_zx*d_yx``; the aggregate flag of ``x``."""
        d = self.delta
        return d[x, y] * d[x, z] + d[z, x] * d[y, x]

    def beta_modular(self, x: int) -> int:
        y, z = self.t.others(x)
        return mod_inverse(self.alpha(x) * y * z, x)

    @cached_property
    def by_role(self) -> dict[str, int]:
        return dict(zip(ROLES, self.t.moduli))


def zone_profile(t: Triple) -> ZoneProfile:
    zones = {}
    for x in t.moduli:
        y, z = t.others(x)
        zones[x] = Zone.build(x, y, z)
    delta = {}
    for z in t.moduli:
        x, y = t.others(z)
        ix, iy = mod_inverse(x, z), mod_inverse(y, z)
        delta[x, y] = int(ix < iy)
        delta[y, x] = int(iy < ix)
    zp = ZoneProfile(t, zones, delta)
    for x in t.moduli:
        if zp.beta(x) != zp.beta_modular(x):
            raise InternalInconsistency(
                f"beta for {x}: {zp.beta(x)} from sizes, {zp.beta_modular(x)} modular"
            )
    return zp


class JumpClass(NamedTuple):
    cell: tuple[int, int, int]
    row: str
    # perm[i] is the actual modulus playing role ROLES[i] in the table row
    perm: tuple[int, int, int]


def _normalize(cell: tuple[int, int, int], moduli: tuple[int, ...]) -> tuple[str, tuple[int, int, int]]:
    order = sorted(range(3), key=lambda i: (cell[i], i))
    row = "".join(str(cell[i]) for i in order)
    return row, tuple(moduli[i] for i in order)  # type: ignore[return-value]


def classify(zp: ZoneProfile, rep: Representation) -> JumpClass:
    t = zp.t
    cell = (zp.zone(t.p).index(rep.a), zp.zone(t.q).index(rep.b), zp.zone(t.r).index(rep.c))
    if cell in ((0, 0, 0), (4, 4, 4)):
        raise EmptyCell(f"{t}: index {rep.k} lands in empty cell {cell}")
    row, perm = _normalize(cell, t.moduli)
    return JumpClass(cell, row, perm)


def sorting_permutations(cls: JumpClass, t: Triple) -> list[tuple[int, int, int]]:
    """Every relabeling that sorts the cell, ties included."""
    cell_of = dict(zip(t.moduli, cls.cell))
    return [
        perm
        for perm in permutations(t.moduli)
        if all(cell_of[perm[i]] <= cell_of[perm[i + 1]] for i in range(2))
    ]


def role_flags(zp: ZoneProfile, perm: tuple[int, int, int]) -> dict[str, int]:
    """Flag values named by table roles, read through ``perm``."""
    flags = {}
    for i, x in enumerate(ROLES):
        for j, y in enumerate(ROLES):
            if i != j:
                flags["d" + x + y] = zp.delta[perm[i], perm[j]]
    return flags


def table_V(zp: ZoneProfile, cls: JumpClass, perm: tuple[int, int, int] | None = None) -> int:
    _, v_expr = TABLE[cls.row]
    return evaluate(v_expr, role_flags(zp, perm or cls.perm))


def table_octuple(zp: ZoneProfile, cls: JumpClass, perm: tuple[int, int, int] | None = None) -> Octuple:
    """Predicted octuple (up to shift) in the triple's own positional order."""
    perm = perm or cls.perm
    template, _ = TABLE[cls.row]
    flags = role_flags(zp, perm)
    values = [evaluate(e, flags) for e in template]
    # Position i of a role-ordered octuple is F at k minus a subset of roles;
    # translate that subset to actual moduli, then to the triple's own roles.
    role_of = {m: ROLES[i] for i, m in enumerate(zp.t.moduli)}
    table_role = {ROLES[i]: role_of[perm[i]] for i in range(3)}
    out = [0] * 8
    for i, subset in enumerate(OCTUPLE_SHIFTS):
        actual = frozenset(table_role[s] for s in subset)
        out[OCTUPLE_SHIFTS.index(actual)] = values[i]
    return tuple(out)  # type: ignore[return-value]


class LemmaStatus(NamedTuple):
    count: int
    distinguished: int  # modulus whose inequality is the only true / only false one
    holds: dict[int, bool]


def lemma_r_status(t: Triple) -> LemmaStatus:
    """Count how many of ``y^{-1}(x) + z^{-1}(x) > x`` hold over ``x``."""
    holds = {}
    for x in t.moduli:
        y, z = t.others(x)
        holds[x] = mod_inverse(y, x) + mod_inverse(z, x) > x
    count = sum(holds.values())
    if count not in (1, 2):
        raise LemmaViolation(f"{t}: {count} of the three inverse-sum inequalities hold")
    target = count == 1
    (distinguished,) = (x for x, h in holds.items() if h == target)
    return LemmaStatus(count, distinguished, holds)
