"""
Per-index agreement between the coefficient oracle, the jump table and the
octuple count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import EmptyCell
from .modular import Triple
from .poly import CoefficientTable, coefficients
from .representation import decompose, jump_from_octuple, octuple, shift_equivalent
from .zones import ZoneProfile, classify, table_octuple, table_V, zone_profile


@dataclass(frozen=True)
class Mismatch:
    k: int
    oracle_V: int
    table_V: int | None
    octuple_V: int | None
    actual: tuple[int, ...]
    predicted: tuple[int, ...] | None
    reason: str


@dataclass(frozen=True)
class AgreementReport:
    t: Triple
    checked: int
    agreed: int
    empty_cells_absent: bool
    first_mismatch: Mismatch | None

    @property
    def ok(self) -> bool:
        return self.agreed == self.checked and self.empty_cells_absent


def check_index(
    t: Triple, zp: ZoneProfile, ct: CoefficientTable, k: int
) -> Mismatch | None:
    v = ct(k) - ct(k - 1)
    o = octuple(t, k)
    try:
        cls = classify(zp, decompose(t, k))
    except EmptyCell as exc:
        return Mismatch(k, v, None, None, o, None, str(exc))
    tv = table_V(zp, cls)
    pred = table_octuple(zp, cls)
    try:
        ov = jump_from_octuple(o)
    except Exception as exc:  # noqa: BLE001 - reported, not raised
        return Mismatch(k, v, tv, None, o, pred, str(exc))
    if not (v == tv == ov):
        return Mismatch(k, v, tv, ov, o, pred, f"row {cls.row}: jump values differ")
    if not shift_equivalent(o, pred):
        return Mismatch(k, v, tv, ov, o, pred, f"row {cls.row}: octuple not shift-equivalent")
    return None


def verify_against_table(
    t: Triple,
    ks: Iterable[int] | None = None,
    ct: CoefficientTable | None = None,
    zp: ZoneProfile | None = None,
) -> AgreementReport:
    """Three-way agreement at every ``k`` in ``ks`` (default: all of ``[0, pqr)``)."""
    ct = ct or coefficients(t)
    zp = zp or zone_profile(t)
    ks = range(t.n) if ks is None else ks
    checked = agreed = 0
    first = None
    empty_ok = True
    for k in ks:
        checked += 1
        m = check_index(t, zp, ct, k)
        if m is None:
            agreed += 1
            continue
        if m.table_V is None and "empty cell" in m.reason:
            empty_ok = False
        first = first or m
    return AgreementReport(t, checked, agreed, empty_ok, first)
