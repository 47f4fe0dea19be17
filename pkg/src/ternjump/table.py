"""
The jump table: for each nondecreasing zone cell ``j1 j2 j3`` the octuple up
to shift and the jump value, written over the order flags ``dxy``.

Entries are small expressions: integers and flags combined with ``+``, ``-``
and ``*`` (products bind tighter).  The flag ``dxy`` is 1 iff
``x^{-1} < y^{-1}`` modulo the third modulus.
"""

from __future__ import annotations

import csv
import io
import re
from typing import Mapping

ROWS: tuple[tuple[str, tuple[str, ...], str], ...] = (
    ("001", ("0", "1", "1", "1", "2", "2", "1", "2"), "1"),
    ("002", ("0", "dpq", "dqp", "1", "1+dqp", "1+dpq", "1", "2"), "0"),
    ("003", ("0", "0", "0", "1", "1", "1", "1", "2"), "-1"),
    ("004", ("0", "0", "0", "1", "1", "1", "0", "1"), "0"),
    ("011", ("0", "1", "1", "1", "2", "1", "1", "1"), "1"),
    ("012", ("0", "dpq", "dqp", "1", "1+dqp", "dpq", "1", "1"), "dqp"),
    ("013", ("0", "0", "0", "1", "1", "0", "1", "1"), "0"),
    ("014", ("0", "0", "0", "1", "1", "0", "0", "0"), "0"),
    ("022", ("0", "dpq+dpr-1", "dqp", "drp", "dqp+drp", "dpq", "dpr", "1"), "0"),
    ("023", ("1", "dpr", "1", "1+drp", "1+drp", "1", "1+dpr", "2"), "-drp"),
    ("024", ("1", "dpr", "1", "1+drp", "1+drp", "1", "dpr", "1"), "0"),
    ("033", ("1", "0", "1", "1", "1", "1", "1", "2"), "-1"),
    ("034", ("1", "0", "1", "1", "1", "1", "0", "1"), "0"),
    ("044", ("1", "0", "1", "1", "1", "0", "0", "0"), "0"),
    ("111", ("0", "1", "1", "1", "1", "1", "1", "0"), "0"),
    ("112", ("0", "dpq", "dqp", "1", "dqp", "dpq", "1", "0"), "0"),
    ("113", ("0", "0", "0", "1", "0", "0", "1", "0"), "0"),
    ("114", ("1", "1", "1", "2", "1", "1", "1", "0"), "-1"),
    ("122", ("1", "dpq+dpr", "1+dqp", "1+drp", "dqp+drp", "1+dpq", "1+dpr", "1"), "dpq*dpr-dqp*drp"),
    ("123", ("1", "dpr", "1", "1+drp", "drp", "1", "1+dpr", "1"), "dpr-drp"),
    ("124", ("1", "dpr", "1", "1+drp", "drp", "1", "dpr", "0"), "-drp"),
    ("133", ("1", "0", "1", "1", "0", "1", "1", "1"), "0"),
    ("134", ("1", "0", "1", "1", "0", "1", "0", "0"), "0"),
    ("144", ("2", "1", "2", "2", "1", "1", "1", "0"), "-1"),
    ("222", ("1", "dpq+dpr", "dqr+dqp", "drp+drq", "dqp+drp", "drq+dpq", "dpr+dqr", "1"), "0"),
    ("223", ("1", "dpr", "dqr", "drp+drq", "drp", "drq", "dpr+dqr", "1"), "dpr*dqr-drp*drq"),
    ("224", ("1", "dpr", "dqr", "drp+drq", "drp", "drq", "dpr+dqr-1", "0"), "0"),
    ("233", ("1", "0", "dqr", "drq", "0", "drq", "dqr", "1"), "0"),
    ("234", ("2", "1", "1+dqr", "1+drq", "1", "1+drq", "dqr", "1"), "drq"),
    ("244", ("2", "1", "1+dqr", "1+drq", "1", "drq", "dqr", "0"), "0"),
    ("333", ("1", "0", "0", "0", "0", "0", "0", "1"), "0"),
    ("334", ("2", "1", "1", "1", "1", "1", "0", "1"), "1"),
    ("344", ("2", "1", "1", "1", "1", "0", "0", "0"), "1"),
)

# Octuple column as originally typeset.  These three rows disagree with the
# F values at every index of the cell (row 001 is not even symmetric under
# its own p<->q tie); the jump column is unaffected.
PRINTED_OCTUPLES: dict[str, tuple[str, ...]] = {
    "001": ("0", "1", "1", "1", "1", "2", "2", "2"),
    "023": ("1", "dpr", "1", "1+dpr", "1+dpr", "1", "1+dpr", "2"),
    "024": ("1", "dpr", "1", "1+dpr", "1+dpr", "1", "dpr", "1"),
}

TABLE: dict[str, tuple[tuple[str, ...], str]] = {row: (octo, v) for row, octo, v in ROWS}

FLAG_NAMES = ("dpq", "dqp", "dqr", "drq", "drp", "dpr")

_TERM = re.compile(r"[+-]?[^+-]+")


def evaluate(expr: str, flags: Mapping[str, int]) -> int:
    """Evaluate a table expression with the given flag values."""
    total = 0
    for term in _TERM.findall(expr.replace(" ", "")):
        sign = -1 if term[0] == "-" else 1
        value = 1
        for factor in term.lstrip("+-").split("*"):
            value *= int(factor) if factor.isdigit() else flags[factor]
        total += sign * value
    return total


def dump_csv(as_printed: bool = False) -> str:
    """The table as CSV (``row,octuple,V``), byte-stable.

    With ``as_printed`` the octuple column is the original typesetting,
    including the rows known to be wrong.
    """
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["row", "octuple", "V"])
    for row, octo, v in ROWS:
        if as_printed:
            octo = PRINTED_OCTUPLES.get(row, octo)
        w.writerow([row, "(" + ",".join(octo) + ")", v])
    return buf.getvalue()
