"""
Brute-force coefficient oracle.

``Phi_pqr`` (or the inclusion-exclusion polynomial when the moduli are merely
coprime) is obtained from

    (1 - x^pqr)(1 - x^p)(1 - x^q)(1 - x^r) / ((1 - x^qr)(1 - x^rp)(1 - x^pq)(1 - x))

by exact power-series division.  Nothing here consults the zone machinery.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import FlatnessViolation, InexactDivision, TooLarge
from .modular import Triple

ENV_MAX_N = "TERNJUMP_MAX_N"
DEFAULT_MAX_N = 10**8


def max_n() -> int:
    return int(os.environ.get(ENV_MAX_N, DEFAULT_MAX_N))


def numerator(t: Triple) -> np.ndarray:
    """Dense coefficients of ``(1-x^pqr)(1-x^p)(1-x^q)(1-x^r)``."""
    parts = (t.n, t.p, t.q, t.r)
    out = np.zeros(sum(parts) + 1, dtype=np.int64)
    for size in range(5):
        for subset in combinations(parts, size):
            out[sum(subset)] += (-1) ** size
    return out


def divide_one_minus(series: np.ndarray, d: int) -> np.ndarray:
    """Power series ``series / (1 - x^d)``: ``out[i] = series[i] + out[i-d]``."""
    n = len(series)
    rows = -(-n // d)
    padded = np.zeros(rows * d, dtype=np.int64)
    padded[:n] = series
    return np.cumsum(padded.reshape(rows, d), axis=0).reshape(-1)[:n]


def multiply_one_minus(series: np.ndarray, d: int) -> np.ndarray:
    """``series * (1 - x^d)``, extended by ``d`` terms."""
    out = np.zeros(len(series) + d, dtype=np.int64)
    out[: len(series)] += series
    out[d:] -= series
    return out


@dataclass(frozen=True, eq=False)
class CoefficientTable:
    t: Triple
    coeffs: np.ndarray  # a(0..phi)

    def __call__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return int(self.coeffs[k])
        return 0

    def padded(self, lo: int, hi: int) -> np.ndarray:
        """``a(lo..hi-1)`` with zeros outside ``[0, phi]``."""
        out = np.zeros(hi - lo, dtype=np.int64)
        s, e = max(lo, 0), min(hi, len(self.coeffs))
        if s < e:
            out[s - lo : e - lo] = self.coeffs[s:e]
        return out

    def differences(self) -> np.ndarray:
        """``V(k) = a(k) - a(k-1)`` for ``k in [0, pqr)``."""
        a = self.padded(-1, self.t.n)
        return np.diff(a)


def coefficients(t: Triple, limit: int | None = None) -> CoefficientTable:
    limit = max_n() if limit is None else limit
    if t.n > limit:
        raise TooLarge(f"n = {t.n} exceeds the oracle bound {limit} (set {ENV_MAX_N})")
    series = numerator(t)
    # (1 - x) last keeps intermediate values small.
    for d in (t.q * t.r, t.r * t.p, t.p * t.q, 1):
        series = divide_one_minus(series, d)
    tail = series[t.phi + 1 :]
    if np.any(tail):
        first = t.phi + 1 + int(np.flatnonzero(tail)[0])
        raise InexactDivision(f"{t}: nonzero quotient term at degree {first}")
    return CoefficientTable(t, series[: t.phi + 1].copy())


def reconstruct_numerator(ct: CoefficientTable) -> np.ndarray:
    t = ct.t
    series = ct.coeffs
    for d in (1, t.p * t.q, t.r * t.p, t.q * t.r):
        series = multiply_one_minus(series, d)
    return series


@dataclass(frozen=True)
class CoefficientStats:
    theta: int
    height: int
    jump_ups: tuple[int, ...]
    jump_downs: tuple[int, ...]
    odd: int

    @property
    def J(self) -> int:
        return len(self.jump_ups)


def jump_scan(ct: CoefficientTable) -> CoefficientStats:
    v = ct.differences()
    bad = np.flatnonzero(np.abs(v) > 1)
    if len(bad):
        k = int(bad[0])
        raise FlatnessViolation(f"{ct.t}: |a({k}) - a({k - 1})| = {abs(int(v[k]))} > 1")
    c = ct.coeffs
    return CoefficientStats(
        theta=int(np.count_nonzero(c)),
        height=int(np.abs(c).max()),
        jump_ups=tuple(int(k) for k in np.flatnonzero(v == 1)),
        jump_downs=tuple(int(k) for k in np.flatnonzero(v == -1)),
        odd=int(np.count_nonzero(c % 2)),
    )


def is_palindromic(ct: CoefficientTable) -> bool:
    return bool(np.array_equal(ct.coeffs, ct.coeffs[::-1]))


def coefficients_csv(ct: CoefficientTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "a"])
    w.writerows((k, int(a)) for k, a in enumerate(ct.coeffs))
    return buf.getvalue()


def jumps_csv(ct: CoefficientTable) -> str:
    v = ct.differences()
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "V"])
    w.writerows((int(k), int(v[k])) for k in np.flatnonzero(v))
    return buf.getvalue()
