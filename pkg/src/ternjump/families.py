"""
Triples with few jumps (Germain construction and the ``(m, 6m-1, 12m-1)``
family) and the exhaustive scan over all small triples.
"""

from __future__ import annotations

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterator

from .count import BoundReport, bound_report, closed_J
from .errors import FlatnessViolation, LemmaViolation, TernJumpError
from .modular import Triple, is_prime, mod_inverse, validate_triple
from .poly import coefficients, jump_scan, max_n
from .verify import verify_against_table
from .zones import lemma_r_status, zone_profile

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class FamilyInstance:
    t: Triple
    kind: str  # "germain" or "six-m"
    params: dict[str, object] = field(compare=False)
    warnings: tuple[str, ...] = ()

    @property
    def bound(self) -> str:
        return "J < 10q" if self.kind == "germain" else "J < 15 n^(1/3)"


def _odd_prime_divisors(n: int) -> list[int]:
    out, d = [], 3
    while n % 2 == 0:
        n //= 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 2
    if n > 1:
        out.append(n)
    return out


def exceeds_power(p: int, q: int, exponent: Fraction) -> bool:
    """``p > q**exponent`` for rational ``exponent >= 0``, exactly."""
    num, den = exponent.numerator, exponent.denominator
    return p**den > q**num


def germain_triples(q_max: int, epsilon: Fraction | str | float) -> list[FamilyInstance]:
    eps = Fraction(epsilon) if not isinstance(epsilon, float) else Fraction(str(epsilon))
    if not 0 < eps < 1:
        raise ValueError(f"epsilon must lie in (0, 1), got {eps}")
    out = []
    for q in range(3, q_max + 1):
        r = 2 * q + 1
        if not (is_prime(q) and is_prime(r)):
            continue
        for p in _odd_prime_divisors(q + 1):
            if not exceeds_power(p, q, 1 - eps):
                continue
            t_ = (q + 1) // p
            warnings = []
            if t_ < 3:
                warnings.append(f"t = {t_} < 3: outside the construction's t >= 3 assumption")
            if not exceeds_power(q, t_, 1 / eps):
                warnings.append(f"t = {t_} >= q^eps")
            out.append(
                FamilyInstance(
                    validate_triple(p, q, r, require_primes=True),
                    "germain",
                    {"p": p, "q": q, "r": r, "t": t_, "epsilon": str(eps)},
                    tuple(warnings),
                )
            )
    out.sort(key=lambda inst: inst.t.moduli)
    return out


def six_m_family(m_from: int, m_to: int) -> list[FamilyInstance]:
    if not 3 <= m_from <= m_to:
        raise ValueError("need 3 <= m_from <= m_to")
    return [
        FamilyInstance(validate_triple(m, 6 * m - 1, 12 * m - 1), "six-m", {"m": m})
        for m in range(m_from, m_to + 1)
    ]


@dataclass(frozen=True)
class ProfileCheck:
    expected: dict[str, int]
    actual: dict[str, int]
    J: int
    J_oracle: int | None
    bound_ok: bool

    @property
    def mismatched(self) -> list[str]:
        return [k for k in self.expected if self.expected[k] != self.actual[k]]

    @property
    def ok(self) -> bool:
        oracle_ok = self.J_oracle is None or self.J_oracle == self.J
        return not self.mismatched and self.bound_ok and oracle_ok


def verify_small_j_profile(inst: FamilyInstance, oracle: bool = True) -> ProfileCheck:
    """Compare a Germain instance against the closed-form profile of its construction.

    With ``q = tp - 1`` and ``r = 2tp - 1`` the construction predicts the six
    inverses, alpha/beta, three empty zones and which order flags are set.
    """
    t = inst.t
    p, q, r = (inst.params[k] for k in ("p", "q", "r"))
    tt = inst.params["t"]
    assert isinstance(p, int) and isinstance(q, int) and isinstance(r, int) and isinstance(tt, int)
    zp = zone_profile(t)
    expected = {
        "inv_q_mod_p": p - 1,
        "inv_r_mod_p": p - 1,
        "inv_r_mod_q": 1,
        "inv_p_mod_q": tt,
        "inv_p_mod_r": 2 * tt,
        "inv_q_mod_r": 2 * tt * p - 3,
        "alpha_p": 1,
        "alpha_q": 1,
        "alpha_r": 2,
        "beta_p": 1,
        "beta_q": tt,
        "beta_r": 2 * tt * p - 2 * tt - 1,
        "size_A4_p": 0,
        "size_A0_q": 0,
        "size_A4_r": 0,
        "d_rp": 1,
        "d_pq": 1,
        "d_pr": 0,
        "d_qp": 0,
        "d_qr": 0,
        "d_rq": 0,
        "R": (p - 2) * (2 * tt - 2),
        "S": 0,
        "T": (tt - 1) * 2 * (p - 2),
        "main": (2 * tt * p - 5) + 2 * (tt * p - 3) + 2 * (p - 2),
    }
    comps = closed_J(t, zp)
    d = zp.delta
    actual = {
        "inv_q_mod_p": mod_inverse(q, p),
        "inv_r_mod_p": mod_inverse(r, p),
        "inv_r_mod_q": mod_inverse(r, q),
        "inv_p_mod_q": mod_inverse(p, q),
        "inv_p_mod_r": mod_inverse(p, r),
        "inv_q_mod_r": mod_inverse(q, r),
        "alpha_p": zp.alpha(p),
        "alpha_q": zp.alpha(q),
        "alpha_r": zp.alpha(r),
        "beta_p": zp.beta(p),
        "beta_q": zp.beta(q),
        "beta_r": zp.beta(r),
        "size_A4_p": zp.size(p, 4),
        "size_A0_q": zp.size(q, 0),
        "size_A4_r": zp.size(r, 4),
        "d_rp": d[r, p],
        "d_pq": d[p, q],
        "d_pr": d[p, r],
        "d_qp": d[q, p],
        "d_qr": d[q, r],
        "d_rq": d[r, q],
        "R": comps.R,
        "S": comps.S,
        "T": comps.T,
        "main": comps.main,
    }
    J_oracle = None
    if oracle and t.n <= max_n():
        J_oracle = jump_scan(coefficients(t)).J
    return ProfileCheck(expected, actual, comps.J, J_oracle, comps.J < 10 * q)


SCAN_FIELDS = (
    "p", "q", "r", "n", "J_formula", "J_oracle", "R", "S", "T", "main", "theta",
    "height", "cbrtJ_pass", "cbrtTheta_pass", "table_agree", "lemma_r_count", "status",
)  # fmt: skip


@dataclass(frozen=True)
class ScanRow:
    p: int
    q: int
    r: int
    n: int
    J_formula: int
    J_oracle: int | None
    R: int
    S: int
    T: int
    main: int
    theta: int | None
    height: int | None
    cbrtJ_pass: bool
    cbrtTheta_pass: bool | None
    table_agree: bool | None
    lemma_r_count: int | None
    status: str

    def as_dict(self) -> dict[str, object]:
        return asdict(self)


def scan_triples(p_max: int, require_primes: bool) -> Iterator[Triple]:
    """All valid triples with entries ``<= p_max``, lexicographic in sorted order."""
    for p, q, r in combinations(range(3, p_max + 1), 3):
        if gcd(p, q) != 1 or gcd(p, r) != 1 or gcd(q, r) != 1:
            continue
        if require_primes and not (is_prime(p) and is_prime(q) and is_prime(r)):
            continue
        yield validate_triple(p, q, r)


def analyze_triple(t: Triple, sample_k: int | None = None, seed: int = 0, agree: bool = True) -> ScanRow:
    """Every check available for one triple, collapsed into a scan row."""
    zp = zone_profile(t)
    comps = closed_J(t, zp)
    failures = []
    try:
        lemma = lemma_r_status(t).count
    except LemmaViolation:
        lemma = None
        failures.append("lemma")
    J_oracle = theta = height = None
    theta_pass = table_ok = None
    try:
        ct = coefficients(t)
        stats = jump_scan(ct)
    except FlatnessViolation:
        failures.append("flatness")
        ct = None
    except TernJumpError as exc:
        log.warning("%s: oracle unavailable (%s)", t, exc)
        ct = None
    else:
        J_oracle, theta, height = stats.J, stats.theta, stats.height
        if J_oracle != comps.J:
            failures.append("formula")
        if len(stats.jump_downs) != J_oracle:
            failures.append("symmetry")
        theta_pass = bound_report(t, comps.J, theta).theta_pass
        if not theta_pass:
            failures.append("theta-bound")
        if agree:
            ks = None
            if sample_k is not None and sample_k < t.n:
                rng = random.Random(f"{seed}:{t.p}:{t.q}:{t.r}")
                ks = sorted(rng.sample(range(t.n), sample_k))
            table_ok = verify_against_table(t, ks, ct=ct, zp=zp).ok
            if not table_ok:
                failures.append("table")
    J_pass = comps.J**3 > t.n
    if not J_pass:
        failures.append("J-bound")
    return ScanRow(
        t.p, t.q, t.r, t.n, comps.J, J_oracle, comps.R, comps.S, comps.T, comps.main,
        theta, height, J_pass, theta_pass, table_ok, lemma,
        "pass" if not failures else "fail:" + "+".join(failures),
    )  # fmt: skip


def _scan_one(args: tuple[Triple, int | None, int]) -> ScanRow:
    t, sample_k, seed = args
    return analyze_triple(t, sample_k, seed)


def scan(
    p_max: int,
    require_primes: bool = True,
    jobs: int = 1,
    sample_k: int | None = None,
    seed: int = 0,
) -> Iterator[ScanRow]:
    """Yield one row per triple, in the same order whatever ``jobs`` is."""
    work = [(t, sample_k, seed) for t in scan_triples(p_max, require_primes)]
    if jobs <= 1:
        yield from map(_scan_one, work)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_scan_one, work, chunksize=max(1, len(work) // (4 * jobs)))


@dataclass(frozen=True)
class FamilyRow:
    instance: FamilyInstance
    J: int
    J_oracle: int | None
    bound: BoundReport
    bound_ok: bool
    warnings: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.bound_ok and (self.J_oracle is None or self.J_oracle == self.J)


def family_row(inst: FamilyInstance, oracle: bool = True) -> FamilyRow:
    t = inst.t
    J = closed_J(t).J
    J_oracle = theta = None
    if oracle and t.n <= max_n():
        stats = jump_scan(coefficients(t))
        J_oracle, theta = stats.J, stats.theta
    if inst.kind == "six-m":
        # J < 15 n^(1/3)  <=>  J^3 < 3375 n
        bound_ok = J**3 < 3375 * t.n
    else:
        bound_ok = J < 10 * t.moduli[1]
    br = bound_report(t, J, theta if theta is not None else 0)
    return FamilyRow(inst, J, J_oracle, br, bound_ok, inst.warnings)
