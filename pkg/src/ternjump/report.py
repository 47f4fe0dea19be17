"""Aggregated per-triple analysis, serializable to and from JSON."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Any

from .count import bound_report, closed_J
from .errors import FlatnessViolation, LemmaViolation
from .modular import Triple
from .poly import coefficients, is_palindromic, jump_scan
from .verify import verify_against_table
from .zones import lemma_r_status, zone_profile


@dataclass
class AnalysisReport:
    triple: dict[str, Any]
    components: dict[str, int]
    oracle: dict[str, int] | None
    bounds: dict[str, bool | None]
    checks: dict[str, Any]

    @property
    def ok(self) -> bool:
        c = self.checks
        failed = [
            c["flat"] is False,
            c["palindromic"] is False,
            c["table_agree"] is False,
            c["lemma_r_count"] not in (1, 2),
            c["empty_cells_absent"] is False,
            c["formula_matches_oracle"] is False,
            self.bounds["J_cubed_vs_n"] is False,
            self.bounds["theta_cubed_vs_n"] is False,
        ]
        return not any(failed)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "AnalysisReport":
        return cls(**{k: d[k] for k in ("triple", "components", "oracle", "bounds", "checks")})

    @classmethod
    def from_json(cls, s: str) -> "AnalysisReport":
        return cls.from_dict(json.loads(s))


def analyze(t: Triple, verify: bool = False, oracle: bool = True) -> AnalysisReport:
    zp = zone_profile(t)
    comps = closed_J(t, zp)
    try:
        lemma = lemma_r_status(t).count
    except LemmaViolation:
        lemma = None
    checks: dict[str, Any] = {
        "flat": None,
        "palindromic": None,
        "table_agree": None,
        "lemma_r_count": lemma,
        "empty_cells_absent": None,
        "formula_matches_oracle": None,
    }
    bounds: dict[str, bool | None] = {"J_cubed_vs_n": comps.J**3 > t.n, "theta_cubed_vs_n": None}
    oracle_part = None
    if oracle:
        ct = coefficients(t)
        checks["palindromic"] = is_palindromic(ct)
        try:
            stats = jump_scan(ct)
        except FlatnessViolation:
            checks["flat"] = False
        else:
            checks["flat"] = True
            oracle_part = {
                "J_up": stats.J,
                "J_down": len(stats.jump_downs),
                "theta": stats.theta,
                "height": stats.height,
            }
            checks["formula_matches_oracle"] = stats.J == comps.J
            bounds["theta_cubed_vs_n"] = bound_report(t, comps.J, stats.theta).theta_pass
        if verify:
            agreement = verify_against_table(t, ct=ct, zp=zp)
            checks["table_agree"] = agreement.agreed == agreement.checked
            checks["empty_cells_absent"] = agreement.empty_cells_absent
    triple = {
        "p": t.p,
        "q": t.q,
        "r": t.r,
        "n": t.n,
        "phi": t.phi,
        "strict_primes": t.strict_primes,
    }
    return AnalysisReport(triple, comps.as_dict(), oracle_part, bounds, checks)
