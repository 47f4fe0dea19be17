"""Exit criteria, one test per criterion; each records a PASS/FAIL line."""

import subprocess
import sys
import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES, EXHAUSTIVE, prime_triples
from ternjump.count import closed_J
from ternjump.families import germain_triples, six_m_family, verify_small_j_profile
from ternjump.modular import mod_inverse, validate_triple
from ternjump.poly import coefficients, jump_scan, max_n
from ternjump.representation import decompose, jump_from_octuple, octuple, proposition_residuals
from ternjump.verify import verify_against_table
from ternjump.zones import classify, lemma_r_status, zone_profile

# Every triple of distinct odd primes <= 31.
CRIT1 = prime_triples(31)


@pytest.fixture
def record(request):
    label = request.node.name

    def _record(ok, detail=""):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())
        assert ok, detail

    return _record


@pytest.fixture(scope="module")
def crit1_data():
    data = {}
    for trip in CRIT1:
        t = validate_triple(*trip, require_primes=True)
        ct = coefficients(t)
        data[trip] = (t, ct, jump_scan(ct), closed_J(t))
    return data


def test_c01_formula_equals_oracle(record, crit1_data):
    bad = [trip for trip, (_, _, s, c) in crit1_data.items() if c.J != s.J]
    t357 = crit1_data[(3, 5, 7)][3]
    assert len(CRIT1) == 120
    record(
        not bad and t357.J == 13 and t357.J_as_printed == 3,
        f"{len(CRIT1)} triples, mismatches={bad}, (3,5,7) corrected=13 printed={t357.J_as_printed}",
    )


def test_c01_runtime(record):
    start = time.perf_counter()
    for trip in CRIT1:
        t = validate_triple(*trip)
        assert closed_J(t).J == jump_scan(coefficients(t)).J
    elapsed = time.perf_counter() - start
    record(elapsed < 30, f"{elapsed:.2f}s < 30s")


def test_c02_three_way_per_index(record):
    results = {trip: verify_against_table(validate_triple(*trip)) for trip in EXHAUSTIVE}
    bad = {trip: r.first_mismatch for trip, r in results.items() if not r.ok}
    counts = ", ".join(f"{t}:{r.agreed}/{r.checked}" for t, r in results.items())
    record(not bad and all(r.checked == r.t.n for r in results.values()), counts)


def test_c03_flatness(record, crit1_data):
    tables = [ct for _, ct, _, _ in crit1_data.values()]
    tables += [coefficients(validate_triple(*trip)) for trip in EXHAUSTIVE if trip not in crit1_data]
    worst = max(int(abs(ct.differences()).max()) for ct in tables)
    record(worst <= 1, f"max |a(k)-a(k-1)| = {worst} over {len(tables)} triples")


def test_c04_bounds(record, crit1_data):
    bad = [
        trip
        for trip, (t, _, s, c) in crit1_data.items()
        if not (c.J**3 > t.n and s.theta**3 > t.n)
    ]
    worst = min(Fraction(c.J**3, t.n) for t, _, _, c in crit1_data.values())
    record(not bad, f"violations={bad}, min J^3/n = {float(worst):.3f}")


def test_c05_phi105(record):
    ct = coefficients(validate_triple(3, 5, 7))
    s = jump_scan(ct)
    ok = (
        ct(7) == -2
        and s.height == 2
        and s.theta == 33
        and s.J == 13
        and {0, 8, 10, 12} <= set(s.jump_ups)
    )
    record(ok, f"a(7)={ct(7)} height={s.height} theta={s.theta} J={s.J}")


def test_c06_structural_propositions(record):
    checked = failed = 0
    for trip in EXHAUSTIVE:
        t = validate_triple(*trip)
        lo = -(t.p * t.q + t.q * t.r + t.r * t.p)
        if any(decompose(t, k).F not in (0, 1, 2) for k in range(lo + 1, t.n)):
            failed += 1
        for k in range(t.n):
            checked += 1
            if not proposition_residuals(t, k).ok:
                failed += 1
                continue
            try:
                jump_from_octuple(octuple(t, k))
            except Exception:  # noqa: BLE001
                failed += 1
    record(failed == 0, f"{checked} indices, {failed} failures")


def test_c07_zone_identities(record, crit1_data):
    problems = []
    for trip, (t, _, _, _) in crit1_data.items():
        zp = zone_profile(t)
        for x in t.moduli:
            s, a, b = zp.zone(x).sizes, zp.alpha(x), zp.beta(x)
            if not (
                sum(s) == x
                and s[1] == s[3] == a
                and s[2] == b - a
                and s[0] + s[4] == x - a - b
                and b == zp.beta_modular(x)
            ):
                problems.append((trip, x))
        for y in t.moduli:
            for z in t.moduli:
                if y < z and z * mod_inverse(z, y) + y * mod_inverse(y, z) != y * z + 1:
                    problems.append((trip, "inverse identity", y, z))
        if lemma_r_status(t).count not in (1, 2):
            problems.append((trip, "lemma"))
        for k in range(t.n):
            if classify(zp, decompose(t, k)).cell in ((0, 0, 0), (4, 4, 4)):
                problems.append((trip, "empty cell", k))
    record(not problems, f"{len(crit1_data)} triples, problems={problems[:3]}")


def test_c08_small_j_profile(record):
    (inst,) = [i for i in germain_triples(11, Fraction(3, 5)) if i.t.moduli == (3, 11, 23)]
    check = verify_small_j_profile(inst)
    a = check.actual
    ok = (
        check.ok
        and inst.params["t"] == 4
        and a["R"] == (3 - 2) * (2 * 4 - 2) == 6
        and a["S"] == 0
        and a["T"] == (4 - 1) * 2 * (3 - 2) == 6
        and check.J == check.J_oracle == 51
        and check.J < 110
    )
    record(ok, f"mismatched={check.mismatched} R={a['R']} S={a['S']} T={a['T']} J={check.J}")


def test_c09_six_m_family(record):
    start = time.perf_counter()
    bad = []
    for inst in six_m_family(3, 20):
        t = inst.t
        J = closed_J(t).J
        if not J**3 < 3375 * t.n:
            bad.append((t.moduli, "bound"))
        if t.n <= max_n() and jump_scan(coefficients(t)).J != J:
            bad.append((t.moduli, "oracle"))
    elapsed = time.perf_counter() - start
    record(not bad and elapsed < 120, f"m=3..20, failures={bad}, {elapsed:.2f}s < 120s")


def test_c10_scan_determinism(record):
    def run(jobs):
        return subprocess.run(
            [sys.executable, "-m", "ternjump", "scan", "--pmax", "13", "--jobs", str(jobs)],
            capture_output=True,
            check=False,
        )

    one, eight = run(1), run(8)
    ok = one.returncode == eight.returncode == 0 and one.stdout == eight.stdout and one.stdout
    record(bool(ok), f"{len(one.stdout)} bytes, identical={one.stdout == eight.stdout}")
