"""
Triples with few jumps
======================

Two constructions keep J small relative to n: Germain-prime triples
(p, q, 2q+1) with p | q+1, and the coprime family (m, 6m-1, 12m-1), which
need not be prime.
"""

from fractions import Fraction

from ternjump.families import family_row, germain_triples, six_m_family, verify_small_j_profile

for inst in germain_triples(400, Fraction(1, 2)):
    check = verify_small_j_profile(inst, oracle=inst.t.n < 10**7)
    flag = "  [" + "; ".join(inst.warnings) + "]" if inst.warnings else ""
    print(f"{inst.t}: t={inst.params['t']} J={check.J} (oracle {check.J_oracle}) < 10q={10 * inst.params['q']}"
          f" profile ok={not check.mismatched}{flag}")

print()
for inst in six_m_family(3, 12):
    row = family_row(inst)
    m, n = inst.params["m"], inst.t.n
    print(f"m={m:2d} {inst.t}: J={row.J} oracle={row.J_oracle}  J^3/n={row.J**3 / n:7.1f} < 3375")
