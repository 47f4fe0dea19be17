"""
Counting jumps without coefficients
===================================

The number J of jump-up coefficients has a closed form in the zone sizes and
order flags.  Here it is compared with a direct count over the coefficients,
and both lower bounds J^3 > n and theta^3 > n are checked exactly.
"""

from fractions import Fraction
from itertools import combinations

from ternjump import bound_report, closed_J, coefficients, is_prime, jump_scan, validate_triple

c = closed_J(validate_triple(3, 5, 7))
print("(3,5,7):", c.as_dict())
# The alternative main term (r - alpha_r - beta_r) undercounts badly here.
print(f"  with the alternative main term J would be {c.J_as_printed}, not {c.J}")

primes = [p for p in range(3, 32) if is_prime(p)]
worst = None
for trip in combinations(primes, 3):
    t = validate_triple(*trip)
    comps = closed_J(t)
    stats = jump_scan(coefficients(t))
    assert comps.J == stats.J
    br = bound_report(t, comps.J, stats.theta)
    assert br.J_pass and br.theta_pass
    if worst is None or br.J_ratio < worst[1]:
        worst = (trip, br.J_ratio)

print(f"closed form == coefficient count for all {len(list(combinations(primes, 3)))} prime triples <= 31")
print(f"smallest J^3/n: {worst[0]} -> {float(worst[1]):.2f} (= {Fraction(worst[1])})")
