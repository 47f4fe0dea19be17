"""
The jump table
==============

Each residue range [0, x) splits into five zones cut by the inverses of the
other two moduli.  The zone cell of (a, b, c), sorted, picks a row of a
33-row table; order flags between inverses fill in the row's entries.
"""

from collections import Counter

from ternjump import classify, decompose, table_V, validate_triple, zone_profile
from ternjump.table import dump_csv

t = validate_triple(3, 11, 23)
zp = zone_profile(t)

for x in t.moduli:
    z = zp.zone(x)
    print(f"mod {x:2d}: inverses={z.inverses}  zone sizes={z.sizes}  alpha={z.alpha}  beta={z.beta}")
print("order flags:", {f"{x},{y}": v for (x, y), v in sorted(zp.delta.items())})

# Tally which rows occur and how many indices jump up in each.
rows, ups = Counter(), Counter()
for k in range(t.n):
    cls = classify(zp, decompose(t, k))
    rows[cls.row] += 1
    if table_V(zp, cls) == 1:
        ups[cls.row] += 1
print("rows hit:", len(rows), "of 33")
print("jump-ups by row:", dict(sorted(ups.items())), "total", sum(ups.values()))

print()
print(dump_csv().splitlines()[0])
print("\n".join(dump_csv().splitlines()[1:6]), "...")
