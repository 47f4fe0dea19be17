"""
Coordinates of an index
=======================

Every integer k has a unique representation

    k + F*pqr = a*qr + b*rp + c*pq,   0 <= a < p, 0 <= b < q, 0 <= c < r,

and the jump a(k) - a(k-1) of the coefficients of Phi_pqr is a function of
the eight values of F at k, k-p, k-q, k-r, k-q-r, k-r-p, k-p-q, k-p-q-r.
"""

from ternjump import coefficients, decompose, jump_from_octuple, octuple, validate_triple

t = validate_triple(3, 5, 7)

# The representation of a few small indices.
for k in (0, 1, 7, 8):
    rep = decompose(t, k)
    print(f"k={k:3d}  F={rep.F}  (a,b,c)=({rep.a},{rep.b},{rep.c})")

# F stays in {0, 1, 2} over the whole window the octuple needs.
lo = -(t.p * t.q + t.q * t.r + t.r * t.p)
print("F values on the window:", sorted({decompose(t, k).F for k in range(lo + 1, t.n)}))

# Reading jumps off octuples, checked against the actual coefficients.
ct = coefficients(t)
for k in (0, 7, 8, 12, 20):
    o = octuple(t, k)
    print(f"k={k:3d}  oct={o}  V={jump_from_octuple(o):+d}  a(k)-a(k-1)={ct(k) - ct(k - 1):+d}")
