"""A first walk through the hit problem at small rank.

The module GF(2)[t_1..t_k] over the Steenrod algebra has a minimal
generating set in each degree; its size is the dimension of the quotient
by the "hit" elements.  This script surveys small ranks: the one-variable
answer (generators exactly in degrees 2^d - 1), Wood's vanishing
criterion via the mu function, and the Kameko halving map that ties
degree n to degree (n - k)/2.
"""

from hitkit import hitq
from hitkit.poly import minimal_spike, mu

print("dim (QP_k)_n for k = 1..3, n = 0..12")
print("n:  " + " ".join(f"{n:3d}" for n in range(13)))
for k in (1, 2, 3):
    dims = [hitq.qp_basis(k, n).dim for n in range(13)]
    print(f"k={k} " + " ".join(f"{d:3d}" for d in dims))

print()
print("one variable: t^n survives exactly when n = 2^d - 1")
survivors = [n for n in range(1, 64) if hitq.qp_basis(1, n).dim]
print("  survivors up to 63:", survivors)

print()
print("mu(n) = min{h : popcount(n+h) <= h} controls vanishing:")
for n in (5, 9, 14, 17, 23):
    k_needed = mu(n)
    print(f"  n={n}: mu={k_needed}; (QP_k)_n = 0 for all k < {k_needed}")
    if k_needed <= 4:
        spike = minimal_spike(k_needed, n)
        print(f"        minimal spike in {k_needed} variables: {spike}")

print()
print("the Kameko map halves all-odd monomials: at (k, n) = (6, 6) it")
print("lands in degree 0, so its kernel is everything but one class")
km = hitq.kameko(hitq.qp_basis(6, 6), hitq.qp_basis(6, 0))
print(f"  dim (QP_6)_6 = {km.src.dim}, rank = {km.rank}, "
      f"kernel = {km.kernel().rank}")
