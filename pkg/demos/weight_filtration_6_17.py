"""The six-variable quotient at degree 17, weight by weight.

Monomials are filtered by their weight vector (how many exponents carry
each binary digit); the quotient splits along that filtration.  Degree
17 in six variables is the degree where the rank-6 transfer question
lives, and its filtration has six nonzero layers.  This takes a few
seconds: the hit space is an echelon form on 26334 columns.
"""

from hitkit import action, hitq

b = hitq.qp_basis(6, 17)
print(f"dim (QP_6)_17 = {b.dim}  (from {b.ctx.ncols} monomials, "
      f"hit rank {b.hit.rank})")

print("\nweight layer dimensions:")
total = 0
for omega in sorted(b.ctx.weight_blocks):
    d, reps = hitq.weight_space(b, omega)
    if d:
        pos = sum(1 for m in reps if all(a > 0 for a in m))
        total += d
        print(f"  omega={omega}: dim {d:5d}   full-support part {pos}")
print(f"  sum = {total}")

print("\nthe ten full-support classes at omega = (3,1,1,1):")
_, reps = hitq.weight_space(b, (3, 1, 1, 1))
for m in sorted(m for m in reps if all(a > 0 for a in m)):
    print("  ", m)

print("\nzero-exponent part of that layer via the counting formula:")
lower = {j: hitq.positive_weight_dim(hitq.qp_basis(j, 17), (3, 1, 1, 1))
         for j in (3, 4, 5)}
print(f"  positive parts at 3,4,5 variables: {lower}")
print(f"  formula gives {hitq.zero_part_dim_formula(6, (3, 1, 1, 1), lower)}"
      f" = 546 - 10")

print("\nGL_6-invariants of the whole degree:")
inv = action.invariants(b, "gl")
print(f"  dim = {inv.rank}  (so the rank-6 coinvariant space at degree 17"
      f" is {inv.rank}-dimensional)")
