"""Ext charts from the lambda algebra.

H^{s,t} of the lambda complex is Ext_A^{s,s+t}; the s = 1 line is the
family h_i = [lambda_{2^i-1}].  This script prints a small chart, shows
an Adem reduction, and exhibits a boundary witness.
"""

from hitkit import lam

print("dim Ext_A^{s,s+t} for s <= 4, t <= 20 (dots are zeros)")
print("t:    " + "".join(f"{t:3d}" for t in range(21)))
for s in range(1, 5):
    row = []
    for t in range(21):
        d = lam.cohomology(s, t).dim
        row.append(f"{d:3d}" if d else "  .")
    print(f"s={s}  " + "".join(row))

print("\nthe h-family on the s = 1 line:")
hits = [t for t in range(65) if lam.cohomology(1, t).dim]
print("  nonzero at t =", hits, "(= 2^i - 1)")

print("\nan Adem reduction: lambda_1 lambda_15 is not admissible")
e = lam.expr((1, 15))
print("  reduces to:", sorted(lam.adem_reduce(e)))

print("\nh_1^3 h_4 lives at (4, 18): the word (1,1,1,15) reduces to")
z = lam.adem_reduce(lam.expr((1, 1, 1, 15)))
for m in sorted(z):
    print("  ", m)
print("  cycle:", lam.is_cycle(z), " boundary:", lam.is_boundary(z)[0])

print("\na boundary with witness: z = delta(lambda_4 lambda_2)")
z = lam.differential(lam.expr((4, 2)))
flag, witness = lam.is_boundary(z)
print("  z =", sorted(z))
print("  bounds:", flag, " witness:", sorted(witness))
