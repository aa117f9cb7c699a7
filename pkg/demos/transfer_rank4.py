"""The rank-4 transfer at degree 18, end to end.

Two A-annihilated elements of the divided power algebra detect the two
Ext classes at (4, 22): the product class h_1^3 h_4 comes from the
divided monomial a^(1)a^(1)a^(1)a^(15); the indecomposable f_0 needs a
many-term generator, recovered here by solving for the element of
(D_4)_18 whose chain transfer is exactly the f_0 cycle.  Their images
span Ext, and the coinvariant space has the same dimension: the
transfer is an isomorphism in this degree.
"""

from hitkit import action, dual, gf2, hitq, lam

F0_TILDE = lam.expr((4, 6, 5, 3), (5, 7, 3, 3), (3, 3, 5, 7), (2, 4, 5, 7))

h_gen = frozenset({(1, 1, 1, 15)})
print("a^(1)a^(1)a^(1)a^(15) annihilated:", dual.annihilated_check(h_gen))
p = lam.psi(4, h_gen)
print("its transfer, reduced:", sorted(p))
print("cycle:", lam.is_cycle(p), " boundary:", lam.is_boundary(p)[0])

print("\nsolving for the f_0 generator inside (D_4)_18 ...")
D = dual.annihilated_basis(4, 18)
ctx = hitq.context(4, 18)
basis = lam.lambda_basis(4, 18)
idx = {m: i for i, m in enumerate(basis)}
rows, elements = [], []
for v in D.rows:
    el = frozenset(ctx.monomials[c] for c in gf2.bits_of(v))
    elements.append(el)
    rows.append(sum(1 << idx[m] for m in lam.psi(4, el)))
combo = gf2.solve_combination(rows, sum(1 << idx[m] for m in F0_TILDE))
theta = frozenset()
for i in gf2.bits_of(combo):
    theta ^= elements[i]
print(f"found: {len(theta)} divided monomials, annihilated:",
      dual.annihilated_check(theta))
print("psi_4(theta) equals the f_0 cycle:",
      lam.psi(4, theta) == lam.adem_reduce(F0_TILDE))

print("\nboth sides of the transfer at degree 18:")
print("  coinvariant dimension:", action.coinvariant_dim(4, 18))
print("  dim Ext_A^{4,22}     :", lam.cohomology(4, 18).dim)
report = lam.transfer_verdict(4, 18, [h_gen, theta])
print("  verdict:", report.summary())

print("\nthe same machinery at degree 38 (classes h_0^2 h_3 h_5 and e_1):")
zbar = frozenset({(0, 0, 7, 31)})
zeta38 = None
try:
    import sys
    from pathlib import Path
    sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
    from zeta_elements import ZETA_38 as zeta38
except ImportError:
    pass
gens = [zbar] + ([zeta38] if zeta38 else [])
print("  verdict:", lam.transfer_verdict(4, 38, gens).summary())
