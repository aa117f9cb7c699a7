"""hitkit: the Peterson hit problem and the Singer transfer over GF(2).

Subpackages:
    gf2     bit-packed exact linear algebra
    poly    P_k monomials, Steenrod squares, weight vectors, spikes
    hitq    hit subspaces, admissible bases, weight filtration, Kameko
    action  Sigma_k / GL_k actions, invariants, coinvariant dimensions
    dual    divided power dual, dual squares, the A-annihilated D_k
    lam     lambda algebra, Ext charts, chain transfer psi_k
"""

from . import action, dual, gf2, hitq, lam, poly

__all__ = ["action", "dual", "gf2", "hitq", "lam", "poly"]
__version__ = "0.1.0"
