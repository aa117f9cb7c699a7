import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hitkit import action, dual, gf2, hitq, lam


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: long-running acceptance computations")


def solve_f0_generator():
    """Element of (D_4)_18 whose chain transfer is exactly the f_0 cycle
    lambda_4 lambda_6 lambda_5 lambda_3 + lambda_5 lambda_7 lambda_3^2
    + lambda_3^2 lambda_5 lambda_7 + lambda_2 lambda_4 lambda_5 lambda_7."""
    D = dual.annihilated_basis(4, 18)
    ctx = hitq.context(4, 18)
    basis = lam.lambda_basis(4, 18)
    idx = {m: i for i, m in enumerate(basis)}
    rows = []
    elements = []
    for v in D.rows:
        el = frozenset(ctx.monomials[c] for c in gf2.bits_of(v))
        elements.append(el)
        rows.append(sum(1 << idx[m] for m in lam.psi(4, el)))
    target = sum(1 << idx[m] for m in F0_TILDE)
    combo = gf2.solve_combination(rows, target)
    assert combo is not None, "f_0 is not in the image of the rank-4 transfer"
    theta = frozenset()
    for i in gf2.bits_of(combo):
        theta ^= elements[i]
    return frozenset(theta)


F0_TILDE = lam.expr((4, 6, 5, 3), (5, 7, 3, 3), (3, 3, 5, 7), (2, 4, 5, 7))


def build_rank6_generator():
    """Pad an e_0 generator of (D_4)_17 by two trivial variables to get a
    generator of the rank-6 coinvariants at degree 17 (class h_0^2 e_0)."""
    b17 = hitq.qp_basis(4, 17)
    inv = action.invariants(b17, "gl")
    assert inv.rank == 1
    f = frozenset(b17.class_monomials(inv.rows[0]))
    ctx = hitq.context(4, 17)
    for v in dual.annihilated_basis(4, 17).rows:
        el = frozenset(ctx.monomials[c] for c in gf2.bits_of(v))
        if dual.pair(el, f):
            return frozenset((0, 0) + m for m in el)
    raise AssertionError("no element of (D_4)_17 pairs with the invariant")


@pytest.fixture(scope="session")
def f0_generator():
    return solve_f0_generator()


@pytest.fixture(scope="session")
def rank6_generator():
    return build_rank6_generator()
