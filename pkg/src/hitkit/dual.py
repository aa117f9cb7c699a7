"""The divided power algebra dual to P_k and its A-annihilated subspace.

A divided monomial a_1^(i_1)...a_k^(i_k) is stored as the tuple of
superscripts; elements are GF(2) sums, i.e. frozensets of tuples, dual
to the monomial basis of P_k under <a^(i), t^c> = [i == c].  Dual
squares lower degree by Sq_*^l(a^(n)) = C(n-l, l) a^(n-l) componentwise
(the transpose of the polynomial action, which serves as the oracle).
D_k consists of the elements killed by every positive dual square; the
2-power squares suffice since they generate the Steenrod algebra.
"""

from __future__ import annotations

from . import gf2
from .hitq import context
from .poly import Monomial, binom_mod2, sq

DividedMonomial = tuple
DividedElement = frozenset


def degree(u: DividedElement) -> int:
    for m in u:
        return sum(m)
    raise ValueError("zero element has no degree")


def pair(u: DividedElement, f) -> int:
    """<u, f> in GF(2); monomial bases are dual to each other."""
    f = frozenset(f)
    if u and f:
        du = {sum(m) for m in u}
        df = {sum(m) for m in f}
        if len(du) > 1 or len(df) > 1 or du != df:
            raise ValueError("pairing needs equal homogeneous degrees")
    return len(u & f) & 1


def _dual_sq_monomial(ell: int, mono: DividedMonomial):
    k = len(mono)

    def rec(pos: int, rest: int, acc: list):
        if pos == k - 1:
            part = rest
            if mono[pos] - part >= 0 and binom_mod2(mono[pos] - part, part):
                yield tuple(acc + [mono[pos] - part])
            return
        a = mono[pos]
        for part in range(min(rest, a) + 1):
            if binom_mod2(a - part, part):
                acc.append(a - part)
                yield from rec(pos + 1, rest - part, acc)
                acc.pop()

    yield from rec(0, ell, [])


def dual_sq(ell: int, u: DividedElement) -> DividedElement:
    """Sq_*^ell, extended over products by the dual Cartan rule."""
    if ell < 0:
        raise ValueError("dual square needs ell >= 0")
    if ell == 0:
        return frozenset(u)
    out = set()
    for m in u:
        for term in _dual_sq_monomial(ell, m):
            out ^= {term}
    return frozenset(out)


def dual_sq_by_transpose(ell: int, u: DividedElement, k: int) -> DividedElement:
    """Oracle route: <Sq_*^ell u, c> = <u, Sq^ell c> over the full target
    monomial basis.  Exhaustive; intended for cross-checks."""
    if not u:
        return frozenset()
    n = degree(u)
    if ell > n:
        return frozenset()
    out = set()
    for c in context(k, n - ell).monomials:
        if len(u & sq(ell, frozenset({c}))) & 1:
            out.add(c)
    return frozenset(out)


def annihilated_check(u: DividedElement) -> bool:
    """Membership in D_k: every dual 2-power square kills u."""
    if not u:
        return True
    n = degree(u)
    i = 0
    while (1 << i) <= n:
        if dual_sq(1 << i, u):
            return False
        i += 1
    return True


def annihilated_basis(k: int, n: int) -> gf2.EchelonBasis:
    """Echelon basis of (D_k)_n over the ordered divided monomials,
    as the joint nullspace of the stacked dual 2-power squares."""
    ctx = context(k, n)
    rows = []
    i = 0
    while (1 << i) <= n:
        ell = 1 << i
        target = context(k, n - ell)
        block = [0] * target.ncols
        for j, m in enumerate(ctx.monomials):
            bit = 1 << j
            for term in _dual_sq_monomial(ell, m):
                block[target.index[term]] ^= bit
        rows.extend(r for r in block if r)
        i += 1
    return gf2.nullspace(gf2.Gf2Matrix(tuple(rows), ctx.ncols))


def dual_kameko(u: DividedElement) -> DividedElement:
    """a^(i_1)...a^(i_k) -> a^(2i_1+1)...a^(2i_k+1)."""
    return frozenset(tuple(2 * i + 1 for i in m) for m in u)


def element_to_lines(u: DividedElement) -> list[str]:
    return [" ".join(str(i) for i in m) for m in sorted(u)]


def elements_from_lines(lines) -> list[DividedElement]:
    """Parse divided elements; blank lines separate elements."""
    out = []
    current: set[Monomial] = set()
    for line in lines:
        line = line.strip()
        if line.startswith("#"):
            continue
        if not line:
            if current:
                out.append(frozenset(current))
                current = set()
            continue
        current ^= {tuple(int(p) for p in line.split())}
    if current:
        out.append(frozenset(current))
    return out
