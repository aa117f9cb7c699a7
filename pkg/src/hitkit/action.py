"""Symmetric and general linear group actions on (QP_k)_n.

The generators are the adjacent transpositions (d < k) and the
transvection t_1 -> t_1 + t_2 (d = k); together they generate GL_k over
GF(2), the transpositions alone generate Sigma_k.  A class is invariant
iff every generator fixes it, so invariants are the joint nullspace of
the matrices A_d + I over the admissible basis.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf2
from .hitq import QpBasis, qp_basis
from .poly import binom_mod2


def _sigma_image_monomials(k: int, d: int, m) -> list[tuple]:
    """sigma_d applied to one monomial, as a list of monomials."""
    if k == 1 and d == 1:
        return [tuple(m)]  # GL_1 over GF(2) is trivial
    if 1 <= d < k:
        out = list(m)
        out[d - 1], out[d] = out[d], out[d - 1]
        return [tuple(out)]
    if d == k:
        a = m[0]
        terms = []
        for c in range(a + 1):
            if binom_mod2(a, c):
                t = list(m)
                t[0] = c
                t[1] += a - c
                terms.append(tuple(t))
        return terms
    raise ValueError(f"generator index {d} out of range 1..{k}")


@dataclass(frozen=True)
class ActionMatrix:
    """Matrix of sigma_d on the admissible basis; column j holds the
    class of sigma_d(admissible_j) in admissible coordinates."""

    d: int
    columns: tuple
    dim: int

    def apply(self, coords: int) -> int:
        out = 0
        for i in gf2.bits_of(coords):
            out ^= self.columns[i]
        return out

    def plus_identity_rows(self) -> list[int]:
        """Rows of A_d + I, for nullspace solving."""
        rows = [0] * self.dim
        for j, col in enumerate(self.columns):
            bit = 1 << j
            for i in gf2.bits_of(col):
                rows[i] ^= bit
        for i in range(self.dim):
            rows[i] ^= 1 << i
        return rows


def action_matrix(b: QpBasis, d: int) -> ActionMatrix:
    cols = tuple(
        b.class_of(_sigma_image_monomials(b.k, d, m)) for m in b.admissibles)
    return ActionMatrix(d=d, columns=cols, dim=b.dim)


def _generator_range(k: int, group: str) -> range:
    if group == "sym":
        return range(1, k)
    if group == "gl":
        return range(1, k + 1)
    raise ValueError(f"unknown group {group!r}; use 'sym' or 'gl'")


def invariants(b: QpBasis, group: str = "gl") -> gf2.EchelonBasis:
    """Joint fixed space of the generators, over admissible coordinates."""
    rows = []
    for d in _generator_range(b.k, group):
        rows.extend(action_matrix(b, d).plus_identity_rows())
    return gf2.nullspace(gf2.Gf2Matrix(tuple(rows), b.dim))


def invariants_on_subspace(
    b: QpBasis, sub: gf2.EchelonBasis, group: str = "gl"
) -> gf2.EchelonBasis:
    """Invariants inside a stable subspace (admissible coordinates).

    Raises if some generator does not preserve the subspace.
    """
    if sub.ncols != b.dim:
        raise ValueError("subspace is not in admissible coordinates")
    mats = [action_matrix(b, d) for d in _generator_range(b.k, group)]
    restricted = []
    for mat in mats:
        cols = []
        for v in sub.rows:
            w = mat.apply(v)
            combo = gf2.solve_combination(sub.rows, w)
            if combo is None:
                raise ValueError(
                    f"subspace not stable under sigma_{mat.d}")
            cols.append(combo)
        restricted.append(cols)
    dim = sub.rank
    rows = []
    for cols in restricted:
        block = [0] * dim
        for j, col in enumerate(cols):
            bit = 1 << j
            for i in gf2.bits_of(col):
                block[i] ^= bit
        for i in range(dim):
            block[i] ^= 1 << i
        rows.extend(block)
    small = gf2.nullspace(gf2.Gf2Matrix(tuple(rows), dim))
    lifted = []
    for v in small.rows:
        w = 0
        for i in gf2.bits_of(v):
            w ^= sub.rows[i]
        lifted.append(w)
    return gf2.echelon(gf2.Gf2Matrix(tuple(lifted), b.dim))


def coinvariant_dim(k: int, n: int) -> int:
    """dim of the GL_k-coinvariants of (D_k)_n, computed as the dimension
    of the GL_k-invariants of (QP_k)_n (vector-space duality)."""
    return invariants(qp_basis(k, n), "gl").rank
