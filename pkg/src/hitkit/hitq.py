"""The hit subspace, admissible bases and the weight filtration of QP_k.

A degree context fixes (k, n) and lays the monomials of that degree out
as matrix columns sorted ascending in the weight-then-exponent order.
The hit subspace is generated by Sq^{2^j} images (the 2-power squares
generate the whole Steenrod algebra) and echelonized with rightmost
pivots, so a pivot column is exactly a monomial occurring as the maximal
term of a hit element, i.e. an inadmissible monomial.  Non-pivot columns
are the admissible monomials and their classes form the quotient basis.

Because the column order is weight-major, monomials of weight <= omega
occupy a prefix of the columns; counting pivots per weight block yields
the weight filtration dimensions without extra eliminations.
"""

from __future__ import annotations

import bisect
import os
import sys
import time
from functools import lru_cache
from math import comb

from . import gf2
from .poly import (
    Monomial,
    binom_mod2,
    minimal_spike,
    monomials_of_degree,
    mu,
    order_key,
    phi,
    weight_degree,
    weight_vector,
)

GENERATION_ORDER = "descending"  # feed rows with large maximal term first


def _progress_enabled() -> bool:
    return bool(os.environ.get("HITKIT_PROGRESS"))


class DegreeContext:
    """Ordered monomial basis of (P_k)_n."""

    def __init__(self, k: int, n: int):
        if k < 1 or n < 0:
            raise ValueError("need k >= 1 and n >= 0")
        self.k = k
        self.n = n
        monos = sorted(monomials_of_degree(k, n), key=order_key)
        self.monomials = tuple(monos)
        self.index = {m: i for i, m in enumerate(monos)}
        self.ncols = len(monos)
        # contiguous column ranges per weight vector, in block order
        blocks: dict[tuple, list[int]] = {}
        start = 0
        prev = None
        for i, m in enumerate(monos):
            w = weight_vector(m)
            if w != prev:
                if prev is not None:
                    blocks[prev] = [start, i]
                prev, start = w, i
        if prev is not None:
            blocks[prev] = [start, len(monos)]
        self.weight_blocks = {w: (a, b) for w, (a, b) in blocks.items()}

    def __repr__(self):
        return f"DegreeContext(k={self.k}, n={self.n}, ncols={self.ncols})"


@lru_cache(maxsize=None)
def context(k: int, n: int) -> DegreeContext:
    return DegreeContext(k, n)


def _sq_term_columns(ctx: DegreeContext, i: int, mono: Monomial) -> list[int]:
    """Column indices of the terms of Sq^i(mono) inside ctx."""
    index = ctx.index
    k = ctx.k
    cols: list[int] = []

    def rec(pos: int, rest: int, acc: list):
        if pos == k - 1:
            if binom_mod2(mono[pos], rest):
                cols.append(index[tuple(acc + [mono[pos] + rest])])
            return
        a = mono[pos]
        for part in range(min(rest, a) + 1):
            if binom_mod2(a, part):
                acc.append(a + part)
                rec(pos + 1, rest - part, acc)
                acc.pop()

    rec(0, i, [])
    return cols


def _generator_rows(ctx: DegreeContext):
    """All (maxcol, j, source) descriptors for rows Sq^{2^j}(source)."""
    out = []
    j = 0
    while (1 << j) <= ctx.n:
        i = 1 << j
        for m in monomials_of_degree(ctx.k, ctx.n - i):
            cols = _sq_term_columns(ctx, i, m)
            if cols:
                out.append((max(cols), i, m))
        j += 1
    return out


def hit_space(ctx: DegreeContext) -> gf2.EchelonBasis:
    """Rightmost-pivot reduced echelon basis of A+ . P_k at (k, n)."""
    acc = gf2._Echelonizer(ctx.ncols, "rightmost")
    descriptors = _generator_rows(ctx)
    descriptors.sort(key=lambda d: d[0], reverse=(GENERATION_ORDER == "descending"))
    report = _progress_enabled() and ctx.ncols > 20000
    t0 = time.time()
    for count, (_, i, m) in enumerate(descriptors):
        acc.insert(gf2.from_bits(_sq_term_columns(ctx, i, m)))
        if report and count % 20000 == 0:
            print(
                f"hit({ctx.k},{ctx.n}): {count}/{len(descriptors)} rows, "
                f"rank {acc.rank}, {time.time() - t0:.0f}s",
                file=sys.stderr,
            )
    return acc.finish()


class QpBasis:
    """Admissible monomial basis of (QP_k)_n with the hit reducer."""

    def __init__(self, ctx: DegreeContext, hit: gf2.EchelonBasis):
        self.ctx = ctx
        self.hit = hit
        pivset = set(hit.pivots)
        self.admissibles = tuple(
            m for i, m in enumerate(ctx.monomials) if i not in pivset)
        self.adm_of_col = {}
        for pos, m in enumerate(self.admissibles):
            self.adm_of_col[ctx.index[m]] = pos
        self._col_cache: dict[int, int] = {}

    @property
    def dim(self) -> int:
        return len(self.admissibles)

    @property
    def k(self) -> int:
        return self.ctx.k

    @property
    def n(self) -> int:
        return self.ctx.n

    def _reduce_column(self, col: int) -> int:
        """Class of the basis monomial at col, as admissible coordinates."""
        cached = self._col_cache.get(col)
        if cached is not None:
            return cached
        pos = self.adm_of_col.get(col)
        if pos is not None:
            coords = 1 << pos
        else:
            row = self.hit.pivot_row(col)
            coords = gf2.from_bits(
                self.adm_of_col[c] for c in gf2.bits_of(row) if c != col)
        self._col_cache[col] = coords
        return coords

    def class_of(self, monos) -> int:
        """[sum of monos] in admissible coordinates (a gf2 bitmask)."""
        coords = 0
        index = self.ctx.index
        for m in monos:
            coords ^= self._reduce_column(index[m])
        return coords

    def class_monomials(self, coords: int) -> list[Monomial]:
        return [self.admissibles[i] for i in gf2.bits_of(coords)]

    def is_hit(self, monos) -> bool:
        return self.class_of(monos) == 0


@lru_cache(maxsize=None)
def qp_basis(k: int, n: int) -> QpBasis:
    ctx = context(k, n)
    return QpBasis(ctx, hit_space(ctx))


def enumerate_weight_vectors(k: int, n: int):
    """All weight vectors of degree n with entries in [0, k]."""

    def rec(remaining: int, j: int, acc: list):
        if remaining == 0:
            yield tuple(acc)
            return
        unit = 1 << j
        if unit > remaining:
            return
        for w in range(min(k, remaining // unit) + 1):
            acc.append(w)
            yield from rec(remaining - w * unit, j + 1, acc)
            acc.pop()

    for omega in rec(n, 0, []):
        if not omega or omega[-1] != 0:
            yield omega


def _pivots_in_range(b: QpBasis, start: int, end: int) -> int:
    pivots = b.hit.pivots
    return bisect.bisect_left(pivots, end) - bisect.bisect_left(pivots, start)


def weight_space(b: QpBasis, omega) -> tuple[int, list[Monomial]]:
    """dim QP_k(omega) plus its admissible representatives.

    The monomials of weight exactly omega form one column block and
    everything of lower weight sits strictly left of it, so the block's
    non-pivot columns compute P_k(omega) mod (hit intersect P_k(omega))
    + P_k^-(omega).
    """
    omega = tuple(omega)
    while omega and omega[-1] == 0:
        omega = omega[:-1]
    if weight_degree(omega) != b.n:
        raise ValueError(f"deg(omega)={weight_degree(omega)} but n={b.n}")
    block = b.ctx.weight_blocks.get(omega)
    if block is None:
        return 0, []
    start, end = block
    reps = [m for m in b.ctx.monomials[start:end]
            if b.ctx.index[m] in b.adm_of_col]
    assert len(reps) == (end - start) - _pivots_in_range(b, start, end)
    return len(reps), reps


def weight_space_dim(b: QpBasis, omega) -> int:
    return weight_space(b, omega)[0]


def positive_weight_dim(b: QpBasis, omega) -> int:
    """dim (QP_k)^{>0}(omega): representatives using every variable."""
    _, reps = weight_space(b, omega)
    return sum(1 for m in reps if all(a > 0 for a in m))


def weight_decomposition_check(b: QpBasis) -> bool:
    """Direct-sum consistency of the weight filtration at (k, n)."""
    omegas = set(enumerate_weight_vectors(b.k, b.n))
    for w in b.ctx.weight_blocks:
        if w not in omegas:
            return False
    total = sum(weight_space_dim(b, w) for w in omegas)
    return total == b.dim


def split_zero_positive(b: QpBasis) -> tuple[list[Monomial], list[Monomial]]:
    """Partition the admissible basis by vanishing of some exponent."""
    zero, positive = [], []
    for m in b.admissibles:
        (zero if 0 in m else positive).append(m)
    return zero, positive


def zero_part_dim_formula(k: int, omega, lower_dims: dict) -> int:
    """dim (QP_k)^0(omega) from the positive parts at fewer variables:
    sum over mu(n) <= j <= k-1 of C(k, j) * dim (QP_j)^{>0}(omega)."""
    n = weight_degree(omega)
    total = 0
    for j in range(mu(n), k):
        if j not in lower_dims:
            raise ValueError(f"missing dim (QP_{j})^>0(omega)")
        total += comb(k, j) * lower_dims[j]
    return total


def spike_filter_hit(x: Monomial) -> bool:
    """Sound, incomplete hit test: weight below the minimal spike's."""
    k = len(x)
    z = minimal_spike(k, sum(x))
    return weight_vector(x) < weight_vector(z)


class KamekoMap:
    """The halving surjection on quotient bases, as admissible-coordinate
    columns: src class j maps to columns[j] over dst admissibles."""

    def __init__(self, src: QpBasis, dst: QpBasis):
        if src.k != dst.k:
            raise ValueError("variable counts differ")
        if (src.n - src.k) % 2 != 0 or dst.n * 2 + src.k != src.n:
            raise ValueError(
                f"degree mismatch: ({src.n} - {src.k})/2 != {dst.n}")
        self.src = src
        self.dst = dst
        cols = []
        for m in src.admissibles:
            y = phi(m)
            cols.append(dst.class_of([y]) if y is not None else 0)
        self.columns = tuple(cols)

    def apply(self, coords: int) -> int:
        out = 0
        for i in gf2.bits_of(coords):
            out ^= self.columns[i]
        return out

    @property
    def rank(self) -> int:
        return gf2.rank(gf2.Gf2Matrix(self.columns, self.dst.dim))

    @property
    def surjective(self) -> bool:
        return self.rank == self.dst.dim

    def kernel(self) -> gf2.EchelonBasis:
        """Nullspace over the source admissible coordinates."""
        rows = [0] * self.dst.dim
        for j, col in enumerate(self.columns):
            bit = 1 << j
            for i in gf2.bits_of(col):
                rows[i] |= bit
        return gf2.nullspace(gf2.Gf2Matrix(tuple(rows), self.src.dim))


def kameko(src: QpBasis, dst: QpBasis) -> KamekoMap:
    return KamekoMap(src, dst)


def kameko_kernel(src: QpBasis, dst: QpBasis) -> gf2.EchelonBasis:
    return KamekoMap(src, dst).kernel()
