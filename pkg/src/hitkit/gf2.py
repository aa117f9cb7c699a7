"""Bit-packed linear algebra over GF(2).

Vectors are Python ints used as bitmasks: bit i is the coordinate in
column i of some externally supplied ordered basis.  Arbitrary-precision
ints give word-level XOR for free, so a "row operation" is a single ^.

Everything here is exact.  The only choice a caller makes is the pivot
rule: ``leftmost`` picks the smallest column index as the pivot of a row
(ordinary reduced row echelon form), ``rightmost`` picks the largest.
The rightmost rule matters for hit-problem clients, where a column order
encodes a monomial order and "pivot" must mean "maximal term".
"""

from __future__ import annotations

from dataclasses import dataclass, field

_BYTE_BITS = [tuple(i for i in range(8) if (b >> i) & 1) for b in range(256)]


def bits_of(v: int) -> list[int]:
    """Indices of the set bits of v, ascending."""
    out = []
    data = v.to_bytes((v.bit_length() + 7) // 8, "little") if v else b""
    base = 0
    for byte in data:
        if byte:
            for i in _BYTE_BITS[byte]:
                out.append(base + i)
        base += 8
    return out


def from_bits(cols) -> int:
    """Bitmask with the given (distinct) column indices set."""
    cols = list(cols)
    if not cols:
        return 0
    buf = bytearray(max(cols) // 8 + 1)
    for c in cols:
        buf[c >> 3] |= 1 << (c & 7)
    return int.from_bytes(buf, "little")


@dataclass(frozen=True)
class Gf2Vector:
    bits: int
    ncols: int

    def __post_init__(self):
        if self.bits < 0 or (self.bits >> self.ncols):
            raise ValueError("vector has bits beyond ncols")

    def support(self) -> list[int]:
        return bits_of(self.bits)


@dataclass(frozen=True)
class Gf2Matrix:
    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self):
        for r in self.rows:
            if r < 0 or (r >> self.ncols):
                raise ValueError("row has bits beyond ncols")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def mul_vector(self, v: int) -> int:
        """Matrix-times-vector; result bit i = parity of <row_i, v>."""
        out = 0
        for i, r in enumerate(self.rows):
            if (r & v).bit_count() & 1:
                out |= 1 << i
        return out


def matrix(rows, ncols: int) -> Gf2Matrix:
    return Gf2Matrix(tuple(rows), ncols)


def _pivot_of(v: int, rule: str) -> int:
    if rule == "rightmost":
        return v.bit_length() - 1
    return (v & -v).bit_length() - 1


@dataclass(frozen=True)
class EchelonBasis:
    """Reduced echelon basis: one row per pivot, no other row touches a
    pivot column, rows listed by ascending pivot column."""

    rows: tuple[int, ...]
    ncols: int
    pivots: tuple[int, ...]
    pivot_rule: str = "leftmost"
    _pivot_row: dict = field(default=None, repr=False, compare=False)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivot_row(self, col: int) -> int:
        table = object.__getattribute__(self, "_pivot_row")
        if table is None:
            table = dict(zip(self.pivots, self.rows))
            object.__setattr__(self, "_pivot_row", table)
        return table[col]

    def reduce(self, v: int) -> int:
        """Canonical representative of v modulo the row space.

        Rows are fully reduced, so XORing a pivot row toggles non-pivot
        bits only; one pass over the original support suffices.
        """
        table = object.__getattribute__(self, "_pivot_row")
        if table is None:
            table = dict(zip(self.pivots, self.rows))
            object.__setattr__(self, "_pivot_row", table)
        for c in bits_of(v):
            row = table.get(c)
            if row is not None:
                v ^= row
        return v

    def to_matrix(self) -> Gf2Matrix:
        return Gf2Matrix(self.rows, self.ncols)


class _Echelonizer:
    """Incremental reduced-echelon accumulator over a fixed pivot rule.

    Rows are kept fully reduced: a stored row meets no pivot column but
    its own, so reducing a vector costs one XOR per pivot bit of its
    original support.  Back-substitution bookkeeping is column-major:
    ``_colmask[c]`` is a bitmask over internal row ids telling which rows
    currently carry bit c, and because an insertion XORs the same vector
    into every affected row, that mask updates with a single XOR per bit
    of the new row.
    """

    def __init__(self, ncols: int, pivot_rule: str = "leftmost"):
        if pivot_rule not in ("leftmost", "rightmost"):
            raise ValueError(f"unknown pivot rule {pivot_rule!r}")
        self.ncols = ncols
        self.pivot_rule = pivot_rule
        self._rowlist: list[int] = []  # row id -> row value
        self._pivcols: list[int] = []  # row id -> pivot column
        self._pid: dict[int, int] = {}  # pivot column -> row id
        self._colmask: dict[int, int] = {}  # column -> row-id bitmask

    @property
    def rank(self) -> int:
        return len(self._rowlist)

    def reduce(self, v: int) -> int:
        pid = self._pid
        rowlist = self._rowlist
        for c in bits_of(v):
            i = pid.get(c)
            if i is not None:
                v ^= rowlist[i]
        return v

    def insert(self, v: int) -> int | None:
        """Reduce v and adopt it as a new pivot row; returns the new pivot
        column, or None if v lies in the current row space."""
        v = self.reduce(v)
        if not v:
            return None
        c = _pivot_of(v, self.pivot_rule)
        rowlist = self._rowlist
        colmask = self._colmask
        newpid = len(rowlist)
        affected = colmask.pop(c, 0)
        if affected:
            for i in bits_of(affected):
                rowlist[i] ^= v
        stamp = affected | (1 << newpid)
        for b in bits_of(v):
            if b != c:
                nv = colmask.get(b, 0) ^ stamp
                if nv:
                    colmask[b] = nv
                else:
                    colmask.pop(b, None)
        rowlist.append(v)
        self._pivcols.append(c)
        self._pid[c] = newpid
        return c

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def finish(self) -> EchelonBasis:
        order = sorted(range(len(self._rowlist)), key=self._pivcols.__getitem__)
        return EchelonBasis(
            rows=tuple(self._rowlist[i] for i in order),
            ncols=self.ncols,
            pivots=tuple(self._pivcols[i] for i in order),
            pivot_rule=self.pivot_rule,
        )


def echelon(m: Gf2Matrix, pivot_rule: str = "leftmost") -> EchelonBasis:
    """Reduced echelon form of the row space of m."""
    acc = _Echelonizer(m.ncols, pivot_rule)
    for r in m.rows:
        acc.insert(r)
    return acc.finish()


def rank(m: Gf2Matrix) -> int:
    return echelon(m).rank


def nullspace(m: Gf2Matrix) -> EchelonBasis:
    """Echelon basis of {v : m @ v = 0}."""
    e = echelon(m, "leftmost")
    pivset = set(e.pivots)
    basis = []
    for c in range(m.ncols):
        if c in pivset:
            continue
        v = 1 << c
        for p, row in zip(e.pivots, e.rows):
            if (row >> c) & 1:
                v ^= 1 << p
        basis.append(v)
    return echelon(Gf2Matrix(tuple(basis), m.ncols), "leftmost")


def subspace_sum(a: EchelonBasis, b: EchelonBasis) -> EchelonBasis:
    if a.ncols != b.ncols:
        raise ValueError("ambient dimensions differ")
    return echelon(Gf2Matrix(a.rows + b.rows, a.ncols), "leftmost")


def subspace_intersection(a: EchelonBasis, b: EchelonBasis) -> EchelonBasis:
    """Zassenhaus: echelonize [x|x] for x in a and [y|0] for y in b; rows
    whose low block died carry the intersection in the high block."""
    if a.ncols != b.ncols:
        raise ValueError("ambient dimensions differ")
    n = a.ncols
    rows = [r | (r << n) for r in a.rows] + list(b.rows)
    e = echelon(Gf2Matrix(tuple(rows), 2 * n), "leftmost")
    mask = (1 << n) - 1
    inter = [r >> n for r in e.rows if not (r & mask)]
    return echelon(Gf2Matrix(tuple(inter), n), "leftmost")


def contains(a: EchelonBasis, v: int) -> bool:
    if v < 0 or (v >> a.ncols):
        raise ValueError("vector length does not match basis")
    return a.reduce(v) == 0


def solve_combination(rows, target: int) -> int | None:
    """Find a bitmask s with XOR of rows[i] over set bits of s == target.

    Returns None when target is outside the row span.  Used wherever a
    witness is needed, e.g. expressing a boundary as an image.
    """
    acc: dict[int, tuple[int, int]] = {}  # pivot -> (row, combo)
    for i, r in enumerate(rows):
        combo = 1 << i
        while r:
            c = r.bit_length() - 1
            hit = acc.get(c)
            if hit is None:
                acc[c] = (r, combo)
                break
            r ^= hit[0]
            combo ^= hit[1]
    combo = 0
    while target:
        c = target.bit_length() - 1
        hit = acc.get(c)
        if hit is None:
            return None
        target ^= hit[0]
        combo ^= hit[1]
    return combo
