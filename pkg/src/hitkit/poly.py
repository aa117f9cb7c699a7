"""Monomials and polynomials of GF(2)[t_1..t_k] with the Steenrod action.

A monomial is a tuple of k exponents; a polynomial is a frozenset of
monomials (coefficients live in GF(2), so duplicates cancel).  Squares
act by Sq^s(t^m) = C(m,s) t^{m+s} on variables and extend over products
by the Cartan formula.  The weight vector of a monomial counts, per
binary digit, how many exponents carry that digit; weight-then-exponent
left-lex is the monomial order every matrix column layout uses.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

Monomial = tuple  # tuple[int, ...], one exponent per variable
Polynomial = frozenset  # frozenset[Monomial]

ZERO: Polynomial = frozenset()


def degree(mono: Monomial) -> int:
    return sum(mono)


def poly(*monos) -> Polynomial:
    """GF(2) sum of monomials; repeated entries cancel in pairs."""
    out = set()
    for m in monos:
        m = tuple(m)
        if m in out:
            out.discard(m)
        else:
            out.add(m)
    return frozenset(out)


def poly_add(*polys) -> Polynomial:
    out = set()
    for p in polys:
        out ^= p
    return frozenset(out)


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    out = set()
    for a in p:
        for b in q:
            m = tuple(x + y for x, y in zip(a, b))
            out ^= {m}
    return frozenset(out)


def poly_pow(p: Polynomial, e: int) -> Polynomial:
    """p**e; char-2 squaring is termwise, so go digit by digit."""
    if e < 0:
        raise ValueError("negative power")
    k = None
    for m in p:
        k = len(m)
        break
    result = None
    square = p
    while e:
        if e & 1:
            result = square if result is None else poly_mul(result, square)
        e >>= 1
        if e:
            square = frozenset(tuple(2 * a for a in m) for m in square)
    if result is None:
        return frozenset({(0,) * k}) if k is not None else frozenset({()})
    return result


def is_homogeneous(p: Polynomial) -> bool:
    degs = {degree(m) for m in p}
    return len(degs) <= 1


def weight_vector(mono: Monomial) -> tuple[int, ...]:
    """(omega_1, omega_2, ...): omega_j = #variables whose exponent has
    binary digit j-1; trailing zeros dropped."""
    out = []
    exps = list(mono)
    j = 0
    while any(exps):
        out.append(sum(e & 1 for e in exps))
        exps = [e >> 1 for e in exps]
        j += 1
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def weight_degree(omega) -> int:
    return sum(w << j for j, w in enumerate(omega))


def order_key(mono: Monomial):
    """Sort key realizing the weight-then-exponent left-lex order."""
    return (weight_vector(mono), mono)


def compare_monomials(x: Monomial, y: Monomial) -> int:
    """-1, 0 or 1; only defined within one degree."""
    if degree(x) != degree(y):
        raise ValueError("monomials of unequal degree are not comparable")
    kx, ky = order_key(x), order_key(y)
    return -1 if kx < ky else (0 if kx == ky else 1)


def binom_mod2(n: int, r: int) -> int:
    """C(n, r) mod 2 by Lucas: 1 iff the digits of r sit inside n."""
    if r < 0 or n < 0 or r > n:
        return 0
    return 1 if (r & (n - r)) == 0 else 0


def _sq_monomial(i: int, mono: Monomial):
    """Terms of Sq^i on one monomial, by distributing i over the
    variables with odd binomial coefficients (Cartan)."""
    k = len(mono)

    def rec(pos: int, rest: int, acc: list):
        if pos == k - 1:
            if binom_mod2(mono[pos], rest):
                yield tuple(acc + [mono[pos] + rest])
            return
        a = mono[pos]
        top = min(rest, a)
        for part in range(top + 1):
            if binom_mod2(a, part):
                acc.append(a + part)
                yield from rec(pos + 1, rest - part, acc)
                acc.pop()

    if k == 0:
        if i == 0:
            yield ()
        return
    yield from rec(0, i, [])


def sq(i: int, f: Polynomial) -> Polynomial:
    """Steenrod square Sq^i on a polynomial."""
    if i < 0:
        raise ValueError("Sq^i needs i >= 0")
    if i == 0:
        return f
    out = set()
    for m in f:
        for term in _sq_monomial(i, m):
            out ^= {term}
    return frozenset(out)


def milnor_q(n: int, f: Polynomial) -> Polynomial:
    """Milnor primitive Q_n; Q_0 = Sq^1, Q_n = [Sq^{2^n}, Q_{n-1}]."""
    if n < 0:
        raise ValueError("Q_n needs n >= 0")
    if n == 0:
        return sq(1, f)
    prev = lambda g: milnor_q(n - 1, g)
    s = 1 << n
    return poly_add(sq(s, prev(f)), prev(sq(s, f)))


@dataclass(frozen=True)
class Substitution:
    """GF(2)-algebra map t_i -> images[i], a homogeneous linear form in
    the target ring's variables."""

    images: tuple  # tuple[Polynomial, ...], one per source variable

    @property
    def source_vars(self) -> int:
        return len(self.images)

    @property
    def target_vars(self) -> int:
        for p in self.images:
            for m in p:
                return len(m)
        raise ValueError("empty substitution")

    @staticmethod
    def identity(k: int) -> "Substitution":
        return Substitution(tuple(
            frozenset({tuple(1 if j == i else 0 for j in range(k))})
            for i in range(k)))

    @staticmethod
    def transposition(k: int, d: int) -> "Substitution":
        """Swap t_d and t_{d+1} (1-based d, 1 <= d <= k-1)."""
        if not 1 <= d <= k - 1:
            raise ValueError("transposition index out of range")
        perm = list(range(k))
        perm[d - 1], perm[d] = perm[d], perm[d - 1]
        return Substitution(tuple(
            frozenset({tuple(1 if j == perm[i] else 0 for j in range(k))})
            for i in range(k)))

    @staticmethod
    def transvection(k: int) -> "Substitution":
        """t_1 -> t_1 + t_2, other variables fixed."""
        if k < 2:
            raise ValueError("transvection needs k >= 2")
        e = [tuple(1 if j == i else 0 for j in range(k)) for i in range(k)]
        images = [frozenset({e[0], e[1]})]
        images += [frozenset({e[i]}) for i in range(1, k)]
        return Substitution(tuple(images))

    @staticmethod
    def variable_collapse(k: int, i: int, targets) -> "Substitution":
        """Map P_k -> P_{k-1}: t_i -> sum of t_{l-1} over l in targets,
        t_h -> t_h (h < i) or t_{h-1} (h > i).  1-based indices."""
        kk = k - 1
        e = [tuple(1 if j == v else 0 for j in range(kk)) for v in range(kk)]
        images = []
        for h in range(1, k + 1):
            if h < i:
                images.append(frozenset({e[h - 1]}))
            elif h == i:
                images.append(frozenset(e[l - 2] for l in targets))
            else:
                images.append(frozenset({e[h - 2]}))
        return Substitution(tuple(images))


def apply_substitution(s: Substitution, f: Polynomial) -> Polynomial:
    out = set()
    for m in f:
        term = None
        for a, img in zip(m, s.images):
            factor = poly_pow(img, a)
            term = factor if term is None else poly_mul(term, factor)
        out ^= term
    return frozenset(out)


def phi(mono: Monomial):
    """Halving map: t^a -> t^{(a-1)/2} when every exponent is odd, else None."""
    if all(a & 1 for a in mono):
        return tuple((a - 1) >> 1 for a in mono)
    return None


def phi_poly(f: Polynomial) -> Polynomial:
    out = set()
    for m in f:
        y = phi(m)
        if y is not None:
            out ^= {y}
    return frozenset(out)


@lru_cache(maxsize=None)
def mu(n: int) -> int:
    """min{h : popcount(n+h) <= h}."""
    if n < 0:
        raise ValueError("mu is defined on non-negative integers")
    h = 0
    while (n + h).bit_count() > h:
        h += 1
    return h


def spike_degrees(n: int) -> tuple[int, ...]:
    """The unique (d_1 > ... > d_{r-1} >= d_r > 0) with n = sum(2^d_j - 1)
    and r = mu(n)."""
    r = mu(n)
    if n == 0:
        return ()
    found = []

    def rec(remaining: int, slots: int, bound: int, acc: list):
        if slots == 0:
            if remaining == 0:
                found.append(tuple(acc))
            return
        lo = 1
        for d in range(min(bound, remaining.bit_length() + 1), lo - 1, -1):
            val = (1 << d) - 1
            if val > remaining:
                continue
            # strict descent except the last pair may tie
            nxt = d if slots == 2 else d - 1
            acc.append(d)
            rec(remaining - val, slots - 1, nxt, acc)
            acc.pop()

    rec(n, r, n.bit_length() + 1, [])
    if len(found) != 1:
        raise ArithmeticError(f"spike decomposition of {n} not unique: {found}")
    return found[0]


def minimal_spike(k: int, n: int) -> Monomial:
    """The minimal spike of degree n in k variables."""
    r = mu(n)
    if r > k:
        raise ValueError(f"no spike of degree {n} in {k} variables (mu={r})")
    ds = spike_degrees(n)
    return tuple((1 << d) - 1 for d in ds) + (0,) * (k - r)


def monomials_of_degree(k: int, n: int):
    """All exponent tuples of length k summing to n (no particular order)."""
    if k == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in monomials_of_degree(k - 1, n - first):
            yield (first,) + rest


def mono_to_text(mono: Monomial) -> str:
    return " ".join(str(a) for a in mono)


def mono_from_text(line: str) -> Monomial:
    parts = line.split()
    if not parts:
        raise ValueError("empty monomial line")
    return tuple(int(p) for p in parts)


def poly_to_lines(f: Polynomial) -> list[str]:
    return [mono_to_text(m) for m in sorted(f, key=order_key)]


def poly_from_lines(lines) -> Polynomial:
    monos = []
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        monos.append(mono_from_text(line))
    return poly(*monos)
