import random

import pytest

from hitkit import gf2, hitq
from hitkit.poly import (
    minimal_spike,
    monomials_of_degree,
    mu,
    poly,
    sq,
    weight_vector,
)


def full_span_hit_oracle(k, n):
    """Hit space spanned by Sq^i images for every i >= 1, not only the
    2-power generators.  Independent of the production path."""
    ctx = hitq.context(k, n)
    acc = gf2._Echelonizer(ctx.ncols, "rightmost")
    for i in range(1, n + 1):
        for m in monomials_of_degree(k, n - i):
            image = sq(i, poly(m))
            if image:
                acc.insert(gf2.from_bits(ctx.index[t] for t in image))
    return acc.finish()


# ----------------------------------------------------------- hit space

def test_one_variable_hit_iff_not_spike_degree():
    for n in range(1, 65):
        dim = hitq.qp_basis(1, n).dim
        assert dim == (1 if (n + 1) & n == 0 else 0), n


def test_generator_squares_span_the_full_hit_space():
    for k in (1, 2, 3):
        for n in range(0, 13):
            b = hitq.qp_basis(k, n)
            oracle = full_span_hit_oracle(k, n)
            assert b.hit.rank == oracle.rank, (k, n)
            assert set(b.hit.pivots) == set(oracle.pivots)


def test_qp6_low_degrees():
    assert hitq.qp_basis(6, 6).dim == 190
    assert hitq.qp_basis(6, 7).dim == 301


def test_degree_zero_is_one_dimensional():
    b = hitq.qp_basis(4, 0)
    assert b.dim == 1 and b.admissibles == ((0, 0, 0, 0),)


def test_admissibles_never_lead_hit_elements():
    rng = random.Random(11)
    b = hitq.qp_basis(3, 9)
    adm_cols = {b.ctx.index[m] for m in b.admissibles}
    for _ in range(30):
        h = 0
        for row in b.hit.rows:
            if rng.random() < 0.4:
                h ^= row
        if h:
            assert h.bit_length() - 1 not in adm_cols


def test_class_of_kills_exactly_the_hit_space():
    rng = random.Random(12)
    b = hitq.qp_basis(3, 8)
    for _ in range(20):
        h = 0
        for row in b.hit.rows:
            if rng.random() < 0.4:
                h ^= row
        monos = [b.ctx.monomials[c] for c in gf2.bits_of(h)]
        assert b.is_hit(monos)
    assert not b.is_hit([b.admissibles[0]])


# ------------------------------------------------------ weight filtration

def test_weight_space_against_subspace_arithmetic():
    """Block counting equals the literal Def-2.2 quotient computed with
    generic subspace sum/intersection."""
    for (k, n) in [(2, 6), (3, 7), (3, 8), (4, 7)]:
        b = hitq.qp_basis(k, n)
        ctx = b.ctx
        for omega, (start, end) in ctx.weight_blocks.items():
            prefix = gf2.echelon(
                gf2.Gf2Matrix(tuple(1 << c for c in range(end)), ctx.ncols))
            lower = gf2.echelon(
                gf2.Gf2Matrix(tuple(1 << c for c in range(start)), ctx.ncols))
            hit_cap = gf2.subspace_intersection(b.hit, prefix)
            dead = gf2.subspace_sum(hit_cap, lower)
            expect = prefix.rank - dead.rank
            assert hitq.weight_space_dim(b, omega) == expect, (k, n, omega)


def test_weight_dims_at_6_17():
    b = hitq.qp_basis(6, 17)
    dims = {
        (3, 1, 1, 1): 546,
        (3, 1, 3): 84,
        (3, 3, 2): 1491,
        (3, 5, 1): 70,
        (5, 2, 2): 560,
        (5, 4, 1): 384,
    }
    for omega, d in dims.items():
        assert hitq.weight_space_dim(b, omega) == d
    assert sum(dims.values()) == b.dim == 3135


def test_weight_space_positive_part_five_variables():
    b = hitq.qp_basis(5, 17)
    assert hitq.positive_weight_dim(b, (3, 1, 1, 1)) == 21


def test_weight_space_rejects_wrong_degree():
    b = hitq.qp_basis(3, 7)
    with pytest.raises(ValueError):
        hitq.weight_space(b, (1, 1))


def test_weight_decomposition_consistency():
    assert hitq.weight_decomposition_check(hitq.qp_basis(1, 11))
    for n in range(0, 13):
        assert hitq.weight_decomposition_check(hitq.qp_basis(3, n)), n


def test_zero_part_formula_inputs_and_536():
    omega = (3, 1, 1, 1)
    lower = {j: hitq.positive_weight_dim(hitq.qp_basis(j, 17), omega)
             for j in (3, 4, 5)}
    assert lower == {3: 7, 4: 18, 5: 21}
    assert hitq.zero_part_dim_formula(6, omega, lower) == 536
    assert hitq.zero_part_dim_formula(6, omega, {3: 0, 4: 0, 5: 0}) == 0
    with pytest.raises(ValueError):
        hitq.zero_part_dim_formula(6, omega, {3: 7, 4: 18})
    b = hitq.qp_basis(6, 17)
    _, reps = hitq.weight_space(b, omega)
    assert sum(1 for m in reps if 0 in m) == 536


def test_split_zero_positive():
    b = hitq.qp_basis(6, 17)
    zero, positive = hitq.split_zero_positive(b)
    assert len(zero) + len(positive) == b.dim
    spike = minimal_spike(2, 7) + (0,) * 0
    b2 = hitq.qp_basis(2, 7)
    z2, _ = hitq.split_zero_positive(b2)
    assert (7, 0) in z2
    for n in range(0, 21):
        bb = hitq.qp_basis(4, n)
        z, p = hitq.split_zero_positive(bb)
        assert len(z) + len(p) == bb.dim


def test_ten_positive_admissibles_at_weight_3111():
    b = hitq.qp_basis(6, 17)
    _, reps = hitq.weight_space(b, (3, 1, 1, 1))
    positive = sorted(m for m in reps if all(a > 0 for a in m))
    assert len(positive) == 10
    # every positive representative uses exponents {1,1,1,2,4,8}
    assert all(sorted(m) == [1, 1, 1, 2, 4, 8] for m in positive)
    # the uncorrupted printed entries of the source list
    for m in [(1, 1, 1, 2, 4, 8), (1, 1, 2, 1, 4, 8), (1, 2, 1, 1, 4, 8)]:
        assert m in positive


# ------------------------------------------------------------- spike test

def test_spike_filter_sound_and_sharp():
    z = minimal_spike(6, 17)
    assert not hitq.spike_filter_hit(z)
    b = hitq.qp_basis(6, 17)
    wz = weight_vector(z)
    low = [m for m in b.ctx.monomials if weight_vector(m) < wz][:200]
    for m in low:
        assert hitq.spike_filter_hit(m)
        assert b.is_hit([m])


def test_spike_filter_soundness_k4():
    for n in range(1, 25):
        if mu(n) > 4:
            continue
        b = hitq.qp_basis(4, n)
        for m in b.ctx.monomials:
            if hitq.spike_filter_hit(m):
                assert b.is_hit([m]), (n, m)


def test_wood_vanishing():
    for k in (1, 2, 3, 4):
        for n in range(0, 31):
            if mu(n) > k:
                assert hitq.qp_basis(k, n).dim == 0, (k, n)


# ----------------------------------------------------------------- Kameko

def test_kameko_definition_unfolding():
    src = hitq.qp_basis(4, 8)
    dst = hitq.qp_basis(4, 2)
    km = hitq.kameko(src, dst)
    j = src.admissibles.index((3, 3, 1, 1))
    assert km.columns[j] == dst.class_of([(1, 1, 0, 0)])
    # any monomial with an even exponent maps to zero
    for i, m in enumerate(src.admissibles):
        if any(a % 2 == 0 for a in m):
            assert km.columns[i] == 0


def test_kameko_rank_and_kernel_at_6_6():
    km = hitq.kameko(hitq.qp_basis(6, 6), hitq.qp_basis(6, 0))
    assert km.rank == 1
    assert km.kernel().rank == 189


def test_kameko_surjective_and_iso_iff_mu_equals_k():
    for n in range(4, 31, 2):
        src = hitq.qp_basis(4, n)
        dst = hitq.qp_basis(4, (n - 4) // 2)
        km = hitq.kameko(src, dst)
        assert km.surjective, n
        if mu(n) == 4:
            assert km.kernel().rank == 0, n
        else:
            assert km.kernel().rank == src.dim - dst.dim, n


def test_variable_collapse_separates_positive_classes_at_6_17():
    """The three collapse maps P_6 -> P_5 sending t_1 to t_2, t_1 and t_3
    (then shifting the rest down) are jointly injective on the ten
    positive weight-(3,1,1,1) classes; this is the linear-independence
    step behind the dimension 10 and pins the collapse convention."""
    from hitkit.poly import Substitution, apply_substitution

    b6 = hitq.qp_basis(6, 17)
    b5 = hitq.qp_basis(5, 17)
    omega = (3, 1, 1, 1)
    _, reps6 = hitq.weight_space(b6, omega)
    ten = sorted(m for m in reps6 if all(a > 0 for a in m))
    block5 = [i for i, m in enumerate(b5.admissibles)
              if weight_vector(m) == omega]
    pos5 = {p: j for j, p in enumerate(block5)}

    def project(coords):
        out = 0
        for c in gf2.bits_of(coords):
            j = pos5.get(c)
            if j is not None:
                out |= 1 << j
        return out

    rows = []
    for m in ten:
        stacked = 0
        for li, targets in enumerate([(3,), (2,), (4,)]):
            p = Substitution.variable_collapse(6, 1, targets)
            coords = b5.class_of(apply_substitution(p, poly(m)))
            stacked |= project(coords) << (li * len(block5))
        rows.append(stacked)
    assert gf2.rank(gf2.Gf2Matrix(tuple(rows), 3 * len(block5))) == 10


def test_kameko_parity_mismatch():
    with pytest.raises(ValueError):
        hitq.kameko(hitq.qp_basis(4, 9), hitq.qp_basis(4, 2))
    with pytest.raises(ValueError):
        hitq.kameko(hitq.qp_basis(4, 8), hitq.qp_basis(4, 3))
