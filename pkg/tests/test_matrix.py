"""Graded matrices: products, supertranspose, determinants, Berezinian."""

import itertools
import random
from fractions import Fraction

import pytest

from superweil.algebra import AlgebraMorphism, Signature
from superweil.errors import (
    BodyNotZero,
    GradingError,
    NotEven,
    NotInvertible,
    NotSquare,
    ShapeMismatch,
)
from superweil.matrix import (
    SuperMatrix,
    berezinian,
    body_matrix,
    det_even,
    exp_nilpotent,
    from_blocks,
    inv_even,
    is_invertible,
    morphism_map,
    smat_inv,
    supertranspose,
    supertrace,
)
from superweil import sampling

SIG = Signature(0, 4)
SHAPE = (2, 2)


def perm_det(sig, grid):
    """Leibniz determinant: sum over permutations with explicit sign.

    Independent of the Laplace code path; valid because even entries commute.
    """
    n = len(grid)
    total = sig.zero()
    for perm in itertools.permutations(range(n)):
        inversions = sum(
            1
            for i in range(n)
            for j in range(i + 1, n)
            if perm[i] > perm[j]
        )
        prod = sig.one()
        for i in range(n):
            prod = prod * grid[i][perm[i]]
        total = total + (-1) ** inversions * prod
    return total


def test_construction_checks_grading():
    one, t1 = SIG.one(), SIG.theta(1)
    with pytest.raises(GradingError):
        SuperMatrix(SIG, (1, 1), (1, 1), [[one, one], [one, one]])
    g = SuperMatrix(SIG, (1, 1), (1, 1), [[one, t1], [t1, one]])
    assert g.is_grading_valid()
    bad = SuperMatrix.unchecked(SIG, (1, 1), (1, 1), [[t1, one], [one, t1]])
    assert not bad.is_grading_valid()
    assert bad.grading_violation() == (0, 0)


def test_construction_checks_shape():
    with pytest.raises(ShapeMismatch):
        SuperMatrix(SIG, (1, 1), (1, 1), [[SIG.one()]])
    with pytest.raises(ShapeMismatch):
        SuperMatrix(SIG, (1, -2), (1, 0), [[SIG.one()]])


def test_identity_and_getitem():
    I = SuperMatrix.identity(SIG, SHAPE)
    assert I[0, 0] == SIG.one()
    assert I[0, 1].is_zero()
    assert I.total_rows == I.total_cols == 4
    assert I @ I == I


def test_int_entries_coerced():
    g = SuperMatrix(SIG, (2, 0), (2, 0), [[1, 2], [3, 4]])
    assert g[0, 1] == SIG.scalar(2)


def test_matrix_ring_laws():
    rng = random.Random(201)
    for _ in range(15):
        a = sampling.graded_matrix(SIG, SHAPE, SHAPE, rng)
        b = sampling.graded_matrix(SIG, SHAPE, SHAPE, rng)
        c = sampling.graded_matrix(SIG, SHAPE, SHAPE, rng)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a @ b) @ c == a @ (b @ c)
        assert a @ (b + c) == a @ b + a @ c
        assert (a - a).is_zero_matrix()
        I = SuperMatrix.identity(SIG, SHAPE)
        assert a @ I == a and I @ a == a


def test_product_preserves_grading():
    rng = random.Random(202)
    for _ in range(10):
        a = sampling.graded_matrix(SIG, SHAPE, (1, 2), rng)
        b = sampling.graded_matrix(SIG, (1, 2), (2, 1), rng)
        assert (a @ b).is_grading_valid()


def test_shape_mismatch_on_product():
    a = SuperMatrix.identity(SIG, (2, 1))
    b = SuperMatrix.identity(SIG, (1, 2))
    with pytest.raises(ShapeMismatch):
        a @ b


def test_blocks_roundtrip():
    rng = random.Random(203)
    g = sampling.graded_matrix(SIG, SHAPE, SHAPE, rng)
    p, q, r, s = g.blocks()
    assert from_blocks(p, q, r, s) == g
    assert p.row_shape == (2, 0) and s.col_shape == (0, 2)


def test_scale_even_only():
    rng = random.Random(204)
    g = sampling.graded_matrix(SIG, SHAPE, SHAPE, rng)
    assert g.scale(2) == g + g
    with pytest.raises(GradingError):
        g.scale(SIG.theta(1))


def test_supertranspose_hand_value():
    t1, t2 = SIG.theta(1), SIG.theta(2)
    g = SuperMatrix(SIG, (1, 1), (1, 1), [[SIG.scalar(2), t1], [t2, SIG.scalar(3)]])
    gst = supertranspose(g)
    assert gst[0, 0] == SIG.scalar(2)
    assert gst[0, 1] == t2
    assert gst[1, 0] == -t1
    assert gst[1, 1] == SIG.scalar(3)


def test_supertranspose_antihomomorphism():
    rng = random.Random(205)
    for _ in range(20):
        a = sampling.graded_matrix(SIG, SHAPE, SHAPE, rng)
        b = sampling.graded_matrix(SIG, SHAPE, SHAPE, rng)
        assert supertranspose(a @ b) == supertranspose(b) @ supertranspose(a)
        assert a.st().st().st().st() == a


def test_supertrace_vanishes_on_commutators():
    rng = random.Random(206)
    for _ in range(20):
        a = sampling.graded_matrix(SIG, SHAPE, SHAPE, rng)
        b = sampling.graded_matrix(SIG, SHAPE, SHAPE, rng)
        assert supertrace(a @ b) == supertrace(b @ a)
    assert supertrace(SuperMatrix.identity(SIG, SHAPE)) == SIG.zero()


def test_supertrace_of_st():
    rng = random.Random(207)
    for _ in range(10):
        a = sampling.graded_matrix(SIG, SHAPE, SHAPE, rng)
        assert supertrace(supertranspose(a)) == supertrace(a)


def test_det_even_matches_permutation_sum():
    rng = random.Random(208)
    sig = Signature(2, 4)
    for n in (1, 2, 3, 4):
        for _ in range(8):
            g = sampling.graded_matrix(sig, (n, 0), (n, 0), rng)
            assert det_even(g) == perm_det(sig, g.entries)


def test_det_even_multiplicative():
    rng = random.Random(209)
    for _ in range(15):
        a = sampling.graded_matrix(SIG, (3, 0), (3, 0), rng)
        b = sampling.graded_matrix(SIG, (3, 0), (3, 0), rng)
        assert det_even(a @ b) == det_even(a) * det_even(b)


def test_det_even_rejects_odd_entries():
    g = SuperMatrix.unchecked(SIG, (1, 0), (1, 0), [[SIG.theta(1)]])
    with pytest.raises(NotEven):
        det_even(g)
    with pytest.raises(NotSquare):
        det_even(SuperMatrix.zeros(SIG, (1, 0), (2, 0)))


def test_det_of_empty_matrix_is_one():
    g = SuperMatrix.zeros(SIG, (0, 0), (0, 0))
    assert det_even(g) == SIG.one()


def test_inv_even():
    rng = random.Random(210)
    for n in (1, 2, 3):
        for _ in range(8):
            g = sampling.graded_matrix(SIG, (n, 0), (n, 0), rng)
            if det_even(g).body() == 0:
                continue
            ginv = inv_even(g)
            I = SuperMatrix.identity(SIG, (n, 0))
            assert g @ ginv == I
            assert ginv @ g == I


def test_smat_inv_two_sided():
    rng = random.Random(211)
    I = SuperMatrix.identity(SIG, SHAPE)
    for _ in range(20):
        g = sampling.random_group_matrix(SIG, SHAPE, rng)
        ginv = smat_inv(g)
        assert g @ ginv == I
        assert ginv @ g == I


def test_invertibility_iff_body_blocks():
    rng = random.Random(212)
    from superweil.rational import rat_det

    for _ in range(60):
        g = sampling.graded_matrix(SIG, SHAPE, SHAPE, rng)
        p, _, _, s = g.blocks()
        ok = rat_det(body_matrix(p)) != 0 and rat_det(body_matrix(s)) != 0
        assert is_invertible(g) == ok
        if ok:
            assert g @ smat_inv(g) == SuperMatrix.identity(SIG, SHAPE)
        else:
            with pytest.raises(NotInvertible):
                smat_inv(g)


def test_berezinian_hand_value():
    # ber [[1+t1t2, 0], [0, 1-t1t2]] with shape (1|1):
    # det(p - q s^-1 r) = 1+t1t2, det(s)^-1 = 1+t1t2, product = 1+2t1t2
    tt = SIG.theta(1) * SIG.theta(2)
    g = SuperMatrix(SIG, (1, 1), (1, 1),
                    [[SIG.one() + tt, SIG.zero()], [SIG.zero(), SIG.one() - tt]])
    assert berezinian(g) == SIG.one() + 2 * tt


def test_berezinian_identity_and_diagonal():
    assert berezinian(SuperMatrix.identity(SIG, SHAPE)) == SIG.one()
    d = SuperMatrix.from_rational(
        SIG, (1, 1), (1, 1), [[Fraction(6), 0], [0, Fraction(2)]]
    )
    assert berezinian(d) == SIG.scalar(3)


def test_berezinian_multiplicative():
    rng = random.Random(213)
    for _ in range(25):
        a = sampling.random_group_matrix(SIG, SHAPE, rng)
        b = sampling.random_group_matrix(SIG, SHAPE, rng)
        assert berezinian(a @ b) == berezinian(a) * berezinian(b)


def test_berezinian_inverse():
    rng = random.Random(214)
    for _ in range(10):
        g = sampling.random_group_matrix(SIG, SHAPE, rng)
        assert berezinian(smat_inv(g)) == berezinian(g).inv()


def test_berezinian_alternative_formula():
    # ber(g) = det(p) * det(s - r p^-1 q)^-1, derived from the UDL
    # factorization instead of the LDU one
    rng = random.Random(215)
    for _ in range(25):
        g = sampling.random_group_matrix(SIG, SHAPE, rng)
        p, q, r, s = g.blocks()
        pinv = inv_even(p)
        alt = det_even(p) * det_even(s - r @ pinv @ q).inv()
        assert berezinian(g) == alt


def test_berezinian_purely_even_shape():
    rng = random.Random(216)
    for _ in range(5):
        g = sampling.graded_matrix(SIG, (3, 0), (3, 0), rng)
        assert berezinian(g) == det_even(g)


def test_berezinian_needs_invertible_blocks():
    z = SuperMatrix.zeros(SIG, SHAPE, SHAPE)
    with pytest.raises(NotInvertible):
        berezinian(z)


def test_exp_nilpotent():
    rng = random.Random(217)
    I = SuperMatrix.identity(SIG, SHAPE)
    for _ in range(15):
        X = sampling.graded_soul_matrix(SIG, SHAPE, rng)
        g = exp_nilpotent(X)
        assert g @ exp_nilpotent(-X) == I
    assert exp_nilpotent(SuperMatrix.zeros(SIG, SHAPE, SHAPE)) == I


def test_exp_rejects_nonzero_body():
    with pytest.raises(BodyNotZero):
        exp_nilpotent(SuperMatrix.identity(SIG, SHAPE))


def test_exp_berezinian_supertrace():
    # ber(exp X) = exp(str X) for body-free X
    rng = random.Random(218)
    for _ in range(15):
        X = sampling.graded_soul_matrix(SIG, SHAPE, rng)
        t = supertrace(X)
        exp_str = SIG.one()
        term = SIG.one()
        for k in range(1, SIG.even + SIG.odd + 1):
            term = term * t / k
            exp_str = exp_str + term
        assert berezinian(exp_nilpotent(X)) == exp_str


def test_morphism_map_is_multiplicative():
    rng = random.Random(219)
    phi = sampling.random_morphism(SIG, SIG, rng)
    for _ in range(10):
        a = sampling.graded_matrix(SIG, SHAPE, SHAPE, rng)
        b = sampling.graded_matrix(SIG, SHAPE, SHAPE, rng)
        assert morphism_map(phi, a @ b) == morphism_map(phi, a) @ morphism_map(phi, b)


def test_body_matrix():
    g = SuperMatrix(SIG, (1, 1), (1, 1),
                    [[SIG.scalar(2) + SIG.theta(1) * SIG.theta(2), SIG.theta(1)],
                     [SIG.theta(2), SIG.scalar(-3)]])
    assert body_matrix(g) == [[Fraction(2), Fraction(0)],
                              [Fraction(0), Fraction(-3)]]


def test_identity_morphism_map_is_identity():
    rng = random.Random(220)
    ident = AlgebraMorphism.identity(SIG)
    g = sampling.graded_matrix(SIG, SHAPE, SHAPE, rng)
    assert morphism_map(ident, g) == g
