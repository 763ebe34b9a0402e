"""Matrix factorizations, sign conventions, and structural isomorphisms."""

import random

import pytest

from mfsym.scalars import Scalar
from mfsym.polys import Poly, RingSpec
from mfsym.mf import (
    MF, MFMor, MFError, mf_new, rank_one, identity_mor, zero_mor, compose,
    diff_mor, hom_diff, is_closed, is_isomorphism, mor_inverse, shift,
    shift_mor, dual, dual_mor, double_dual_iso, grading_iso, external_tensor,
    external_tensor_mor, swap_iso, shift_tensor_iso_left,
    shift_tensor_iso_right, tensor_dual_pairing, knorrer_apply,
    mat_mul, mat_identity, mat_det, mat_inverse, mat_eq, join_rings, lift_poly,
)
import mfsym.catalog as catalog


RNG = random.Random(20240824)


def random_mor(M, N, parity):
    ring = M.ring
    shapes = ([(N.r0, M.r0), (N.r1, M.r1)] if parity == 0
              else [(N.r1, M.r0), (N.r0, M.r1)])
    blocks = []
    for rows, cols in shapes:
        blk = []
        for r in range(rows):
            row = []
            for c in range(cols):
                terms = {}
                for _ in range(2):
                    e = tuple(RNG.randrange(0, 2) for _ in range(ring.nvars))
                    terms[e] = Scalar.from_rational(RNG.randrange(-3, 4))
                row.append(Poly(ring, terms))
            blk.append(tuple(row))
        blocks.append(tuple(blk))
    return MFMor(M, N, parity, blocks[0], blocks[1])


def test_mf_new_rejects_bad_factorization():
    ring = RingSpec(("u", "v"))
    u, v = Poly.variable(ring, "u"), Poly.variable(ring, "v")
    with pytest.raises(MFError):
        mf_new(ring, u * v, ((u,),), ((u,),))


def test_catalog_twisted_differentials():
    cat = catalog.mf_catalog()
    assert len(cat) >= 15
    for name, M in cat:
        ring = M.ring
        want0 = tuple(tuple(M.w if r == c else Poly.zero(ring)
                            for c in range(M.r0)) for r in range(M.r0))
        want1 = tuple(tuple(M.w if r == c else Poly.zero(ring)
                            for c in range(M.r1)) for r in range(M.r1))
        assert mat_eq(mat_mul(M.d1, M.d0), want0), name
        assert mat_eq(mat_mul(M.d0, M.d1), want1), name


def test_hom_diff_squares_to_zero():
    cat = catalog.mf_catalog()
    for _ in range(40):
        _, M = cat[RNG.randrange(len(cat))]
        f = random_mor(M, M, RNG.randrange(2))
        dd = hom_diff(hom_diff(f))
        assert all(p.is_zero() for blk in (dd.f0, dd.f1) for row in blk
                   for p in row)


def test_diff_mor_squares_to_potential():
    for _, M in catalog.mf_catalog():
        d = diff_mor(M)
        sq = compose(d, d)
        ident = identity_mor(M)
        assert sq.f0 == tuple(tuple(p * M.w for p in row) for row in ident.f0)
        assert sq.f1 == tuple(tuple(p * M.w for p in row) for row in ident.f1)


def test_shift_involution_and_dual():
    for _, M in catalog.mf_catalog():
        assert shift(shift(M)) == M
        assert dual(dual(M)).w == M.w
        f = random_mor(M, M, RNG.randrange(2))
        assert shift_mor(shift_mor(f)) == f


def test_dual_dg_functoriality():
    cat = catalog.mf_catalog()
    for _ in range(20):
        _, M = cat[RNG.randrange(len(cat))]
        f = random_mor(M, M, RNG.randrange(2))
        assert hom_diff(dual_mor(f)) == dual_mor(hom_diff(f))
        g = random_mor(M, M, RNG.randrange(2))
        lhs = dual_mor(compose(f, g))
        rhs = compose(dual_mor(g), dual_mor(f))
        if f.parity * g.parity:
            rhs = rhs.scale(-Scalar.one())
        assert lhs == rhs


def test_double_dual_and_grading_isos():
    for _, M in catalog.mf_catalog():
        for iso in (double_dual_iso(M), grading_iso(M)):
            assert is_closed(iso)
            assert is_isomorphism(iso)


def test_mor_inverse_round_trip():
    for _, M in catalog.mf_catalog()[:4]:
        j = grading_iso(M)
        inv = mor_inverse(j)
        assert compose(inv, j) == identity_mor(j.source)


def test_external_tensor_potentials_add():
    Ruv = RingSpec(("u", "v"))
    Ryz = RingSpec(("y", "z"))
    A = rank_one(Poly.variable(Ruv, "u"), Poly.variable(Ruv, "v"))
    B = rank_one(Poly.variable(Ryz, "y"), Poly.variable(Ryz, "z"))
    T = external_tensor(A, B)
    joined = join_rings(Ruv, Ryz)
    assert T.w == lift_poly(A.w, joined) + lift_poly(B.w, joined)
    assert T.ranks == (2, 2)


def test_external_tensor_mor_functorial():
    Ruv = RingSpec(("u", "v"))
    Ryz = RingSpec(("y", "z"))
    A = rank_one(Poly.variable(Ruv, "u"), Poly.variable(Ruv, "v"))
    B = rank_one(Poly.variable(Ryz, "y"), Poly.variable(Ryz, "z"))
    f = random_mor(A, A, 0)
    g = random_mor(B, B, 0)
    lhs = external_tensor_mor(compose(f, f), compose(g, g))
    rhs = compose(external_tensor_mor(f, g), external_tensor_mor(f, g))
    assert lhs == rhs


def test_tensor_structure_isos():
    Ruv = RingSpec(("u", "v"))
    Ryz = RingSpec(("y", "z"))
    A = rank_one(Poly.variable(Ruv, "u"), Poly.variable(Ruv, "v"))
    B = rank_one(Poly.variable(Ryz, "y"), Poly.variable(Ryz, "z"))
    for iso in (swap_iso(A, B), shift_tensor_iso_left(A, B),
                shift_tensor_iso_right(A, B), tensor_dual_pairing(A, B)):
        assert is_closed(iso)
        assert is_isomorphism(iso)


def test_knorrer_apply_shapes():
    Rx = RingSpec(("x",))
    x = Poly.variable(Rx, "x")
    M = rank_one(x, x)
    Ryz = RingSpec(("y", "z"))
    K = rank_one(Poly.variable(Ryz, "y"), Poly.variable(Ryz, "z"))
    MK = knorrer_apply(M, K)
    assert MK.ranks == (2, 2)
    assert MK.ring.nvars == 3


def test_matrix_det_and_inverse_constant():
    ring = RingSpec(("x",), conductor=4)
    i = Scalar.i()
    rows = ((Poly.constant(ring, 1), Poly.constant(ring, i)),
            (Poly.constant(ring, 0), Poly.constant(ring, 2)))
    det = mat_det(rows)
    assert det == Poly.constant(ring, 2)
    inv = mat_inverse(rows)
    assert mat_eq(mat_mul(rows, inv), mat_identity(ring, 2))
