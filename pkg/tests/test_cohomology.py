"""Hom complex cohomology over truncated rings."""

from mfsym.scalars import Scalar
from mfsym.polys import Poly, RingSpec
from mfsym.mf import (
    rank_one, mf_new, identity_mor, MFMor, hom_diff, diff_mor,
)
from mfsym.cohomology import (
    hom_cohomology, null_homotopy, default_cutoff, knorrer_hom_preservation,
)
import mfsym.catalog as catalog


def test_hyperbolic_pair_dims():
    ring = RingSpec(("u", "v"))
    u, v = Poly.variable(ring, "u"), Poly.variable(ring, "v")
    M = rank_one(u, v)
    rep = hom_cohomology(M, M, 3)
    assert rep.dims == (1, 0)
    assert rep.stable


def test_spinor_dims():
    ring = RingSpec(("x",))
    x = Poly.variable(ring, "x")
    M = rank_one(x, x)
    rep = hom_cohomology(M, M, 3)
    assert rep.dims == (1, 1)
    assert rep.stable


def test_trivial_factorization_contractible():
    ring = RingSpec(("x",))
    x = Poly.variable(ring, "x")
    w = x ** 2
    M = mf_new(ring, w, ((Poly.constant(ring, 1),),), ((w,),))
    rep = hom_cohomology(M, M, default_cutoff(w))
    assert rep.dims == (0, 0)
    assert rep.stable


def test_a_series_dims():
    # End of {x, x^k} inside w = x^n has H0 = H1 = min(k, n - k)
    for n, k, want in ((4, 1, 1), (4, 2, 2), (5, 2, 2), (6, 3, 3)):
        ring = RingSpec(("x",))
        x = Poly.variable(ring, "x")
        M = rank_one(x ** k, x ** (n - k))
        rep = hom_cohomology(M, M, default_cutoff(x ** n))
        assert rep.dims == (want, want), (n, k)
        assert rep.stable


def test_null_homotopy_of_potential_scale():
    for name, M in catalog.mf_catalog()[:6]:
        f = identity_mor(M)
        scaled = MFMor(M, M, 0,
                       tuple(tuple(p * M.w for p in row) for row in f.f0),
                       tuple(tuple(p * M.w for p in row) for row in f.f1))
        cutoff = default_cutoff(M.w)
        h = null_homotopy(scaled, cutoff)
        assert h is not None, name
        back = hom_diff(h)
        for blk_h, blk_f in ((back.f0, scaled.f0), (back.f1, scaled.f1)):
            for row_h, row_f in zip(blk_h, blk_f):
                for ph, pf in zip(row_h, row_f):
                    # compare within the truncation window
                    trunc = {e: c for e, c in pf.terms.items()
                             if sum(e) <= cutoff}
                    assert ph.terms == trunc


def test_half_differential_is_exact_witness():
    half = Scalar.from_rational(1) / Scalar.from_rational(2)
    for name, M in catalog.mf_catalog():
        d = diff_mor(M)
        h = MFMor(M, M, 1,
                  tuple(tuple(p * half for p in row) for row in d.f0),
                  tuple(tuple(p * half for p in row) for row in d.f1))
        target = hom_diff(h)
        ident = identity_mor(M)
        assert target.f0 == tuple(tuple(p * M.w for p in row)
                                  for row in ident.f0), name
        assert target.f1 == tuple(tuple(p * M.w for p in row)
                                  for row in ident.f1), name


def test_identity_is_not_null_homotopic():
    ring = RingSpec(("x",))
    x = Poly.variable(ring, "x")
    M = rank_one(x, x)
    assert null_homotopy(identity_mor(M), 4) is None


def test_knorrer_preserves_hom_dims():
    ryz = RingSpec(("y", "z"))
    K = rank_one(Poly.variable(ryz, "y"), Poly.variable(ryz, "z"))
    # the n = 4 pairs run in the acceptance gate; keep the unit test quick
    for n in (2, 3):
        ring = RingSpec(("x",))
        x = Poly.variable(ring, "x")
        for k in range(1, n):
            for j in range(k, n):
                M = rank_one(x ** k, x ** (n - k))
                N = rank_one(x ** j, x ** (n - j))
                cutoff = default_cutoff(x ** n)
                left, right, same = knorrer_hom_preservation(M, N, K, cutoff)
                assert same, (n, k, j)
                assert left.stable and right.stable
