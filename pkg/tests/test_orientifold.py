"""Orientifold (contravariant equivariant) structures, dualities on fixed
points, and the contravariant Knoerrer step."""

import pytest

from mfsym.scalars import Scalar
from mfsym.polys import Poly, RingSpec, RingMap
from mfsym.groups import (
    cyclic_group, product_group, ActionSpec, CONTRAVARIANT,
    universal_sign_cocycle,
)
from mfsym.mf import rank_one, identity_mor, compose, is_closed
from mfsym.orientifold import (
    PLAIN, SHIFTED, ContraRep, ContraRealStruct, rank_one_contra_condition,
    verify_contra_structure, theta_component, theta_cocycle_check,
    fixed_point_duality, duality_comparison, comparison_torsor_check,
    verify_duality, orientifold_knorrer, double_knorrer,
    hyperbolic_transport_check, eta_component, _extend_rep,
)
from mfsym.mf import dual, dual_mor, double_dual_iso
import mfsym.catalog as catalog


RING = RingSpec(("u", "v"), conductor=4)
U = Poly.variable(RING, "u")
V = Poly.variable(RING, "v")
W = U * V


def c2_shifted_rep():
    g = cyclic_group(2, graded=True)
    act = ActionSpec(g, CONTRAVARIANT,
                     (RingMap.identity(RING), RingMap((-U, V), False)))
    return ContraRep(g, act, W, SHIFTED, universal_sign_cocycle(g))


def c4_plain_rep():
    g = cyclic_group(4, graded=True)
    act = ActionSpec(g, CONTRAVARIANT, (
        RingMap.identity(RING), RingMap((-V, U), False),
        RingMap((-U, -V), False), RingMap((V, -U), False)))
    return ContraRep(g, act, W, PLAIN)


def c2xc2_shifted_rep():
    g = product_group(cyclic_group(2, graded=True), cyclic_group(2))
    act = ActionSpec(g, CONTRAVARIANT, (
        RingMap.identity(RING), RingMap.identity(RING),
        RingMap((-U, V), False), RingMap((-U, V), False)))
    return ContraRep(g, act, W, SHIFTED, universal_sign_cocycle(g))


def witness(rep):
    found = rank_one_contra_condition(rep)
    assert found is not None
    return found[1]


def test_terminal_shifted_witness_needs_sign_twist():
    rep = c2_shifted_rep()
    assert rank_one_contra_condition(rep) is not None
    untwisted = ContraRep(rep.group, rep.action, rep.w, SHIFTED, None)
    assert rank_one_contra_condition(untwisted) is None


def test_order_four_plain_witness():
    rep = c4_plain_rep()
    s = witness(rep)
    assert verify_contra_structure(s).ok
    assert s.base.ranks == (1, 1)


def test_theta_cocycle_law():
    for rep in (c2_shifted_rep(), c4_plain_rep(), c2xc2_shifted_rep()):
        s = witness(rep)
        assert theta_cocycle_check(rep, s.base)


def test_theta_components_are_closed():
    rep = c4_plain_rep()
    s = witness(rep)
    g = rep.group
    for i in g.elements():
        for j in g.elements():
            assert is_closed(theta_component(rep, i, j, s.base))


def test_duality_laws_both_groups_both_ranks():
    for rep in (c4_plain_rep(), c2xc2_shifted_rep()):
        s = witness(rep)
        k, coherent = orientifold_knorrer(s)
        assert coherent and verify_contra_structure(k).ok
        for struct in (s, k):
            r = struct.rep
            g = r.group
            sub = ContraRealStruct(struct.base, r,
                                   {i: struct.u[i] for i in g.kernel()})
            for sigma in g.odd_elements():
                _, rep_out = fixed_point_duality(r, sigma, sub)
                assert rep_out.object_law
                assert rep_out.morphism_law
                assert rep_out.coherence
            odd = g.odd_elements()
            for s1 in odd:
                for s2 in odd:
                    _, form = duality_comparison(r, s1, s2, struct)
                    assert form.fixed_morphism
                    assert form.coherence
            assert comparison_torsor_check(r, struct)


def test_generic_duality_on_catalog():
    objects = [M for _, M in catalog.mf_catalog()]
    assert verify_duality(objects, dual, dual_mor, double_dual_iso)


def test_eta_display_rank_one():
    rep = c2_shifted_rep()
    s = witness(rep)
    ext, _ = _extend_rep(rep, "y", "z")
    from mfsym.mf import external_tensor
    yz = RingSpec(("y", "z"), conductor=4)
    K = rank_one(Poly.variable(yz, "y"), Poly.variable(yz, "z"))
    sigma = rep.group.odd_elements()[0]
    eta = eta_component(rep, ext, K, sigma, s.base)
    ring = eta.source.ring
    one = Poly.constant(ring, 1)
    zero = Poly.zero(ring)
    assert eta.f0 == ((zero, one), (-one, zero))
    assert eta.f1 == ((zero, one), (one, zero))
    ident = eta_component(rep, ext, K, rep.group.identity, s.base)
    assert ident.f0 == ((one, zero), (zero, one))


def test_knorrer_flips_variant():
    for rep in (c2_shifted_rep(), c4_plain_rep()):
        s = witness(rep)
        out, coherent = orientifold_knorrer(s)
        assert coherent
        assert out.rep.variant != s.rep.variant
        assert verify_contra_structure(out).ok


def test_double_knorrer_restores_variant():
    for rep in (c2_shifted_rep(), c4_plain_rep(), c2xc2_shifted_rep()):
        s = witness(rep)
        out, coherent = double_knorrer(s)
        assert coherent
        assert out.rep.variant == s.rep.variant
        assert out.base.ranks == (4, 4)
        assert verify_contra_structure(out).ok


def test_hyperbolic_transport():
    assert hyperbolic_transport_check()
