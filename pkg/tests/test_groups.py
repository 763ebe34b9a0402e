"""Graded groups, actions, characters, and cocycles."""

import pytest

from mfsym.scalars import Scalar
from mfsym.polys import Poly, RingSpec, RingMap
from mfsym.groups import (
    cyclic_group, dihedral_group, product_group, ActionSpec, validate_action,
    Char1, Cocycle2, cocycle_check, universal_sign_cocycle,
    ANTILINEAR, CONTRAVARIANT, twist_mf, twist_mor,
)
from mfsym.mf import rank_one, identity_mor
import mfsym.catalog as catalog


def test_group_presets_validate():
    for g in (cyclic_group(2, graded=True), cyclic_group(4, graded=True),
              cyclic_group(3), dihedral_group(3), dihedral_group(4)):
        g.validate()


def test_gradings():
    g2 = cyclic_group(2, graded=True)
    assert g2.grading == (1, -1)
    assert g2.kernel() == [0]
    assert g2.odd_elements() == [1]
    g4 = cyclic_group(4, graded=True)
    assert g4.kernel() == [0, 2]
    d3 = dihedral_group(3)
    # reflections are the odd elements
    assert len(d3.odd_elements()) == 3


def test_product_group():
    g = product_group(cyclic_group(2, graded=True), cyclic_group(2))
    g.validate()
    assert g.order == 4
    assert g.grading == (1, 1, -1, -1)


def test_dihedral_multiplication():
    d3 = dihedral_group(3)
    # r s = s r^{-1}: with elements 0..2 rotations, 3..5 reflections
    r, s = 1, 3
    assert d3.mul(r, d3.mul(s, r)) == s


def test_validate_action_antilinear():
    ring = RingSpec(("u", "v"), conductor=4)
    u, v = Poly.variable(ring, "u"), Poly.variable(ring, "v")
    act = catalog.conjugation_action(ring)
    rep = validate_action(act, u * v)
    assert rep.ok
    bad = ActionSpec(act.group, ANTILINEAR,
                     (RingMap.identity(ring), RingMap((-u, v), True)))
    assert not validate_action(bad, u * v).ok
    nonhom = ActionSpec(act.group, ANTILINEAR,
                        (RingMap.identity(ring), RingMap((u, u), True)))
    with pytest.raises(ValueError):
        validate_action(nonhom, u * v)


def test_validate_action_contravariant_semi_invariance():
    ring = RingSpec(("u", "v"), conductor=4)
    u, v = Poly.variable(ring, "u"), Poly.variable(ring, "v")
    g = cyclic_group(2, graded=True)
    act = ActionSpec(g, CONTRAVARIANT,
                     (RingMap.identity(ring), RingMap((-u, v), False)))
    rep = validate_action(act, u * v)
    assert rep.ok
    # without the sign the odd element fails semi-invariance
    act2 = ActionSpec(g, CONTRAVARIANT,
                      (RingMap.identity(ring), RingMap((u, v), False)))
    assert not validate_action(act2, u * v).ok


def test_char_crossed_law():
    g = cyclic_group(4, graded=True)
    i = Scalar.i()
    # chi(r) = i works antilinearly: chi(r^2) = i * conj(i) = 1
    chi = Char1(g, ANTILINEAR, (Scalar.one(), i, Scalar.one(), i))
    assert chi.check()
    bad = Char1(g, ANTILINEAR, (Scalar.one(), i, -Scalar.one(), i))
    assert not bad.check()


def test_universal_sign_cocycle():
    for g in (cyclic_group(2, graded=True), cyclic_group(4, graded=True),
              dihedral_group(3)):
        for setting in (ANTILINEAR, CONTRAVARIANT):
            mu = universal_sign_cocycle(g, setting)
            assert cocycle_check(mu)
            odd = g.odd_elements()
            if odd:
                s = odd[0]
                assert mu.value(s, s) == -Scalar.one()


def test_twist_mf_and_mor():
    ring = RingSpec(("u", "v"), conductor=4)
    u, v = Poly.variable(ring, "u"), Poly.variable(ring, "v")
    M = rank_one(u, v)
    rm = RingMap((-u, -v), False)
    T = twist_mf(rm, M)
    assert T.d0[0][0] == -u
    assert T.w == u * v
    f = twist_mor(rm, identity_mor(M))
    assert f.f0[0][0] == Poly.constant(ring, 1)
