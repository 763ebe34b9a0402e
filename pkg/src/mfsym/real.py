"""Antilinear homotopy fixed points on matrix factorizations.

A Real structure is a family of closed degree-0 isomorphisms u_sigma
from the base to its sigma-twist satisfying the (optionally cocycle
twisted) law u_{ts} = mu([t|s]) * (u_s)^t . u_t, with u_e the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import Scalar, euler_phi
from .polys import Poly, RingSpec, RingMap, apply_ring_map
from .mf import (
    MF, MFMor, rank_one, identity_mor, compose, is_closed, is_isomorphism,
    external_tensor, external_tensor_mor, lift_poly, join_rings, mf_new,
)
from .groups import (
    ActionSpec, ActionReport, Char1, Cocycle2, GroupSpec, ANTILINEAR,
    diagonal_action, twist_mf, twist_mor, validate_action,
)
from .linalg import sparse_nullspace, sparse_rank
from .polys import jacobi_basis


@dataclass(frozen=True)
class RealStruct:
    base: MF
    action: ActionSpec
    u: tuple[MFMor, ...]  # per group element: base -> twist(sigma, base)
    twist: Cocycle2 | None = None

    @property
    def group(self) -> GroupSpec:
        return self.action.group

    def twist_value(self, i: int, j: int) -> Scalar:
        if self.twist is None:
            return Scalar.one()
        return self.twist.value(i, j)


@dataclass
class RealReport:
    ok: bool
    problems: list

    def __bool__(self):
        return self.ok


def verify_real_structure(s: RealStruct) -> RealReport:
    problems = []
    g = s.group
    act = s.action
    if act.setting != ANTILINEAR:
        problems.append("action is not in the antilinear setting")
    rep = validate_action(act, s.base.w)
    if not rep.ok:
        problems.append(f"action fails invariance: {rep.invariance}")
    if not (s.u[g.identity] == identity_mor(s.base)):
        problems.append("u_e is not the identity")
    for i in g.elements():
        ui = s.u[i]
        if ui.parity != 0:
            problems.append(f"u_{g.labels[i]} is not even")
            continue
        target = twist_mf(act.map_of(i), s.base)
        check = MFMor(s.base, target, 0, ui.f0, ui.f1)
        if not is_closed(check):
            problems.append(f"u_{g.labels[i]} does not commute with the differentials")
        if not is_isomorphism(check):
            problems.append(f"u_{g.labels[i]} is not invertible")
    for i in g.elements():
        for j in g.elements():
            lhs = s.u[g.mul(i, j)]
            rhs = compose(twist_mor(act.map_of(i), s.u[j]), s.u[i]).scale(s.twist_value(i, j))
            if not (lhs == rhs):
                problems.append(
                    f"cocycle law fails at ({g.labels[i]},{g.labels[j]})"
                )
    return RealReport(not problems, problems)


def rank_one_real_condition(act: ActionSpec):
    """For an antilinear action on a two-variable ring with w = u*v: returns
    (chi, witness RealStruct) when every sigma scales the first variable by
    chi(sigma) and the second by its inverse, else None."""
    ring = act.ring
    assert ring.nvars == 2
    uvar = Poly.variable(ring, ring.variables[0])
    vvar = Poly.variable(ring, ring.variables[1])
    g = act.group
    values = []
    for i in g.elements():
        iu, iv = act.map_of(i).images
        cu = _scalar_multiple_of(iu, uvar)
        cv = _scalar_multiple_of(iv, vvar)
        if cu is None or cv is None or not (cv == cu.inverse()):
            return None
        values.append(cu)
    chi = Char1(g, ANTILINEAR, tuple(values))
    if not chi.check():
        return None
    base = rank_one(uvar, vvar)
    struct = RealStruct(base, act, tuple(
        _scaled_identity_components(base, act, i, Scalar.one(), chi.value(i))
        for i in g.elements()
    ))
    report = verify_real_structure(struct)
    assert report.ok, report.problems
    return chi, struct


def _scalar_multiple_of(p: Poly, var: Poly):
    """The scalar c with p = c*var, or None."""
    if len(p.terms) != 1:
        return None
    (e, c), = p.terms.items()
    (ev, _), = var.terms.items()
    if e != ev:
        return None
    return c


def _scaled_identity_components(base: MF, act: ActionSpec, i: int, c0: Scalar, c1: Scalar) -> MFMor:
    ring = base.ring
    target = twist_mf(act.map_of(i), base)
    f0 = tuple(
        tuple(Poly.constant(ring, c0 if r == s else 0) for s in range(base.r0))
        for r in range(base.r0)
    )
    f1 = tuple(
        tuple(Poly.constant(ring, c1 if r == s else 0) for s in range(base.r1))
        for r in range(base.r1)
    )
    return MFMor(base, target, 0, f0, f1)


def join_actions(a: ActionSpec, b: ActionSpec) -> ActionSpec:
    """Combine actions of the same group on disjoint variable sets."""
    assert a.group == b.group and a.setting == b.setting
    ring = join_rings(a.ring, b.ring)
    maps = []
    for i in a.group.elements():
        ma, mb = a.map_of(i), b.map_of(i)
        assert ma.antilinear == mb.antilinear
        images = tuple(lift_poly(p, ring) for p in ma.images) + tuple(
            lift_poly(p, ring) for p in mb.images
        )
        maps.append(RingMap(images, ma.antilinear))
    return ActionSpec(a.group, a.setting, tuple(maps))


def tensor_real_structure(sM: RealStruct, sN: RealStruct) -> RealStruct:
    """The induced structure on the external tensor, components u x u'."""
    act = join_actions(sM.action, sN.action)
    base = external_tensor(sM.base, sN.base)
    comps = []
    for i in act.group.elements():
        t = external_tensor_mor(sM.u[i], sN.u[i])
        # the tensor of the twists equals the twist of the tensor on the nose
        comps.append(MFMor(base, twist_mf(act.map_of(i), base), 0, t.f0, t.f1))
    twist = None
    if sM.twist is not None or sN.twist is not None:
        ta = sM.twist or Cocycle2.trivial(act.group, ANTILINEAR)
        tb = sN.twist or Cocycle2.trivial(act.group, ANTILINEAR)
        twist = ta.multiply(tb)
        if twist.is_trivial():
            twist = None
    return RealStruct(base, act, tuple(comps), twist)


def fresh_variable_pair(taken, stems=("y", "z")) -> tuple[str, str]:
    if stems[0] not in taken and stems[1] not in taken:
        return stems
    k = 1
    while True:
        cand = (f"{stems[0]}{k}", f"{stems[1]}{k}")
        if cand[0] not in taken and cand[1] not in taken:
            return cand
        k += 1


def knorrer_action(group: GroupSpec, ring: RingSpec, chi: Char1 | None,
                   setting: str = ANTILINEAR) -> ActionSpec:
    """Extend a group action to the hyperbolic kernel variables: sigma scales
    the first variable by pi(sigma)*chi(sigma) and the second by the inverse."""
    eigen = {}
    for i in group.elements():
        c = Scalar.from_rational(group.grading[i])
        if chi is not None:
            c = c * chi.value(i)
        eigen[i] = (c, c.inverse())
    return diagonal_action(group, ring, setting, eigen)


def real_knorrer(sM: RealStruct, chi: Char1 | None = None) -> RealStruct:
    """Tensor with the rank-one hyperbolic kernel in fresh variables, with the
    action extended so odd elements negate (and chi scales) the first new
    variable; returns the induced verified structure."""
    g = sM.group
    names = fresh_variable_pair(set(sM.base.ring.variables), ("u", "v"))
    kring = RingSpec(names, sM.base.ring.conductor)
    kact = knorrer_action(g, kring, chi)
    found = rank_one_real_condition(kact)
    if found is None:
        raise ValueError("extended action does not satisfy the rank-one condition")
    _, skernel = found
    result = tensor_real_structure(sM, skernel)
    report = verify_real_structure(result)
    if not report.ok:
        raise ValueError(f"induced structure failed verification: {report.problems}")
    return result


# ---------------------------------------------------------------------------
# fixed morphism spaces

@dataclass
class FixedMorSpace:
    source: RealStruct
    target: RealStruct
    parity: int
    cutoff: int
    basis: list  # of MFMor

    @property
    def dimension(self) -> int:
        return len(self.basis)


def default_chain_cutoff(w: Poly) -> int:
    """Entry-degree bound for chain-level searches: socle degree + 1."""
    _, socle = jacobi_basis(w)
    return int(socle) + 1


def fixed_hom(s: RealStruct, sp: RealStruct, parity: int, cutoff: int | None = None) -> FixedMorSpace:
    """Q-basis of chain-level morphisms f with u'_sigma . f = f^sigma . u_sigma
    for all sigma, entries of total degree <= cutoff."""
    assert s.group == sp.group
    M, N = s.base, sp.base
    ring = M.ring
    if cutoff is None:
        cutoff = default_chain_cutoff(M.w)
    L = _field_conductor(s, sp)
    phi = euler_phi(L)
    monomials = _monomials_up_to(ring.nvars, cutoff)
    # unknown slots: (block, row, col, monomial index, field basis index)
    shapes = _mor_shapes(M, N, parity)
    slots = []
    for b, (rows, cols) in enumerate(shapes):
        for r in range(rows):
            for c in range(cols):
                for mi in range(len(monomials)):
                    for t in range(phi):
                        slots.append((b, r, c, mi, t))
    index = {slot: k for k, slot in enumerate(slots)}
    nvar = len(slots)
    act = s.action
    g = s.group
    constraints = []
    coords = _CoordIndexer(L)
    # build constraint columns by pushing each elementary morphism through
    columns = []
    for slot in slots:
        f = _elementary_mor(M, N, parity, shapes, monomials, L, slot)
        col = {}
        for i in g.elements():
            if i == g.identity:
                continue
            resid = compose(sp.u[i], f) - compose(twist_mor(act.map_of(i), f), s.u[i])
            _collect_residual(col, i, resid, coords)
        columns.append(col)
    rowkeys = sorted({k for col in columns for k in col})
    rows = []
    for key in rowkeys:
        row = {}
        for j, col in enumerate(columns):
            v = col.get(key)
            if v is not None and v != 0:
                row[j] = v
        if row:
            rows.append(row)
    basis_vecs = sparse_nullspace(rows, nvar, Fraction(0), Fraction(1))
    basis = []
    for vec in basis_vecs:
        basis.append(_assemble_mor(M, N, parity, shapes, monomials, L, slots, vec))
    return FixedMorSpace(s, sp, parity, cutoff, basis)


def closed_dimension(space: FixedMorSpace) -> int:
    """Dimension over Q of the closed morphisms inside the fixed space,
    computed as the kernel of D restricted to the returned basis."""
    from .mf import hom_diff

    L = _field_conductor(space.source, space.target)
    coords = _CoordIndexer(L)
    rows = []
    for k, f in enumerate(space.basis):
        col = {}
        _collect_residual(col, 0, hom_diff(f), coords)
        rows.append(col)
    # rank of the matrix with columns D(b_k); transpose to coordinate rows
    keys = {}
    cols = [dict() for _ in space.basis]
    for k, col in enumerate(rows):
        for key, v in col.items():
            idx = keys.setdefault(key, len(keys))
            cols[k][idx] = v
    transposed = {}
    for k, col in enumerate(cols):
        for idx, v in col.items():
            transposed.setdefault(idx, {})[k] = v
    rank = sparse_rank(list(transposed.values()))
    return len(space.basis) - rank


def _field_conductor(*structs) -> int:
    from math import gcd
    L = 1
    for s in structs:
        for i in s.group.elements():
            for img in s.action.map_of(i).images:
                for c in img.terms.values():
                    L = L * c.conductor // gcd(L, c.conductor)
            for blk in (s.u[i].f0, s.u[i].f1):
                for row in blk:
                    for p in row:
                        for c in p.terms.values():
                            L = L * c.conductor // gcd(L, c.conductor)
        L = L * s.base.ring.conductor // gcd(L, s.base.ring.conductor)
    return L


def _monomials_up_to(nvars: int, cutoff: int):
    monos = []

    def rec(idx, exp, total):
        if idx == nvars:
            monos.append(tuple(exp))
            return
        for k in range(cutoff - total + 1):
            exp.append(k)
            rec(idx + 1, exp, total + k)
            exp.pop()

    rec(0, [], 0)
    return monos


def _mor_shapes(M: MF, N: MF, parity: int):
    if parity == 0:
        return [(N.r0, M.r0), (N.r1, M.r1)]
    return [(N.r1, M.r0), (N.r0, M.r1)]


def _elementary_mor(M, N, parity, shapes, monomials, L, slot) -> MFMor:
    b, r, c, mi, t = slot
    ring = M.ring
    coeff = Scalar(L, tuple(
        Fraction(1) if k == t else Fraction(0) for k in range(euler_phi(L))
    ))
    blocks = []
    for bb, (rows, cols) in enumerate(shapes):
        entries = [[Poly.zero(ring) for _ in range(cols)] for _ in range(rows)]
        if bb == b:
            entries[r][c] = Poly(ring, {monomials[mi]: coeff})
        blocks.append(tuple(tuple(row) for row in entries))
    return MFMor(M, N, parity, blocks[0], blocks[1])


def _assemble_mor(M, N, parity, shapes, monomials, L, slots, vec) -> MFMor:
    ring = M.ring
    phi = euler_phi(L)
    blocks = []
    for bb, (rows, cols) in enumerate(shapes):
        entries = [[{} for _ in range(cols)] for _ in range(rows)]
        blocks.append(entries)
    for slot, val in zip(slots, vec):
        if val == 0:
            continue
        b, r, c, mi, t = slot
        terms = blocks[b][r][c]
        key = monomials[mi]
        cur = terms.get(key)
        coeffs = list(cur.coeffs) if cur is not None else [Fraction(0)] * phi
        coeffs[t] += val
        terms[key] = Scalar(L, tuple(coeffs))
    mats = []
    for bb, (rows, cols) in enumerate(shapes):
        mats.append(tuple(
            tuple(Poly(ring, blocks[bb][r][c]) for c in range(cols))
            for r in range(rows)
        ))
    return MFMor(M, N, parity, mats[0], mats[1])


class _CoordIndexer:
    def __init__(self, L):
        self.L = L


def _collect_residual(col: dict, tag: int, resid: MFMor, coords: _CoordIndexer):
    L = coords.L
    for b, blk in enumerate((resid.f0, resid.f1)):
        for r, row in enumerate(blk):
            for c, p in enumerate(row):
                for e, s in p.terms.items():
                    s = s.promote(L)
                    for t, q in enumerate(s.coeffs):
                        if q != 0:
                            col[(tag, b, r, c, e, t)] = q
