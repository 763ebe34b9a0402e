"""Named example factorizations, Real structures, and Clifford modules.

The catalogs back the verification suites: a spread of factorizations
over one and several variables (rank-one kernels, external tensor
products, Knoerrer images, bridge images of Clifford modules), Real
structures for the conjugation and dihedral actions, and the small
Clifford module list used for the bridge comparisons.
"""

from __future__ import annotations

from .scalars import Scalar
from .polys import Poly, RingSpec, RingMap
from .mf import MF, MFMor, mf_new, rank_one, external_tensor, knorrer_apply
from .groups import (
    GroupSpec, ActionSpec, ANTILINEAR, cyclic_group, dihedral_group,
    diagonal_action, twist_mf,
)
from .real import (
    RealStruct, verify_real_structure, rank_one_real_condition,
    tensor_real_structure, real_knorrer,
)
from .mf import identity_mor, compose, is_closed
from .clifford import (
    QuadForm, CliffAlg, CliffMod, smat, beh_phi, parity_shift, module_validate,
)


def _ring(names, conductor=1):
    return RingSpec(tuple(names), conductor=conductor)


def mf_catalog():
    """Named factorizations over assorted rings; every entry passes the
    exact twisted-differential identity by construction."""
    out = []

    Ruv = _ring(("u", "v"))
    u, v = Poly.variable(Ruv, "u"), Poly.variable(Ruv, "v")
    out.append(("hyperbolic-uv", rank_one(u, v)))

    Rx = _ring(("x",))
    x = Poly.variable(Rx, "x")
    out.append(("square-spinor", rank_one(x, x)))
    for n in range(2, 6):
        out.append((f"a-series-{n}", rank_one(x, x ** n)))
    w3 = x ** 3
    out.append(("trivial-w", rank_one(Poly.constant(Rx, 1), w3)))

    Rxy = _ring(("x", "y"), conductor=3)
    xx, yy = Poly.variable(Rxy, "x"), Poly.variable(Rxy, "y")
    out.append(("fermat-cubic-line", rank_one(xx + yy, xx * xx - xx * yy + yy * yy)))

    Ry = _ring(("y", "z"))
    yv, zv = Poly.variable(Ry, "y"), Poly.variable(Ry, "z")
    K = rank_one(yv, zv)
    out.append(("tensor-uv-yz", external_tensor(rank_one(u, v), K)))
    out.append(("knorrer-square", knorrer_apply(rank_one(x, x), K)))
    out.append(("knorrer-a2", knorrer_apply(rank_one(x, x * x), K)))
    Rst = _ring(("s", "t"), conductor=3)
    K2 = rank_one(Poly.variable(Rst, "s"), Poly.variable(Rst, "t"))
    out.append(("knorrer-cubic-line",
                knorrer_apply(rank_one(xx + yy, xx * xx - xx * yy + yy * yy), K2)))

    Rq1 = _ring(("x",))
    spin = spinor_module()
    out.append(("bridge-spinor", beh_phi(spin, Rq1)))
    Rq2 = _ring(("x", "y"), conductor=4)
    out.append(("bridge-pauli", beh_phi(pauli_module(), Rq2)))
    out.append(("bridge-pauli-shift", beh_phi(parity_shift(pauli_module()), Rq2)))
    out.append(("bridge-pauli-double", beh_phi(double_pauli_module(), Rq2)))

    return out


def an_rank_one(n: int, ring: RingSpec | None = None) -> MF:
    """The rank-one factorization {x, x^n} of the A-series potential."""
    if ring is None:
        ring = _ring(("x",))
    x = Poly.variable(ring, ring.variables[0])
    return rank_one(x, x ** n)


# ---------------------------------------------------------------------------
# Real structures

def conjugation_group() -> GroupSpec:
    return cyclic_group(2, graded=True)


def conjugation_action(ring: RingSpec, signs=None) -> ActionSpec:
    """The antilinear action whose odd generator conjugates coefficients
    and scales the variables by the given signs (default all +1)."""
    g = conjugation_group()
    if signs is None:
        signs = (1,) * ring.nvars
    eigen = {
        0: tuple(Scalar.one() for _ in signs),
        1: tuple(Scalar.from_rational(s) for s in signs),
    }
    return diagonal_action(g, ring, ANTILINEAR, eigen)


def search_scaled_structure(act: ActionSpec, base: MF, candidates=None):
    """Brute-force a Real structure whose components are scalar multiples
    of the identity blocks: the even-block scalar ranges over the
    candidate units, the odd-block scalar is forced by closedness, and
    the cocycle law is verified on all pairs.  Returns None on failure."""
    if candidates is None:
        L = max(act.ring.conductor, 4)
        candidates = tuple(Scalar.zeta(L, k) for k in range(L))
    g = act.group
    ring = base.ring

    def component(i, a):
        target = twist_mf(act.map_of(i), base)
        # closedness on the d0 block forces b; read it off the leading term
        # of the (0,0) entry, then let the closedness check confirm it
        lead = base.d0[0][0]
        tlead = target.d0[0][0] * a
        (e, c), = list(lead.terms.items())[:1]
        top = tlead.terms.get(e)
        if top is None:
            return None
        b = top * c.inverse()
        f0 = tuple(
            tuple(Poly.constant(ring, 1) * (a if r == c else Scalar.zero())
                  for c in range(base.r0)) for r in range(base.r0)
        )
        f1 = tuple(
            tuple(Poly.constant(ring, 1) * (b if r == c else Scalar.zero())
                  for c in range(base.r1)) for r in range(base.r1)
        )
        f = MFMor(base, target, 0, f0, f1)
        if not is_closed(f):
            return None
        return f

    options = []
    for i in g.elements():
        if i == g.identity:
            options.append([identity_mor(base)])
            continue
        opts = [f for a in candidates if (f := component(i, a)) is not None]
        if not opts:
            return None
        options.append(opts)

    def rec(i, chosen):
        if i == g.order:
            s = RealStruct(base, act, tuple(chosen))
            if verify_real_structure(s).ok:
                return s
            return None
        for f in options[i]:
            out = rec(i + 1, chosen + [f])
            if out is not None:
                return out
        return None

    return rec(0, [])


def dihedral_cubic_action(m: int = 3) -> ActionSpec:
    """The dihedral action on the Fermat potential x^m + y^m: rotations
    scale both variables by roots of unity, reflections conjugate."""
    g = dihedral_group(m)
    ring = _ring(("x", "y"), conductor=m)
    eigen = {}
    for i in g.elements():
        k = i % m
        if i < m:
            z = Scalar.zeta(m, k)
        else:
            # reflection s r^k composed as conjugation after the rotation
            z = Scalar.zeta(m, (-k) % m)
        eigen[i] = (z, z)
    return diagonal_action(g, ring, ANTILINEAR, eigen)


def real_catalog():
    """Named Real structures over the conjugation and dihedral groups."""
    out = []

    Rx = _ring(("x",))
    x = Poly.variable(Rx, "x")
    base = rank_one(x, x)
    act = conjugation_action(Rx)
    s_spin = RealStruct(base, act, (identity_mor(base),
                                    _identity_components(base, act, 1)))
    out.append(("conjugation-spinor", s_spin))

    Ruv = _ring(("u", "v"))
    act_uv = conjugation_action(Ruv, signs=(-1, -1))
    found = rank_one_real_condition(act_uv)
    assert found is not None
    out.append(("conjugation-hyperbolic", found[1]))

    out.append(("conjugation-knorrer-spinor", real_knorrer(s_spin)))
    out.append(("conjugation-tensor", tensor_real_structure(s_spin, found[1])))

    act_d = dihedral_cubic_action(3)
    Rxy = act_d.ring
    xx, yy = Poly.variable(Rxy, "x"), Poly.variable(Rxy, "y")
    base_d = rank_one(xx + yy, xx * xx - xx * yy + yy * yy)
    s_d = search_scaled_structure(act_d, base_d)
    assert s_d is not None
    out.append(("dihedral-cubic-line", s_d))
    out.append(("dihedral-knorrer", real_knorrer(s_d)))

    return out


def _identity_components(base: MF, act: ActionSpec, i: int) -> MFMor:
    target = twist_mf(act.map_of(i), base)
    ring = base.ring
    one = Poly.constant(ring, 1)
    zero = Poly.zero(ring)
    f0 = tuple(tuple(one if r == c else zero for c in range(base.r0))
               for r in range(base.r0))
    f1 = tuple(tuple(one if r == c else zero for c in range(base.r1))
               for r in range(base.r1))
    return MFMor(base, target, 0, f0, f1)


# ---------------------------------------------------------------------------
# Clifford modules

def spinor_module() -> CliffMod:
    alg = CliffAlg(QuadForm.diagonal([1]))
    return CliffMod(alg, (1, 1), ((smat([[1]]), smat([[1]])),))


def pauli_module() -> CliffMod:
    i = Scalar.i()
    alg = CliffAlg(QuadForm.diagonal([1, 1]))
    return CliffMod(alg, (1, 1), (
        (smat([[1]]), smat([[1]])),
        (smat([[i]]), smat([[-i]])),
    ))


def double_pauli_module() -> CliffMod:
    """The direct sum of two copies of the Pauli module; dims (2, 2)."""
    i = Scalar.i()
    z = Scalar.zero()
    alg = CliffAlg(QuadForm.diagonal([1, 1]))
    return CliffMod(alg, (2, 2), (
        (smat([[1, z], [z, 1]]), smat([[1, z], [z, 1]])),
        (smat([[i, z], [z, i]]), smat([[-i, z], [z, -i]])),
    ))


def clifford_module_catalog():
    """Named graded modules for forms of dimension at most two."""
    spin = spinor_module()
    pauli = pauli_module()
    entries = [
        ("spinor", spin),
        ("spinor-shift", parity_shift(spin)),
        ("pauli", pauli),
        ("pauli-shift", parity_shift(pauli)),
        ("pauli-double", double_pauli_module()),
    ]
    for name, m in entries:
        assert not module_validate(m), name
    return entries


def clifford_ring_for(m: CliffMod) -> RingSpec:
    n = m.alg.quad.dimension
    names = ("x", "y", "z", "t")[:n]
    return _ring(names, conductor=4 if n > 1 else 1)
