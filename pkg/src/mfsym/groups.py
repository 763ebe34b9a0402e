"""C2-graded finite groups, ring actions, characters, 2-cocycles, twists.

Groups are explicit multiplication tables with a grading homomorphism to
{+1,-1}.  Actions assign one generalized ring automorphism per element;
the antilinear setting conjugates coefficients on odd elements, the
contravariant setting is k-linear throughout.  Characters and cocycles
take values in the units of the coefficient field, with the grading
acting by conjugation (antilinear) or inversion (contravariant) on odd
elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .scalars import Scalar
from .polys import Poly, RingSpec, RingMap, apply_ring_map
from .mf import MF, MFMor, Matrix, mat_apply, mf_new


ANTILINEAR = "antilinear"
CONTRAVARIANT = "contravariant"


@dataclass(frozen=True)
class GroupSpec:
    labels: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]  # table[i][j] = index of g_i * g_j
    identity: int
    grading: tuple[int, ...]  # +1 or -1 per element

    @property
    def order(self) -> int:
        return len(self.labels)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inv(self, i: int) -> int:
        for j in range(self.order):
            if self.mul(i, j) == self.identity:
                return j
        raise ValueError(f"no inverse for element {self.labels[i]}")

    def elements(self):
        return range(self.order)

    def odd_elements(self):
        return [i for i in self.elements() if self.grading[i] == -1]

    def kernel(self):
        return [i for i in self.elements() if self.grading[i] == 1]

    def validate(self) -> None:
        n = self.order
        e = self.identity
        for i in range(n):
            if self.mul(e, i) != i or self.mul(i, e) != i:
                raise ValueError(f"identity fails at {self.labels[i]}")
            self.inv(i)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.mul(self.mul(i, j), k) != self.mul(i, self.mul(j, k)):
                        raise ValueError(
                            f"associativity fails at ({self.labels[i]},{self.labels[j]},{self.labels[k]})"
                        )
        for i in range(n):
            for j in range(n):
                if self.grading[self.mul(i, j)] != self.grading[i] * self.grading[j]:
                    raise ValueError("grading is not a homomorphism")


def cyclic_group(n: int, graded: bool = False) -> GroupSpec:
    """C_n; with graded=True (n even) the generator is odd, so the grading is
    the surjection onto C2 with kernel the squares."""
    labels = tuple(f"g{k}" for k in range(n))
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    if graded:
        assert n % 2 == 0, "graded cyclic group needs even order"
        grading = tuple(-1 if k % 2 else 1 for k in range(n))
    else:
        grading = (1,) * n
    g = GroupSpec(labels, table, 0, grading)
    g.validate()
    return g


def dihedral_group(m: int) -> GroupSpec:
    """D_{2m} of order 2m: rotations r^k even, reflections s*r^k odd."""
    labels = tuple(f"r{k}" for k in range(m)) + tuple(f"s{k}" for k in range(m))

    def mul(i, j):
        ri, si = i % m, i >= m
        rj, sj = j % m, j >= m
        if not si and not sj:
            return (ri + rj) % m
        if not si and sj:
            return m + (rj - ri) % m
        if si and not sj:
            return m + (ri + rj) % m
        return (rj - ri) % m

    table = tuple(tuple(mul(i, j) for j in range(2 * m)) for i in range(2 * m))
    grading = (1,) * m + (-1,) * m
    g = GroupSpec(labels, table, 0, grading)
    g.validate()
    return g


def product_group(a: GroupSpec, b: GroupSpec) -> GroupSpec:
    """Direct product, graded by the product of the factor gradings."""
    pairs = list(iproduct(range(a.order), range(b.order)))
    index = {p: k for k, p in enumerate(pairs)}
    labels = tuple(f"{a.labels[i]}.{b.labels[j]}" for i, j in pairs)
    table = tuple(
        tuple(index[(a.mul(i1, i2), b.mul(j1, j2))] for (i2, j2) in pairs)
        for (i1, j1) in pairs
    )
    grading = tuple(a.grading[i] * b.grading[j] for i, j in pairs)
    g = GroupSpec(labels, table, index[(a.identity, b.identity)], grading)
    g.validate()
    return g


# ---------------------------------------------------------------------------
# actions

@dataclass(frozen=True)
class ActionSpec:
    group: GroupSpec
    setting: str  # ANTILINEAR or CONTRAVARIANT
    maps: tuple[RingMap, ...]  # one generalized automorphism per element

    def __post_init__(self):
        assert self.setting in (ANTILINEAR, CONTRAVARIANT)
        assert len(self.maps) == self.group.order

    def map_of(self, i: int) -> RingMap:
        return self.maps[i]

    @property
    def ring(self) -> RingSpec:
        return self.maps[self.group.identity].images[0].ring

    def check_homomorphism(self) -> tuple[int, int] | None:
        """Returns the first offending pair, or None if the assignment is a
        homomorphism (composition matches the table)."""
        g = self.group
        for i in g.elements():
            for j in g.elements():
                if not (self.maps[g.mul(i, j)] == self.maps[i].compose(self.maps[j])):
                    return (i, j)
        return None

    def check_flags(self) -> int | None:
        for i in self.group.elements():
            want = (self.group.grading[i] == -1) if self.setting == ANTILINEAR else False
            if self.maps[i].antilinear != want:
                return i
        return None

    def check_linear_images(self) -> int | None:
        """Variable images must be homogeneous of degree 1."""
        for i in self.group.elements():
            for img in self.maps[i].images:
                if img.is_zero() or any(sum(e) != 1 for e in img.terms):
                    return i
        return None


def diagonal_action(group: GroupSpec, ring: RingSpec, setting: str,
                    eigenvalues: dict[int, tuple[Scalar, ...]]) -> ActionSpec:
    """Action where each element scales each variable; eigenvalues maps the
    element index to a scalar per variable."""
    maps = []
    for i in group.elements():
        evs = eigenvalues[i]
        images = tuple(
            Poly.variable(ring, v) * c for v, c in zip(ring.variables, evs)
        )
        anti = (setting == ANTILINEAR and group.grading[i] == -1)
        maps.append(RingMap(images, anti))
    return ActionSpec(group, setting, tuple(maps))


@dataclass
class ActionReport:
    ok: bool
    homomorphism_failure: tuple[int, int] | None
    flag_failure: int | None
    nonlinear_element: int | None
    invariance: list[bool]

    def __bool__(self):
        return self.ok


def validate_action(a: ActionSpec, w: Poly) -> ActionReport:
    """Checks the homomorphism property and per-element (semi-)invariance of
    the potential: sigma(w) = w antilinearly, sigma(w) = pi(sigma) w in the
    contravariant setting."""
    hom = a.check_homomorphism()
    flags = a.check_flags()
    nonlin = a.check_linear_images()
    if hom is not None:
        raise ValueError(
            f"action is not a homomorphism at pair "
            f"({a.group.labels[hom[0]]},{a.group.labels[hom[1]]})"
        )
    invariance = []
    for i in a.group.elements():
        image = apply_ring_map(a.maps[i], w)
        if a.setting == ANTILINEAR:
            invariance.append(image == w)
        else:
            want = w if a.group.grading[i] == 1 else -w
            invariance.append(image == want)
    ok = flags is None and nonlin is None and all(invariance)
    return ActionReport(ok, hom, flags, nonlin, invariance)


# ---------------------------------------------------------------------------
# characters and cocycles

def _graded_act(setting: str, grading: int, c: Scalar) -> Scalar:
    """The action of a group element on a coefficient-field unit: odd elements
    conjugate (antilinear setting) or invert (contravariant setting)."""
    if grading == 1:
        return c
    if setting == ANTILINEAR:
        return c.conjugate()
    return c.inverse()


@dataclass(frozen=True)
class Char1:
    group: GroupSpec
    setting: str
    values: tuple[Scalar, ...]

    def value(self, i: int) -> Scalar:
        return self.values[i]

    def check(self) -> bool:
        g = self.group
        if not (self.values[g.identity] == 1):
            return False
        for i in g.elements():
            if self.values[i].is_zero():
                return False
            for j in g.elements():
                lhs = self.values[g.mul(i, j)]
                rhs = self.values[i] * _graded_act(self.setting, g.grading[i], self.values[j])
                if not (lhs == rhs):
                    return False
        return True

    @staticmethod
    def trivial(group: GroupSpec, setting: str) -> "Char1":
        return Char1(group, setting, (Scalar.one(),) * group.order)


@dataclass(frozen=True)
class Cocycle2:
    group: GroupSpec
    setting: str
    values: tuple[tuple[Scalar, ...], ...]  # values[i][j] = mu([g_i|g_j])

    def value(self, i: int, j: int) -> Scalar:
        return self.values[i][j]

    @staticmethod
    def trivial(group: GroupSpec, setting: str) -> "Cocycle2":
        one = Scalar.one()
        return Cocycle2(group, setting, tuple((one,) * group.order for _ in range(group.order)))

    def multiply(self, other: "Cocycle2") -> "Cocycle2":
        assert self.group is other.group or self.group == other.group
        vals = tuple(
            tuple(self.values[i][j] * other.values[i][j] for j in self.group.elements())
            for i in self.group.elements()
        )
        return Cocycle2(self.group, self.setting, vals)

    def is_trivial(self) -> bool:
        return all(
            self.values[i][j] == 1
            for i in self.group.elements() for j in self.group.elements()
        )


def cocycle_check(mu: Cocycle2) -> bool:
    """Normalization on pairs containing the identity, plus the twisted
    2-cocycle identity with the graded unit action."""
    g = mu.group
    e = g.identity
    for i in g.elements():
        if not (mu.value(e, i) == 1 and mu.value(i, e) == 1):
            return False
        for j in g.elements():
            if mu.value(i, j).is_zero():
                return False
    for i in g.elements():
        for j in g.elements():
            for k in g.elements():
                lhs = _graded_act(mu.setting, g.grading[i], mu.value(j, k)) * mu.value(i, g.mul(j, k))
                rhs = mu.value(g.mul(i, j), k) * mu.value(i, j)
                if not (lhs == rhs):
                    return False
    return True


def universal_sign_cocycle(group: GroupSpec, setting: str = CONTRAVARIANT) -> Cocycle2:
    """The pullback along the grading of the nontrivial C2 class: -1 exactly
    on pairs of odd elements."""
    minus = -Scalar.one()
    one = Scalar.one()
    vals = tuple(
        tuple(minus if (group.grading[i] == -1 and group.grading[j] == -1) else one
              for j in group.elements())
        for i in group.elements()
    )
    return Cocycle2(group, setting, vals)


# ---------------------------------------------------------------------------
# the twist functor

def twist_mf(rm: RingMap, M: MF) -> MF:
    """M^sigma: same ranks, entrywise image of the differential blocks, and
    potential sigma(w)."""
    return MF(M.ring, apply_ring_map(rm, M.w), mat_apply(rm, M.d0), mat_apply(rm, M.d1))


def twist_mor(rm: RingMap, f: MFMor) -> MFMor:
    return MFMor(twist_mf(rm, f.source), twist_mf(rm, f.target), f.parity,
                 mat_apply(rm, f.f0), mat_apply(rm, f.f1))
