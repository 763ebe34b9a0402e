"""Multivariate polynomials over cyclotomic scalars.

Terms are stored sparsely as a map from exponent tuples to nonzero
scalars.  A RingSpec fixes the variable list, a default coefficient
conductor, optional positive weights, and an optional truncation order
(0 means untruncated); when truncation is set, every operation drops
terms of total degree above it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .scalars import Scalar


@dataclass(frozen=True)
class RingSpec:
    variables: tuple[str, ...]
    conductor: int = 4
    weights: tuple[Fraction, ...] | None = None
    truncation: int = 0

    def __post_init__(self):
        assert len(set(self.variables)) == len(self.variables), "duplicate variable names"
        if self.weights is not None:
            assert len(self.weights) == len(self.variables)
            assert all(w > 0 for w in self.weights)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def with_truncation(self, order: int) -> "RingSpec":
        return RingSpec(self.variables, self.conductor, self.weights, order)

    def var_index(self, name: str) -> int:
        return self.variables.index(name)


def _normalize(ring: RingSpec, terms: dict) -> dict:
    out = {}
    for exp, c in terms.items():
        if isinstance(c, (int, Fraction)):
            c = Scalar.from_rational(c)
        if c.is_zero():
            continue
        assert len(exp) == ring.nvars
        if ring.truncation and sum(exp) > ring.truncation:
            continue
        out[tuple(exp)] = c
    return out


@dataclass(frozen=True)
class Poly:
    ring: RingSpec
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", _normalize(self.ring, self.terms))

    @staticmethod
    def zero(ring: RingSpec) -> "Poly":
        return Poly(ring, {})

    @staticmethod
    def constant(ring: RingSpec, c) -> "Poly":
        if isinstance(c, (int, Fraction)):
            c = Scalar.from_rational(c)
        return Poly(ring, {(0,) * ring.nvars: c})

    @staticmethod
    def variable(ring: RingSpec, name: str) -> "Poly":
        exp = [0] * ring.nvars
        exp[ring.var_index(name)] = 1
        return Poly(ring, {tuple(exp): Scalar.one()})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_coeff(self) -> Scalar:
        return self.terms.get((0,) * self.ring.nvars, Scalar.zero())

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Scalar)):
            other = Poly.constant(self.ring, Scalar.one() * other)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.ring.variables != other.ring.variables:
            return False
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[e] == other.terms[e] for e in self.terms)

    __hash__ = None

    def __add__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction, Scalar)):
            other = Poly.constant(self.ring, Scalar.one() * other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Scalar.zero()) + c
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction, Scalar)):
            other = Poly.constant(self.ring, Scalar.one() * other)
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction, Scalar)):
            return Poly(self.ring, {e: c * other for e, c in self.terms.items()})
        assert self.ring.variables == other.ring.variables
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if self.ring.truncation and sum(e) > self.ring.truncation:
                    continue
                prod = c1 * c2
                terms[e] = terms.get(e, Scalar.zero()) + prod
        return Poly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        assert n >= 0
        result = Poly.constant(self.ring, 1)
        for _ in range(n):
            result = result * self
        return result

    def conjugate_coeffs(self) -> "Poly":
        return Poly(self.ring, {e: c.conjugate() for e, c in self.terms.items()})

    def partial(self, idx: int) -> "Poly":
        terms = {}
        for e, c in self.terms.items():
            if e[idx] == 0:
                continue
            e2 = list(e)
            e2[idx] -= 1
            terms[tuple(e2)] = terms.get(tuple(e2), Scalar.zero()) + c * e[idx]
        return Poly(self.ring, terms)

    def weighted_degrees(self) -> set:
        weights = self.ring.weights or (Fraction(1),) * self.ring.nvars
        return {sum(w * k for w, k in zip(weights, e)) for e in self.terms}

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda t: (sum(t), t)):
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v
                for v, k in zip(self.ring.variables, e)
                if k
            )
            c = repr(self.terms[e])
            piece = f"({c})*{mono}" if mono else f"({c})"
            parts.append(piece)
        return " + ".join(parts)


@dataclass(frozen=True)
class RingMap:
    """A generalized ring endomorphism: one image per variable, and an
    antilinearity flag meaning coefficients are conjugated first."""

    images: tuple[Poly, ...]
    antilinear: bool = False

    def compose(self, other: "RingMap") -> "RingMap":
        """self after other (apply other first)."""
        new_images = tuple(apply_ring_map(self, img) for img in other.images)
        return RingMap(new_images, self.antilinear != other.antilinear)

    @staticmethod
    def identity(ring: RingSpec) -> "RingMap":
        return RingMap(tuple(Poly.variable(ring, v) for v in ring.variables))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingMap):
            return NotImplemented
        return self.antilinear == other.antilinear and all(
            a == b for a, b in zip(self.images, other.images)
        )

    __hash__ = None


def apply_ring_map(rm: RingMap, p: Poly) -> Poly:
    if len(rm.images) != p.ring.nvars:
        raise ValueError("variable count mismatch between map and polynomial")
    ring = rm.images[0].ring if rm.images else p.ring
    if rm.antilinear:
        p = p.conjugate_coeffs()
    result = Poly.zero(ring)
    for e, c in p.terms.items():
        term = Poly.constant(ring, c)
        for img, k in zip(rm.images, e):
            if k:
                term = term * img ** k
        result = result + term
    return result


def graded_component(p: Poly, d) -> Poly:
    if p.ring.weights is None:
        raise ValueError("ring has no weights")
    d = Fraction(d)
    weights = p.ring.weights
    terms = {
        e: c
        for e, c in p.terms.items()
        if sum(w * k for w, k in zip(weights, e)) == d
    }
    return Poly(p.ring, terms)


def _monomials_of_weighted_degree_upto(weights, bound):
    """All exponent tuples of weighted degree <= bound, grouped by degree."""
    n = len(weights)
    buckets: dict = {}

    def rec(idx, exp, deg):
        if idx == n:
            buckets.setdefault(deg, []).append(tuple(exp))
            return
        k = 0
        while deg + weights[idx] * k <= bound:
            exp.append(k)
            rec(idx + 1, exp, deg + weights[idx] * k)
            exp.pop()
            k += 1

    rec(0, [], Fraction(0))
    return buckets


def jacobi_basis(w: Poly):
    """Monomial basis of the quotient by all partials of w, plus socle degree.

    Requires w quasi-homogeneous for the ring weights (all-ones default) with
    a finite-dimensional quotient; per-degree rational linear algebra.
    """
    ring = w.ring
    weights = ring.weights or (Fraction(1),) * ring.nvars
    degs = w.weighted_degrees()
    if len(degs) != 1:
        raise ValueError("potential is not quasi-homogeneous for the ring weights")
    D = degs.pop()
    partials = [w.partial(i) for i in range(ring.nvars)]
    partials = [p for p in partials if not p.is_zero()]
    socle_bound = sum(D - 2 * wi for wi in weights)
    if socle_bound < 0:
        socle_bound = Fraction(0)
    ceiling = socle_bound + max(weights) + D
    buckets = _monomials_of_weighted_degree_upto(weights, ceiling)
    basis = []
    socle = Fraction(0)
    for d in sorted(buckets):
        monos = sorted(buckets[d])
        index = {m: j for j, m in enumerate(monos)}
        rows = []
        for p in partials:
            pdeg = next(iter(p.weighted_degrees()))
            shift = d - pdeg
            for m in buckets.get(shift, []):
                row = [Scalar.zero()] * len(monos)
                hit = True
                for e, c in p.terms.items():
                    tot = tuple(a + b for a, b in zip(e, m))
                    if tot not in index:
                        hit = False
                        break
                    row[index[tot]] = c
                if hit:
                    rows.append(row)
        pivots = _row_reduce_pivots(rows, len(monos))
        free = [monos[j] for j in range(len(monos)) if j not in pivots]
        if free:
            if d > socle_bound:
                raise ValueError("quotient by the partials is not finite-dimensional")
            basis.extend(free)
            socle = max(socle, d)
    return basis, socle


def _row_reduce_pivots(rows, width) -> set:
    """Gaussian elimination over the scalar field; returns pivot column set."""
    pivots: set = set()
    reduced: list = []
    for row in rows:
        row = list(row)
        for prow, pcol in reduced:
            c = row[pcol]
            if not c.is_zero():
                row = [a - c * b for a, b in zip(row, prow)]
        lead = next((j for j in range(width) if not row[j].is_zero()), None)
        if lead is None:
            continue
        inv = row[lead].inverse()
        row = [a * inv for a in row]
        reduced.append((row, lead))
        pivots.add(lead)
    return pivots
