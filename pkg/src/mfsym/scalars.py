"""Exact arithmetic in cyclotomic fields Q(zeta_m).

A scalar is a polynomial in zeta_m with rational coefficients, reduced
modulo the m-th cyclotomic polynomial, so equality is comparison of
coefficient lists.  Scalars of different conductors are promoted to the
lcm conductor before combining.  Conjugation is the field automorphism
zeta_m -> zeta_m^{-1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd


def euler_phi(m: int) -> int:
    result = m
    p = 2
    n = m
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Integer coefficients of the m-th cyclotomic polynomial, low degree first."""
    if m == 1:
        return (-1, 1)
    # divide x^m - 1 by the product of Phi_d over proper divisors d of m
    num = [0] * (m + 1)
    num[0] = -1
    num[m] = 1
    for d in range(1, m):
        if m % d == 0:
            num = _poly_divide_exact(num, list(cyclotomic_poly(d)))
    return tuple(num)


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c == 0:
            continue
        q, r = divmod(c, den[dd])
        assert r == 0
        quot[k - dd] = q
        for j in range(dd + 1):
            num[k - dd + j] -= q * den[j]
    assert all(c == 0 for c in num)
    return quot


def _reduce_mod_cyclotomic(coeffs: list[Fraction], m: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_poly(m)
    d = len(phi) - 1
    coeffs = list(coeffs)
    for k in range(len(coeffs) - 1, d - 1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        coeffs[k] = Fraction(0)
        for j in range(d):
            coeffs[k - d + j] -= c * phi[j]
    coeffs = coeffs[:d]
    coeffs += [Fraction(0)] * (d - len(coeffs))
    return tuple(coeffs)


@dataclass(frozen=True)
class Scalar:
    """An element of Q(zeta_m) in the reduced power basis."""

    conductor: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        assert len(self.coeffs) == euler_phi(self.conductor)

    @staticmethod
    def from_rational(q) -> "Scalar":
        return Scalar(1, (Fraction(q),))

    @staticmethod
    def zero() -> "Scalar":
        return Scalar.from_rational(0)

    @staticmethod
    def one() -> "Scalar":
        return Scalar.from_rational(1)

    @staticmethod
    def zeta(m: int, power: int = 1) -> "Scalar":
        power %= m
        coeffs = [Fraction(0)] * (power + 1)
        coeffs[power] = Fraction(1)
        return Scalar(m, _reduce_mod_cyclotomic(coeffs, m))

    @staticmethod
    def i() -> "Scalar":
        return Scalar.zeta(4)

    def promote(self, L: int) -> "Scalar":
        m = self.conductor
        if L == m:
            return self
        assert L % m == 0
        step = L // m
        raw = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1)
        for k, c in enumerate(self.coeffs):
            raw[k * step] += c
        return Scalar(L, _reduce_mod_cyclotomic(raw, L))

    def _common(self, other: "Scalar") -> tuple["Scalar", "Scalar"]:
        L = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        return self.promote(L), other.promote(L)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not rational: {self}")
        return self.coeffs[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar.from_rational(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        # equal scalars can live at different conductors, so only the
        # rational case gets a discriminating hash
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash("cyclotomic")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.from_rational(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        a, b = self._common(other)
        return Scalar(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.from_rational(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Scalar":
        return Scalar.from_rational(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.from_rational(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        a, b = self._common(other)
        n = len(a.coeffs)
        raw = [Fraction(0)] * (2 * n - 1)
        for j, cj in enumerate(a.coeffs):
            if cj == 0:
                continue
            for k, ck in enumerate(b.coeffs):
                if ck:
                    raw[j + k] += cj * ck
        return Scalar(a.conductor, _reduce_mod_cyclotomic(raw, a.conductor))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("scalar inverse of zero")
        m = self.conductor
        phi = [Fraction(c) for c in cyclotomic_poly(m)]
        inv = _poly_modular_inverse(list(self.coeffs), phi)
        return Scalar(m, _reduce_mod_cyclotomic(inv, m))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.from_rational(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "Scalar":
        return Scalar.from_rational(other) / self

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inverse() ** (-n)
        result = Scalar.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "Scalar":
        """The automorphism zeta_m -> zeta_m^{-1}; fixes the rationals."""
        m = self.conductor
        if m <= 2:
            return self
        raw = [Fraction(0)] * m
        for k, c in enumerate(self.coeffs):
            raw[(m - k) % m] += c
        return Scalar(m, _reduce_mod_cyclotomic(raw, m))

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*z{self.conductor}")
            else:
                parts.append(f"{c}*z{self.conductor}^{k}")
        return " + ".join(parts)


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    db = len(b) - 1
    lead = b[-1]
    for k in range(len(a) - 1, db - 1, -1):
        if a[k] == 0:
            continue
        c = a[k] / lead
        q[k - db] = c
        for j in range(db + 1):
            a[k - db + j] -= c * b[j]
    return _poly_trim(q), _poly_trim(a)


def _poly_sub_mul(s0: list[Fraction], q: list[Fraction], s1: list[Fraction]) -> list[Fraction]:
    """s0 - q*s1 in Q[t]."""
    size = max(len(s0), (len(q) + len(s1) - 1) if q and s1 else 0, 1)
    out = [Fraction(0)] * size
    for j, c in enumerate(s0):
        out[j] += c
    for j, cj in enumerate(q):
        if cj == 0:
            continue
        for k, ck in enumerate(s1):
            out[j + k] -= cj * ck
    return _poly_trim(out)


def _poly_modular_inverse(a: list[Fraction], mod: list[Fraction]) -> list[Fraction]:
    """Extended Euclid in Q[t]: inverse of a modulo the (irreducible) mod."""
    r0, r1 = _poly_trim([Fraction(c) for c in mod]), _poly_trim([Fraction(c) for c in a])
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub_mul(s0, q, s1)
    if len(r0) != 1:
        raise ZeroDivisionError("not invertible modulo the cyclotomic polynomial")
    unit = r0[0]
    return [c / unit for c in s0]
