"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are stored in canonical form: a coefficient vector of length
phi(N) over the power basis 1, zeta, ..., zeta^(phi(N)-1) of
Q[x]/(Phi_N(x)).  Canonical form makes equality a componentwise
comparison.  All values are immutable; the Phi_N tables are write-once
caches shared across threads.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache, reduce

import mpmath

from .errors import IncompatibleConductorError, InvalidConductorError

Zero = Fraction(0)
One = Fraction(1)


def euler_phi(n: int) -> int:
    if n < 1:
        raise InvalidConductorError(f"conductor must be >= 1, got {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    # Exact division of integer polynomials (ascending coefficients),
    # denominator monic up to sign of its leading coefficient.
    num = list(num)
    dd = len(den) - 1
    lead = den[-1]
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        q, r = divmod(c, lead)
        if r:
            raise ArithmeticError("non-exact polynomial division")
        out[i - dd] = q
        for j, cj in enumerate(den):
            num[i - dd + j] -= q * cj
    if any(num):
        raise ArithmeticError("non-zero remainder in exact division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, ascending, monic."""
    if n < 1:
        raise InvalidConductorError(f"conductor must be >= 1, got {n}")
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in divisors(n):
        if d < n:
            num = _poly_div_exact(num, list(cyclotomic_poly(d)))
    return tuple(num)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """x^j mod Phi_n for 0 <= j < max(n, 2*phi(n)-1), as integer rows."""
    phi = euler_phi(n)
    poly = cyclotomic_poly(n)
    limit = max(n, 2 * phi - 1)
    rows: list[tuple[int, ...]] = []
    for j in range(phi):
        row = [0] * phi
        row[j] = 1
        rows.append(tuple(row))
    for j in range(phi, limit):
        prev = rows[j - 1]
        c = prev[phi - 1]
        row = [-c * poly[0]] + [prev[t - 1] - c * poly[t] for t in range(1, phi)]
        rows.append(tuple(row))
    return tuple(rows)


class CycNum:
    """An element of Q(zeta_N) in canonical power-basis form."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        if conductor < 1:
            raise InvalidConductorError(f"conductor must be >= 1, got {conductor}")
        phi = euler_phi(conductor)
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != phi:
            raise ValueError(
                f"need {phi} coefficients for conductor {conductor}, got {len(coeffs)}"
            )
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("CycNum is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def rational(q) -> "CycNum":
        return CycNum(1, (Fraction(q),))

    @staticmethod
    def from_vector(conductor: int, vec) -> "CycNum":
        """Build from a coefficient vector over 1, zeta, ..., zeta^(len-1),
        reducing exponents mod conductor and then mod Phi."""
        phi = euler_phi(conductor)
        table = _power_table(conductor)
        acc = [Zero] * phi
        for j, c in enumerate(vec):
            c = Fraction(c)
            if c == 0:
                continue
            row = table[j % conductor]
            for t in range(phi):
                if row[t]:
                    acc[t] += c * row[t]
        return CycNum(conductor, acc)

    # -- basic structure ---------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def is_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def as_int(self) -> int:
        f = self.as_fraction()
        if f.denominator != 1:
            raise ValueError(f"{self!r} is not an integer")
        return f.numerator

    # -- conductor management ----------------------------------------------

    def lift(self, target: int) -> "CycNum":
        """Represent the same field element in Q(zeta_target)."""
        if target == self.conductor:
            return self
        if target % self.conductor:
            raise IncompatibleConductorError(
                f"{self.conductor} does not divide {target}"
            )
        step = target // self.conductor
        vec = [Zero] * target
        for t, c in enumerate(self.coeffs):
            vec[t * step] = c
        return CycNum.from_vector(target, vec)

    def _pair(self, other: "CycNum"):
        if self.conductor == other.conductor:
            return self, other
        m = math.lcm(self.conductor, other.conductor)
        return self.lift(m), other.lift(m)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycNum):
            return other
        if isinstance(other, (int, Fraction)):
            return CycNum.rational(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._pair(other)
        return CycNum(a.conductor, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._pair(other)
        n = a.conductor
        phi = len(a.coeffs)
        prod = [Zero] * (2 * phi - 1)
        for i, x in enumerate(a.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(b.coeffs):
                if y != 0:
                    prod[i + j] += x * y
        table = _power_table(n)
        acc = list(prod[:phi])
        for j in range(phi, 2 * phi - 1):
            c = prod[j]
            if c == 0:
                continue
            row = table[j]
            for t in range(phi):
                if row[t]:
                    acc[t] += c * row[t]
        return CycNum(n, acc)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("division by zero CycNum")
        if self.is_rational():
            return CycNum.rational(1 / self.coeffs[0])
        n = self.conductor
        phi_poly = [Fraction(c) for c in cyclotomic_poly(n)]
        a = list(self.coeffs)
        # extended euclid: s*a + t*phi = gcd (a constant, since Phi_n is
        # irreducible and a != 0 mod Phi_n)
        r0, r1 = phi_poly, a
        s0, s1 = [Zero], [One]

        def _deg(p):
            for i in range(len(p) - 1, -1, -1):
                if p[i] != 0:
                    return i
            return -1

        def _sub_scaled(p, q, c, shift):
            out = list(p)
            while len(out) < len(q) + shift:
                out.append(Zero)
            for i, qc in enumerate(q):
                if qc != 0:
                    out[i + shift] -= c * qc
            return out

        while _deg(r1) > 0:
            d0, d1 = _deg(r0), _deg(r1)
            if d0 < d1:
                r0, r1, s0, s1 = r1, r0, s1, s0
                continue
            c = r0[_deg(r0)] / r1[d1]
            shift = d0 - d1
            r0 = _sub_scaled(r0, r1, c, shift)
            s0 = _sub_scaled(s0, s1, c, shift)
        if _deg(r1) != 0:
            raise ZeroDivisionError("element is a zero divisor (unexpected)")
        g = r1[0]
        inv_coeffs = [c / g for c in s1]
        return CycNum.from_vector(n, inv_coeffs)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = CycNum.rational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def conj(self) -> "CycNum":
        """Image under zeta_N -> zeta_N^(-1)."""
        n = self.conductor
        vec = [Zero] * n
        for t, c in enumerate(self.coeffs):
            vec[(n - t) % n] += c
        return CycNum.from_vector(n, vec)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    __hash__ = None  # cross-conductor equality makes hashing a trap

    def __repr__(self):
        terms = []
        for t, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if t == 0:
                terms.append(str(c))
            else:
                terms.append(f"{c}*z{self.conductor}^{t}")
        return "CycNum(" + (" + ".join(terms) if terms else "0") + ")"

    # -- numeric embedding -------------------------------------------------

    def embed(self, bits: int = 53):
        """Canonical embedding zeta_N -> exp(2*pi*i/N).

        Diagnostic channel only; never used for exact decisions.  Per-step
        error is bounded by 2^(1-bits) relative to the working precision.
        """
        if bits < 53:
            raise ValueError("bits must be >= 53")
        with mpmath.workprec(bits):
            z = mpmath.exp(2j * mpmath.pi / self.conductor)
            acc = mpmath.mpc(0)
            for c in reversed(self.coeffs):
                acc = acc * z + mpmath.mpf(c.numerator) / c.denominator
        return acc

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "conductor": self.conductor,
            "coeffs": [
                str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
                for c in self.coeffs
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "CycNum":
        return CycNum(data["conductor"], [Fraction(s) for s in data["coeffs"]])


def cyc_root(conductor: int, k: int) -> CycNum:
    """Canonical form of zeta_N^k."""
    if conductor < 1:
        raise InvalidConductorError(f"conductor must be >= 1, got {conductor}")
    k %= conductor
    vec = [Zero] * conductor
    vec[k] = One
    return CycNum.from_vector(conductor, vec)


def lift_conductor(a: CycNum, target: int) -> CycNum:
    return a.lift(target)


def embed_complex(a: CycNum, bits: int = 53):
    return a.embed(bits)


ZETA4 = cyc_root(4, 1)


def i_power(k: int) -> CycNum:
    """i^k as an exact CycNum of conductor 4."""
    return cyc_root(4, k % 4)


@lru_cache(maxsize=None)
def sqrt_e(e: int, target_conductor: int | None = None) -> CycNum:
    """The positive square root of e, as the exact Gauss-sum constant

        sqrt(e) = zeta_24^(3(e-1)) * sum_{k=0}^{e-1} zeta_{2e}^(k^2 + e*k).

    Positivity of the embedding is covered by the test suite once per e.
    """
    if e < 1:
        raise InvalidConductorError(f"e must be >= 1, got {e}")
    needed = math.lcm(24, 2 * e)
    cond = target_conductor if target_conductor is not None else needed
    if cond % needed:
        raise IncompatibleConductorError(
            f"conductor {cond} is not a multiple of lcm(24, 2e) = {needed}"
        )
    total = gauss_sum(e, cond)
    return cyc_root(cond, 3 * (e - 1) * (cond // 24)) * total


def gauss_sum(e: int, conductor: int | None = None) -> CycNum:
    """sum_{k=0}^{e-1} zeta_{2e}^(k^2 + e*k), exactly."""
    cond = conductor if conductor is not None else 2 * e
    if cond % (2 * e):
        raise IncompatibleConductorError(f"{2*e} does not divide {cond}")
    step = cond // (2 * e)
    vec = [0] * cond
    for k in range(e):
        vec[((k * k + e * k) * step) % cond] += 1
    return CycNum.from_vector(cond, vec)
