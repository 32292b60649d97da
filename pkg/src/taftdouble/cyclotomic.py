"""Exact arithmetic in the cyclotomic field Q(zeta_M).

A field element is a vector of phi(M) rational coefficients in the power
basis 1, zeta, ..., zeta^(phi(M)-1), kept reduced modulo the M-th cyclotomic
polynomial.  This canonical form makes equality plain coefficient equality.
Internally each element stores an integer numerator vector with one common
positive denominator, so the hot path (multiplication) runs on machine
integers; the ``coeffs`` property exposes the Fraction view.

``QContext`` packages everything the rest of the library needs for a fixed
root-of-unity order n: the ambient conductor is always M = 4n so that square
and fourth roots of q exist, with q = zeta_{4n}^4.  For odd n the designated
roots q^(1/2) and q^(1/4) are taken *inside* the cyclic group generated by q
(q^((n+1)/2) and q^(inverse of 4 mod n)): with that choice the half- and
quarter-integer exponent identities used by the braiding-eigenvalue formulas
close under q^n = 1.  For even n no power of q is a square root of q and the
zeta_{4n}-powers are used instead.  The active convention is recorded in
``root_convention`` and surfaces in every report header.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import kernels

Rational = Fraction


class DegenerateParameterError(ValueError):
    """A quantum factorial or binomial was requested outside its domain."""


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (ascending coefficients)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for shift in range(len(out) - 1, -1, -1):
        coeff = num[len(den) - 1 + shift]
        if coeff % lead:
            raise ArithmeticError("non-exact polynomial division")
        q = coeff // lead
        out[shift] = q
        if q:
            for i, d in enumerate(den):
                num[i + shift] -= q * d
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(M: int) -> tuple[int, ...]:
    """Integer coefficients (ascending) of the M-th cyclotomic polynomial.

    Computed by dividing x^M - 1 by the cyclotomic polynomials of all proper
    divisors of M.
    """
    if M < 1:
        raise ValueError("conductor must be a positive integer")
    if M == 1:
        return (-1, 1)
    poly = [0] * (M + 1)
    poly[0] = -1
    poly[M] = 1
    out = poly
    for d in range(1, M):
        if M % d == 0:
            out = _poly_divide_exact(out, list(cyclotomic_polynomial(d)))
    return tuple(out)


@lru_cache(maxsize=None)
def _reduction_rows(M: int) -> tuple[tuple[int, ...], ...]:
    """Rows expressing zeta^(phi+j) in the power basis, j = 0..phi-2.

    The cyclotomic polynomial is monic with integer coefficients, so every
    row is an integer vector.
    """
    phi_poly = cyclotomic_polynomial(M)
    phi = len(phi_poly) - 1
    rows = []
    current = [-c for c in phi_poly[:phi]]
    rows.append(tuple(current))
    for _ in range(phi - 2):
        shifted = [0] + current[: phi - 1]
        top = current[phi - 1]
        if top:
            for i in range(phi):
                shifted[i] += top * rows[0][i]
        current = shifted
        rows.append(tuple(current))
    return tuple(rows)


def euler_phi(M: int) -> int:
    return len(cyclotomic_polynomial(M)) - 1


def _normalize(nums: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        den = -den
        nums = [-v for v in nums]
    g = den
    for v in nums:
        if v:
            g = gcd(g, v)
            if g == 1:
                break
    if g > 1:
        den //= g
        nums = [v // g for v in nums]
    if not any(nums):
        den = 1
    return tuple(nums), den


class Cyclotomic:
    """Immutable element of Q(zeta_M) in canonical reduced form."""

    __slots__ = ("conductor", "_num", "_den")

    def __init__(self, conductor: int, num: tuple[int, ...], den: int, _normalized: bool = False):
        if not _normalized:
            num, den = _normalize(list(num), den)
        self.conductor = conductor
        self._num = num
        self._den = den

    # -- constructors ------------------------------------------------------

    @staticmethod
    @lru_cache(maxsize=None)
    def zero(M: int) -> "Cyclotomic":
        return Cyclotomic(M, (0,) * euler_phi(M), 1, _normalized=True)

    @staticmethod
    @lru_cache(maxsize=None)
    def one(M: int) -> "Cyclotomic":
        num = [0] * euler_phi(M)
        num[0] = 1
        return Cyclotomic(M, tuple(num), 1, _normalized=True)

    @classmethod
    def from_rational(cls, M: int, value) -> "Cyclotomic":
        value = Fraction(value)
        num = [0] * euler_phi(M)
        num[0] = value.numerator
        return cls(M, tuple(num), value.denominator)

    @classmethod
    def from_coeffs(cls, M: int, coeffs) -> "Cyclotomic":
        fracs = [Fraction(c) for c in coeffs]
        phi = euler_phi(M)
        if len(fracs) != phi:
            raise ValueError(f"expected {phi} coefficients for conductor {M}")
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        nums = [f.numerator * (den // f.denominator) for f in fracs]
        return cls(M, tuple(nums), den)

    @staticmethod
    @lru_cache(maxsize=None)
    def zeta(M: int, power: int = 1) -> "Cyclotomic":
        """zeta_M^power, reduced to the canonical basis."""
        power %= M
        phi = euler_phi(M)
        num = [0] * max(phi, power + 1)
        num[power] = 1
        if power < phi:
            return Cyclotomic(M, tuple(num[:phi]), 1, _normalized=True)
        rows = _reduction_rows(M)
        out = [0] * phi
        for idx in range(len(num) - 1, -1, -1):
            v = num[idx]
            if not v:
                continue
            if idx < phi:
                out[idx] += v
            else:
                row = rows[idx - phi]
                for j, rj in enumerate(row):
                    if rj:
                        out[j] += v * rj
        return Cyclotomic(M, tuple(out), 1)

    # -- views -------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        d = self._den
        return tuple(Fraction(v, d) for v in self._num)

    def is_zero(self) -> bool:
        return self._den == 1 and not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational element")
        return Fraction(self._num[0], self._den)

    def to_json(self) -> dict:
        return {
            "conductor": self.conductor,
            "coeffs": [[v, self._den] for v in self._num],
        }

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Cyclotomic") -> None:
        if self.conductor != other.conductor:
            raise ValueError("conductor mismatch")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(self.conductor, other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        self._check(other)
        da, db = self._den, other._den
        if da == db:
            nums = [x + y for x, y in zip(self._num, other._num)]
            return Cyclotomic(self.conductor, tuple(nums), da)
        nums = [x * db + y * da for x, y in zip(self._num, other._num)]
        return Cyclotomic(self.conductor, tuple(nums), da * db)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, tuple(-v for v in self._num), self._den, _normalized=True)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(self.conductor, other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Cyclotomic(self.conductor, tuple(v * other for v in self._num), self._den)
        if isinstance(other, Fraction):
            nums = tuple(v * other.numerator for v in self._num)
            return Cyclotomic(self.conductor, nums, self._den * other.denominator)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Cyclotomic.zero(self.conductor)
        rows = _reduction_rows(self.conductor)
        nums = kernels.poly_mulreduce(self._num, other._num, rows)
        return Cyclotomic(self.conductor, tuple(nums), self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * Fraction(other.denominator, other.numerator)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Cyclotomic.one(self.conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base if exponent > 1 else base
            exponent >>= 1
        return result

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the extended Euclidean algorithm
        against the conductor's cyclotomic polynomial."""
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero")
        M = self.conductor
        phi_poly = [Fraction(c) for c in cyclotomic_polynomial(M)]
        a = [Fraction(v, self._den) for v in self._num]

        def deg(p):
            for i in range(len(p) - 1, -1, -1):
                if p[i]:
                    return i
            return -1

        def trim(p):
            d = deg(p)
            return p[: d + 1] if d >= 0 else []

        r0, r1 = phi_poly[:], trim(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while deg(r1) > 0:
            dr0, dr1 = deg(r0), deg(r1)
            q = [Fraction(0)] * (dr0 - dr1 + 1)
            rem = r0[:]
            for shift in range(dr0 - dr1, -1, -1):
                c = rem[dr1 + shift] / r1[dr1]
                q[shift] = c
                if c:
                    for i, v in enumerate(r1):
                        rem[i + shift] -= c * v
            rem = trim(rem)
            new_s = s0[:]
            new_s += [Fraction(0)] * (len(q) + len(s1) - 1 - len(new_s))
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s1):
                        new_s[i + j] -= qi * sj
            r0, r1 = r1, rem
            s0, s1 = s1, trim(new_s) or [Fraction(0)]
        if deg(r1) != 0:
            raise ZeroDivisionError("element is not invertible (zero divisor)")
        c = r1[0]
        inv = [v / c for v in s1]
        inv += [Fraction(0)] * (euler_phi(M) - len(inv))
        return Cyclotomic.from_coeffs(M, inv[: euler_phi(M)])

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(self.conductor, other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return (
            self.conductor == other.conductor
            and self._den == other._den
            and self._num == other._num
        )

    def __hash__(self):
        return hash((self.conductor, self._num, self._den))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.is_rational():
            return f"Cyc({self.rational_value()})"
        terms = []
        for i, f in enumerate(self.coeffs):
            if f:
                terms.append(f"{f}*z^{i}" if i else f"{f}")
        return "Cyc(" + " + ".join(terms) + f"; M={self.conductor})"


class QContext:
    """Field data for a fixed primitive n-th root of unity q in Q(zeta_4n)."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("n must be at least 2")
        self.n = n
        self.conductor = 4 * n
        self.zeta = Cyclotomic.zeta(self.conductor)
        self.q = Cyclotomic.zeta(self.conductor, 4)
        if n % 2:
            # roots of q chosen inside <q>; see the module docstring
            self.q_quarter = self.q ** pow(4, -1, n)
            self.q_half = self.q ** ((n + 1) // 2)
            self.root_convention = "q-internal (odd n)"
        else:
            self.q_quarter = self.zeta
            self.q_half = Cyclotomic.zeta(self.conductor, 2)
            self.root_convention = "zeta-based (even n)"
        self.xi = -(self.q_half + self.q_half.inverse())
        self._qpow = None
        self._qqpow = None
        self._fact: list[Cyclotomic] = []

    # -- scalar helpers ----------------------------------------------------

    def zero(self) -> Cyclotomic:
        return Cyclotomic.zero(self.conductor)

    def one(self) -> Cyclotomic:
        return Cyclotomic.one(self.conductor)

    def scalar(self, value) -> Cyclotomic:
        return Cyclotomic.from_rational(self.conductor, value)

    def q_int_power(self, e: int) -> Cyclotomic:
        """q^e for an integer exponent, from a cached table."""
        if self._qpow is None:
            table = [self.one()]
            for _ in range(self.n - 1):
                table.append(table[-1] * self.q)
            self._qpow = table
        return self._qpow[e % self.n]

    def q_power(self, e) -> Cyclotomic:
        """q^e for a rational exponent whose denominator divides 4."""
        if isinstance(e, int):
            return self.q_int_power(e)
        e = Fraction(e)
        quarters = e * 4
        if quarters.denominator != 1:
            raise ValueError("exponent denominator must divide 4")
        if self._qqpow is None:
            table = [self.one()]
            for _ in range(4 * self.n - 1):
                table.append(table[-1] * self.q_quarter)
            self._qqpow = table
        return self._qqpow[quarters.numerator % (4 * self.n)]

    # -- quantum integers ----------------------------------------------------

    def quantum_int(self, m: int) -> Cyclotomic:
        """[m] = 1 + q + ... + q^(m-1), with [0] = 0."""
        if m < 0:
            raise ValueError("quantum integer needs m >= 0")
        total = self.zero()
        for j in range(m):
            total = total + self.q_int_power(j)
        return total

    def quantum_factorial(self, m: int) -> Cyclotomic:
        """[m]! = [m][m-1]...[1], with [0]! = 1."""
        if m < 0:
            raise ValueError("quantum factorial needs m >= 0")
        while len(self._fact) <= m:
            k = len(self._fact)
            self._fact.append(self.one() if k == 0 else self._fact[k - 1] * self.quantum_int(k))
        return self._fact[m]

    def q_binomial(self, m: int, i: int) -> Cyclotomic:
        """Quantum binomial [m]! / ([i]! [m-i]!)."""
        if not 0 <= i <= m:
            raise ValueError("need 0 <= i <= m")
        den = self.quantum_factorial(i) * self.quantum_factorial(m - i)
        if den.is_zero():
            raise DegenerateParameterError(f"[{i}]! [{m - i}]! vanishes at a root of unity of order {self.n}")
        return self.quantum_factorial(m) * den.inverse()
