"""Reduction of cyclotomic data to a prime field, for rank certificates.

Mapping zeta to an element of exact multiplicative order M in F_p (p chosen
with p = 1 mod M) is a ring homomorphism on every element whose denominator
is prime to p.  Ranks can only drop under such a reduction, so a reduced
matrix reaching the a-priori rank bound certifies the exact rank; anything
short of the bound falls back to exact elimination.
"""

from __future__ import annotations

import numpy as np

from .cyclotomic import Cyclotomic, QContext, cyclotomic_polynomial
from .linalg import Matrix

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond the primes used here."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def choose_prime(conductor: int, minimum: int = 10**7, skip: int = 0) -> int:
    """Smallest prime p = 1 mod conductor with p >= minimum, skipping the
    first `skip` candidates (used to retry with an independent prime)."""
    p = minimum + (1 - minimum) % conductor
    found = 0
    while True:
        if is_prime(p):
            if found == skip:
                return p
            found += 1
        p += conductor


def _prime_factors(m: int) -> list[int]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


class PrimeFieldEmbedding:
    """Evaluation of Q(zeta_M) at a root of the M-th cyclotomic polynomial
    in F_p."""

    def __init__(self, conductor: int, minimum: int = 10**7, skip: int = 0):
        self.conductor = conductor
        self.p = choose_prime(conductor, minimum, skip)
        self.omega = self._find_root()
        phi = len(cyclotomic_polynomial(conductor)) - 1
        pows = [1] * phi
        for i in range(1, phi):
            pows[i] = pows[i - 1] * self.omega % self.p
        self._pows = pows

    def _find_root(self) -> int:
        p, M = self.p, self.conductor
        cof = (p - 1) // M
        primes = _prime_factors(M)
        for g in range(2, 1000):
            w = pow(g, cof, p)
            if w == 1:
                continue
            if all(pow(w, M // ell, p) != 1 for ell in primes):
                poly = cyclotomic_polynomial(M)
                acc, x = 0, 1
                for coeff in poly:
                    acc = (acc + coeff * x) % p
                    x = x * w % p
                if acc != 0:
                    raise AssertionError("order-M element not a cyclotomic root")
                return w
        raise AssertionError("no element of full order found")

    def __call__(self, value: Cyclotomic) -> int:
        if value.conductor != self.conductor:
            raise ValueError("conductor mismatch")
        den = value._den % self.p
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at this prime")
        acc = 0
        for v, w in zip(value._num, self._pows):
            if v:
                acc += v % self.p * w
        return acc % self.p * pow(den, -1, self.p) % self.p

    def matrix(self, m: Matrix) -> np.ndarray:
        out = np.zeros((m.nrows, m.ncols), dtype=np.int64)
        for i, row in enumerate(m.rows):
            for j, v in row.items():
                out[i, j] = self(v)
        return out


def embedding_for(ctx: QContext, skip: int = 0) -> PrimeFieldEmbedding:
    return PrimeFieldEmbedding(ctx.conductor, skip=skip)
