"""The Drinfeld double of the Taft algebra as an exact element algebra.

Elements are sparse cyclotomic-coefficient combinations of the normal-ordered
monomial basis a^i b^j c^k d^l with 0 <= i, j, k, l < n.  The generators
satisfy

    ba = q ab,   db = q bd,   bc = cb,   ca = q ac,   dc = q cd,
    da = q ad + 1 - bc,       a^n = 0 = d^n,   b^n = 1 = c^n,

so b, c commute past a and d by scalar q-powers and the only non-monomial
rewrite is the single step moving d past a.  Products are normal-ordered by
applying that step through a memoised table of the normal forms of d^l a^i,
which keeps the rewriting exact and cheap at desk scale.  Nilpotent
truncation drops a- or d-exponents at n silently; b, c exponents wrap mod n.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .cyclotomic import Cyclotomic, QContext


class Monomial(NamedTuple):
    i: int
    j: int
    k: int
    l: int


_UNIT = Monomial(0, 0, 0, 0)


class DnElement:
    """Sparse element of the double, in normal-ordered canonical form."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "DnAlgebra", terms: dict[Monomial, Cyclotomic]):
        self.algebra = algebra
        self.terms = terms

    def __add__(self, other: "DnElement") -> "DnElement":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return DnElement(self.algebra, out)

    def __sub__(self, other: "DnElement") -> "DnElement":
        return self + other.scale(-1)

    def __neg__(self) -> "DnElement":
        return self.scale(-1)

    def scale(self, c) -> "DnElement":
        if isinstance(c, (int, Fraction)):
            c = self.algebra.ctx.scalar(c)
        if c.is_zero():
            return DnElement(self.algebra, {})
        return DnElement(self.algebra, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other: "DnElement") -> "DnElement":
        return self.algebra.multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, DnElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        raise TypeError("DnElement is unhashable")

    def is_zero(self) -> bool:
        return not self.terms

    def to_json(self) -> list[dict]:
        return [
            {"monomial": list(m), "coeff": c.to_json()}
            for m, c in sorted(self.terms.items())
        ]

    def __repr__(self):
        if not self.terms:
            return "Dn(0)"
        bits = []
        for m, c in sorted(self.terms.items()):
            name = "".join(
                f"{g}^{e}" for g, e in zip("abcd", m) if e
            ) or "1"
            bits.append(f"({c!r})*{name}")
        return "Dn(" + " + ".join(bits) + ")"


class DnAlgebra:
    """Normal-ordered product, Hopf maps and distinguished elements."""

    def __init__(self, ctx: QContext):
        self.ctx = ctx
        self.n = ctx.n
        self._da: dict[tuple[int, int], dict[Monomial, Cyclotomic]] = {}
        self._antipode_powers: dict[str, list[tuple[Monomial, Cyclotomic]]] = {}
        self._u = None
        self._u_inv = None
        self._r_terms = None

    # -- constructors ------------------------------------------------------

    def zero(self) -> DnElement:
        return DnElement(self, {})

    def one(self) -> DnElement:
        return DnElement(self, {_UNIT: self.ctx.one()})

    def monomial(self, i: int, j: int, k: int, l: int, coeff=None) -> DnElement:
        if i >= self.n or l >= self.n:
            return self.zero()
        c = self.ctx.one() if coeff is None else coeff
        if isinstance(c, (int, Fraction)):
            c = self.ctx.scalar(c)
        if c.is_zero():
            return self.zero()
        return DnElement(self, {Monomial(i, j % self.n, k % self.n, l): c})

    @property
    def a(self) -> DnElement:
        return self.monomial(1, 0, 0, 0)

    @property
    def b(self) -> DnElement:
        return self.monomial(0, 1, 0, 0)

    @property
    def c(self) -> DnElement:
        return self.monomial(0, 0, 1, 0)

    @property
    def d(self) -> DnElement:
        return self.monomial(0, 0, 0, 1)

    def element(self, terms: dict[Monomial, Cyclotomic]) -> DnElement:
        return DnElement(self, {m: c for m, c in terms.items() if not c.is_zero()})

    # -- normal ordering ---------------------------------------------------

    def _da_normal(self, l: int, i: int) -> dict[Monomial, Cyclotomic]:
        """Normal form of d^l a^i as a dict of monomials."""
        if l == 0 or i == 0:
            return {Monomial(i, 0, 0, l): self.ctx.one()}
        memo = self._da
        key = (l, i)
        cached = memo.get(key)
        if cached is not None:
            return cached
        q = self.ctx.q_int_power
        one = self.ctx.one()
        if l == 1:
            if i == 1:
                result = {
                    Monomial(1, 0, 0, 1): q(1),
                    _UNIT: one,
                    Monomial(0, 1, 1, 0): -one,
                }
            else:
                # d a^i = q a (d a^(i-1)) + a^(i-1) - q^(2(i-1)) a^(i-1) bc
                prev = self._da_normal(1, i - 1)
                result = {}
                for m, c in prev.items():
                    if m.i + 1 < self.n:
                        _accum(result, Monomial(m.i + 1, m.j, m.k, m.l), c * q(1))
                _accum(result, Monomial(i - 1, 0, 0, 0), one)
                _accum(result, Monomial(i - 1, 1, 1, 0), -q(2 * (i - 1)))
        else:
            # d^l a^i = d^(l-1) (d a^i)
            result = {}
            head = self._da_normal(1, i)
            for m, c in head.items():
                # d^(l-1) a^(m.i) picks up q^(2 m.j (l-1 pivots)) from the
                # b^j c^j block commuting past the trailing d's
                sub = self._da_normal(l - 1, m.i)
                for m2, c2 in sub.items():
                    newl = m2.l + m.l
                    if newl >= self.n:
                        continue
                    coeff = c * c2 * q(2 * m.j * m2.l)
                    _accum(
                        result,
                        Monomial(m2.i, (m2.j + m.j) % self.n, (m2.k + m.k) % self.n, newl),
                        coeff,
                    )
        memo[key] = result
        return result

    def _mono_product(self, m1: Monomial, m2: Monomial) -> dict[Monomial, Cyclotomic]:
        n = self.n
        q = self.ctx.q_int_power
        i1, j1, k1, l1 = m1
        i2, j2, k2, l2 = m2
        out: dict[Monomial, Cyclotomic] = {}
        base = self._da_normal(l1, i2)
        for m, c in base.items():
            i = i1 + m.i
            l = m.l + l2
            if i >= n or l >= n:
                continue
            coeff = c * q((j1 + k1) * m.i + m.l * (j2 + k2))
            _accum(out, Monomial(i, (j1 + m.j + j2) % n, (k1 + m.k + k2) % n, l), coeff)
        return out

    def multiply(self, x: DnElement, y: DnElement) -> DnElement:
        out: dict[Monomial, Cyclotomic] = {}
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                c12 = c1 * c2
                for m, c in self._mono_product(m1, m2).items():
                    _accum(out, m, c * c12)
        return DnElement(self, out)

    # -- Hopf structure ----------------------------------------------------

    def counit(self, x: DnElement) -> Cyclotomic:
        """Counit: kills every monomial with an a or d factor."""
        total = self.ctx.zero()
        for m, c in x.terms.items():
            if m.i == 0 and m.l == 0:
                total = total + c
        return total

    def _antipode_power(self, gen: str, e: int) -> tuple[Monomial, Cyclotomic]:
        """S(gen)^e; each antipode image of a generator is a single monomial,
        so powers stay monomial."""
        table = self._antipode_powers.get(gen)
        if table is None:
            n = self.n
            images = {
                "a": (self.a * self.monomial(0, n - 1, 0, 0)).scale(-1),
                "b": self.monomial(0, n - 1, 0, 0),
                "c": self.monomial(0, 0, n - 1, 0),
                "d": (self.d * self.monomial(0, 0, n - 1, 0)).scale(-1),
            }
            table = [(_UNIT, self.ctx.one())]
            acc = self.one()
            for _ in range(n - 1):
                acc = acc * images[gen]
                if len(acc.terms) != 1:
                    raise AssertionError("antipode power of a generator must stay monomial")
                table.append(next(iter(acc.terms.items())))
            self._antipode_powers[gen] = table
        return table[e]

    def antipode(self, x: DnElement) -> DnElement:
        """S, extended anti-homomorphically over each monomial."""
        out: dict[Monomial, Cyclotomic] = {}
        for m, coeff in x.terms.items():
            md, cd = self._antipode_power("d", m.l)
            mc, cc = self._antipode_power("c", m.k)
            mb, cb = self._antipode_power("b", m.j)
            ma, ca = self._antipode_power("a", m.i)
            scalar = coeff * cd * cc * cb * ca
            part = self._mono_product(md, mc)
            part2: dict[Monomial, Cyclotomic] = {}
            for mm, c in part.items():
                for mmm, c2 in self._mono_product(mm, mb).items():
                    _accum(part2, mmm, c * c2)
            for mm, c in part2.items():
                for mmm, c2 in self._mono_product(mm, ma).items():
                    _accum(out, mmm, c * c2 * scalar)
        return DnElement(self, out)

    # -- distinguished elements ---------------------------------------------

    def r_matrix_element(self) -> list[tuple[DnElement, DnElement]]:
        """The universal R-matrix as an explicit list of tensor-factor pairs:

            R = (1/n) sum_{m,s,t} (q^(-t m) / [s]!) a^s b^t  (x)  c^m d^s

        with the scalar folded into the first factor.  Deterministic (m, s, t)
        ordering.
        """
        if self._r_terms is not None:
            return self._r_terms
        n = self.n
        ctx = self.ctx
        inv_n = ctx.scalar(Fraction(1, n))
        fact_inv = [ctx.quantum_factorial(s).inverse() for s in range(n)]
        terms = []
        for m in range(n):
            for s in range(n):
                for t in range(n):
                    coeff = inv_n * ctx.q_int_power(-t * m) * fact_inv[s]
                    first = self.monomial(s, t, 0, 0, coeff)
                    second = self.monomial(0, 0, m, s)
                    terms.append((first, second))
        self._r_terms = terms
        return terms

    def u_element(self) -> DnElement:
        """The element u = sum_i S(y_i) x_i over the R-matrix terms.

        Also evaluated through the closed monomial form; a mismatch between
        the two routes raises, since they must agree identically.
        """
        if self._u is not None:
            return self._u
        u = self.zero()
        for first, second in self.r_matrix_element():
            u = u + self.antipode(second) * first
        closed = self.u_element_closed_form()
        if u != closed:
            raise AssertionError("u: antipode route and closed form disagree")
        self._u = u
        return u

    def u_element_closed_form(self) -> DnElement:
        """u = (1/n) sum_{m,s,t} q^(s(s-1)/2 - t(m+s)) (-1)^s / [s]!
        d^s c^(-s-m) b^t a^s, normal-ordered."""
        n = self.n
        ctx = self.ctx
        inv_n = ctx.scalar(Fraction(1, n))
        fact_inv = [ctx.quantum_factorial(s).inverse() for s in range(n)]
        out: dict[Monomial, Cyclotomic] = {}
        for m in range(n):
            for s in range(n):
                base = inv_n * fact_inv[s]
                if s % 2:
                    base = -base
                e = (-s - m) % n
                for t in range(n):
                    # d^s c^e b^t = q^(s(e+t)) b^t c^e d^s
                    coeff = (
                        base
                        * ctx.q_int_power(s * (s - 1) // 2 - t * (m + s) + s * (e + t))
                    )
                    left = Monomial(0, t, e, s)
                    for mm, c in self._mono_product(left, Monomial(s, 0, 0, 0)).items():
                        _accum(out, mm, c * coeff)
        return DnElement(self, out)

    def g_epsilon(self) -> DnElement:
        """sum_i x_i eps(y_i) over the R-matrix terms; equals the unit."""
        out = self.zero()
        for first, second in self.r_matrix_element():
            e = self.counit(second)
            if not e.is_zero():
                out = out + first.scale(e)
        return out

    def ribbon_element(self) -> DnElement:
        """The ribbon element u (bc)^((n-1)/2); exists only for odd n."""
        if self.n % 2 == 0:
            raise ValueError("the double has a ribbon element only for odd n")
        e = (self.n - 1) // 2
        return self.u_element() * self.monomial(0, e, e, 0)

    def u_inverse(self) -> DnElement:
        """Inverse of u by a linear solve over the monomial basis.

        Powers of u are echelon-inserted as coefficient vectors until the
        first linear dependence; the dependence has nonzero constant term
        because u is invertible, and solving it for that term yields u^(-1).
        """
        if self._u_inv is not None:
            return self._u_inv
        from .linalg import _row_submul

        u = self.u_element()
        index: dict[Monomial, int] = {}

        def vectorize(el: DnElement) -> dict[int, Cyclotomic]:
            vec = {}
            for m, c in el.terms.items():
                pos = index.setdefault(m, len(index))
                vec[pos] = c
            return vec

        basis: dict[int, dict[int, Cyclotomic]] = {}
        combos: dict[int, dict[int, Cyclotomic]] = {}
        powers = [self.one()]
        degree = 0
        while True:
            vec = vectorize(powers[-1])
            combo = {degree: self.ctx.one()}
            # reduce, tracking the expression in terms of u-powers
            while vec:
                p = min(vec)
                if p not in basis:
                    inv = vec[p].inverse()
                    basis[p] = {j: v * inv for j, v in vec.items()}
                    combos[p] = {j: v * inv for j, v in combo.items()}
                    break
                f = vec[p]
                _row_submul(vec, basis[p], f)
                _row_submul(combo, combos[p], f)
            else:
                # dependence: sum combo[j] u^j = 0 with combo[degree] = 1
                alpha0 = combo.get(0)
                if alpha0 is None or alpha0.is_zero():
                    raise AssertionError("minimal polynomial of u has zero constant term")
                inv_series = self.zero()
                for j, cj in combo.items():
                    if j >= 1:
                        inv_series = inv_series + powers[j - 1].scale(cj)
                self._u_inv = inv_series.scale(-alpha0.inverse())
                return self._u_inv
            degree += 1
            powers.append(powers[-1] * u)


def _accum(target: dict[Monomial, Cyclotomic], m: Monomial, c: Cyclotomic) -> None:
    s = target.get(m)
    s = c if s is None else s + c
    if s.is_zero():
        target.pop(m, None)
    else:
        target[m] = s


@lru_cache(maxsize=None)
def algebra_for(n: int) -> DnAlgebra:
    """Shared algebra instance per n (the rewrite memo is expensive to warm)."""
    return DnAlgebra(QContext(n))
