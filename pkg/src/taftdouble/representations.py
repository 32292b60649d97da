"""Matrix realizations of the double on simple modules and tensor products.

The simple module of dimension ell with residue r has basis v_1, ..., v_ell
on which

    a.v_j = v_{j+1} (v_ell to 0),          b.v_j = q^(r+j-1) v_j,
    c.v_j = q^(j-(r+ell)) v_j,             d.v_j = alpha_{j-1}(ell) v_{j-1},

with alpha_i(ell) = [i] (1 - q^(i-ell)).  Tensor factors are ordered
row-major with the leftmost factor slowest, matching the interchange maps in
the braiding layer.  On tensor products the generators act through the
coproduct: b and c as Kronecker products, a as sum of A in one slot with B
filling every slot to its right, d likewise with C.
"""

from __future__ import annotations

from .cyclotomic import Cyclotomic, QContext
from .dn_algebra import DnElement
from .linalg import Matrix


class SimpleModule:
    """The ell-dimensional simple module V(ell, r)."""

    __slots__ = ("ctx", "ell", "r", "_alpha", "_gen", "_apow", "_dpow")

    def __init__(self, ctx: QContext, ell: int, r: int):
        if not 1 <= ell <= ctx.n:
            raise ValueError(f"ell must lie in 1..{ctx.n}")
        self.ctx = ctx
        self.ell = ell
        self.r = r % ctx.n
        self._alpha = [None] + [
            ctx.quantum_int(i) * (ctx.one() - ctx.q_int_power(i - ell))
            for i in range(1, ell)
        ]
        self._gen = None
        self._apow = None
        self._dpow = None

    @property
    def dim(self) -> int:
        return self.ell

    def b_exponent(self, t: int) -> int:
        """Exponent of q in the b-eigenvalue on basis vector index t (0-based)."""
        return self.r + t

    def c_exponent(self, t: int) -> int:
        return t + 1 - self.r - self.ell

    def alpha(self, i: int) -> Cyclotomic:
        return self._alpha[i]

    def generator_matrix(self, gen: str) -> Matrix:
        if self._gen is None:
            ctx, ell = self.ctx, self.ell
            one = ctx.one()
            A = Matrix(ell, ell, ctx.conductor)
            B = Matrix(ell, ell, ctx.conductor)
            C = Matrix(ell, ell, ctx.conductor)
            D = Matrix(ell, ell, ctx.conductor)
            for t in range(ell):
                if t + 1 < ell:
                    A.rows[t + 1][t] = one
                B.rows[t][t] = ctx.q_int_power(self.b_exponent(t))
                C.rows[t][t] = ctx.q_int_power(self.c_exponent(t))
                if t >= 1:
                    D.rows[t - 1][t] = self._alpha[t]
            self._gen = {"a": A, "b": B, "c": C, "d": D}
        return self._gen[gen]

    def _alpha_run(self, t: int, l: int) -> Cyclotomic:
        """Product of alpha factors for d^l acting on basis index t."""
        out = self.ctx.one()
        for u in range(l):
            out = out * self._alpha[t - u]
        return out

    def element_action(self, x: DnElement) -> Matrix:
        """Evaluate an algebra element; each monomial acts by a single
        diagonal-shift formula, so this is linear in ell per monomial."""
        ctx, ell = self.ctx, self.ell
        out = Matrix(ell, ell, ctx.conductor)
        for m, coeff in x.terms.items():
            i, j, k, l = m
            for t in range(ell):
                if t - l < 0:
                    continue
                s0 = t - l
                row = s0 + i
                if row >= ell:
                    continue
                value = coeff * ctx.q_int_power(
                    j * self.b_exponent(s0) + k * self.c_exponent(s0)
                )
                if l:
                    value = value * self._alpha_run(t, l)
                if value.is_zero():
                    continue
                cur = out.rows[row].get(t)
                cur = value if cur is None else cur + value
                if cur.is_zero():
                    out.rows[row].pop(t, None)
                else:
                    out.rows[row][t] = cur
        return out

    def __repr__(self):
        return f"V({self.ell},{self.r}; n={self.ctx.n})"


def simple_module(ctx: QContext, ell: int, r: int) -> SimpleModule:
    return SimpleModule(ctx, ell, r)


class TensorSpace:
    """Ordered tensor product of simple modules."""

    def __init__(self, factors):
        factors = tuple(factors)
        if not factors:
            raise ValueError("need at least one factor")
        self.factors = factors
        self.ctx = factors[0].ctx
        dim = 1
        for f in factors:
            dim *= f.dim
        self.dim = dim
        self._gen_cache: dict[str, Matrix] = {}
        self._pow_cache: dict[str, list[Matrix]] = {}

    def generator_matrix(self, gen: str) -> Matrix:
        cached = self._gen_cache.get(gen)
        if cached is not None:
            return cached
        ctx = self.ctx
        k = len(self.factors)
        if gen in ("b", "c"):
            out = self.factors[0].generator_matrix(gen)
            for f in self.factors[1:]:
                out = out.kron(f.generator_matrix(gen))
        else:
            tail_gen = "b" if gen == "a" else "c"
            out = Matrix(self.dim, self.dim, ctx.conductor)
            for pos in range(k):
                term = None
                for idx, f in enumerate(self.factors):
                    if idx < pos:
                        block = Matrix.identity(f.dim, ctx.conductor)
                    elif idx == pos:
                        block = f.generator_matrix(gen)
                    else:
                        block = f.generator_matrix(tail_gen)
                    term = block if term is None else term.kron(block)
                out = out + term
        self._gen_cache[gen] = out
        return out

    def _power(self, gen: str, e: int) -> Matrix:
        table = self._pow_cache.get(gen)
        if table is None:
            table = [Matrix.identity(self.dim, self.ctx.conductor)]
            self._pow_cache[gen] = table
        while len(table) <= e:
            table.append(table[-1] @ self.generator_matrix(gen))
        return table[e]

    def element_action(self, x: DnElement) -> Matrix:
        if len(self.factors) == 1:
            return self.factors[0].element_action(x)
        out = Matrix(self.dim, self.dim, self.ctx.conductor)
        for m, coeff in x.terms.items():
            term = self._power("a", m.i) @ self._power("b", m.j)
            term = term @ self._power("c", m.k)
            term = term @ self._power("d", m.l)
            out = out + term.scale(coeff)
        return out

    def __repr__(self):
        return " (x) ".join(repr(f) for f in self.factors)
