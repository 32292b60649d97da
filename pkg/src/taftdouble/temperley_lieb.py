"""The Temperley-Lieb diagram algebra and its action on tensor powers.

A diagram on k strands is a noncrossing perfect matching of 2k boundary
nodes: bottom nodes 0..k-1 and top nodes k..2k-1, both numbered left to
right.  Noncrossing is checked on the boundary circle, i.e. on the linear
order bottom-left-to-right followed by top-right-to-left the matching must
nest like balanced brackets.  There are Catalan(k) such diagrams.

Diagrams act bottom-to-top; ``compose(x, y)`` stacks x above y (apply y
first), splices the strands and counts the closed loops, each worth a factor
of the loop parameter.  The representation on the k-th tensor power of a
two-dimensional simple module sends the i-th cap-cup generator to
q^(1/2) (lambda_r^(-1) rhat_i - id); arbitrary diagrams are evaluated along
words found by a breadth-first closure over generator products, and the
evaluation is cross-checked by the homomorphism property in the tests.

For tensor-power ranks the flattened diagram images form a Catalan(k) by
4^k matrix.  Exact elimination handles moderate k; the fast lane reduces a
row-restricted shard modulo a large prime, which certifies the exact rank
whenever it reaches the Catalan bound (ranks never grow under reduction or
restriction, and the Catalan count is an a-priori upper bound).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .cyclotomic import Cyclotomic, QContext
from .linalg import Matrix, echelon_insert
from .modular import embedding_for
from .reports import record
from .rmatrix import BraidOps, quadratic_eigenvalue


def catalan(k: int) -> int:
    return math.comb(2 * k, k) // (k + 1)


@dataclass(frozen=True)
class TLDiagram:
    k: int
    pairing: tuple[int, ...]

    def __post_init__(self):
        if len(self.pairing) != 2 * self.k:
            raise ValueError("pairing must cover 2k nodes")
        if not is_noncrossing(self.k, self.pairing):
            raise ValueError("pairing is not a planar perfect matching")

    def to_json(self) -> list[int]:
        return list(self.pairing)


def _linear_order(k: int) -> list[int]:
    """Boundary nodes in circular order: bottom left-to-right, then top
    right-to-left."""
    return list(range(k)) + list(range(2 * k - 1, k - 1, -1))


def is_noncrossing(k: int, pairing) -> bool:
    n = 2 * k
    if sorted(pairing[i] for i in range(n)) != list(range(n)) or any(
        pairing[pairing[i]] != i or pairing[i] == i for i in range(n)
    ):
        return False
    order = _linear_order(k)
    pos = {node: i for i, node in enumerate(order)}
    stack = []
    for node in order:
        partner = pairing[node]
        if pos[partner] > pos[node]:
            stack.append(partner)
        elif not stack or stack.pop() != node:
            return False
    return not stack


def identity_diagram(k: int) -> TLDiagram:
    pairing = [0] * (2 * k)
    for i in range(k):
        pairing[i] = i + k
        pairing[i + k] = i
    return TLDiagram(k, tuple(pairing))


def cap_cup(k: int, i: int) -> TLDiagram:
    """Generator diagram joining bottom (and top) nodes i-1, i (1-based i)."""
    if not 1 <= i <= k - 1:
        raise ValueError("generator index out of range")
    pairing = list(identity_diagram(k).pairing)
    a, b = i - 1, i
    pairing[a], pairing[b] = b, a
    pairing[k + a], pairing[k + b] = k + b, k + a
    return TLDiagram(k, tuple(pairing))


@lru_cache(maxsize=None)
def enumerate_diagrams(k: int) -> tuple[TLDiagram, ...]:
    """All noncrossing perfect matchings, in a deterministic order; the
    count is the Catalan number."""
    if k == 0:
        return (TLDiagram(0, ()),)
    order = _linear_order(k)
    n = 2 * k
    out = []

    def gen(points: tuple[int, ...]):
        """Noncrossing matchings of a linear point sequence: the first point
        pairs at odd distance, splitting inner and outer segments."""
        if not points:
            yield ()
            return
        first = points[0]
        for idx in range(1, len(points), 2):
            inner = points[1:idx]
            outer = points[idx + 1 :]
            for m1 in gen(inner):
                for m2 in gen(outer):
                    yield ((first, points[idx]),) + m1 + m2

    for matching in gen(tuple(order)):
        pairing = [0] * n
        for a, b in matching:
            pairing[a] = b
            pairing[b] = a
        out.append(TLDiagram(k, tuple(pairing)))
    assert len(out) == catalan(k)
    return tuple(out)


def compose(x: TLDiagram, y: TLDiagram) -> tuple[TLDiagram, int]:
    """Stack x above y (y applied first); returns the spliced diagram and
    the number of closed loops."""
    if x.k != y.k:
        raise ValueError("strand count mismatch")
    k = x.k
    # nodes of the result: y bottom (0..k-1), x top (k..2k-1)
    # gluing: y top node k+j  <->  x bottom node j
    pairing = [None] * (2 * k)
    visited_mid = [False] * k

    for start in range(2 * k):
        if pairing[start] is not None:
            continue
        cur_layer, cur = start >= k, start
        while True:
            partner = (x if cur_layer else y).pairing[cur]
            if cur_layer and partner >= k:
                end = partner  # x top: a result node k..2k-1
                break
            if not cur_layer and partner < k:
                end = partner  # y bottom: a result node
                break
            if cur_layer:
                # x bottom j -> y top k+j
                visited_mid[partner] = True
                cur_layer, cur = False, partner + k
            else:
                # y top k+j -> x bottom j
                visited_mid[partner - k] = True
                cur_layer, cur = True, partner - k
        pairing[start] = end
        pairing[end] = start

    loops = 0
    for j in range(k):
        if visited_mid[j]:
            continue
        loops += 1
        cur = j
        while not visited_mid[cur]:
            visited_mid[cur] = True
            nxt = x.pairing[cur]  # x bottom -> x bottom (inside x)
            visited_mid[nxt] = True
            cur = y.pairing[nxt + k] - k  # y top -> y top (inside y)
    return TLDiagram(k, tuple(pairing)), loops


class TLElement:
    """Linear combination of diagrams with cyclotomic coefficients."""

    __slots__ = ("k", "xi", "terms")

    def __init__(self, k: int, xi: Cyclotomic, terms: dict[TLDiagram, Cyclotomic]):
        self.k = k
        self.xi = xi
        self.terms = {d: c for d, c in terms.items() if not c.is_zero()}

    def __add__(self, other: "TLElement") -> "TLElement":
        out = dict(self.terms)
        for d, c in other.terms.items():
            s = out.get(d)
            out[d] = c if s is None else s + c
        return TLElement(self.k, self.xi, out)

    def scale(self, c) -> "TLElement":
        return TLElement(self.k, self.xi, {d: v * c for d, v in self.terms.items()})

    def __mul__(self, other: "TLElement") -> "TLElement":
        out: dict[TLDiagram, Cyclotomic] = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                d, loops = compose(d1, d2)
                coeff = c1 * c2
                for _ in range(loops):
                    coeff = coeff * self.xi
                s = out.get(d)
                out[d] = coeff if s is None else s + coeff
        return TLElement(self.k, self.xi, out)

    def __eq__(self, other):
        return isinstance(other, TLElement) and self.terms == other.terms

    def __repr__(self):
        return f"TLElement(k={self.k}, {len(self.terms)} diagrams)"


@lru_cache(maxsize=None)
def diagram_words(k: int) -> dict[TLDiagram, tuple[int, ...]]:
    """A word in the cap-cup generators for every diagram, found by a
    loop-free breadth-first closure from the identity."""
    gens = {i: cap_cup(k, i) for i in range(1, k)} if k >= 2 else {}
    words: dict[TLDiagram, tuple[int, ...]] = {identity_diagram(k): ()}
    frontier = [identity_diagram(k)]
    while frontier:
        new = []
        for d in frontier:
            for i, g in gens.items():
                d2, loops = compose(d, g)
                if loops == 0 and d2 not in words:
                    words[d2] = words[d] + (i,)
                    new.append(d2)
        frontier = new
    assert len(words) == catalan(k)
    return words


class TLRepresentation:
    """Exact matrices of the diagram action on the k-th tensor power of the
    two-dimensional module with residue r."""

    def __init__(self, ctx: QContext, k: int, r: int):
        if k < 2:
            raise ValueError("need k >= 2 strands")
        self.ctx = ctx
        self.k = k
        self.r = r % ctx.n
        self.ops = BraidOps(ctx, 2, self.r, k)
        self.dim = 2 ** k
        lam_inv = quadratic_eigenvalue(ctx, r).inverse()
        eye = Matrix.identity(self.dim, ctx.conductor)
        self.generator_mats = {
            i: (self.ops.rhat_i(i).scale(lam_inv) - eye).scale(ctx.q_half)
            for i in range(1, k)
        }
        self._word_cache = {(): eye}

    def generator(self, i: int) -> Matrix:
        return self.generator_mats[i]

    def diagram_matrix(self, d: TLDiagram) -> Matrix:
        return self._by_word(diagram_words(self.k)[d])

    def _by_word(self, word: tuple[int, ...]) -> Matrix:
        cache = self._word_cache
        got = cache.get(word)
        if got is None:
            got = self._by_word(word[:-1]) @ self.generator_mats[word[-1]]
            cache[word] = got
        return got

    def all_matrices(self) -> dict[TLDiagram, Matrix]:
        return {d: self._by_word(w) for d, w in diagram_words(self.k).items()}


def tl_representation(ctx: QContext, k: int, r: int) -> dict[TLDiagram, Matrix]:
    """Map each diagram on k strands to its exact matrix on the tensor power."""
    return TLRepresentation(ctx, k, r).all_matrices()


def check_diagram_relations(ctx: QContext, k: int):
    """The cap-cup generators satisfy the defining relations at the diagram
    level: squares scale by the loop parameter, adjacent triples collapse,
    distant generators commute."""
    xi = ctx.xi
    out = []
    params = {"n": ctx.n, "k": k}
    mk = lambda d: TLElement(k, xi, {d: ctx.one()})
    for i in range(1, k):
        e = mk(cap_cup(k, i))
        ok = e * e == e.scale(xi)
        out.append(record("tl-diagram-square", {**params, "i": i}, ok))
    for i in range(1, k - 1):
        e, f = mk(cap_cup(k, i)), mk(cap_cup(k, i + 1))
        out.append(record("tl-diagram-triple", {**params, "i": i, "j": i + 1},
                          e * f * e == e))
        out.append(record("tl-diagram-triple", {**params, "i": i + 1, "j": i},
                          f * e * f == f))
    for i in range(1, k):
        for j in range(i + 2, k):
            e, f = mk(cap_cup(k, i)), mk(cap_cup(k, j))
            out.append(record("tl-diagram-far-commute", {**params, "i": i, "j": j},
                              e * f == f * e))
    return out


def check_tl_matrix_relations(ctx: QContext, k: int, r: int):
    """Defining relations for the represented generators, as exact matrix
    identities on the tensor power."""
    rep = TLRepresentation(ctx, k, r)
    xi = ctx.xi
    params = {"n": ctx.n, "k": k, "r": r}
    out = []
    for i in range(1, k):
        t = rep.generator(i)
        out.append(record("tl-matrix-square", {**params, "i": i},
                          t @ t == t.scale(xi)))
    for i in range(1, k - 1):
        t, u = rep.generator(i), rep.generator(i + 1)
        out.append(record("tl-matrix-triple", {**params, "i": i},
                          (t @ u @ t) == t))
        out.append(record("tl-matrix-triple-rev", {**params, "i": i},
                          (u @ t @ u) == u))
        out.append(record("tl-matrix-braid-exchange", {**params, "i": i},
                          (t @ u @ t) - t == (u @ t @ u) - u))
    for i in range(1, k):
        for j in range(i + 2, k):
            t, u = rep.generator(i), rep.generator(j)
            out.append(record("tl-matrix-far-commute", {**params, "i": i, "j": j},
                              (t @ u) == (u @ t)))
    return out


def check_hecke_relation(ctx: QContext, k: int, r: int):
    """(lambda_r^(-1) rhat_i - id)(lambda_r^(-1) rhat_i + q^(-1) id) = 0."""
    ops = BraidOps(ctx, 2, r, k)
    lam_inv = quadratic_eigenvalue(ctx, r).inverse()
    eye = Matrix.identity(2 ** k, ctx.conductor)
    qinv = ctx.q_int_power(-1)
    out = []
    for i in range(1, k):
        s = ops.rhat_i(i).scale(lam_inv)
        ok = ((s - eye) @ (s + eye.scale(qinv))).is_zero()
        out.append(record("hecke-quadratic", {"n": ctx.n, "k": k, "r": r, "i": i}, ok))
    return out


# -- tensor-power rank ------------------------------------------------------


def image_rank(ctx: QContext, k: int, r: int, method: str = "auto") -> int:
    """Exact dimension of the span of the diagram images on the tensor power.

    ``exact`` flattens the exact matrices and eliminates over the field.
    ``modular`` reduces a row-restricted shard modulo a large prime: since
    the span has at most Catalan(k) generators, a reduced rank equal to that
    bound is the exact answer; otherwise the shard is widened and ultimately
    the exact path decides.  ``auto`` picks exact for small problems.
    """
    return image_rank_info(ctx, k, r, method)["rank"]


def image_rank_info(ctx: QContext, k: int, r: int, method: str = "auto") -> dict:
    if k == 1:
        return {"rank": 1, "method": "trivial", "catalan": 1}
    if method == "auto":
        method = "exact" if catalan(k) * (4 ** k) <= 600_000 else "modular"
    if method == "exact":
        rank = _image_rank_exact(ctx, k, r)
        return {"rank": rank, "method": "exact", "catalan": catalan(k)}
    if method != "modular":
        raise ValueError("method must be auto, exact or modular")
    target = catalan(k)
    dim = 2 ** k
    rows = min(16, dim)
    attempt = 0
    while True:
        rank = _image_rank_modular(ctx, k, r, rows, attempt)
        if rank == target:
            return {"rank": rank, "method": f"modular(rows={rows})", "catalan": target}
        if rows < dim:
            rows = min(dim, rows * 4)
            continue
        if attempt < 2:
            attempt += 1  # retry with an independent prime
            continue
        rank = _image_rank_exact(ctx, k, r)
        return {"rank": rank, "method": "exact-fallback", "catalan": target}


def _image_rank_exact(ctx: QContext, k: int, r: int) -> int:
    rep = TLRepresentation(ctx, k, r)
    basis: dict[int, dict[int, Cyclotomic]] = {}
    for d, w in diagram_words(k).items():
        echelon_insert(basis, rep._by_word(w).flatten())
    return len(basis)


def _image_rank_modular(ctx: QContext, k: int, r: int, rows: int, attempt: int) -> int:
    emb = embedding_for(ctx, skip=attempt)
    p = emb.p
    rep = TLRepresentation(ctx, k, r)
    dim = 2 ** k
    gens = {i: emb.matrix(rep.generator(i)) for i in range(1, k)}
    rng = np.random.default_rng(2024 + attempt)
    row_idx = np.sort(rng.choice(dim, size=rows, replace=False)) if rows < dim else np.arange(dim)
    eye_rows = np.zeros((rows if rows < dim else dim, dim), dtype=np.int64)
    for out_i, src in enumerate(row_idx):
        eye_rows[out_i, src] = 1
    shards: dict[tuple[int, ...], np.ndarray] = {(): eye_rows}

    words = sorted(diagram_words(k).values(), key=len)
    flat = np.zeros((len(words), eye_rows.shape[0] * dim), dtype=np.int64)
    for pos, w in enumerate(words):
        m = shards.get(w)
        if m is None:
            m = shards[w[:-1]] @ gens[w[-1]] % p
            shards[w] = m
        flat[pos] = m.reshape(-1)
    return int(kernels.modp_rank(flat, p))
