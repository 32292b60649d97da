"""Exact sparse linear algebra over a cyclotomic field.

Matrices are stored row-sparse (one dict per row, column -> nonzero entry),
which keeps products of the shift/diagonal operators appearing throughout
the library close to their true cost.  Elimination picks pivots by first
nonzero column, so identical inputs always reduce identically.
"""

from __future__ import annotations

from .cyclotomic import Cyclotomic


class Matrix:
    """Sparse exact matrix over Q(zeta_M)."""

    __slots__ = ("nrows", "ncols", "conductor", "rows")

    def __init__(self, nrows: int, ncols: int, conductor: int, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        self.conductor = conductor
        self.rows = [dict() for _ in range(nrows)] if rows is None else rows

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, n: int, conductor: int) -> "Matrix":
        one = Cyclotomic.one(conductor)
        m = cls(n, n, conductor)
        for i in range(n):
            m.rows[i][i] = one
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int, conductor: int) -> "Matrix":
        return cls(nrows, ncols, conductor)

    @classmethod
    def from_entries(cls, nrows, ncols, conductor, entries) -> "Matrix":
        """entries: iterable of (i, j, value)."""
        m = cls(nrows, ncols, conductor)
        for i, j, v in entries:
            if not v.is_zero():
                m.rows[i][j] = v
        return m

    def copy(self) -> "Matrix":
        return Matrix(self.nrows, self.ncols, self.conductor, [dict(r) for r in self.rows])

    # -- element access ----------------------------------------------------

    def entry(self, i: int, j: int) -> Cyclotomic:
        return self.rows[i].get(j, Cyclotomic.zero(self.conductor))

    def set_entry(self, i: int, j: int, v: Cyclotomic) -> None:
        if v.is_zero():
            self.rows[i].pop(j, None)
        else:
            self.rows[i][j] = v

    def is_zero(self) -> bool:
        return all(not r for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.nrows == other.nrows
            and self.ncols == other.ncols
            and all(a == b for a, b in zip(self.rows, other.rows))
        )

    def __hash__(self):
        raise TypeError("Matrix is unhashable")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        out = self.copy()
        for i, row in enumerate(other.rows):
            orow = out.rows[i]
            for j, v in row.items():
                s = orow.get(j)
                s = v if s is None else s + v
                if s.is_zero():
                    orow.pop(j, None)
                else:
                    orow[j] = s
        return out

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def scale(self, c) -> "Matrix":
        if isinstance(c, Cyclotomic) and c.is_zero():
            return Matrix(self.nrows, self.ncols, self.conductor)
        if c == 0:
            return Matrix(self.nrows, self.ncols, self.conductor)
        rows = [{j: v * c for j, v in r.items()} for r in self.rows]
        return Matrix(self.nrows, self.ncols, self.conductor, rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        out = Matrix(self.nrows, other.ncols, self.conductor)
        orows = other.rows
        for i, row in enumerate(self.rows):
            acc: dict[int, Cyclotomic] = {}
            for j, a in row.items():
                for k, b in orows[j].items():
                    s = acc.get(k)
                    p = a * b
                    s = p if s is None else s + p
                    acc[k] = s
            out.rows[i] = {k: v for k, v in acc.items() if not v.is_zero()}
        return out

    def kron(self, other: "Matrix") -> "Matrix":
        out = Matrix(self.nrows * other.nrows, self.ncols * other.ncols, self.conductor)
        for i, row in enumerate(self.rows):
            for i2, row2 in enumerate(other.rows):
                target = out.rows[i * other.nrows + i2]
                for j, a in row.items():
                    base = j * other.ncols
                    for j2, b in row2.items():
                        target[base + j2] = a * b
        return out

    def apply(self, vec: dict[int, Cyclotomic]) -> dict[int, Cyclotomic]:
        """Matrix times a sparse column vector."""
        out: dict[int, Cyclotomic] = {}
        for i, row in enumerate(self.rows):
            acc = None
            for j, a in row.items():
                v = vec.get(j)
                if v is not None:
                    p = a * v
                    acc = p if acc is None else acc + p
            if acc is not None and not acc.is_zero():
                out[i] = acc
        return out

    def flatten(self) -> dict[int, Cyclotomic]:
        """Row-major flattening to a sparse vector of length nrows*ncols."""
        out: dict[int, Cyclotomic] = {}
        for i, row in enumerate(self.rows):
            base = i * self.ncols
            for j, v in row.items():
                out[base + j] = v
        return out

    # -- elimination -------------------------------------------------------

    def rank(self) -> int:
        basis: dict[int, dict[int, Cyclotomic]] = {}
        for row in self.rows:
            echelon_insert(basis, dict(row))
        return len(basis)

    def inverse(self) -> "Matrix":
        """Exact inverse by Gauss-Jordan elimination."""
        if self.nrows != self.ncols:
            raise ValueError("inverse needs a square matrix")
        n = self.nrows
        one = Cyclotomic.one(self.conductor)
        work = [dict(r) for r in self.rows]
        aug = [{i: one} for i in range(n)]
        for col in range(n):
            pivot = None
            for r in range(col, n):
                if col in work[r]:
                    pivot = r
                    break
            if pivot is None:
                raise ZeroDivisionError("matrix is singular")
            work[col], work[pivot] = work[pivot], work[col]
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = work[col][col].inverse()
            work[col] = {j: v * inv for j, v in work[col].items()}
            aug[col] = {j: v * inv for j, v in aug[col].items()}
            for r in range(n):
                if r != col:
                    f = work[r].get(col)
                    if f is not None:
                        _row_submul(work[r], work[col], f)
                        _row_submul(aug[r], aug[col], f)
        return Matrix(n, n, self.conductor, aug)

    def to_dense(self) -> list[list[Cyclotomic]]:
        zero = Cyclotomic.zero(self.conductor)
        return [[row.get(j, zero) for j in range(self.ncols)] for row in self.rows]

    def to_json(self) -> list[list[dict]]:
        return [[v.to_json() for v in row] for row in self.to_dense()]

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols}, nnz={sum(len(r) for r in self.rows)})"


def _row_submul(target: dict, source: dict, factor: Cyclotomic) -> None:
    """target -= factor * source, dropping cancelled entries."""
    for j, v in source.items():
        s = target.get(j)
        p = factor * v
        s = -p if s is None else s - p
        if s.is_zero():
            target.pop(j, None)
        else:
            target[j] = s


def echelon_insert(basis: dict[int, dict[int, Cyclotomic]], vec: dict[int, Cyclotomic]):
    """Reduce vec against an echelon basis keyed by pivot column.

    Stored rows are normalised to a unit pivot.  Returns the new pivot
    column, or None when the vector reduces to zero.
    """
    while vec:
        p = min(vec)
        pivot_row = basis.get(p)
        if pivot_row is None:
            inv = vec[p].inverse()
            basis[p] = {j: v * inv for j, v in vec.items()}
            return p
        _row_submul(vec, pivot_row, vec[p])
    return None


def echelon_residual(basis: dict[int, dict[int, Cyclotomic]], vec: dict[int, Cyclotomic]):
    """Reduce vec against the basis without inserting; returns the residual."""
    vec = dict(vec)
    while vec:
        p = min(vec)
        pivot_row = basis.get(p)
        if pivot_row is None:
            return vec
        _row_submul(vec, pivot_row, vec[p])
    return vec


def nullspace_basis(rows: list[dict[int, Cyclotomic]], ncols: int, conductor: int):
    """Basis of the solution space of (rows) . x = 0, as sparse vectors.

    Standard echelon + back-substitution with one basis vector per free
    column; deterministic given the input order.
    """
    one = Cyclotomic.one(conductor)
    basis: dict[int, dict[int, Cyclotomic]] = {}
    for row in rows:
        echelon_insert(basis, dict(row))
    pivots = sorted(basis)
    free = [j for j in range(ncols) if j not in basis]
    out = []
    for f in free:
        vec = {f: one}
        for p in reversed(pivots):
            row = basis[p]
            acc = None
            for j, v in row.items():
                if j == p:
                    continue
                x = vec.get(j)
                if x is not None:
                    t = v * x
                    acc = t if acc is None else acc + t
            if acc is not None and not acc.is_zero():
                vec[p] = -acc
        out.append(vec)
    return out


def swap_matrix(dim_v: int, dim_w: int, conductor: int) -> Matrix:
    """Permutation matrix of the interchange V (x) W -> W (x) V.

    Basis ordering is row-major with the left factor slowest, so basis
    vector (i, j) of V (x) W at index i*dim_w + j maps to index j*dim_v + i.
    """
    one = Cyclotomic.one(conductor)
    m = Matrix(dim_v * dim_w, dim_v * dim_w, conductor)
    for i in range(dim_v):
        for j in range(dim_w):
            m.rows[j * dim_v + i][i * dim_w + j] = one
    return m
