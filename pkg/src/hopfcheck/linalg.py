"""Exact dense linear algebra: elimination, rank, kernels, Kronecker products.

Matrices are immutable and carry their field. Elimination uses deterministic
first-nonzero pivoting so failure certificates are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .fields import Field, Scalar

Vector = tuple[Scalar, ...]


class ShapeError(ValueError):
    """Incompatible matrix/vector shapes."""


# -- vectors ---------------------------------------------------------------


def zero_vec(field: Field, n: int) -> Vector:
    return (field.zero,) * n


def unit_vec(field: Field, n: int, i: int) -> Vector:
    return tuple(field.one if j == i else field.zero for j in range(n))


def vec_add(field: Field, u: Vector, v: Vector) -> Vector:
    return tuple(field.add(a, b) for a, b in zip(u, v, strict=True))


def vec_sub(field: Field, u: Vector, v: Vector) -> Vector:
    return tuple(field.sub(a, b) for a, b in zip(u, v, strict=True))


def vec_scale(field: Field, c: Scalar, v: Vector) -> Vector:
    return tuple(field.mul(c, a) for a in v)


def vec_dot(field: Field, u: Vector, v: Vector) -> Scalar:
    acc = field.zero
    for a, b in zip(u, v, strict=True):
        acc = field.add(acc, field.mul(a, b))
    return acc


def vec_kron(field: Field, u: Vector, v: Vector) -> Vector:
    return tuple(field.mul(a, b) for a in u for b in v)


def vec_is_zero(field: Field, v: Vector) -> bool:
    return all(a == field.zero for a in v)


@dataclass(frozen=True)
class Matrix:
    """Immutable exact matrix; ``rows`` is a tuple of row tuples."""

    field: Field
    nrows: int
    ncols: int
    rows: tuple[Vector, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.nrows or any(len(r) != self.ncols for r in self.rows):
            raise ShapeError(f"rows do not match declared shape {self.nrows}x{self.ncols}")

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Iterable[Scalar]], ncols: int | None = None) -> Matrix:
        tup = tuple(tuple(r) for r in rows)
        if ncols is None:
            if not tup:
                raise ShapeError("cannot infer column count of an empty matrix")
            ncols = len(tup[0])
        return cls(field, len(tup), ncols, tup)

    @classmethod
    def from_cols(cls, field: Field, cols: Sequence[Vector], nrows: int | None = None) -> Matrix:
        if nrows is None:
            if not cols:
                raise ShapeError("cannot infer row count of an empty matrix")
            nrows = len(cols[0])
        rows = tuple(tuple(col[i] for col in cols) for i in range(nrows))
        return cls(field, nrows, len(cols), rows)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> Matrix:
        return cls(field, nrows, ncols, tuple(zero_vec(field, ncols) for _ in range(nrows)))

    @classmethod
    def identity(cls, field: Field, n: int) -> Matrix:
        return cls(field, n, n, tuple(unit_vec(field, n, i) for i in range(n)))

    # -- access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def entry(self, i: int, j: int) -> Scalar:
        return self.rows[i][j]

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def cols(self) -> list[Vector]:
        return [self.col(j) for j in range(self.ncols)]

    def is_zero(self) -> bool:
        return all(vec_is_zero(self.field, r) for r in self.rows)

    # -- arithmetic -----------------------------------------------------------

    def add(self, other: Matrix) -> Matrix:
        self._expect(other.shape == self.shape, f"add {self.shape} vs {other.shape}")
        rows = tuple(vec_add(self.field, a, b) for a, b in zip(self.rows, other.rows))
        return Matrix(self.field, self.nrows, self.ncols, rows)

    def sub(self, other: Matrix) -> Matrix:
        self._expect(other.shape == self.shape, f"sub {self.shape} vs {other.shape}")
        rows = tuple(vec_sub(self.field, a, b) for a, b in zip(self.rows, other.rows))
        return Matrix(self.field, self.nrows, self.ncols, rows)

    def scale(self, c: Scalar) -> Matrix:
        return Matrix(self.field, self.nrows, self.ncols, tuple(vec_scale(self.field, c, r) for r in self.rows))

    def __matmul__(self, other: Matrix) -> Matrix:
        self._expect(self.ncols == other.nrows, f"matmul {self.shape} @ {other.shape}")
        f = self.field
        ocols = [other.col(j) for j in range(other.ncols)]
        rows = tuple(tuple(vec_dot(f, r, c) for c in ocols) for r in self.rows)
        return Matrix(f, self.nrows, other.ncols, rows)

    def apply(self, v: Vector) -> Vector:
        self._expect(len(v) == self.ncols, f"apply {self.shape} to vector of length {len(v)}")
        return tuple(vec_dot(self.field, r, v) for r in self.rows)

    def transpose(self) -> Matrix:
        return Matrix(self.field, self.ncols, self.nrows, tuple(self.col(j) for j in range(self.ncols)))

    def kron(self, other: Matrix) -> Matrix:
        f = self.field
        rows = []
        for r1 in self.rows:
            for r2 in other.rows:
                rows.append(tuple(f.mul(a, b) for a in r1 for b in r2))
        return Matrix(f, self.nrows * other.nrows, self.ncols * other.ncols, tuple(rows))

    def _expect(self, ok: bool, what: str) -> None:
        if not ok:
            raise ShapeError(f"shape mismatch: {what}")

    # -- elimination -------------------------------------------------------------

    def rref(self) -> tuple[Matrix, tuple[int, ...]]:
        """Reduced row echelon form with the pivot column list."""
        f = self.field
        rows = [list(r) for r in self.rows]
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            if r == self.nrows:
                break
            pivot_row = next((i for i in range(r, self.nrows) if rows[i][c] != f.zero), None)
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            inv = f.inv(rows[r][c])
            rows[r] = [f.mul(inv, x) for x in rows[r]]
            for i in range(self.nrows):
                if i != r and rows[i][c] != f.zero:
                    factor = rows[i][c]
                    rows[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        return Matrix(f, self.nrows, self.ncols, tuple(tuple(row) for row in rows)), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> tuple[Vector, ...]:
        """Basis of the right kernel; one vector per free column (free entry 1)."""
        f = self.field
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        basis: list[Vector] = []
        for free in range(self.ncols):
            if free in pivot_set:
                continue
            v = [f.zero] * self.ncols
            v[free] = f.one
            for row_idx, pc in enumerate(pivots):
                v[pc] = f.neg(reduced.entry(row_idx, free))
            basis.append(tuple(v))
        return tuple(basis)

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def inverse(self) -> Matrix:
        if self.nrows != self.ncols:
            raise ShapeError(f"cannot invert a {self.nrows}x{self.ncols} matrix")
        sol = solve_matrix(self, Matrix.identity(self.field, self.nrows))
        if sol is None:
            raise ShapeError("matrix is singular")
        return sol


def flip_matrix(field: Field, d_a: int, d_b: int) -> Matrix:
    """Matrix of the flip A (x) B -> B (x) A on row-major tensor coordinates."""
    rows = []
    for b in range(d_b):
        for a in range(d_a):
            row = [field.zero] * (d_a * d_b)
            row[a * d_b + b] = field.one
            rows.append(tuple(row))
    return Matrix(field, d_a * d_b, d_a * d_b, tuple(rows))


def hstack(field: Field, mats: Sequence[Matrix]) -> Matrix:
    nrows = mats[0].nrows
    rows = tuple(tuple(x for m in mats for x in m.rows[i]) for i in range(nrows))
    return Matrix(field, nrows, sum(m.ncols for m in mats), rows)


def vstack(field: Field, mats: Sequence[Matrix]) -> Matrix:
    ncols = mats[0].ncols
    rows = tuple(r for m in mats for r in m.rows)
    return Matrix(field, sum(m.nrows for m in mats), ncols, rows)


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of an exact linear solve.

    ``status`` is ``"unique"``, ``"none"`` or ``"many"``. For solvable systems
    ``solution`` is a particular solution (free variables set to zero) and
    ``kernel`` is a basis of the homogeneous solution space.
    """

    status: str
    solution: Vector | None
    kernel: tuple[Vector, ...]

    @property
    def solvable(self) -> bool:
        return self.status != "none"


def solve_linear(a: Matrix, b: Vector) -> LinearSolution:
    """Solve A x = b exactly by Gaussian elimination."""
    if len(b) != a.nrows:
        raise ShapeError(f"solve: matrix has {a.nrows} rows but vector has length {len(b)}")
    f = a.field
    augmented = hstack(f, [a, Matrix.from_cols(f, [b], a.nrows)])
    reduced, pivots = augmented.rref()
    if a.ncols in pivots:
        return LinearSolution("none", None, ())
    x = [f.zero] * a.ncols
    for row_idx, pc in enumerate(pivots):
        x[pc] = reduced.entry(row_idx, a.ncols)
    kernel = a.kernel()
    status = "unique" if not kernel else "many"
    return LinearSolution(status, tuple(x), kernel)


def solve_matrix(a: Matrix, b: Matrix) -> Matrix | None:
    """Solve A X = B column by column; None when any column is inconsistent."""
    cols = []
    for j in range(b.ncols):
        sol = solve_linear(a, b.col(j))
        if not sol.solvable:
            return None
        cols.append(sol.solution)
    return Matrix.from_cols(a.field, cols, a.ncols)
