"""Exact linear algebra over a quadratic tower.

Matrices carry their TowerSpec and store immutable tuple-of-tuples entries.
Elimination uses the Bareiss fraction-free scheme: every division is by a
previous pivot and therefore exact, which keeps the rational-function
coefficients inside TowerElem entries from blowing up mid-computation the
way naive Gaussian elimination does.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exactfield import TowerElem, TowerSpec

__all__ = [
    "LinalgError",
    "SingularMatrix",
    "ShapeMismatch",
    "Matrix",
]


class LinalgError(ArithmeticError):
    pass


class SingularMatrix(LinalgError):
    pass


class ShapeMismatch(LinalgError):
    pass


def _coerce_entry(spec: TowerSpec, value) -> TowerElem:
    if isinstance(value, TowerElem):
        if value.spec == spec:
            return value
        return value.lift(spec)
    if isinstance(value, (int, Fraction)):
        return spec.rational(value)
    raise TypeError(f"cannot use {value!r} as a matrix entry")


class Matrix:
    """An exact matrix over a fixed tower."""

    __slots__ = ("spec", "rows", "nrows", "ncols")

    def __init__(self, spec: TowerSpec, rows: Sequence[Sequence]):
        entries = tuple(tuple(_coerce_entry(spec, v) for v in row) for row in rows)
        if not entries:
            raise ShapeMismatch("matrix needs at least one row")
        width = len(entries[0])
        if width == 0 or any(len(r) != width for r in entries):
            raise ShapeMismatch("ragged or empty matrix rows")
        self.spec = spec
        self.rows = entries
        self.nrows = len(entries)
        self.ncols = width

    @classmethod
    def identity(cls, spec: TowerSpec, n: int) -> "Matrix":
        one, zero = spec.one(), spec.zero()
        return cls(spec, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, spec: TowerSpec, nrows: int, ncols: int) -> "Matrix":
        z = spec.zero()
        return cls(spec, [[z] * ncols for _ in range(nrows)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> TowerElem:
        i, j = ij
        return self.rows[i][j]

    def _key(self):
        return (self.spec, self.rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        body = "; ".join(", ".join(repr(v) for v in row) for row in self.rows)
        return f"Matrix[{body}]"

    def transpose(self) -> "Matrix":
        return Matrix(self.spec, list(zip(*self.rows)))

    def scale(self, c) -> "Matrix":
        ce = _coerce_entry(self.spec, c)
        return Matrix(self.spec, [[v * ce for v in row] for row in self.rows])

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ShapeMismatch("matrix addition shape mismatch")
        return Matrix(
            self.spec,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ShapeMismatch("matrix product shape mismatch")
        cols = other.transpose().rows
        out = []
        for row in self.rows:
            out.append([_dot(row, col) for col in cols])
        return Matrix(self.spec, out)

    def apply(self, vector: Sequence) -> list[TowerElem]:
        vec = [_coerce_entry(self.spec, v) for v in vector]
        if len(vec) != self.ncols:
            raise ShapeMismatch("vector length mismatch")
        return [_dot(row, vec) for row in self.rows]

    def lift(self, spec: TowerSpec) -> "Matrix":
        if spec == self.spec:
            return self
        return Matrix(spec, [[v.lift(spec) for v in row] for row in self.rows])

    def specialize(self, assignment) -> "Matrix":
        from .exactfield import specialization_plan

        plan = specialization_plan(self.spec, assignment)
        return Matrix(plan.new_spec, [[plan.apply(v) for v in row] for row in self.rows])

    def embed(self, values=None):
        return [[v.embed(values) for v in row] for row in self.rows]

    # -- elimination --------------------------------------------------------------

    def _bareiss(self) -> tuple[list[list[TowerElem]], list[int], int, TowerElem]:
        """Fraction-free forward elimination.

        Returns (echelon rows, pivot column list, permutation sign,
        last pivot).  After step k the trailing rows have been updated by
        row_i <- (p_k * row_i - row_i[c] * row_k) / p_{k-1}, an exact
        division per Bareiss.
        """
        rows = [list(r) for r in self.rows]
        pivots: list[int] = []
        sign = 1
        prev = self.spec.one()
        r = 0
        for c in range(self.ncols):
            pivot_row = next(
                (i for i in range(r, self.nrows) if not rows[i][c].is_zero), None
            )
            if pivot_row is None:
                continue
            if pivot_row != r:
                rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
                sign = -sign
            p = rows[r][c]
            for i in range(r + 1, self.nrows):
                head = rows[i][c]
                if head.is_zero:
                    row = rows[i]
                    for j in range(c + 1, self.ncols):
                        v = row[j]
                        if not v.is_zero:
                            row[j] = (p * v) / prev
                else:
                    row = rows[i]
                    ref = rows[r]
                    for j in range(c + 1, self.ncols):
                        row[j] = (p * row[j] - head * ref[j]) / prev
                rows[i][c] = self.spec.zero()
            pivots.append(c)
            prev = p
            r += 1
            if r == self.nrows:
                break
        return rows, pivots, sign, prev

    def rank(self) -> int:
        return len(self._bareiss()[1])

    def det(self) -> TowerElem:
        if not self.is_square:
            raise ShapeMismatch("determinant of a non-square matrix")
        rows, pivots, sign, last = self._bareiss()
        if len(pivots) < self.nrows:
            return self.spec.zero()
        return last if sign == 1 else -last

    def _rref(self) -> tuple[list[list[TowerElem]], list[int]]:
        rows, pivots, _, _ = self._bareiss()
        one = self.spec.one()
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            inv = rows[r][c].inverse()
            rows[r] = [v * inv for v in rows[r]]
            rows[r][c] = one
            for i in range(r):
                f = rows[i][c]
                if f.is_zero:
                    continue
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        return rows, pivots

    def kernel_basis(self) -> list[list[TowerElem]]:
        """A basis of the right kernel, one vector per free column."""
        rows, pivots = self._rref()
        one, zero = self.spec.one(), self.spec.zero()
        pivot_set = set(pivots)
        basis = []
        for f in range(self.ncols):
            if f in pivot_set:
                continue
            vec = [zero] * self.ncols
            vec[f] = one
            for r, c in enumerate(pivots):
                vec[c] = -rows[r][f]
            basis.append(vec)
        return basis

    def solve(self, rhs: Sequence) -> tuple[list[TowerElem], list[list[TowerElem]]] | None:
        """All solutions of A x = rhs as (particular, kernel basis); None if none."""
        vec = [_coerce_entry(self.spec, v) for v in rhs]
        if len(vec) != self.nrows:
            raise ShapeMismatch("right-hand side length mismatch")
        aug = Matrix(self.spec, [list(r) + [v] for r, v in zip(self.rows, vec)])
        rows, pivots = aug._rref()
        if self.ncols in pivots:
            return None
        zero = self.spec.zero()
        particular = [zero] * self.ncols
        for r, c in enumerate(pivots):
            particular[c] = rows[r][self.ncols]
        return particular, self.kernel_basis()

    def inverse(self) -> "Matrix":
        if not self.is_square:
            raise ShapeMismatch("inverse of a non-square matrix")
        n = self.nrows
        eye = Matrix.identity(self.spec, n)
        aug = Matrix(self.spec, [list(a) + list(b) for a, b in zip(self.rows, eye.rows)])
        rows, pivots = aug._rref()
        if pivots != list(range(n)):
            raise SingularMatrix("matrix is not invertible")
        return Matrix(self.spec, [row[n:] for row in rows])


def _dot(a: Sequence[TowerElem], b: Sequence[TowerElem]) -> TowerElem:
    total = None
    for x, y in zip(a, b):
        if x.is_zero or y.is_zero:
            continue
        term = x * y
        total = term if total is None else total + term
    if total is None:
        return a[0].spec.zero()
    return total
