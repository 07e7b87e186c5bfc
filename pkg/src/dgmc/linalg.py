"""Dense exact matrices over F_p and Q.

F_p matrices are stored as numpy int64 arrays and eliminated by the
kernel in dgmc._kernels (compiled when available).  Q matrices are lists
of Fractions; rank goes through fraction-free Bareiss elimination on
denominator-cleared integer rows, reduced echelon forms use Fraction
Gauss-Jordan.  Everything is exact; there is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

from . import _kernels
from .errors import FieldMismatch, ShapeMismatch
from .fields import PrimeField, Rationals


class Matrix:
    """Immutable-by-convention dense matrix over a PrimeField or Rationals."""

    __slots__ = ("field", "nrows", "ncols", "_a", "_rows")

    def __init__(self, field, nrows, ncols, data):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        if isinstance(field, PrimeField):
            self._a = data  # numpy int64, shape (nrows, ncols), reduced mod p
            self._rows = None
        else:
            self._a = None
            self._rows = data  # list of lists of Fraction

    # ------------------------------------------------------------ builders

    @classmethod
    def zeros(cls, field, nrows, ncols):
        if isinstance(field, PrimeField):
            return cls(field, nrows, ncols, np.zeros((nrows, ncols), dtype=np.int64))
        return cls(field, nrows, ncols, [[Fraction(0)] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, field, n):
        m = cls.zeros(field, n, n)
        if isinstance(field, PrimeField):
            np.fill_diagonal(m._a, 1)
        else:
            for i in range(n):
                m._rows[i][i] = Fraction(1)
        return m

    @classmethod
    def from_rows(cls, field, rows, ncols=None):
        rows = [list(r) for r in rows]
        nrows = len(rows)
        if ncols is None:
            if nrows == 0:
                raise ShapeMismatch("cannot infer column count of empty matrix")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ShapeMismatch("ragged rows")
        if isinstance(field, PrimeField):
            a = np.array(rows, dtype=np.int64).reshape(nrows, ncols) % field.p
            return cls(field, nrows, ncols, a)
        return cls(field, nrows, ncols, [[Fraction(x) for x in r] for r in rows])

    @classmethod
    def column(cls, field, vec):
        return cls.from_rows(field, [[x] for x in vec], ncols=1)

    # ------------------------------------------------------------ access

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def entry(self, i, j):
        if self._a is not None:
            return int(self._a[i, j])
        return self._rows[i][j]

    def row(self, i):
        if self._a is not None:
            return [int(x) for x in self._a[i]]
        return list(self._rows[i])

    def col(self, j):
        if self._a is not None:
            return [int(x) for x in self._a[:, j]]
        return [r[j] for r in self._rows]

    def to_rows(self):
        return [self.row(i) for i in range(self.nrows)]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.field != other.field or self.shape != other.shape:
            return False
        if self._a is not None:
            return bool(np.array_equal(self._a, other._a))
        return self._rows == other._rows

    def __hash__(self):
        return hash((self.field, self.nrows, self.ncols, tuple(map(tuple, self.to_rows()))))

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.nrows}x{self.ncols})"

    def is_zero(self):
        if self._a is not None:
            return not self._a.any()
        return all(x == 0 for r in self._rows for x in r)

    # ------------------------------------------------------------ algebra

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} + {other.shape}")
        if self._a is not None:
            return Matrix(self.field, self.nrows, self.ncols, (self._a + other._a) % self.field.p)
        rows = [
            [a + b for a, b in zip(r1, r2)]
            for r1, r2 in zip(self._rows, other._rows)
        ]
        return Matrix(self.field, self.nrows, self.ncols, rows)

    def __sub__(self, other):
        return self + other.scale(self.field.from_int(-1))

    def scale(self, c):
        if self._a is not None:
            return Matrix(self.field, self.nrows, self.ncols, (self._a * (c % self.field.p)) % self.field.p)
        rows = [[c * x for x in r] for r in self._rows]
        return Matrix(self.field, self.nrows, self.ncols, rows)

    def __matmul__(self, other):
        self._check(other)
        if self.ncols != other.nrows:
            raise ShapeMismatch(f"{self.shape} @ {other.shape}")
        if self._a is not None:
            return Matrix(self.field, self.nrows, other.ncols, (self._a @ other._a) % self.field.p)
        rows = []
        for i in range(self.nrows):
            ri = self._rows[i]
            out = []
            for j in range(other.ncols):
                s = Fraction(0)
                for k in range(self.ncols):
                    if ri[k]:
                        s += ri[k] * other._rows[k][j]
                out.append(s)
            rows.append(out)
        return Matrix(self.field, self.nrows, other.ncols, rows)

    def transpose(self):
        if self._a is not None:
            return Matrix(self.field, self.ncols, self.nrows, np.ascontiguousarray(self._a.T))
        rows = [[self._rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        return Matrix(self.field, self.ncols, self.nrows, rows)

    def hstack(self, other):
        self._check(other)
        if self.nrows != other.nrows:
            raise ShapeMismatch("hstack row mismatch")
        if self._a is not None:
            return Matrix(self.field, self.nrows, self.ncols + other.ncols, np.hstack([self._a, other._a]))
        rows = [r1 + r2 for r1, r2 in zip(self._rows, other._rows)]
        return Matrix(self.field, self.nrows, self.ncols + other.ncols, rows)

    def apply(self, vec):
        """Matrix times column vector (plain list) -> list."""
        if len(vec) != self.ncols:
            raise ShapeMismatch("vector length mismatch")
        if self._a is not None:
            v = np.array([x % self.field.p for x in vec], dtype=np.int64)
            return [int(x) for x in (self._a @ v) % self.field.p]
        out = []
        for r in self._rows:
            s = Fraction(0)
            for a, x in zip(r, vec):
                if a and x:
                    s += a * x
            out.append(s)
        return out

    # ------------------------------------------------------------ elimination

    def rref(self):
        """(R, pivots): reduced row echelon form and pivot columns."""
        if self._a is not None:
            R, piv = _kernels.rref_mod(self._a, self.field.p)
            return Matrix(self.field, self.nrows, self.ncols, R), list(piv)
        R, piv = _rref_fractions(self._rows)
        return Matrix(self.field, self.nrows, self.ncols, R), piv

    def rank(self):
        if self._a is not None:
            return len(self.rref()[1])
        return _bareiss_rank(self._rows)

    def nullspace(self):
        """Basis of the right kernel, as a list of length-ncols vectors."""
        R, piv = self.rref()
        free = [j for j in range(self.ncols) if j not in piv]
        basis = []
        one = self.field.one
        for j in free:
            v = [self.field.zero] * self.ncols
            v[j] = one
            for r, pc in enumerate(piv):
                v[pc] = self.field.neg(R.entry(r, j))
            basis.append(v)
        return basis

    def solve(self, b):
        """One solution x of A x = b, or None if the system is infeasible."""
        if len(b) != self.nrows:
            raise ShapeMismatch("rhs length mismatch")
        aug = self.hstack(Matrix.column(self.field, b))
        R, piv = aug.rref()
        if self.ncols in piv:
            return None
        x = [self.field.zero] * self.ncols
        for r, pc in enumerate(piv):
            x[pc] = R.entry(r, self.ncols)
        return x


def _rref_fractions(rows):
    R = [list(r) for r in rows]
    m = len(R)
    n = len(R[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        pr = None
        for i in range(r, m):
            if R[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        R[r], R[pr] = R[pr], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(m):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R, pivots


def _bareiss_rank(rows):
    """Rank via fraction-free (Bareiss) elimination on cleared-denominator rows."""
    M = []
    for r in rows:
        den = 1
        for x in r:
            den = den * x.denominator // gcd(den, x.denominator)
        M.append([int(x * den) for x in r])
    m = len(M)
    n = len(M[0]) if m else 0
    rank = 0
    prev = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        pr = None
        for i in range(r, m):
            if M[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        for i in range(r + 1, m):
            for j in range(c + 1, n):
                M[i][j] = (M[r][c] * M[i][j] - M[i][c] * M[r][j]) // prev
            M[i][c] = 0
        prev = M[r][c]
        rank += 1
        r += 1
    return rank


def vectors_rank(field, vecs, length):
    if not vecs:
        return 0
    return Matrix.from_rows(field, vecs, ncols=length).rank()
