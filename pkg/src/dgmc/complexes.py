"""Bounded, finitely generated chain complexes with exact homology.

Homological convention: differentials lower the degree by one, so the
matrix of d in degree n has shape dims(n-1) x dims(n).  Every construction
revalidates d∘d = 0 at build time.  Basis order everywhere is
lexicographic in (degree, constructor-supplied index).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import FieldMismatch, NotSquareZero, ShapeMismatch, ShiftNotZero
from .fields import PrimeField
from .linalg import Matrix


class ChainComplex:
    """A complex C with dims: degree -> dimension and d_n: C_n -> C_{n-1}."""

    __slots__ = ("field", "dims", "diffs")

    def __init__(self, field, dims, diffs, _validated=False):
        self.field = field
        self.dims = {n: d for n, d in dims.items() if d}
        self.diffs = diffs
        if not _validated:
            self._validate()

    def _validate(self):
        for n, m in list(self.diffs.items()):
            want = (self.dim(n - 1), self.dim(n))
            if m.shape != want:
                raise ShapeMismatch(f"d_{n} has shape {m.shape}, expected {want}")
            if m.field != self.field:
                raise FieldMismatch(f"d_{n} over {m.field!r}")
        for n in sorted(self.dims):
            a = self.d(n + 1)
            b = self.d(n)
            if a.ncols and b.nrows and not (b @ a).is_zero():
                raise NotSquareZero(n + 1)

    def dim(self, n: int) -> int:
        return self.dims.get(n, 0)

    def d(self, n: int) -> Matrix:
        m = self.diffs.get(n)
        if m is None:
            return Matrix.zeros(self.field, self.dim(n - 1), self.dim(n))
        return m

    @property
    def degree_range(self):
        if not self.dims:
            return (0, -1)  # empty complex
        return (min(self.dims), max(self.dims))

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def degrees(self):
        return sorted(self.dims)

    def euler_characteristic(self):
        return sum((-1) ** (n % 2) * d for n, d in self.dims.items())

    def __eq__(self, other):
        if not isinstance(other, ChainComplex):
            return NotImplemented
        if self.field != other.field or self.dims != other.dims:
            return False
        return all(self.d(n) == other.d(n) for n in self.dims)

    def __repr__(self):
        return f"ChainComplex({self.field!r}, dims={dict(sorted(self.dims.items()))})"


def make_complex(dims, differentials, field) -> ChainComplex:
    """Validated complex from per-degree dimensions and differential rows.

    ``differentials`` maps n to the matrix of d_n (rows over the degree
    n-1 basis), given as a Matrix or a list of rows of scalars.
    """
    diffs = {}
    clean_dims = {int(n): int(d) for n, d in dims.items() if d}
    for n, m in differentials.items():
        n = int(n)
        if not isinstance(m, Matrix):
            m = Matrix.from_rows(
                field, m, ncols=clean_dims.get(n, 0)
            ) if m else Matrix.zeros(field, clean_dims.get(n - 1, 0), clean_dims.get(n, 0))
        if m.nrows == 0 and m.ncols == 0:
            continue
        diffs[n] = m
    return ChainComplex(field, clean_dims, diffs)


def zero_complex(field) -> ChainComplex:
    return ChainComplex(field, {}, {}, _validated=True)


def unit_complex(field, degree: int = 0) -> ChainComplex:
    """k concentrated in one degree."""
    return ChainComplex(field, {degree: 1}, {}, _validated=True)


@dataclass
class HomologyReport:
    """Exact homology ranks with cycle representatives.

    ranks covers every degree where the complex has a basis element;
    representatives(n) lists rank(n) cycles, linearly independent modulo
    boundaries.
    """

    ranks: dict
    representatives: dict = dc_field(default_factory=dict)

    def nonzero(self):
        return {n: r for n, r in self.ranks.items() if r}


def homology(c: ChainComplex) -> HomologyReport:
    ranks = {}
    reps = {}
    for n in c.degrees():
        dn = c.d(n)
        dn1 = c.d(n + 1)
        kernel = dn.nullspace() if dn.nrows else [
            _unit_vector(c.field, c.dim(n), i) for i in range(c.dim(n))
        ]
        image = [dn1.col(j) for j in range(dn1.ncols)] if dn1.ncols else []
        ranks[n] = len(kernel) - _rank_of(c.field, image, c.dim(n))
        reps[n] = _complete_mod(c.field, image, kernel, c.dim(n))
        assert len(reps[n]) == ranks[n]
    return HomologyReport(ranks=ranks, representatives=reps)


def homology_ranks(c: ChainComplex) -> dict:
    """Ranks only (skips representative extraction)."""
    out = {}
    for n in c.degrees():
        dn = c.d(n)
        rk_dn = dn.rank() if dn.nrows else 0
        dn1 = c.d(n + 1)
        rk_dn1 = dn1.rank() if dn1.ncols else 0
        out[n] = c.dim(n) - rk_dn - rk_dn1
    return out


def _unit_vector(field, n, i):
    v = [field.zero] * n
    v[i] = field.one
    return v


def _rank_of(field, vecs, length):
    if not vecs or length == 0:
        return 0
    return Matrix.from_rows(field, vecs, ncols=length).rank()


def _complete_mod(field, image, kernel, length):
    """Kernel vectors completing the span of ``image`` inside the kernel."""
    rows = list(image)
    rank = _rank_of(field, rows, length)
    out = []
    for z in kernel:
        r2 = _rank_of(field, rows + [z], length)
        if r2 > rank:
            out.append(z)
            rows.append(z)
            rank = r2
    return out


class ChainMap:
    """Degreewise map between complexes, commuting with d up to (-1)^shift."""

    __slots__ = ("source", "target", "degree_shift", "components")

    def __init__(self, source, target, components, degree_shift=0, _validated=False):
        if source.field != target.field:
            raise FieldMismatch("chain map between different fields")
        self.source = source
        self.target = target
        self.degree_shift = degree_shift
        self.components = {
            n: m for n, m in components.items() if m.nrows or m.ncols
        }
        if not _validated:
            self._validate()

    def component(self, n: int) -> Matrix:
        m = self.components.get(n)
        if m is None:
            return Matrix.zeros(
                self.source.field, self.target.dim(n + self.degree_shift), self.source.dim(n)
            )
        return m

    def _validate(self):
        s = self.degree_shift
        for n, m in self.components.items():
            want = (self.target.dim(n + s), self.source.dim(n))
            if m.shape != want:
                raise ShapeMismatch(f"component {n} has shape {m.shape}, expected {want}")
        sign = self.source.field.from_int((-1) ** (s % 2))
        for n in self.source.degrees():
            lhs = self.target.d(n + s) @ self.component(n)
            rhs = (self.component(n - 1) @ self.source.d(n)).scale(sign)
            if lhs != rhs:
                raise ShapeMismatch(f"chain map does not commute with d at degree {n}")

    @classmethod
    def identity(cls, c: ChainComplex):
        comps = {n: Matrix.identity(c.field, c.dim(n)) for n in c.degrees()}
        return cls(c, c, comps, 0, _validated=True)

    @classmethod
    def zero(cls, source, target, degree_shift=0):
        return cls(source, target, {}, degree_shift, _validated=True)

    def __eq__(self, other):
        if not isinstance(other, ChainMap):
            return NotImplemented
        if (self.source, self.target, self.degree_shift) != (
            other.source,
            other.target,
            other.degree_shift,
        ):
            return False
        degs = set(self.components) | set(other.components)
        return all(self.component(n) == other.component(n) for n in degs)


def cone(f: ChainMap) -> ChainComplex:
    """Mapping cone: cone(f)_n = target_n ⊕ source_{n-1}.

    Acyclic exactly when f is a quasi-isomorphism.
    """
    if f.degree_shift != 0:
        raise ShiftNotZero("cone requires a strict chain map")
    C, D = f.source, f.target
    field = C.field
    dims = {}
    degs = set(D.dims) | {n + 1 for n in C.dims}
    for n in degs:
        dims[n] = D.dim(n) + C.dim(n - 1)
    diffs = {}
    for n in sorted(dims):
        rows_top = Matrix.zeros(field, D.dim(n - 1), 0)
        top = D.d(n).hstack(f.component(n - 1))
        bottom = Matrix.zeros(field, C.dim(n - 2), D.dim(n)).hstack(
            C.d(n - 1).scale(field.from_int(-1))
        )
        m = _vstack(field, top, bottom)
        if m.nrows or m.ncols:
            diffs[n] = m
    return ChainComplex(field, dims, diffs)


def _vstack(field, a, b):
    if a.ncols != b.ncols:
        raise ShapeMismatch("vstack column mismatch")
    rows = a.to_rows() + b.to_rows()
    if not rows:
        return Matrix.zeros(field, 0, a.ncols)
    return Matrix.from_rows(field, rows, ncols=a.ncols)


def shift(c: ChainComplex, k: int) -> ChainComplex:
    """shift(c, k)_q = c_{q-k}, differential scaled by (-1)^k."""
    dims = {n + k: d for n, d in c.dims.items()}
    sign = c.field.from_int((-1) ** (k % 2))
    diffs = {n + k: m.scale(sign) for n, m in c.diffs.items()}
    return ChainComplex(c.field, dims, diffs, _validated=True)


def direct_sum(c: ChainComplex, d: ChainComplex) -> ChainComplex:
    if c.field != d.field:
        raise FieldMismatch("direct_sum over different fields")
    field = c.field
    dims = {}
    for n in set(c.dims) | set(d.dims):
        dims[n] = c.dim(n) + d.dim(n)
    diffs = {}
    for n in sorted(dims):
        top = c.d(n).hstack(Matrix.zeros(field, c.dim(n - 1), d.dim(n)))
        bot = Matrix.zeros(field, d.dim(n - 1), c.dim(n)).hstack(d.d(n))
        m = _vstack(field, top, bot)
        if m.nrows or m.ncols:
            diffs[n] = m
    return ChainComplex(field, dims, diffs)


def tensor(c: ChainComplex, d: ChainComplex) -> ChainComplex:
    """Tensor product with the Koszul rule d(x⊗y) = dx⊗y + (-1)^{|x|} x⊗dy.

    Degree-n basis: blocks (p, q) with p+q = n, p ascending over c's
    support; within a block the pair index (i, j) is i-major.
    """
    if c.field != d.field:
        raise FieldMismatch("tensor over different fields")
    field = c.field
    if not c.dims or not d.dims:
        return zero_complex(field)

    def blocks(n):
        return [(p, n - p) for p in sorted(c.dims) if d.dim(n - p)]

    dims = {}
    lo = min(c.dims) + min(d.dims)
    hi = max(c.dims) + max(d.dims)
    for n in range(lo, hi + 1):
        dims[n] = sum(c.dim(p) * d.dim(q) for p, q in blocks(n))
    diffs = {}
    for n in range(lo, hi + 1):
        src = blocks(n)
        tgt = blocks(n - 1)
        if not src or not tgt:
            continue
        tgt_offsets = {}
        off = 0
        for p, q in tgt:
            tgt_offsets[(p, q)] = off
            off += c.dim(p) * d.dim(q)
        nrows = off
        cols = []
        col_entries = []  # list of dict row->scalar per column
        for p, q in src:
            dcp = c.d(p)
            ddq = d.d(q)
            sgn = field.from_int((-1) ** (p % 2))
            for i in range(c.dim(p)):
                for j in range(d.dim(q)):
                    entries = {}
                    if (p - 1, q) in tgt_offsets and dcp.nrows:
                        base = tgt_offsets[(p - 1, q)]
                        for i2 in range(c.dim(p - 1)):
                            v = dcp.entry(i2, i)
                            if v:
                                entries[base + i2 * d.dim(q) + j] = v
                    if (p, q - 1) in tgt_offsets and ddq.nrows:
                        base = tgt_offsets[(p, q - 1)]
                        for j2 in range(d.dim(q - 1)):
                            v = ddq.entry(j2, j)
                            if v:
                                k = base + i * d.dim(q - 1) + j2
                                entries[k] = field.add(
                                    entries.get(k, field.zero), field.mul(sgn, v)
                                )
                    col_entries.append(entries)
        rows = [[field.zero] * len(col_entries) for _ in range(nrows)]
        for jcol, entries in enumerate(col_entries):
            for irow, v in entries.items():
                rows[irow][jcol] = v
        m = Matrix.from_rows(field, rows, ncols=len(col_entries)) if nrows else Matrix.zeros(field, 0, len(col_entries))
        if m.nrows or m.ncols:
            diffs[n] = m
    return ChainComplex(field, dims, diffs)


def is_quasi_iso(f: ChainMap) -> bool:
    """True iff cone(f) is acyclic (exact homology ranks all zero)."""
    if f.degree_shift != 0:
        raise ShiftNotZero("is_quasi_iso requires a strict chain map")
    ranks = homology_ranks(cone(f))
    return all(r == 0 for r in ranks.values())
