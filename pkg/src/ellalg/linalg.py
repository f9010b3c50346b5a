"""Dense exact linear algebra over an exact field.

Matrices are tuples of row tuples of field elements.  Subspaces of k^n are
kept in reduced row echelon form, so subspace equality is literal tuple
equality and every identity asserted elsewhere in the package is a
syntactic check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import FieldError


def _as_rows(field, rows):
    out = []
    for row in rows:
        r = []
        for x in row:
            if not field.contains(x):
                try:
                    x = field(x)
                except (TypeError, ValueError):
                    raise FieldError("matrix entry %r not in %r" % (x, field))
            r.append(x)
        out.append(tuple(r))
    return out


def rref(field, rows, ncols=None):
    """Reduced row echelon form.

    Returns (rank, pivot columns, reduced rows); zero rows are dropped.
    """
    rows = [list(r) for r in _as_rows(field, rows)]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if any(len(r) != ncols for r in rows):
        raise FieldError("ragged matrix")
    zero = field.zero
    pivots = []
    piv_r = 0
    for col in range(ncols):
        sel = None
        for i in range(piv_r, len(rows)):
            if rows[i][col] != zero:
                sel = i
                break
        if sel is None:
            continue
        rows[piv_r], rows[sel] = rows[sel], rows[piv_r]
        inv = field.invert(rows[piv_r][col])
        rows[piv_r] = [x * inv for x in rows[piv_r]]
        for i in range(len(rows)):
            if i != piv_r and rows[i][col] != zero:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[piv_r])]
        pivots.append(col)
        piv_r += 1
        if piv_r == len(rows):
            break
    return piv_r, pivots, tuple(tuple(r) for r in rows[:piv_r])


def nullspace(field, rows, ncols):
    """Basis (list of vectors) of {v : M v = 0} for the matrix with given rows."""
    rank, pivots, red = rref(field, rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    zero, one = field.zero, field.one
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(tuple(v))
    return basis


class Echelon:
    """Incremental row-echelon accumulator for rank and membership queries.

    Rows are kept forward-reduced only (not fully reduced), which makes
    inserts cheap; `subspace()` produces the canonical form when needed.
    """

    def __init__(self, field, ncols):
        self.field = field
        self.ncols = ncols
        self.rows = {}  # pivot column -> normalized row

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, row):
        zero = self.field.zero
        row = list(row)
        for c in sorted(self.rows):
            if row[c] != zero:
                f = row[c]
                row = [a - f * b for a, b in zip(row, self.rows[c])]
        return row

    def insert(self, row):
        """Returns True when the row increases the rank."""
        zero = self.field.zero
        red = self.reduce(row)
        for c, v in enumerate(red):
            if v != zero:
                inv = self.field.invert(v)
                self.rows[c] = tuple(x * inv for x in red)
                return True
        return False

    def contains(self, row):
        zero = self.field.zero
        return all(v == zero for v in self.reduce(row))

    def subspace(self):
        return Subspace.from_vectors(self.field, self.ncols, list(self.rows.values()))


@dataclass(frozen=True)
class Subspace:
    """A subspace of k^ambient in canonical (RREF) form."""

    field: object
    ambient: int
    basis: tuple

    @classmethod
    def from_vectors(cls, field, ambient, vectors):
        vectors = list(vectors)
        if not vectors:
            return cls(field, ambient, ())
        _, _, red = rref(field, vectors, ambient)
        return cls(field, ambient, red)

    @classmethod
    def zero(cls, field, ambient):
        return cls(field, ambient, ())

    @classmethod
    def full(cls, field, ambient):
        rows = []
        for i in range(ambient):
            row = [field.zero] * ambient
            row[i] = field.one
            rows.append(tuple(row))
        return cls(field, ambient, tuple(rows))

    @property
    def dim(self):
        return len(self.basis)

    def _check_ambient(self, other):
        if self.ambient != other.ambient or self.field != other.field:
            raise FieldError("ambient space mismatch")

    def add(self, other):
        self._check_ambient(other)
        return Subspace.from_vectors(
            self.field, self.ambient, list(self.basis) + list(other.basis)
        )

    def intersect(self, other):
        """Row-space intersection via the nullspace of [U^T | -V^T]."""
        self._check_ambient(other)
        r, s = self.dim, other.dim
        if r == 0 or s == 0:
            return Subspace.zero(self.field, self.ambient)
        rows = []
        for i in range(self.ambient):
            rows.append(
                tuple(self.basis[j][i] for j in range(r))
                + tuple(-other.basis[j][i] for j in range(s))
            )
        vecs = []
        for sol in nullspace(self.field, rows, r + s):
            v = [self.field.zero] * self.ambient
            for j in range(r):
                if sol[j] != self.field.zero:
                    v = [a + sol[j] * b for a, b in zip(v, self.basis[j])]
            vecs.append(tuple(v))
        return Subspace.from_vectors(self.field, self.ambient, vecs)

    def contains_vector(self, v):
        if len(v) != self.ambient:
            raise FieldError("vector length mismatch")
        v = list(v)
        zero = self.field.zero
        piv = {}
        col = 0
        for row in self.basis:
            while row[col] == zero:
                col += 1
            piv[col] = row
        for c, row in piv.items():
            if v[c] != zero:
                f = v[c]
                v = [a - f * b for a, b in zip(v, row)]
        return all(x == zero for x in v)

    def contains(self, other):
        self._check_ambient(other)
        return all(self.contains_vector(v) for v in other.basis)

    def product(self, other, bilinear, ambient):
        """Span of pairwise images of basis vectors under a bilinear map."""
        if self.field != other.field:
            raise FieldError("field mismatch")
        vecs = [bilinear(u, v) for u in self.basis for v in other.basis]
        return Subspace.from_vectors(self.field, ambient, vecs)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient, self.basis))
