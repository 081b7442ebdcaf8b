"""Dense exact linear algebra: matrices, solving, kernels, images, subspaces.

Everything is computed over one of the exact fields from :mod:`fields`, so
rank, kernel and subspace equality are exact decisions, never numerical
estimates.  Subspaces are kept in reduced row echelon form, which makes the
echelon basis a canonical representative: two subspaces are equal iff their
stored bases are identical.
"""

from __future__ import annotations

from .errors import FieldMismatch


def vzero(field, n):
    z = field.zero
    return tuple(z for _ in range(n))


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u):
    return tuple(c * a for a in u)


def is_zero_vec(u):
    return not any(u)


def rref(rows, field):
    """Reduced row echelon form of a list of row vectors.

    Returns ``(reduced_rows, pivot_columns)`` with zero rows dropped and the
    remaining rows sorted by pivot column.  The input is not modified.
    """
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots = []
    row = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(row, len(work)):
            if work[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        work[row], work[pivot_row] = work[pivot_row], work[row]
        pivot_val = work[row][col]
        if pivot_val != field.one:
            inv = field.one / pivot_val
            work[row] = [inv * x for x in work[row]]
        prow = work[row]
        for r in range(len(work)):
            if r == row:
                continue
            factor = work[r][col]
            if not factor:
                continue
            target = work[r]
            for c in range(col, ncols):
                if prow[c]:
                    target[c] = target[c] - factor * prow[c]
        pivots.append(col)
        row += 1
        if row == len(work):
            break
    reduced = [tuple(work[i]) for i in range(row)]
    return reduced, pivots


class Mat:
    """Immutable dense matrix over an exact field."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field, entries):
        entries = tuple(tuple(r) for r in entries)
        self.field = field
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else 0
        for r in entries:
            if len(r) != self.cols:
                raise ValueError("ragged matrix")
        self.entries = entries

    @classmethod
    def identity(cls, field, n):
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, rows, cols):
        z = field.zero
        return cls(field, [[z] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, field, columns, rows=None):
        if not columns:
            return cls.zeros(field, rows or 0, 0)
        n = len(columns[0])
        return cls(field, [[col[i] for col in columns] for i in range(n)])

    def column(self, j):
        return tuple(self.entries[i][j] for i in range(self.rows))

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def apply(self, vec):
        """Matrix times coordinate column."""
        if len(vec) != self.cols:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} on vector of length {len(vec)}")
        out = []
        for row in self.entries:
            acc = self.field.zero
            for a, x in zip(row, vec):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def __matmul__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        if self.field != other.field:
            raise FieldMismatch(self.field, other.field)
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        zero = self.field.zero
        bt = other.transpose().entries
        out = []
        for row in self.entries:
            out_row = []
            for col in bt:
                acc = zero
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return Mat(self.field, out)

    def transpose(self):
        return Mat(self.field, [[self.entries[i][j] for i in range(self.rows)]
                                for j in range(self.cols)])

    def rank(self):
        return len(rref(self.entries, self.field)[0])

    def is_zero(self):
        return all(not x for row in self.entries for x in row)

    def inverse(self):
        """Inverse of a square matrix, or None if singular."""
        if self.rows != self.cols:
            return None
        n = self.rows
        aug = [list(row) + list(ident_row)
               for row, ident_row in zip(self.entries, Mat.identity(self.field, n).entries)]
        reduced, pivots = rref(aug, self.field)
        if pivots != list(range(n)):
            return None
        return Mat(self.field, [row[n:] for row in reduced])

    def __eq__(self, other):
        return (isinstance(other, Mat) and self.field == other.field
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"Mat[{self.rows}x{self.cols}]({body})"


class Subspace:
    """Subspace of coordinate space, stored as its canonical echelon basis."""

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, field, ambient, basis, pivots):
        self.field = field
        self.ambient = ambient
        self.basis = tuple(basis)
        self.pivots = tuple(pivots)

    @classmethod
    def from_vectors(cls, field, ambient, vectors):
        vectors = [v for v in vectors if any(v)]
        for v in vectors:
            if len(v) != ambient:
                raise ValueError("vector length does not match ambient dimension")
        basis, pivots = rref(vectors, field)
        return cls(field, ambient, basis, pivots)

    @classmethod
    def zero(cls, field, ambient):
        return cls(field, ambient, (), ())

    @classmethod
    def full(cls, field, ambient):
        return cls.from_vectors(field, ambient, Mat.identity(field, ambient).entries)

    @property
    def dim(self):
        return len(self.basis)

    def is_zero(self):
        return not self.basis

    def is_full(self):
        return self.dim == self.ambient

    def _check_compatible(self, other):
        if self.ambient != other.ambient or self.field != other.field:
            raise ValueError("subspaces live in different ambient spaces")

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.ambient == other.ambient
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __add__(self, other):
        self._check_compatible(other)
        return Subspace.from_vectors(self.field, self.ambient,
                                     list(self.basis) + list(other.basis))

    def intersect(self, other):
        """Intersection via the kernel of the stacked coefficient system."""
        self._check_compatible(other)
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.field, self.ambient)
        k, m = self.dim, other.dim
        # columns: coefficients on self.basis then (negated) other.basis
        rows = []
        for i in range(self.ambient):
            rows.append([self.basis[a][i] for a in range(k)]
                        + [-other.basis[b][i] for b in range(m)])
        sol = kernel_basis(Mat(self.field, rows))
        vectors = []
        for coeffs in sol.basis:
            v = vzero(self.field, self.ambient)
            for a in range(k):
                if coeffs[a]:
                    v = vadd(v, vscale(coeffs[a], self.basis[a]))
            vectors.append(v)
        return Subspace.from_vectors(self.field, self.ambient, vectors)

    def reduce_vector(self, vec):
        """Remainder of vec after eliminating all pivot coordinates."""
        v = list(vec)
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                for i in range(p, self.ambient):
                    if row[i]:
                        v[i] = v[i] - c * row[i]
        return tuple(v)

    def contains_vector(self, vec):
        return is_zero_vec(self.reduce_vector(vec))

    def contains(self, other):
        """True when every vector of `other` lies in this subspace."""
        self._check_compatible(other)
        return all(self.contains_vector(v) for v in other.basis)

    def coordinates_of(self, vec):
        """Coefficients of vec on the echelon basis, or None if outside."""
        coords = tuple(vec[p] for p in self.pivots)
        recon = vzero(self.field, self.ambient)
        for c, row in zip(coords, self.basis):
            if c:
                recon = vadd(recon, vscale(c, row))
        if recon != tuple(vec):
            return None
        return coords

    def linear_combination(self, coords):
        v = vzero(self.field, self.ambient)
        for c, row in zip(coords, self.basis):
            if c:
                v = vadd(v, vscale(c, row))
        return v

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def kernel_basis(m):
    """Canonical basis of the solution space of m·x = 0."""
    reduced, pivots = rref(m.entries, m.field)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    vectors = []
    for f in free:
        v = list(vzero(m.field, m.cols))
        v[f] = m.field.one
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        vectors.append(tuple(v))
    return Subspace.from_vectors(m.field, m.cols, vectors)


def image_basis(m):
    """Canonical basis of the column space of m."""
    return Subspace.from_vectors(m.field, m.rows, m.columns())


def solve(m, b):
    """Some solution x of m·x = b, or None when the system is inconsistent."""
    if len(b) != m.rows:
        raise ValueError("right-hand side has wrong length")
    aug = [list(row) + [bv] for row, bv in zip(m.entries, b)]
    reduced, pivots = rref(aug, m.field)
    if m.cols in pivots:
        return None
    x = list(vzero(m.field, m.cols))
    for row, p in zip(reduced, pivots):
        x[p] = row[m.cols]
    return tuple(x)
