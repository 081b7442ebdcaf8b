"""Finite-dimensional unital associative algebras given by structure constants.

An algebra of dimension d over an exact field is a d×d×d table:
``table[i][j][k]`` is the coefficient of basis k in the product of basis i
and basis j.  ``make_algebra`` re-proves associativity and the unit law on
every basis triple before handing the table out; derived constructions
(matrix algebras, tensor products, direct products) are built from validated
parts and verified through their own characteristic identities.
"""

from __future__ import annotations

from .errors import (AlgebraMismatch, FieldMismatch, InternalCheckFailed,
                     NotAssociative, NotCentralIdempotent, UnitFails)
from .linalg import (Mat, Subspace, image_basis, kernel_basis, vadd, vscale,
                     vzero)


class StructureAlgebra:
    """Unital (or, when unit is None, non-unital) structure-constant algebra."""

    def __init__(self, field, table, unit, labels=None):
        self.field = field
        self.dim = len(table)
        self.table = tuple(tuple(tuple(cell) for cell in row) for row in table)
        self.unit = None if unit is None else tuple(unit)
        if labels is None:
            labels = [f"b{i}" for i in range(self.dim)]
        self.labels = tuple(labels)
        # sparse view of each product row, used by every multiplication
        self._nz = tuple(
            tuple(tuple((k, v) for k, v in enumerate(cell) if v) for cell in row)
            for row in self.table
        )

    # -- elements -------------------------------------------------------

    def element(self, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != self.dim:
            raise ValueError(f"expected {self.dim} coefficients, got {len(coeffs)}")
        return AlgebraElement(self, coeffs)

    def basis_element(self, i):
        z = self.field.zero
        return AlgebraElement(self, tuple(self.field.one if j == i else z
                                          for j in range(self.dim)))

    def zero_element(self):
        return AlgebraElement(self, vzero(self.field, self.dim))

    def one(self):
        if self.unit is None:
            raise ValueError("algebra has no unit")
        return AlgebraElement(self, self.unit)

    # -- multiplication on raw coefficient tuples ------------------------

    def mul_vec(self, x, y):
        out = list(vzero(self.field, self.dim))
        nz = self._nz
        for i, xi in enumerate(x):
            if not xi:
                continue
            nzi = nz[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, v in nzi[j]:
                    out[k] = out[k] + c * v
        return tuple(out)

    def _basis_times_vec(self, i, y):
        out = list(vzero(self.field, self.dim))
        nzi = self._nz[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            for k, v in nzi[j]:
                out[k] = out[k] + yj * v
        return tuple(out)

    def _vec_times_basis(self, x, j):
        out = list(vzero(self.field, self.dim))
        nz = self._nz
        for i, xi in enumerate(x):
            if not xi:
                continue
            for k, v in nz[i][j]:
                out[k] = out[k] + xi * v
        return tuple(out)

    def format_vec(self, coeffs):
        parts = [f"({c})*{self.labels[i]}" for i, c in enumerate(coeffs) if c]
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"StructureAlgebra(dim={self.dim}, field={self.field!r})"


class AlgebraElement:
    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        self.algebra = algebra
        self.coeffs = tuple(coeffs)

    def _same(self, other):
        if not isinstance(other, AlgebraElement) or other.algebra is not self.algebra:
            raise AlgebraMismatch()

    def __add__(self, other):
        self._same(other)
        return AlgebraElement(self.algebra, vadd(self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._same(other)
        return AlgebraElement(self.algebra,
                              tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return AlgebraElement(self.algebra, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._same(other)
            return AlgebraElement(self.algebra,
                                  self.algebra.mul_vec(self.coeffs, other.coeffs))
        return AlgebraElement(self.algebra, vscale(self._scalar(other), self.coeffs))

    def __rmul__(self, other):
        return AlgebraElement(self.algebra, vscale(self._scalar(other), self.coeffs))

    def _scalar(self, c):
        if isinstance(c, int):
            return self.algebra.field.from_int(c)
        return c

    def is_zero(self):
        return not any(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra is other.algebra and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return self.algebra.format_vec(self.coeffs)


def make_algebra(field, table, unit, labels=None):
    """Validate structure constants exhaustively and return the algebra.

    Associativity is checked on all d^3 basis triples and the unit law on
    every basis element; the first failure names its witness.
    """
    alg = StructureAlgebra(field, table, unit, labels)
    d = alg.dim
    for row in alg.table:
        if len(row) != d:
            raise ValueError("structure constant table is not d x d")
        for cell in row:
            if len(cell) != d:
                raise ValueError("structure constant cell has wrong length")
    if alg.unit is not None and len(alg.unit) != d:
        raise ValueError("unit vector has wrong length")

    for i in range(d):
        ti = alg.table[i]
        for j in range(d):
            z = ti[j]
            tj = alg.table[j]
            for k in range(d):
                lhs = alg._vec_times_basis(z, k)
                rhs = alg._basis_times_vec(i, tj[k])
                if lhs != rhs:
                    raise NotAssociative("algebra", alg.labels[i], alg.labels[j],
                                         alg.labels[k])
    if alg.unit is not None:
        for i in range(d):
            b = alg.basis_element(i).coeffs
            if alg.mul_vec(alg.unit, b) != b:
                raise UnitFails(alg.labels[i], "left")
            if alg.mul_vec(b, alg.unit) != b:
                raise UnitFails(alg.labels[i], "right")
    return alg


def is_central_idempotent(a):
    """True iff a*a = a and a commutes with every basis element."""
    alg = a.algebra
    if alg.mul_vec(a.coeffs, a.coeffs) != a.coeffs:
        return False
    for i in range(alg.dim):
        if alg._basis_times_vec(i, a.coeffs) != alg._vec_times_basis(a.coeffs, i):
            return False
    return True


def ideal_basis(alg, e):
    """Canonical basis of the two-sided ideal generated by a central idempotent."""
    if e.algebra is not alg:
        raise AlgebraMismatch()
    if not is_central_idempotent(e):
        raise NotCentralIdempotent(alg.format_vec(e.coeffs))
    span = Subspace.from_vectors(
        alg.field, alg.dim,
        [alg._basis_times_vec(i, e.coeffs) for i in range(alg.dim)])
    for v in span.basis:
        for i in range(alg.dim):
            if not span.contains_vector(alg._basis_times_vec(i, v)):
                raise InternalCheckFailed("idempotent ideal not closed on the left")
            if not span.contains_vector(alg._vec_times_basis(v, i)):
                raise InternalCheckFailed("idempotent ideal not closed on the right")
    return span


def center_basis(alg):
    """Solution space of [x, b_j] = 0 for every basis element b_j."""
    rows = []
    for j in range(alg.dim):
        for k in range(alg.dim):
            rows.append([alg.table[i][j][k] - alg.table[j][i][k]
                         for i in range(alg.dim)])
    centre = kernel_basis(Mat(alg.field, rows))
    for v in centre.basis:
        for j in range(alg.dim):
            if alg._vec_times_basis(v, j) != alg._basis_times_vec(j, v):
                raise InternalCheckFailed("central element does not commute")
    return centre


def field_algebra(field):
    """The base field as a one-dimensional algebra."""
    return make_algebra(field, [[[field.one]]], [field.one], labels=["1"])


def product_of_fields(field, m):
    """The split algebra field^m: orthogonal idempotents e_0..e_{m-1}."""
    if m < 1:
        raise ValueError("need at least one factor")
    zero, one = field.zero, field.one
    table = [[[one if i == j == k else zero for k in range(m)]
              for j in range(m)] for i in range(m)]
    return make_algebra(field, table, [one] * m,
                        labels=[f"e{i}" for i in range(m)])


def group_algebra(field, group):
    """Algebra with the group elements as basis and the Cayley table as product."""
    zero, one = field.zero, field.one
    d = group.order
    table = [[[one if k == group.mul(i, j) else zero for k in range(d)]
              for j in range(d)] for i in range(d)]
    unit = [one if i == group.identity else zero for i in range(d)]
    return make_algebra(field, table, unit, labels=group.labels)


def dual_group_algebra(field, group):
    """Pointwise-function algebra on the group: orthogonal idempotents p_g."""
    zero, one = field.zero, field.one
    d = group.order
    table = [[[one if i == j == k else zero for k in range(d)]
              for j in range(d)] for i in range(d)]
    unit = [one] * d
    labels = [f"p_{lab}" for lab in group.labels]
    return make_algebra(field, table, unit, labels=labels)


class ProductAlgebra(StructureAlgebra):
    """Direct product of two algebras, with the factor embeddings recorded."""

    def __init__(self, left, right):
        if left.field != right.field:
            raise FieldMismatch(left.field, right.field)
        field = left.field
        zero = field.zero
        dl, dr = left.dim, right.dim
        d = dl + dr
        table = [[[zero] * d for _ in range(d)] for _ in range(d)]
        for i in range(dl):
            for j in range(dl):
                for k, v in enumerate(left.table[i][j]):
                    table[i][j][k] = v
        for i in range(dr):
            for j in range(dr):
                for k, v in enumerate(right.table[i][j]):
                    table[dl + i][dl + j][dl + k] = v
        unit = list(left.unit) + list(right.unit)
        labels = [f"l_{lab}" for lab in left.labels] + [f"r_{lab}" for lab in right.labels]
        super().__init__(field, table, unit, labels)
        self.factors = (left, right)
        self.left_embed = AlgebraMap(left, self, Mat(
            field, [[field.one if (i < dl and i == j) else zero for j in range(dl)]
                    for i in range(d)]))
        self.right_embed = AlgebraMap(right, self, Mat(
            field, [[field.one if (i >= dl and i - dl == j) else zero for j in range(dr)]
                    for i in range(d)]))


def direct_product(left, right):
    return ProductAlgebra(left, right)


class MatrixAlgebra(StructureAlgebra):
    """Square matrices over a base algebra, basis E_{r,s} tensor base basis.

    Rows and columns are indexed by 0..n-1; when built over a finite group
    the group's element order provides that indexing.
    """

    def __init__(self, base, size, group=None):
        field = base.field
        zero = field.zero
        n, d = size, base.dim
        dim = n * n * d
        self.base = base
        self.size = n
        self.group = group

        def idx(r, s, i):
            return (r * n + s) * d + i

        table = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
        for g in range(n):
            for h in range(n):
                for i in range(d):
                    row = table[idx(g, h, i)]
                    for s in range(n):
                        for j in range(d):
                            cell = row[idx(h, s, j)]
                            for k, v in enumerate(base.table[i][j]):
                                cell[idx(g, s, k)] = v
        unit = [zero] * dim
        for g in range(n):
            for i, v in enumerate(base.unit):
                unit[idx(g, g, i)] = v
        if group is not None:
            labels = [f"E[{group.label(r)},{group.label(s)}]*{base.labels[i]}"
                      for r in range(n) for s in range(n) for i in range(d)]
        else:
            labels = [f"E[{r},{s}]*{base.labels[i]}"
                      for r in range(n) for s in range(n) for i in range(d)]
        super().__init__(field, table, unit, labels)
        self._verify()

    def slot(self, r, s, i):
        return (r * self.size + s) * self.base.dim + i

    def place(self, r, s, avec):
        """Coefficient vector with the base element avec in entry (r, s)."""
        out = list(vzero(self.field, self.dim))
        for i, v in enumerate(avec):
            out[self.slot(r, s, i)] = v
        return tuple(out)

    def entry(self, coeffs, r, s):
        """Base-algebra coefficient vector sitting in entry (r, s)."""
        start = (r * self.size + s) * self.base.dim
        return tuple(coeffs[start:start + self.base.dim])

    def _verify(self):
        n = self.size
        unit_slots = [self.place(g, h, self.base.unit) for g in range(n) for h in range(n)]

        def eu(g, h):
            return unit_slots[g * n + h]

        for g in range(n):
            for h in range(n):
                for r in range(n):
                    for s in range(n):
                        prod = self.mul_vec(eu(g, h), eu(r, s))
                        want = eu(g, s) if h == r else vzero(self.field, self.dim)
                        if prod != tuple(want):
                            raise InternalCheckFailed(
                                f"matrix-unit relation fails at ({g},{h})x({r},{s})")
        for i in range(self.dim):
            b = self.basis_element(i).coeffs
            if self.mul_vec(self.unit, b) != b or self.mul_vec(b, self.unit) != b:
                raise InternalCheckFailed("matrix algebra unit law fails")


def matrix_algebra(base, index):
    """M_n over a structure algebra; index is a size or a finite group."""
    if isinstance(index, int):
        return MatrixAlgebra(base, index)
    return MatrixAlgebra(base, index.order, group=index)


class TensorAlgebra(StructureAlgebra):
    """Tensor product with componentwise multiplication.

    Basis (i, j) is flattened as i*dim(right) + j, so nested tensor products
    flatten consistently regardless of grouping.
    """

    def __init__(self, left, right):
        if left.field != right.field:
            raise FieldMismatch(left.field, right.field)
        field = left.field
        zero = field.zero
        dl, dr = left.dim, right.dim
        dim = dl * dr
        self.tensor_factors = (left, right)
        table = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
        for i in range(dl):
            for j in range(dr):
                row = table[i * dr + j]
                for k in range(dl):
                    lcell = left.table[i][k]
                    for l in range(dr):
                        cell = row[k * dr + l]
                        rcell = right.table[j][l]
                        for a, va in enumerate(lcell):
                            if not va:
                                continue
                            for b, vb in enumerate(rcell):
                                if vb:
                                    cell[a * dr + b] = va * vb
        if left.unit is not None and right.unit is not None:
            unit = self._outer(left.unit, right.unit, dr)
        else:
            unit = None
        labels = [f"{la}(x){lb}" for la in left.labels for lb in right.labels]
        super().__init__(field, table, unit, labels)

    @staticmethod
    def _outer(xa, xb, dr):
        return tuple(a * b for a in xa for b in xb)

    def tensor_vec(self, xa, xb):
        """Flattened outer product of coefficient vectors of the two factors."""
        dr = self.tensor_factors[1].dim
        out = list(vzero(self.field, self.dim))
        for a, va in enumerate(xa):
            if not va:
                continue
            for b, vb in enumerate(xb):
                if vb:
                    out[a * dr + b] = va * vb
        return tuple(out)


def tensor_algebra(left, right):
    return TensorAlgebra(left, right)


class AlgebraMap:
    """A linear map between algebras; columns are images of basis vectors.

    Multiplicativity and unitality are checkable predicates, not assumptions:
    several maps in this package are homomorphisms only by theorem.
    """

    __slots__ = ("domain", "codomain", "matrix")

    def __init__(self, domain, codomain, matrix):
        if matrix.rows != codomain.dim or matrix.cols != domain.dim:
            raise ValueError("map matrix has wrong shape")
        self.domain = domain
        self.codomain = codomain
        self.matrix = matrix

    @classmethod
    def from_columns(cls, domain, codomain, columns):
        return cls(domain, codomain,
                   Mat.from_columns(domain.field, columns, rows=codomain.dim))

    def apply_vec(self, coeffs):
        return self.matrix.apply(coeffs)

    def apply(self, element):
        if element.algebra is not self.domain:
            raise AlgebraMismatch()
        return self.codomain.element(self.matrix.apply(element.coeffs))

    def compose(self, inner):
        """self after inner."""
        if inner.codomain is not self.domain:
            raise AlgebraMismatch()
        return AlgebraMap(inner.domain, self.codomain, self.matrix @ inner.matrix)

    def is_multiplicative(self):
        cols = self.matrix.columns()
        for i in range(self.domain.dim):
            for j in range(self.domain.dim):
                lhs = self.apply_vec(self.domain.table[i][j])
                rhs = self.codomain.mul_vec(cols[i], cols[j])
                if lhs != rhs:
                    return False
        return True

    def is_unital(self):
        return self.apply_vec(self.domain.unit) == self.codomain.unit

    def kernel(self):
        return kernel_basis(self.matrix)

    def image(self):
        return image_basis(self.matrix)

    def is_injective(self):
        return self.kernel().is_zero()


def subalgebra(parent, span, unit_vec, labels=None):
    """Structure algebra on a multiplicatively closed subspace of `parent`.

    `span` must be closed under the parent product and contain `unit_vec`,
    which becomes the unit of the subalgebra.  Returns the subalgebra and
    its inclusion map.
    """
    d = span.dim
    table = []
    for u in span.basis:
        row = []
        for v in span.basis:
            prod = parent.mul_vec(u, v)
            coords = span.coordinates_of(prod)
            if coords is None:
                raise ValueError("subspace is not closed under multiplication")
            row.append(coords)
        table.append(row)
    unit_coords = span.coordinates_of(unit_vec)
    if unit_coords is None:
        raise ValueError("unit vector lies outside the subspace")
    alg = make_algebra(parent.field, table, unit_coords, labels=labels)
    include = AlgebraMap.from_columns(alg, parent, list(span.basis))
    return alg, include
