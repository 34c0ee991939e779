"""Finite-dimensional associative unital algebras given by structure constants.

An algebra is a field, a dimension n, a multiplication table sending each
basis pair (i, j) to the coordinate vector of e_i * e_j, and the coordinate
vector of the unit.  Everything downstream (bimodules, centralizers, tensor
rings) consumes this one representation, so computed rings are repackaged
through the same class and inherit the whole toolkit.

Group algebras carry their group table along, which lets group-specific
checks (augmentation ideals, conjugation stability) recover the group
without re-deriving it from the multiplication.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .linalg import (
    Field,
    Matrix,
    Subspace,
    kernel,
    span_decide,
    unit_vec,
    vec_eq,
    zero_vec,
)


class AlgebraError(ValueError):
    """Structure constants that fail unitality, associativity, or closure."""


class GroupData:
    """A finite group as a multiplication table.

    cayley[i][j] is the index of g_i * g_j.  The identity must sit at
    index 0.  Validation checks the table is a latin square and fully
    associative, and precomputes inverses.
    """

    __slots__ = ("order", "cayley", "inverse")

    def __init__(self, order: int, cayley: Sequence[Sequence[int]]) -> None:
        self.order = order
        self.cayley = [list(row) for row in cayley]
        self._validate()
        self.inverse = [row.index(0) for row in self.cayley]

    def _validate(self) -> None:
        n = self.order
        if len(self.cayley) != n or any(len(r) != n for r in self.cayley):
            raise AlgebraError(f"cayley table is not {n}x{n}")
        for row in self.cayley:
            for v in row:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise AlgebraError(f"cayley entry {v!r} out of range")
        full = set(range(n))
        for i in range(n):
            if self.cayley[0][i] != i or self.cayley[i][0] != i:
                raise AlgebraError("index 0 is not the identity")
            if set(self.cayley[i]) != full:
                raise AlgebraError(f"row {i} is not a permutation")
            if {self.cayley[j][i] for j in range(n)} != full:
                raise AlgebraError(f"column {i} is not a permutation")
        c = self.cayley
        for i in range(n):
            for j in range(n):
                ij = c[i][j]
                row_j = c[j]
                for k in range(n):
                    if c[ij][k] != c[i][row_j[k]]:
                        raise AlgebraError(
                            f"group table not associative at ({i},{j},{k})")

    def conjugate(self, g: int, h: int) -> int:
        """g h g^{-1}."""
        return self.cayley[self.cayley[g][h]][self.inverse[g]]

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupData) and self.cayley == other.cayley

    def __repr__(self) -> str:
        return f"GroupData(order={self.order})"


class FDAlgebra:
    """Associative unital algebra over an exact field, by structure constants."""

    def __init__(self, field: Field, dim: int, mult: Sequence[Sequence[Sequence]],
                 unit: Sequence, group: Optional[GroupData] = None,
                 name: str = "A", _validated: bool = False) -> None:
        self.field = field
        self.dim = dim
        self.mult = [[list(v) for v in row] for row in mult]
        self.unit = list(unit)
        self.group = group
        self.name = name
        self._left_regular: Optional[list[Matrix]] = None
        self._right_regular: Optional[list[Matrix]] = None
        if not _validated:
            self.validate()

    def validate(self) -> None:
        n, f = self.dim, self.field
        if len(self.mult) != n or any(len(row) != n for row in self.mult):
            raise AlgebraError(f"multiplication table is not {n}x{n}")
        for row in self.mult:
            for v in row:
                if len(v) != n:
                    raise AlgebraError("structure vector has wrong length")
        if len(self.unit) != n:
            raise AlgebraError("unit vector has wrong length")
        for j in range(n):
            ej = unit_vec(f, n, j)
            if not vec_eq(f, self.multiply(self.unit, ej), ej):
                raise AlgebraError(f"unit fails on the left at basis {j}")
            if not vec_eq(f, self.multiply(ej, self.unit), ej):
                raise AlgebraError(f"unit fails on the right at basis {j}")
        for i in range(n):
            for j in range(n):
                ij = self.mult[i][j]
                for k in range(n):
                    left = self.multiply(ij, unit_vec(f, n, k))
                    right = self.multiply(unit_vec(f, n, i), self.mult[j][k])
                    if not vec_eq(f, left, right):
                        raise AlgebraError(
                            f"not associative: (e{i} e{j}) e{k} != e{i} (e{j} e{k})")

    def multiply(self, x: Sequence, y: Sequence) -> list:
        f, n = self.field, self.dim
        out = zero_vec(f, n)
        for i, xi in enumerate(x):
            if f.is_zero(xi):
                continue
            row = self.mult[i]
            for j, yj in enumerate(y):
                if f.is_zero(yj):
                    continue
                c = f.mul(xi, yj)
                f.row_addmul(out, row[j], c)
        return out

    def _ensure_regular(self) -> None:
        if self._left_regular is not None:
            return
        f, n = self.field, self.dim
        lefts, rights = [], []
        for i in range(n):
            # column j of left mult by e_i is e_i e_j
            lefts.append(Matrix.from_cols(f, [self.mult[i][j] for j in range(n)]))
            rights.append(Matrix.from_cols(f, [self.mult[j][i] for j in range(n)]))
        self._left_regular = lefts
        self._right_regular = rights

    def left_mult_matrix(self, x: Sequence) -> Matrix:
        """Matrix of v -> x v in the algebra basis."""
        self._ensure_regular()
        f = self.field
        out = Matrix.zeros(f, self.dim, self.dim)
        for i, xi in enumerate(x):
            if not f.is_zero(xi):
                out = out + self._left_regular[i].scale(xi)
        return out

    def right_mult_matrix(self, x: Sequence) -> Matrix:
        """Matrix of v -> v x in the algebra basis."""
        self._ensure_regular()
        f = self.field
        out = Matrix.zeros(f, self.dim, self.dim)
        for i, xi in enumerate(x):
            if not f.is_zero(xi):
                out = out + self._right_regular[i].scale(xi)
        return out

    def basis_left_mult(self, i: int) -> Matrix:
        self._ensure_regular()
        return self._left_regular[i]

    def basis_right_mult(self, i: int) -> Matrix:
        self._ensure_regular()
        return self._right_regular[i]

    def is_commutative(self) -> bool:
        f = self.field
        return all(
            vec_eq(f, self.mult[i][j], self.mult[j][i])
            for i in range(self.dim) for j in range(i))

    def center(self) -> Subspace:
        """Elements commuting with the whole algebra."""
        n = self.dim
        rows = []
        for i in range(n):
            diff = self.basis_left_mult(i) - self.basis_right_mult(i)
            rows.extend(diff.data)
        ker = kernel(Matrix.from_rows(self.field, rows)) if rows else []
        return Subspace.from_vectors(self.field, n, ker)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FDAlgebra):
            return NotImplemented
        return (self.field == other.field and self.dim == other.dim
                and self.mult == other.mult and self.unit == other.unit)

    def __repr__(self) -> str:
        return f"FDAlgebra({self.name}, dim={self.dim}, {self.field!r})"


def group_algebra(field: Field, group: GroupData, name: str = "kG") -> FDAlgebra:
    """The group algebra k[G] with basis indexed by group elements."""
    n = group.order
    mult = [[unit_vec(field, n, group.cayley[i][j]) for j in range(n)]
            for i in range(n)]
    return FDAlgebra(field, n, mult, unit_vec(field, n, 0),
                     group=group, name=name, _validated=True)


_trivial_cache: dict[Field, FDAlgebra] = {}


def trivial_algebra(field: Field) -> FDAlgebra:
    """The base field as a one-dimensional algebra (used for one-sided modules)."""
    if field not in _trivial_cache:
        _trivial_cache[field] = FDAlgebra(
            field, 1, [[[field.one]]], [field.one], name="k", _validated=True)
    return _trivial_cache[field]


def matrix_algebra(field: Field, n: int, name: Optional[str] = None) -> FDAlgebra:
    """Full matrix algebra M_n(k), basis E_rs at index r*n + s."""
    dim = n * n
    mult = [[zero_vec(field, dim) for _ in range(dim)] for _ in range(dim)]
    for r in range(n):
        for s in range(n):
            for t in range(n):
                for u in range(n):
                    if s == t:
                        mult[r * n + s][t * n + u] = unit_vec(field, dim, r * n + u)
    unit = zero_vec(field, dim)
    for r in range(n):
        unit[r * n + r] = field.one
    return FDAlgebra(field, dim, mult, unit, name=name or f"M{n}", _validated=True)


def diagonal_algebra(field: Field, n: int, name: Optional[str] = None) -> FDAlgebra:
    """The split product k x ... x k (n factors) with componentwise product."""
    mult = [[unit_vec(field, n, i) if i == j else zero_vec(field, n)
             for j in range(n)] for i in range(n)]
    return FDAlgebra(field, n, mult, [field.one] * n,
                     name=name or f"k^{n}", _validated=True)


class Extension:
    """An embedding of algebras iota: B -> A over one field.

    iota is a dim(A) x dim(B) matrix whose columns are the images of the
    B basis.  Validation checks iota is injective, unital, and
    multiplicative; every downstream construction assumes those.
    """

    def __init__(self, base: FDAlgebra, total: FDAlgebra, iota: Matrix,
                 name: str = "A/B") -> None:
        if base.field != total.field:
            raise AlgebraError("base and total algebra over different fields")
        if iota.rows != total.dim or iota.cols != base.dim:
            raise AlgebraError("embedding matrix has wrong shape")
        self.base = base
        self.total = total
        self.iota = iota
        self.name = name
        self._image: Optional[Subspace] = None
        self._validate()

    def _validate(self) -> None:
        f = self.base.field
        if not vec_eq(f, self.iota.apply(self.base.unit), self.total.unit):
            raise AlgebraError("embedding does not preserve the unit")
        cols = self.iota.columns()
        if Subspace.from_vectors(f, self.total.dim, cols).dim != self.base.dim:
            raise AlgebraError("embedding is not injective")
        for i in range(self.base.dim):
            for j in range(self.base.dim):
                lhs = self.iota.apply(self.base.mult[i][j])
                rhs = self.total.multiply(cols[i], cols[j])
                if not vec_eq(f, lhs, rhs):
                    raise AlgebraError(
                        f"embedding not multiplicative at basis pair ({i},{j})")

    @property
    def field(self) -> Field:
        return self.base.field

    def embed(self, b: Sequence) -> list:
        return self.iota.apply(b)

    def image(self) -> Subspace:
        """The image of B inside A as a subspace."""
        if self._image is None:
            self._image = Subspace.from_vectors(
                self.field, self.total.dim, self.iota.columns())
        return self._image

    def __repr__(self) -> str:
        return f"Extension({self.name}: dim {self.base.dim} -> {self.total.dim})"


def subalgebra_extension(total: FDAlgebra, basis: Optional[Sequence[Sequence]] = None,
                         subgroup: Optional[Sequence[int]] = None,
                         name: str = "A/B") -> Extension:
    """Build the extension B -> A from a unital subalgebra of A.

    Either a linear basis of the subalgebra (closure under multiplication
    is verified, the offending product reported otherwise) or, for group
    algebras, a list of group element indices forming a subgroup.
    """
    f = total.field
    if (basis is None) == (subgroup is None):
        raise AlgebraError("give exactly one of basis or subgroup")

    if subgroup is not None:
        if total.group is None:
            raise AlgebraError("subgroup given but the algebra has no group data")
        g = total.group
        elems = list(subgroup)
        if len(set(elems)) != len(elems):
            raise AlgebraError("subgroup list has repeats")
        if 0 not in elems:
            raise AlgebraError("subgroup does not contain the identity")
        index_of = {e: i for i, e in enumerate(elems)}
        for x in elems:
            if not 0 <= x < g.order:
                raise AlgebraError(f"subgroup element {x} out of range")
            for y in elems:
                if g.cayley[x][y] not in index_of:
                    raise AlgebraError(
                        f"not closed: elements {x} * {y} = {g.cayley[x][y]} escapes")
        # force the identity to index 0 in the subgroup table
        if elems[0] != 0:
            elems[index_of[0]], elems[0] = elems[0], elems[index_of[0]]
            index_of = {e: i for i, e in enumerate(elems)}
        sub_cayley = [[index_of[g.cayley[x][y]] for y in elems] for x in elems]
        base = group_algebra(f, GroupData(len(elems), sub_cayley), name="kH")
        iota = Matrix.from_cols(f, [unit_vec(f, total.dim, e) for e in elems])
        return Extension(base, total, iota, name=name)

    vecs = [list(v) for v in basis]
    for v in vecs:
        if len(v) != total.dim:
            raise AlgebraError("subalgebra basis vector has wrong length")
    span = Subspace.from_vectors(f, total.dim, vecs)
    k = len(vecs)
    if span.dim != k:
        raise AlgebraError("subalgebra basis is linearly dependent")
    unit_coords = span_decide(f, vecs, total.unit)
    if unit_coords is None:
        raise AlgebraError("subalgebra does not contain the unit")
    mult = []
    for i in range(k):
        row = []
        for j in range(k):
            prod = total.multiply(vecs[i], vecs[j])
            coords = span_decide(f, vecs, prod)
            if coords is None:
                raise AlgebraError(
                    f"not closed under multiplication at basis pair ({i},{j})")
            row.append(coords)
        mult.append(row)
    base = FDAlgebra(f, k, mult, unit_coords, name="B")
    iota = Matrix.from_cols(f, vecs)
    return Extension(base, total, iota, name=name)


def self_extension(total: FDAlgebra, name: str = "A/A") -> Extension:
    """The identity extension A -> A."""
    return Extension(total, total, Matrix.identity(total.field, total.dim), name=name)
