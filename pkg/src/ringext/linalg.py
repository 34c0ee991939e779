"""Exact dense linear algebra over Q and over prime fields F_p.

Scalars are plain Python values: arbitrary-precision rationals for Q
(gmpy2.mpq when importable, fractions.Fraction otherwise; either way
lowest terms, positive denominator), ints in the range [0, p) for F_p.
A Field instance owns the arithmetic; values belonging to different
fields are never mixed, and matrices and subspaces remember their field.

Subspaces are stored with a reduced-row-echelon basis, so two equal
subspaces have literally equal data and membership coordinates can be
read off the pivot columns.  All solvers are deterministic: pivots are
chosen first-nonzero, particular solutions set free variables to zero.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

try:
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover - gmpy2 is an optional speedup
    from fractions import Fraction as _rational


class LinalgError(ValueError):
    """Dimension mismatch, field mismatch, or malformed scalar input."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class RationalField:
    """Arithmetic for Q.  Elements are Fraction/mpq values."""

    name = "Q"

    def __init__(self) -> None:
        self.zero = _rational(0)
        self.one = _rational(1)

    def of(self, value):
        """Coerce an int, numerator/denominator string, or rational."""
        if isinstance(value, bool) or isinstance(value, float):
            raise LinalgError(f"refusing inexact scalar {value!r} over Q")
        try:
            return _rational(value)
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise LinalgError(f"bad rational scalar {value!r}: {exc}") from None

    def to_json(self, a):
        num, den = a.numerator, a.denominator
        return int(num) if den == 1 else f"{num}/{den}"

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero in Q")
        return 1 / a

    def div(self, a, b):
        return a / self._nonzero(b)

    @staticmethod
    def _nonzero(b):
        if not b:
            raise ZeroDivisionError("division by zero in Q")
        return b

    def is_zero(self, a) -> bool:
        return not a

    def is_one(self, a) -> bool:
        return a == 1

    # Row kernels.  These are the hot loops of every solver; they skip
    # zero source entries so sparse systems eliminate cheaply.
    def row_submul(self, dst: list, src: list, c) -> None:
        for i, s in enumerate(src):
            if s:
                dst[i] = dst[i] - c * s

    def row_addmul(self, dst: list, src: list, c) -> None:
        for i, s in enumerate(src):
            if s:
                dst[i] = dst[i] + c * s

    def row_scale(self, row: list, c) -> None:
        for i, v in enumerate(row):
            if v:
                row[i] = v * c

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("Q")

    def __repr__(self) -> str:
        return "QQ"


class PrimeField:
    """Arithmetic for F_p, p prime.  Elements are ints in [0, p)."""

    def __init__(self, p: int) -> None:
        if not isinstance(p, int) or not _is_prime(p):
            raise LinalgError(f"modulus {p!r} is not a prime")
        self.p = p
        self.name = f"F{p}"
        self.zero = 0
        self.one = 1 % p

    def of(self, value):
        if isinstance(value, bool) or isinstance(value, float):
            raise LinalgError(f"refusing scalar {value!r} over {self.name}")
        if isinstance(value, str):
            try:
                value = int(value, 10)
            except ValueError:
                raise LinalgError(f"bad {self.name} scalar {value!r}") from None
        if not isinstance(value, int):
            raise LinalgError(f"bad {self.name} scalar {value!r}")
        return value % self.p

    def to_json(self, a):
        return int(a)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of zero in {self.name}")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def is_zero(self, a) -> bool:
        return a == 0

    def is_one(self, a) -> bool:
        return a == 1 % self.p

    def row_submul(self, dst: list, src: list, c) -> None:
        p = self.p
        for i, s in enumerate(src):
            if s:
                dst[i] = (dst[i] - c * s) % p

    def row_addmul(self, dst: list, src: list, c) -> None:
        p = self.p
        for i, s in enumerate(src):
            if s:
                dst[i] = (dst[i] + c * s) % p

    def row_scale(self, row: list, c) -> None:
        p = self.p
        for i, v in enumerate(row):
            if v:
                row[i] = (v * c) % p

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("Fp", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"


QQ = RationalField()

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    """The prime field with p elements (instances are cached)."""
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]


Field = RationalField | PrimeField


# ---------------------------------------------------------------------------
# vectors

def zero_vec(field: Field, n: int) -> list:
    return [field.zero] * n


def unit_vec(field: Field, n: int, i: int) -> list:
    v = [field.zero] * n
    v[i] = field.one
    return v


def vec_is_zero(field: Field, v: Sequence) -> bool:
    return all(field.is_zero(a) for a in v)


def vec_add(field: Field, u: Sequence, v: Sequence) -> list:
    return [field.add(a, b) for a, b in zip(u, v)]


def vec_sub(field: Field, u: Sequence, v: Sequence) -> list:
    return [field.sub(a, b) for a, b in zip(u, v)]


def vec_scale(field: Field, v: Sequence, c) -> list:
    return [field.mul(c, a) for a in v]


def vec_eq(field: Field, u: Sequence, v: Sequence) -> bool:
    return len(u) == len(v) and all(
        field.is_zero(field.sub(a, b)) for a, b in zip(u, v)
    )


# ---------------------------------------------------------------------------
# matrices

class Matrix:
    """Dense row-major matrix over one exact field.

    Data is a list of row lists.  Constructors validate shape; arithmetic
    validates field and dimension compatibility.  Zero-row and zero-column
    matrices are legal (they show up as maps to or from zero spaces).
    """

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, rows: int, cols: int, data: list) -> None:
        if len(data) != rows or any(len(r) != cols for r in data):
            raise LinalgError(f"matrix data does not match shape {rows}x{cols}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls(field, rows, cols, [[field.zero] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        data = [[field.zero] * n for _ in range(n)]
        for i in range(n):
            data[i][i] = field.one
        return cls(field, n, n, data)

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Sequence]) -> "Matrix":
        data = [list(r) for r in rows]
        n = len(data[0]) if data else 0
        return cls(field, len(data), n, data)

    @classmethod
    def from_cols(cls, field: Field, cols: Sequence[Sequence]) -> "Matrix":
        if not cols:
            return cls(field, 0, 0, [])
        m = len(cols[0])
        data = [[col[i] for col in cols] for i in range(m)]
        return cls(field, m, len(cols), data)

    def copy(self) -> "Matrix":
        return Matrix(self.field, self.rows, self.cols, [r[:] for r in self.data])

    def col(self, j: int) -> list:
        return [row[j] for row in self.data]

    def columns(self) -> list[list]:
        return [self.col(j) for j in range(self.cols)]

    def apply(self, v: Sequence) -> list:
        """Matrix-vector product (v as a column)."""
        if len(v) != self.cols:
            raise LinalgError("matrix/vector size mismatch")
        f = self.field
        out = [f.zero] * self.rows
        for i, row in enumerate(self.data):
            acc = f.zero
            for a, b in zip(row, v):
                if not f.is_zero(a):
                    acc = f.add(acc, f.mul(a, b))
            out[i] = acc
        return out

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise LinalgError("field mismatch in matrix product")
        if self.cols != other.rows:
            raise LinalgError(
                f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}"
            )
        f = self.field
        out = [[f.zero] * other.cols for _ in range(self.rows)]
        odata = other.data
        for i, row in enumerate(self.data):
            dst = out[i]
            for k, a in enumerate(row):
                if not f.is_zero(a):
                    f.row_addmul(dst, odata[k], a)
        return Matrix(f, self.rows, other.cols, out)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        f = self.field
        return Matrix(
            f, self.rows, self.cols,
            [[f.add(a, b) for a, b in zip(r1, r2)]
             for r1, r2 in zip(self.data, other.data)],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        f = self.field
        return Matrix(
            f, self.rows, self.cols,
            [[f.sub(a, b) for a, b in zip(r1, r2)]
             for r1, r2 in zip(self.data, other.data)],
        )

    def scale(self, c) -> "Matrix":
        f = self.field
        return Matrix(
            f, self.rows, self.cols,
            [[f.mul(c, a) for a in row] for row in self.data],
        )

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field, self.cols, self.rows,
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def vec(self) -> list:
        """Row-major flattening."""
        out = []
        for row in self.data:
            out.extend(row)
        return out

    @classmethod
    def from_vec(cls, field: Field, rows: int, cols: int, flat: Sequence) -> "Matrix":
        if len(flat) != rows * cols:
            raise LinalgError("flat vector does not match matrix shape")
        return cls(field, rows, cols,
                   [list(flat[i * cols:(i + 1) * cols]) for i in range(rows)])

    def is_zero(self) -> bool:
        f = self.field
        return all(f.is_zero(a) for row in self.data for a in row)

    def _check_same_shape(self, other: "Matrix") -> None:
        if self.field != other.field or (self.rows, self.cols) != (other.rows, other.cols):
            raise LinalgError("matrix shape or field mismatch")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.field != other.field or (self.rows, self.cols) != (other.rows, other.cols):
            return False
        f = self.field
        return all(
            f.is_zero(f.sub(a, b))
            for r1, r2 in zip(self.data, other.data)
            for a, b in zip(r1, r2)
        )

    def __repr__(self) -> str:
        return f"Matrix({self.field!r}, {self.rows}x{self.cols})"


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; index (i,j) of the result pairs row i of a with row j of b."""
    if a.field != b.field:
        raise LinalgError("field mismatch in kron")
    f = a.field
    out = [[f.zero] * (a.cols * b.cols) for _ in range(a.rows * b.rows)]
    for i in range(a.rows):
        for k in range(a.cols):
            c = a.data[i][k]
            if f.is_zero(c):
                continue
            for j in range(b.rows):
                dst = out[i * b.rows + j]
                src = b.data[j]
                base = k * b.cols
                for l, s in enumerate(src):
                    if not f.is_zero(s):
                        dst[base + l] = f.add(dst[base + l], f.mul(c, s))
    return Matrix(f, a.rows * b.rows, a.cols * b.cols, out)


# ---------------------------------------------------------------------------
# elimination

def rref(mat: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    f = mat.field
    rows = [r[:] for r in mat.data]
    m, n = mat.rows, mat.cols
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, m):
            if not f.is_zero(rows[i][c]):
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        if not f.is_one(rows[r][c]):
            f.row_scale(rows[r], f.inv(rows[r][c]))
        for i in range(r + 1, m):
            a = rows[i][c]
            if not f.is_zero(a):
                f.row_submul(rows[i], rows[r], a)
        pivots.append(c)
        r += 1
        if r == m:
            break
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        src = rows[k]
        for i in range(k):
            a = rows[i][c]
            if not f.is_zero(a):
                f.row_submul(rows[i], src, a)
    return Matrix(f, m, n, rows), pivots


def rank(mat: Matrix) -> int:
    return len(rref(mat)[1])


def invert(mat: Matrix) -> Optional[Matrix]:
    """Exact inverse of a square matrix, or None if singular."""
    if mat.rows != mat.cols:
        return None
    n = mat.rows
    f = mat.field
    eye = Matrix.identity(f, n)
    aug = Matrix(f, n, 2 * n,
                 [row + eyerow for row, eyerow in zip(mat.data, eye.data)])
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) != n:
        return None
    return Matrix(f, n, n, [row[n:] for row in red.data])


def _kernel_from_rref(field: Field, data: list, cols: int, pivots: list[int]) -> list[list]:
    pivset = set(pivots)
    basis = []
    for fc in range(cols):
        if fc in pivset:
            continue
        v = [field.zero] * cols
        v[fc] = field.one
        for k, pc in enumerate(pivots):
            a = data[k][fc]
            if not field.is_zero(a):
                v[pc] = field.neg(a)
        basis.append(v)
    return basis


def kernel(mat: Matrix) -> list[list]:
    """Basis of the right null space {v : mat v = 0}, one vector per free column."""
    red, pivots = rref(mat)
    return _kernel_from_rref(mat.field, red.data, mat.cols, pivots)


def solve(mat: Matrix, rhs: Sequence) -> Optional[tuple[list, list[list]]]:
    """Solve mat x = rhs exactly.

    Returns (particular, kernel_basis) or None when inconsistent.  The
    particular solution is canonical: free variables are set to zero, so
    the same system always yields the same answer.
    """
    if len(rhs) != mat.rows:
        raise LinalgError("rhs length does not match row count")
    f = mat.field
    n = mat.cols
    aug = Matrix(f, mat.rows, n + 1,
                 [row + [b] for row, b in zip(mat.data, rhs)])
    red, pivots = rref(aug)
    if pivots and pivots[-1] == n:
        return None
    particular = [f.zero] * n
    for k, c in enumerate(pivots):
        particular[c] = red.data[k][n]
    left = [row[:n] for row in red.data]
    return particular, _kernel_from_rref(f, left, n, pivots)


def span_decide(field: Field, generators: Sequence[Sequence], target: Sequence
                ) -> Optional[list]:
    """Coefficients expressing target in the span of generators, or None.

    The coefficient vector is the canonical (free-variables-zero) solution,
    so the answer depends only on the generator list and the target.
    """
    n = len(target)
    for g in generators:
        if len(g) != n:
            raise LinalgError("generator/target length mismatch")
    if not generators:
        return [] if vec_is_zero(field, target) else None
    cols = Matrix.from_cols(field, [list(g) for g in generators])
    result = solve(cols, list(target))
    return None if result is None else result[0]


# ---------------------------------------------------------------------------
# subspaces

class Subspace:
    """A subspace of F^n held as an RREF basis (canonical representation)."""

    __slots__ = ("field", "ambient_dim", "rows", "pivots")

    def __init__(self, field: Field, ambient_dim: int, rows: list, pivots: list[int]) -> None:
        self.field = field
        self.ambient_dim = ambient_dim
        self.rows = rows
        self.pivots = pivots

    @classmethod
    def from_vectors(cls, field: Field, ambient_dim: int,
                     vectors: Iterable[Sequence]) -> "Subspace":
        vecs = [list(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise LinalgError("vector length does not match ambient dimension")
        if not vecs:
            return cls(field, ambient_dim, [], [])
        red, pivots = rref(Matrix.from_rows(field, vecs))
        return cls(field, ambient_dim, [red.data[i] for i in range(len(pivots))], pivots)

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, [], [])

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> "Subspace":
        eye = Matrix.identity(field, ambient_dim)
        return cls(field, ambient_dim, eye.data, list(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis_matrix(self) -> Matrix:
        return Matrix.from_rows(self.field, [r[:] for r in self.rows]) \
            if self.rows else Matrix(self.field, 0, self.ambient_dim, [])

    def reduce(self, v: Sequence) -> list:
        """Residual of v after subtracting its projection onto the basis rows."""
        f = self.field
        w = list(v)
        for row, pc in zip(self.rows, self.pivots):
            a = w[pc]
            if not f.is_zero(a):
                f.row_submul(w, row, a)
        return w

    def contains(self, v: Sequence) -> bool:
        return vec_is_zero(self.field, self.reduce(v))

    def coordinates(self, v: Sequence) -> Optional[list]:
        """Coefficients of v over the RREF basis, or None if v is outside."""
        coeffs = [v[pc] for pc in self.pivots]
        if not self.contains(v):
            return None
        return coeffs

    def sum_with(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace.from_vectors(self.field, self.ambient_dim,
                                     self.rows + other.rows)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient_dim)
        f = self.field
        # columns: basis of self, then negated basis of other; kernel rows
        # give coefficient pairs (a, b) with a.U = b.V, i.e. intersection.
        cols = [list(r) for r in self.rows] + \
               [vec_scale(f, r, f.neg(f.one)) for r in other.rows]
        ker = kernel(Matrix.from_cols(f, cols))
        vecs = []
        for kv in ker:
            w = [f.zero] * self.ambient_dim
            for j, row in enumerate(self.rows):
                if not f.is_zero(kv[j]):
                    f.row_addmul(w, row, kv[j])
            vecs.append(w)
        return Subspace.from_vectors(f, self.ambient_dim, vecs)

    def is_contained_in(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return all(other.contains(r) for r in self.rows)

    def _check_compatible(self, other: "Subspace") -> None:
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            raise LinalgError("subspace ambient mismatch")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            return False
        if self.pivots != other.pivots:
            return False
        f = self.field
        return all(vec_eq(f, a, b) for a, b in zip(self.rows, other.rows))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"
