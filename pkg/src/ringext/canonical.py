"""The three canonical rings attached to a finite-dimensional extension.

For an extension iota: B -> A this module constructs, in exact arithmetic:

* the centralizer ring R, the elements of A commuting with the image of B;
* the invariant tensor-square ring T, the base-central elements of the
  balanced tensor square Q = A (x)_B A, multiplied by letting one invariant
  act on the other through the tensor-square action;
* the bimodule endomorphism ring S of A viewed as a B-B-bimodule, under
  composition;

together with the evaluation counits from T and S back to R, the ring maps
from R into S by left and right multiplication, the Casimir subspace of
fully A-central tensors, and the bimodule structures tying everything
together (T and S as R-R-bimodules, R as a right T-module and a left
S-module, Q as a left T-module).

Every closure property used here (products of invariants stay invariant,
counits land in R, and so on) is a theorem given a valid extension, so a
failed coordinate readoff is reported as an InternalInconsistency, never
as a property of the input.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .algebra import Extension, FDAlgebra, trivial_algebra
from .bimodule import (
    Bimodule,
    MapSpace,
    QuotientPresentation,
    TensorProduct,
    centralizer_subspace,
    hom_space,
    invariants_subspace,
    regular_bimodule,
    restrict_left,
    restrict_right,
    tensor_over,
)
from .linalg import Matrix, Subspace, kron, rank, unit_vec, vec_eq, zero_vec


class InternalInconsistency(RuntimeError):
    """A mathematical invariant of the construction failed.

    This always indicates a bug in the library (or memory corruption),
    never a property of the analyzed extension, and maps to a dedicated
    process exit code in the command line interface.
    """


class CanonicalRings:
    """Container for the computed rings, maps, and module structures."""

    def __init__(self, ext: Extension) -> None:
        self.ext = ext
        self.field = ext.field
        a, b = ext.total, ext.base
        f = self.field

        self.a_reg = regular_bimodule(a)
        self.b_reg = regular_bimodule(b)
        # A as a B-B-bimodule, the hom source and target for S
        self.restricted = restrict_right(restrict_left(self.a_reg, ext), ext,
                                         label=f"{a.name}|B")

        # Q = A (x)_B A with its outer A-A-structure
        self.q = tensor_over(restrict_right(self.a_reg, ext),
                             restrict_left(self.a_reg, ext), label="Q")
        self.dim_q = self.q.module.dim

        # R: the centralizer of the embedded base
        self.centralizer_space = centralizer_subspace(self.a_reg, ext)
        self.centralizer = self._build_centralizer_ring()

        # T: base-central tensors, multiplied through the tensor-square action
        self.tensor_space = centralizer_subspace(self.q.module, ext)
        self.t_action_on_q = self._build_tensor_actions_on_q()
        self.tensor_ring = self._build_tensor_ring()

        # S: bimodule endomorphisms of A over B, under composition
        self.endo_space = hom_space(self.restricted, self.restricted)
        self.endo_ring = self._build_endo_ring()

        # Casimir elements: tensors central for all of A
        self.casimir_space = invariants_subspace(
            self.q.module, [unit_vec(f, a.dim, i) for i in range(a.dim)])
        self.casimir_in_tensor = self._casimir_inside_tensor()

        # evaluation maps
        self.mu_matrix = self._build_mu()
        self.tensor_counit = self._build_tensor_counit()
        self.endo_counit = self._build_endo_counit()
        self.lambda_map = self._build_lambda()
        self.rho_map = self._build_rho()

        # module structures
        self.q_bimodule = Bimodule(
            self.tensor_ring, a, self.dim_q, self.t_action_on_q,
            self.q.module.right_action, label="Q|T-A")
        self.tensor_bimodule_cent = self._build_t_over_r()
        self.cent_module_tensor = self._build_r_right_t()
        self.cent_module_endo = self._build_r_left_s()
        self.endo_bimodule_cent = self._build_s_over_r()

    # -- coordinate helpers -------------------------------------------------

    def r_lift(self, coords: Sequence) -> list:
        """Centralizer coordinates -> element of A."""
        f = self.field
        out = zero_vec(f, self.ext.total.dim)
        for c, row in zip(coords, self.centralizer_space.rows):
            if not f.is_zero(c):
                f.row_addmul(out, row, c)
        return out

    def r_coords(self, v: Sequence, what: str = "element") -> list:
        coords = self.centralizer_space.coordinates(v)
        if coords is None:
            raise InternalInconsistency(
                f"{what} escaped the centralizer subspace")
        return coords

    def t_lift(self, coords: Sequence) -> list:
        """Invariant-tensor coordinates -> element of Q."""
        f = self.field
        out = zero_vec(f, self.dim_q)
        for c, row in zip(coords, self.tensor_space.rows):
            if not f.is_zero(c):
                f.row_addmul(out, row, c)
        return out

    def t_coords(self, v: Sequence, what: str = "element") -> list:
        coords = self.tensor_space.coordinates(v)
        if coords is None:
            raise InternalInconsistency(
                f"{what} escaped the invariant tensor subspace")
        return coords

    def s_matrix(self, coords: Sequence) -> Matrix:
        return self.endo_space.element(coords)

    def s_coords(self, mat: Matrix, what: str = "map") -> list:
        coords = self.endo_space.coordinates(mat)
        if coords is None:
            raise InternalInconsistency(
                f"{what} is not a bimodule endomorphism")
        return coords

    def pure(self, x: Sequence, y: Sequence) -> list:
        """Q-coordinates of the class of x (x) y."""
        return self.q.pure(x, y)

    def one_tensor_one(self) -> list:
        a = self.ext.total
        return self.pure(a.unit, a.unit)

    def q_ambient(self, qcoords: Sequence) -> Matrix:
        """The canonical ambient representative of a tensor class, as a
        dim(A) x dim(A) matrix of coefficients on e_i (x) e_j."""
        a = self.ext.total
        flat = self.q.presentation.lift(qcoords)
        return Matrix.from_vec(self.field, a.dim, a.dim, flat)

    def t_ambient(self, tcoords: Sequence) -> Matrix:
        return self.q_ambient(self.t_lift(tcoords))

    # -- ring builders ------------------------------------------------------

    def _build_centralizer_ring(self) -> FDAlgebra:
        a = self.ext.total
        rows = self.centralizer_space.rows
        k = len(rows)
        mult = [[self.r_coords(a.multiply(rows[i], rows[j]),
                               "centralizer product")
                 for j in range(k)] for i in range(k)]
        unit = self.r_coords(a.unit, "unit of A")
        return FDAlgebra(self.field, k, mult, unit, name="R")

    def _tensor_action_ambient(self, tcoords: Sequence) -> Matrix:
        """Ambient operator of the invariant tensor acting on Q: the left
        factor is multiplied on the right by the tensor's first leg, the
        right factor on the left by its second leg."""
        a = self.ext.total
        f = self.field
        tm = self.t_ambient(tcoords)
        amb = Matrix.zeros(f, a.dim * a.dim, a.dim * a.dim)
        for i in range(a.dim):
            for j in range(a.dim):
                c = tm.data[i][j]
                if f.is_zero(c):
                    continue
                piece = kron(a.basis_right_mult(i), a.basis_left_mult(j))
                amb = amb + piece.scale(c)
        return amb

    def _build_tensor_actions_on_q(self) -> list[Matrix]:
        ops = []
        k = self.tensor_space.dim
        for idx in range(k):
            coords = unit_vec(self.field, k, idx)
            amb = self._tensor_action_ambient(coords)
            ops.append(self.q.presentation.induced_operator(amb))
        return ops

    def _build_tensor_ring(self) -> FDAlgebra:
        k = self.tensor_space.dim
        mult = []
        for i in range(k):
            op = self.t_action_on_q[i]
            row = [self.t_coords(op.apply(self.tensor_space.rows[j]),
                                 "invariant tensor product")
                   for j in range(k)]
            mult.append(row)
        unit = self.t_coords(self.one_tensor_one(), "class of 1 (x) 1")
        return FDAlgebra(self.field, k, mult, unit, name="T")

    def _build_endo_ring(self) -> FDAlgebra:
        k = self.endo_space.dim
        basis = self.endo_space.basis
        mult = [[self.s_coords(basis[i] @ basis[j], "composite endomorphism")
                 for j in range(k)] for i in range(k)]
        unit = self.s_coords(Matrix.identity(self.field, self.ext.total.dim),
                             "identity map")
        return FDAlgebra(self.field, k, mult, unit, name="S")

    def _casimir_inside_tensor(self) -> Subspace:
        coords = [self.t_coords(row, "Casimir element")
                  for row in self.casimir_space.rows]
        return Subspace.from_vectors(self.field, self.tensor_space.dim, coords)

    # -- evaluation maps ----------------------------------------------------

    def _build_mu(self) -> Matrix:
        """Multiplication Q -> A on quotient coordinates."""
        a = self.ext.total
        f = self.field
        cols = []
        for k in range(self.dim_q):
            m = self.q_ambient(unit_vec(f, self.dim_q, k))
            acc = zero_vec(f, a.dim)
            for i in range(a.dim):
                for j in range(a.dim):
                    c = m.data[i][j]
                    if not f.is_zero(c):
                        f.row_addmul(acc, a.mult[i][j], c)
            cols.append(acc)
        return Matrix.from_cols(f, cols) if cols else Matrix(f, a.dim, 0, [])

    def _build_tensor_counit(self) -> Matrix:
        cols = [self.r_coords(self.mu_matrix.apply(row),
                              "image of an invariant tensor under multiplication")
                for row in self.tensor_space.rows]
        return Matrix.from_cols(self.field, cols) if cols \
            else Matrix(self.field, self.centralizer.dim, 0, [])

    def _build_endo_counit(self) -> Matrix:
        a = self.ext.total
        cols = [self.r_coords(mat.apply(a.unit), "value of an endomorphism at 1")
                for mat in self.endo_space.basis]
        return Matrix.from_cols(self.field, cols) if cols \
            else Matrix(self.field, self.centralizer.dim, 0, [])

    def _build_lambda(self) -> Matrix:
        a = self.ext.total
        cols = [self.s_coords(a.left_mult_matrix(row),
                              "left multiplication by a centralizer element")
                for row in self.centralizer_space.rows]
        return Matrix.from_cols(self.field, cols) if cols \
            else Matrix(self.field, self.endo_ring.dim, 0, [])

    def _build_rho(self) -> Matrix:
        a = self.ext.total
        cols = [self.s_coords(a.right_mult_matrix(row),
                              "right multiplication by a centralizer element")
                for row in self.centralizer_space.rows]
        return Matrix.from_cols(self.field, cols) if cols \
            else Matrix(self.field, self.endo_ring.dim, 0, [])

    # -- module structure builders -------------------------------------------

    def _restrict_q_operator(self, q_op: Matrix, what: str) -> Matrix:
        """A Q-operator preserving the invariant subspace, in T coordinates."""
        cols = [self.t_coords(q_op.apply(row), what)
                for row in self.tensor_space.rows]
        return Matrix.from_cols(self.field, cols) if cols \
            else Matrix(self.field, 0, 0, [])

    def _build_t_over_r(self) -> Bimodule:
        """T as an R-R-bimodule: multiply the first leg on the left and the
        second leg on the right by centralizer elements."""
        a = self.ext.total
        f = self.field
        eye = Matrix.identity(f, a.dim)
        lefts, rights = [], []
        for row in self.centralizer_space.rows:
            lop = self.q.presentation.induced_operator(
                kron(a.left_mult_matrix(row), eye))
            lefts.append(self._restrict_q_operator(
                lop, "centralizer multiple of an invariant tensor"))
            rop = self.q.presentation.induced_operator(
                kron(eye, a.right_mult_matrix(row)))
            rights.append(self._restrict_q_operator(
                rop, "centralizer multiple of an invariant tensor"))
        return Bimodule(self.centralizer, self.centralizer,
                        self.tensor_space.dim, lefts, rights, label="T|R-R")

    def _build_r_right_t(self) -> Bimodule:
        """R as a right T-module: an invariant tensor sandwiches a
        centralizer element between its two legs."""
        a = self.ext.total
        f = self.field
        triv = trivial_algebra(f)
        k = self.tensor_space.dim
        rights = []
        for idx in range(k):
            tm = self.t_ambient(unit_vec(f, k, idx))
            op = Matrix.zeros(f, a.dim, a.dim)
            for i in range(a.dim):
                for j in range(a.dim):
                    c = tm.data[i][j]
                    if not f.is_zero(c):
                        op = op + (a.basis_left_mult(i)
                                   @ a.basis_right_mult(j)).scale(c)
            cols = [self.r_coords(op.apply(row), "sandwiched centralizer element")
                    for row in self.centralizer_space.rows]
            rights.append(Matrix.from_cols(f, cols) if cols
                          else Matrix(f, 0, 0, []))
        return Bimodule(triv, self.tensor_ring, self.centralizer.dim,
                        [Matrix.identity(f, self.centralizer.dim)],
                        rights, label="R|T")

    def _build_r_left_s(self) -> Bimodule:
        """R as a left S-module by evaluating endomorphisms."""
        f = self.field
        triv = trivial_algebra(f)
        lefts = []
        for mat in self.endo_space.basis:
            cols = [self.r_coords(mat.apply(row),
                                  "endomorphism value on a centralizer element")
                    for row in self.centralizer_space.rows]
            lefts.append(Matrix.from_cols(f, cols) if cols
                         else Matrix(f, 0, 0, []))
        return Bimodule(self.endo_ring, triv, self.centralizer.dim, lefts,
                        [Matrix.identity(f, self.centralizer.dim)],
                        label="R|S")

    def _build_s_over_r(self) -> Bimodule:
        """S as an R-R-bimodule by post-multiplying values on either side."""
        a = self.ext.total
        f = self.field
        lefts, rights = [], []
        for row in self.centralizer_space.rows:
            lmat = a.left_mult_matrix(row)
            rmat = a.right_mult_matrix(row)
            lcols = [self.s_coords(lmat @ b, "left translate of an endomorphism")
                     for b in self.endo_space.basis]
            rcols = [self.s_coords(rmat @ b, "right translate of an endomorphism")
                     for b in self.endo_space.basis]
            lefts.append(Matrix.from_cols(f, lcols) if lcols
                         else Matrix(f, 0, 0, []))
            rights.append(Matrix.from_cols(f, rcols) if rcols
                          else Matrix(f, 0, 0, []))
        return Bimodule(self.centralizer, self.centralizer,
                        self.endo_ring.dim, lefts, rights, label="S|R-R")

    # -- dimensions and verification ------------------------------------------

    def dims(self) -> dict:
        return {
            "algebra": self.ext.total.dim,
            "subalgebra": self.ext.base.dim,
            "tensor_square": self.dim_q,
            "centralizer": self.centralizer.dim,
            "tensor_ring": self.tensor_ring.dim,
            "endo_ring": self.endo_ring.dim,
            "casimir": self.casimir_space.dim,
        }

    def verify_ring_axioms(self, roundtrip: Optional[bool] = None) -> None:
        """Re-derive the structural identities the construction promises.

        Raises InternalInconsistency on any failure.  The endomorphism
        description of the tensor square (roundtrip) is skipped on large
        inputs unless forced, since it solves a quadratically bigger
        system than anything else here.
        """
        f = self.field
        a, b = self.ext.total, self.ext.base
        R, T, S = self.centralizer, self.tensor_ring, self.endo_ring

        def check(cond: bool, msg: str) -> None:
            if not cond:
                raise InternalInconsistency(msg)

        # the defining membership of R, re-verified elementwise
        for row in self.centralizer_space.rows:
            for i in range(b.dim):
                bi = self.ext.iota.col(i)
                check(vec_eq(f, a.multiply(bi, row), a.multiply(row, bi)),
                      "centralizer element does not commute with the base")

        # action laws and compatibilities packaged as bimodule validations
        self.q.module.validate()
        self.q_bimodule.validate()
        self.tensor_bimodule_cent.validate()
        self.cent_module_tensor.validate()
        self.cent_module_endo.validate()
        self.endo_bimodule_cent.validate()

        # counits are unital
        check(self.tensor_counit.apply(T.unit) == R.unit,
              "tensor counit is not unital")
        check(self.endo_counit.apply(S.unit) == R.unit,
              "endomorphism counit is not unital")

        # the tensor counit intertwines the right T-actions
        for i in range(T.dim):
            ei = unit_vec(f, T.dim, i)
            for j in range(T.dim):
                lhs = self.tensor_counit.apply(T.mult[i][j])
                rhs = self.cent_module_tensor.right_action[j].apply(
                    self.tensor_counit.apply(ei))
                check(vec_eq(f, lhs, rhs),
                      "tensor counit is not right T-linear")

        # evaluating a composite at 1 is acting on the inner value at 1
        for i in range(S.dim):
            ei = unit_vec(f, S.dim, i)
            for j in range(S.dim):
                lhs = self.endo_counit.apply(S.mult[i][j])
                rhs = self.cent_module_endo.left_action[i].apply(
                    self.endo_counit.apply(unit_vec(f, S.dim, j)))
                check(vec_eq(f, lhs, rhs),
                      "endomorphism counit does not intertwine evaluation")

        # left and right multiplication embed R into S, one straight and
        # one order-reversing, with commuting images
        check(self.lambda_map.apply(R.unit) == S.unit,
              "left multiplication by 1 is not the identity map")
        check(self.rho_map.apply(R.unit) == S.unit,
              "right multiplication by 1 is not the identity map")
        for i in range(R.dim):
            li = self.lambda_map.col(i)
            for j in range(R.dim):
                lj = self.lambda_map.col(j)
                rj = self.rho_map.col(j)
                check(vec_eq(f, self.lambda_map.apply(R.mult[i][j]),
                             S.multiply(li, lj)),
                      "left multiplication does not respect products")
                check(vec_eq(f, self.rho_map.apply(R.mult[i][j]),
                             S.multiply(rj, self.rho_map.col(i))),
                      "right multiplication does not reverse products")
                check(vec_eq(f, S.multiply(li, rj), S.multiply(rj, li)),
                      "left and right multiplications fail to commute")

        # Casimir elements sit inside T and absorb T from the left
        for crow in self.casimir_in_tensor.rows:
            for i in range(T.dim):
                prod = T.multiply(unit_vec(f, T.dim, i), crow)
                check(self.casimir_in_tensor.contains(prod),
                      "Casimir subspace is not a left ideal")

        # multiplication maps the tensor square onto A
        check(rank(self.mu_matrix) == a.dim,
              "multiplication map is not onto")

        if roundtrip is None:
            roundtrip = a.dim * self.dim_q <= 160
        if roundtrip:
            self._verify_endo_description_of_q()

    def _verify_endo_description_of_q(self) -> None:
        """The A-A-maps from the tensor square to A are exactly the maps
        sandwiching a centralizer element, matching R dimension for
        dimension, with mutually inverse translations."""
        f = self.field
        a = self.ext.total
        maps = hom_space(self.q.module, self.a_reg)
        if maps.dim != self.centralizer.dim:
            raise InternalInconsistency(
                "tensor-square-to-algebra map space does not match the centralizer")
        one = self.one_tensor_one()
        for mat in maps.basis:
            val = mat.apply(one)
            r = self.r_coords(val, "value of a two-sided map at 1 (x) 1")
            back = self._sandwich_map(self.r_lift(r))
            if back != mat:
                raise InternalInconsistency(
                    "sandwich map does not reproduce the original map")
        for row in self.centralizer_space.rows:
            mat = self._sandwich_map(row)
            if maps.coordinates(mat) is None:
                raise InternalInconsistency(
                    "sandwich map is not a two-sided map")
            val = mat.apply(one)
            if not vec_eq(f, val, row):
                raise InternalInconsistency(
                    "sandwich map does not evaluate back to its element")

    def _sandwich_map(self, r: Sequence) -> Matrix:
        """The map from the tensor square to A placing r between the legs."""
        a = self.ext.total
        f = self.field
        cols = []
        for k in range(self.dim_q):
            m = self.q_ambient(unit_vec(f, self.dim_q, k))
            acc = zero_vec(f, a.dim)
            for i in range(a.dim):
                for j in range(a.dim):
                    c = m.data[i][j]
                    if f.is_zero(c):
                        continue
                    val = a.multiply(a.multiply(
                        unit_vec(f, a.dim, i), r), unit_vec(f, a.dim, j))
                    f.row_addmul(acc, val, c)
            cols.append(acc)
        return Matrix.from_cols(f, cols) if cols else Matrix(f, a.dim, 0, [])


def build_canonical_rings(ext: Extension, check: bool = True,
                          roundtrip: Optional[bool] = None) -> CanonicalRings:
    """Construct all canonical rings for an extension and, unless told
    otherwise, verify the structural identities they must satisfy."""
    rings = CanonicalRings(ext)
    if check:
        rings.verify_ring_axioms(roundtrip=roundtrip)
    return rings
