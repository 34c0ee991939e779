"""Canonical rings attached to an extension, against an independent oracle.

The oracle in tests/oracles.py reads the corpus inputs directly, uses its
own elimination code, and never touches the package internals, so an
agreement here is two implementations confirming one another.
"""

import pytest

from ringext.canonical import InternalInconsistency, build_canonical_rings
from ringext.linalg import QQ, Matrix, unit_vec, vec_eq

from tests import oracles

# name -> (tensor_square, centralizer, endo_ring, tensor_ring, casimir)
FROZEN_DIMS = {
    "b_eq_a":   (2, 2, 2, 2, 2),
    "qc2_q":    (4, 2, 4, 4, 2),
    "f3c3_f3":  (9, 3, 9, 9, 3),
    "qs3_qa3":  (12, 4, 8, 8, 4),
    "f7s3_f7t": (18, 4, 10, 10, 4),
    "m2q_q":    (16, 4, 16, 16, 4),
    "m2q_t2":   (4, 1, 1, 1, 1),
    "qq8_qi":   (16, 6, 12, 12, 6),
    "qxq_q":    (4, 2, 4, 4, 2),
}


@pytest.mark.parametrize("name", sorted(FROZEN_DIMS))
def test_dims_match_frozen_table(name, built):
    q, r, s, t, cas = FROZEN_DIMS[name]
    d = built(name).cr.dims()
    assert d["tensor_square"] == q
    assert d["centralizer"] == r
    assert d["endo_ring"] == s
    assert d["tensor_ring"] == t
    assert d["casimir"] == cas


@pytest.mark.parametrize("name", ["qc2_q", "qs3_qa3", "m2q_t2", "qxq_q"])
def test_dims_match_independent_oracle(name, built):
    alg = oracles.RawAlgebra(oracles.load_doc(name))
    d = built(name).cr.dims()
    assert d["centralizer"] == oracles.centralizer_dim(alg)
    assert d["tensor_square"] == oracles.tensor_square_dim(alg)
    assert d["endo_ring"] == oracles.endo_ring_dim(alg)
    assert d["tensor_ring"] == oracles.invariant_tensor_ring_dim(alg)
    assert d["casimir"] == oracles.casimir_dim(alg)


def test_oracle_agrees_on_modular_extension(built):
    alg = oracles.RawAlgebra(oracles.load_doc("f3c3_f3"))
    d = built("f3c3_f3").cr.dims()
    assert d["tensor_square"] == oracles.tensor_square_dim(alg) == 9
    assert d["endo_ring"] == oracles.endo_ring_dim(alg) == 9


def test_ring_axioms_with_roundtrip(built):
    # force the quadratic endomorphism description check on a small case
    built("qc2_q").cr.verify_ring_axioms(roundtrip=True)


def test_centralizer_ring_multiplication(built):
    cr = built("qs3_qa3").cr
    a = cr.ext.total
    r = cr.centralizer
    # products of lifted basis elements land back in the centralizer
    for i in range(r.dim):
        for j in range(r.dim):
            prod = a.multiply(cr.r_lift(unit_vec(cr.field, r.dim, i)),
                              cr.r_lift(unit_vec(cr.field, r.dim, j)))
            assert vec_eq(cr.field, prod, cr.r_lift(r.mult[i][j]))
    assert cr.r_lift(r.unit) == a.unit


def test_tensor_ring_acts_on_tensor_square(built):
    cr = built("qc2_q").cr
    t = cr.tensor_ring
    f = cr.field
    # the action is a representation of T on Q
    for i in range(t.dim):
        for j in range(t.dim):
            composed = cr.t_action_on_q[i] @ cr.t_action_on_q[j]
            prod_coords = t.mult[i][j]
            acc = Matrix.zeros(f, cr.dim_q, cr.dim_q)
            for k, c in enumerate(prod_coords):
                if not f.is_zero(c):
                    acc = acc + cr.t_action_on_q[k].scale(c)
            assert composed == acc


def test_tensor_ring_unit_is_one_tensor_one(built):
    cr = built("qs3_qa3").cr
    assert cr.t_lift(cr.tensor_ring.unit) == cr.one_tensor_one()


def test_endo_ring_composition(built):
    cr = built("qc2_q").cr
    s = cr.endo_ring
    f = cr.field
    for i in range(s.dim):
        for j in range(s.dim):
            lhs = cr.s_matrix(unit_vec(f, s.dim, i)) @ \
                cr.s_matrix(unit_vec(f, s.dim, j))
            assert lhs == cr.s_matrix(s.mult[i][j])
    assert cr.s_matrix(s.unit) == Matrix.identity(f, cr.ext.total.dim)


def test_casimir_space_inside_tensor_ring(built):
    cr = built("m2q_q").cr
    assert cr.casimir_space.is_contained_in(cr.tensor_space)
    # every Casimir tensor commutes with the full outer action
    a = cr.ext.total
    for row in cr.casimir_space.rows:
        for i in range(a.dim):
            x = unit_vec(cr.field, a.dim, i)
            lhs = cr.q.module.act_left(x, row)
            rhs = cr.q.module.act_right(row, x)
            assert vec_eq(cr.field, lhs, rhs)


def test_coordinate_helpers_roundtrip(built):
    cr = built("qq8_qi").cr
    f = cr.field
    v = cr.r_lift([f.of(k + 1) for k in range(cr.centralizer.dim)])
    assert cr.r_lift(cr.r_coords(v)) == v
    w = cr.t_lift([f.of(k - 2) for k in range(cr.tensor_ring.dim)])
    assert cr.t_lift(cr.t_coords(w)) == w


def test_coordinate_helpers_reject_outsiders(built):
    cr = built("qc2_q").cr
    # the second group element is not central, so it is outside R
    outsider = unit_vec(QQ, 2, 1)
    assert cr.centralizer_space.contains(outsider)  # C2 is commutative: inside
    cr2 = built("qs3_qa3").cr
    bad = unit_vec(QQ, 6, 1)  # a transposition does not centralize A3
    with pytest.raises(InternalInconsistency):
        cr2.r_coords(bad)


def test_mu_multiplies(built):
    cr = built("qs3_qa3").cr
    a = cr.ext.total
    f = cr.field
    x, y = unit_vec(f, 6, 2), unit_vec(f, 6, 4)
    assert cr.mu_matrix.apply(cr.pure(x, y)) == a.multiply(x, y)
