"""Bimodules, balanced tensor products, hom spaces, witnesses."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ringext.algebra import (group_algebra, matrix_algebra, self_extension,
                             subalgebra_extension, trivial_algebra)
from ringext.bimodule import (Bimodule, BimoduleError, centralizer_subspace,
                              direct_sum, dual_basis_witness, forget_left,
                              forget_right, hom_space, invariants_subspace,
                              left_regular_module, random_cyclic_module,
                              regular_bimodule, restrict_left, restrict_right,
                              right_regular_module, summand_witness,
                              tensor_map, tensor_over)
from ringext.linalg import GF, QQ, Matrix, unit_vec, vec_eq
from tests.test_algebra import cyclic, sym3


def s3_over_a3():
    a = group_algebra(QQ, sym3())
    return subalgebra_extension(a, subgroup=[0, 3, 4])


# -- construction and actions -----------------------------------------------

def test_regular_bimodule_actions_commute():
    a = group_algebra(QQ, sym3())
    m = regular_bimodule(a)
    x = unit_vec(QQ, 6, 1)
    y = unit_vec(QQ, 6, 3)
    v = unit_vec(QQ, 6, 2)
    lhs = m.act_right(m.act_left(x, v), y)
    rhs = m.act_left(x, m.act_right(v, y))
    assert lhs == rhs
    assert m.act_left(a.unit, v) == v


def test_bimodule_validation_rejects_nonmodule():
    a = group_algebra(QQ, cyclic(2))
    good = regular_bimodule(a)
    bad_action = [Matrix.identity(QQ, 2), Matrix.zeros(QQ, 2, 2)]
    bad = Bimodule(a, a, 2, bad_action, good.right_action)
    with pytest.raises(BimoduleError):
        bad.validate()


def test_restriction_along_embedding():
    ext = s3_over_a3()
    m = regular_bimodule(ext.total)
    res = restrict_left(restrict_right(m, ext), ext)
    assert res.left_algebra == ext.base
    assert res.dim == 6
    x = unit_vec(QQ, 3, 1)
    assert res.act_left(x, ext.total.unit) == ext.embed(x)


def test_forget_and_direct_sum():
    a = group_algebra(QQ, cyclic(3))
    m = regular_bimodule(a)
    lm = forget_right(m)
    assert lm.right_algebra is trivial_algebra(QQ)
    s = direct_sum(m, m)
    assert s.dim == 6
    v = unit_vec(QQ, 6, 4)
    top = s.act_left(unit_vec(QQ, 3, 1), v)
    assert top[:3] == [QQ.zero] * 3
    assert top[3:] == m.act_left(unit_vec(QQ, 3, 1), unit_vec(QQ, 3, 1))


# -- tensor products ---------------------------------------------------------

def test_tensor_over_total_algebra_collapses():
    # A (x)_A A has the dimension of A
    a = group_algebra(QQ, sym3())
    m = regular_bimodule(a)
    t = tensor_over(m, m)
    assert t.module.dim == 6
    # pure tensor x (x) y maps to the class of xy
    x, y = unit_vec(QQ, 6, 1), unit_vec(QQ, 6, 3)
    via_product = t.pure(a.multiply(x, y), a.unit)
    assert t.pure(x, y) == via_product


def test_tensor_over_base_dimension():
    ext = s3_over_a3()
    m = regular_bimodule(ext.total)
    mid = restrict_right(m, ext)
    nid = restrict_left(m, ext)
    t = tensor_over(mid, nid)
    # |S3| * |S3| / |A3| = 12
    assert t.module.dim == 12


def test_tensor_over_scalars_is_full_outer_product():
    a = matrix_algebra(QQ, 2)
    m = forget_right(regular_bimodule(a))
    n = forget_left(regular_bimodule(a))
    t = tensor_over(m, n)
    assert t.module.dim == 16


def test_tensor_balancing_relation():
    ext = s3_over_a3()
    a = ext.total
    m = restrict_right(regular_bimodule(a), ext)
    n = restrict_left(regular_bimodule(a), ext)
    t = tensor_over(m, n)
    b = ext.embed(unit_vec(QQ, 3, 1))
    x, y = unit_vec(QQ, 6, 2), unit_vec(QQ, 6, 5)
    assert t.pure(a.multiply(x, b), y) == t.pure(x, a.multiply(b, y))


def test_tensor_map_respects_relations():
    a = group_algebra(QQ, cyclic(2))
    m = regular_bimodule(a)
    t = tensor_over(m, m)
    ident = Matrix.identity(QQ, 2)
    tm = tensor_map(t, t, ident, ident)
    assert tm == Matrix.identity(QQ, t.module.dim)


# -- hom spaces ---------------------------------------------------------------

def test_hom_space_endomorphisms_of_matrix_algebra():
    # bimodule endomorphisms of M2 over itself: scalars only
    a = matrix_algebra(QQ, 2)
    m = regular_bimodule(a)
    h = hom_space(m, m)
    assert h.dim == 1
    assert h.basis[0] == Matrix.identity(QQ, 4).scale(h.basis[0].data[0][0])


def test_hom_space_base_valued_maps():
    # F2[C2] over F2: maps from the regular bimodule to the base
    f = GF(2)
    a = group_algebra(f, cyclic(2))
    ext = self_extension(a)
    m = regular_bimodule(a)
    h = hom_space(m, m)
    # commutative algebra: left multiplications by anything central
    assert h.dim == 2


def test_hom_space_coordinates_roundtrip():
    a = group_algebra(QQ, cyclic(3))
    m = regular_bimodule(a)
    h = hom_space(m, m)
    assert h.dim == 3
    coeffs = [QQ.of(v) for v in (2, -1, 5)]
    el = h.element(coeffs)
    assert h.contains(el)
    assert h.coordinates(el) == coeffs


# -- invariants ---------------------------------------------------------------

def test_invariants_of_self_extension_is_center():
    a = group_algebra(QQ, sym3())
    m = regular_bimodule(a)
    inv = invariants_subspace(m, [unit_vec(QQ, 6, i) for i in range(6)])
    assert inv.dim == a.center().dim == 3


def test_centralizer_subspace_matches_invariants():
    ext = s3_over_a3()
    m = regular_bimodule(ext.total)
    c = centralizer_subspace(m, ext)
    inv = invariants_subspace(m, ext.iota.columns())
    assert c == inv
    assert c.dim == 4


# -- witnesses ----------------------------------------------------------------

def test_summand_witness_of_row_module_in_regular():
    a = matrix_algebra(QQ, 2)
    reg = right_regular_module(a)
    # right module of length-2 row vectors under matrix multiplication
    acts = [Matrix.from_rows(QQ, [[QQ.of(x) for x in r] for r in rows])
            for rows in ([[1, 0], [0, 0]], [[0, 0], [1, 0]],
                         [[0, 1], [0, 0]], [[0, 0], [0, 1]])]
    row = Bimodule(trivial_algebra(QQ), a, 2,
                   [Matrix.identity(QQ, 2)], acts, label="row")
    row.validate()
    w = summand_witness(row, reg)
    assert w is not None and w.verify()


def test_summand_witness_negative():
    # QQ as a module over QQ[C2] via sign is not a summand of the trivial one
    a = group_algebra(QQ, cyclic(2))
    triv = trivial_algebra(QQ)
    sign = Bimodule(triv, a, 1, [Matrix.identity(QQ, 1)],
                    [Matrix.identity(QQ, 1),
                     Matrix.identity(QQ, 1).scale(QQ.of(-1))], label="sign")
    unit = Bimodule(triv, a, 1, [Matrix.identity(QQ, 1)],
                    [Matrix.identity(QQ, 1), Matrix.identity(QQ, 1)],
                    label="unit")
    assert summand_witness(sign, unit) is None


def test_dual_basis_witness_regular_module():
    a = group_algebra(QQ, sym3())
    m = right_regular_module(a)
    w = dual_basis_witness(m, a, "right")
    assert w is not None and w.verify(a)


def test_dual_basis_witness_sign_not_projective_mod_2():
    # F2 with trivial C2 action is not projective over F2[C2]
    f = GF(2)
    a = group_algebra(f, cyclic(2))
    triv = trivial_algebra(f)
    one = Matrix.identity(f, 1)
    m = Bimodule(triv, a, 1, [one], [one, one], label="triv")
    assert dual_basis_witness(m, a, "right") is None


def test_random_cyclic_module_is_valid():
    a = group_algebra(QQ, sym3())
    m = random_cyclic_module(a, "left", 2, seed=11)
    m.validate()
    assert m.left_algebra == a
    n = random_cyclic_module(a, "left", 2, seed=11)
    assert [op.data for op in n.left_action] == [op.data for op in m.left_action]


# -- properties ---------------------------------------------------------------

@given(st.integers(2, 5))
def test_tensor_with_self_over_self_has_algebra_dim(n):
    a = group_algebra(GF(3), cyclic(n))
    m = regular_bimodule(a)
    assert tensor_over(m, m).module.dim == n


@given(st.data())
def test_pure_tensor_bilinear(data):
    a = group_algebra(QQ, cyclic(3))
    ext = self_extension(a)
    m = regular_bimodule(a)
    t = tensor_over(m, m)
    rat = st.fractions(min_value=-2, max_value=2, max_denominator=3)
    pick = lambda: [QQ.of(data.draw(rat)) for _ in range(3)]
    x1, x2, y = pick(), pick(), pick()
    s = QQ.of(data.draw(rat))
    xs = [QQ.add(u, QQ.mul(s, v)) for u, v in zip(x1, x2)]
    lhs = t.pure(xs, y)
    r1, r2 = t.pure(x1, y), t.pure(x2, y)
    rhs = [QQ.add(u, QQ.mul(s, v)) for u, v in zip(r1, r2)]
    assert vec_eq(QQ, lhs, rhs)
