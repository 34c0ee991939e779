"""Structure-constant algebras, groups, and embeddings."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ringext.algebra import (AlgebraError, Extension, FDAlgebra, GroupData,
                             diagonal_algebra, group_algebra, matrix_algebra,
                             self_extension, subalgebra_extension,
                             trivial_algebra)
from ringext.linalg import GF, QQ, Matrix, unit_vec, vec_eq


def cyclic(n):
    return GroupData(n, [[(i + j) % n for j in range(n)] for i in range(n)])


def sym3():
    perms = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
    comp = lambda s, t: tuple(s[t[x]] for x in range(3))
    table = [[perms.index(comp(s, t)) for t in perms] for s in perms]
    return GroupData(6, table)


# -- groups -----------------------------------------------------------------

def test_group_validation_rejects_bad_tables():
    with pytest.raises(AlgebraError, match="identity"):
        GroupData(2, [[1, 0], [0, 1]])
    with pytest.raises(AlgebraError, match="permutation"):
        GroupData(2, [[0, 0], [1, 1]])
    with pytest.raises(AlgebraError, match="out of range"):
        GroupData(2, [[0, 1], [1, 2]])


def test_group_nonassociative_rejected():
    # 5-loop: commutative latin square with identity, not a group
    table = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 3, 4, 0, 1],
        [3, 4, 1, 2, 0],
        [4, 2, 0, 1, 3],
    ]
    with pytest.raises(AlgebraError, match="associative"):
        GroupData(5, table)


def test_group_inverses_and_conjugation():
    g = sym3()
    for i in range(6):
        assert g.cayley[i][g.inverse[i]] == 0
    # conjugating one transposition by another gives the third
    assert g.conjugate(1, 2) == 5
    # A3 = {0, 3, 4} is closed under conjugation by everything
    for h in (0, 3, 4):
        assert all(g.conjugate(x, h) in (0, 3, 4) for x in range(6))


# -- algebras ---------------------------------------------------------------

def test_group_algebra_multiplication():
    a = group_algebra(QQ, cyclic(3))
    e1 = unit_vec(QQ, 3, 1)
    assert a.multiply(e1, e1) == unit_vec(QQ, 3, 2)
    assert a.multiply(e1, unit_vec(QQ, 3, 2)) == a.unit
    assert a.is_commutative()
    assert a.group is not None


def test_matrix_algebra_relations():
    a = matrix_algebra(QQ, 2)
    assert a.dim == 4
    e11, e12, e21, e22 = (unit_vec(QQ, 4, i) for i in range(4))
    assert a.multiply(e11, e12) == e12
    assert a.multiply(e12, e21) == e11
    assert a.multiply(e12, e12) == [QQ.zero] * 4
    assert vec_eq(QQ, a.unit, [QQ.one, QQ.zero, QQ.zero, QQ.one])
    assert not a.is_commutative()
    assert a.center().dim == 1


def test_diagonal_algebra():
    a = diagonal_algebra(QQ, 3)
    e0 = unit_vec(QQ, 3, 0)
    assert a.multiply(e0, e0) == e0
    assert a.multiply(e0, unit_vec(QQ, 3, 1)) == [QQ.zero] * 3
    assert a.center().dim == 3


def test_trivial_algebra_is_cached_singleton():
    assert trivial_algebra(QQ) is trivial_algebra(QQ)
    assert trivial_algebra(QQ) is not trivial_algebra(GF(2))
    assert trivial_algebra(QQ).dim == 1


def test_algebra_validation_catches_nonassociative():
    # corrupt C3 table: e1*e2 set to e1 instead of e0
    a = group_algebra(QQ, cyclic(3))
    bad = [[list(v) for v in row] for row in a.mult]
    bad[1][2] = list(unit_vec(QQ, 3, 1))
    with pytest.raises(AlgebraError, match="not associative"):
        FDAlgebra(QQ, 3, bad, a.unit)


def test_algebra_validation_catches_bad_unit():
    a = matrix_algebra(QQ, 2)
    with pytest.raises(AlgebraError, match="unit"):
        FDAlgebra(QQ, 4, a.mult, unit_vec(QQ, 4, 0))


def test_mult_matrices_agree_with_multiply():
    a = group_algebra(GF(5), sym3())
    x = [GF(5).of(v) for v in (1, 2, 0, 3, 0, 4)]
    y = [GF(5).of(v) for v in (2, 0, 1, 0, 0, 1)]
    assert a.left_mult_matrix(x).apply(y) == a.multiply(x, y)
    assert a.right_mult_matrix(y).apply(x) == a.multiply(x, y)
    for i in range(6):
        assert a.basis_left_mult(i).col(0) == a.mult[i][0]


def test_center_of_group_algebra_counts_conjugacy_classes():
    # S3 has 3 conjugacy classes
    a = group_algebra(QQ, sym3())
    assert a.center().dim == 3


# -- extensions -------------------------------------------------------------

def test_subgroup_extension_reorders_identity():
    a = group_algebra(QQ, sym3())
    ext = subalgebra_extension(a, subgroup=[3, 0, 4])
    assert ext.base.dim == 3
    assert ext.base.group is not None
    # identity must come first regardless of listed order
    assert ext.embed(unit_vec(QQ, 3, 0)) == a.unit
    assert ext.image().dim == 3


def test_subgroup_extension_rejects_nonclosed_subset():
    a = group_algebra(QQ, sym3())
    with pytest.raises(AlgebraError):
        subalgebra_extension(a, subgroup=[0, 1, 2])


def test_basis_extension_builds_structure_constants():
    a = matrix_algebra(QQ, 2)
    rows = [[QQ.of(x) for x in r] for r in
            [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1]]]
    ext = subalgebra_extension(a, basis=rows)
    assert ext.base.dim == 3
    for i in range(3):
        for j in range(3):
            lhs = ext.embed(ext.base.mult[i][j])
            rhs = a.multiply(rows[i], rows[j])
            assert vec_eq(QQ, lhs, rhs)


def test_basis_extension_rejects_nonclosed_span():
    a = matrix_algebra(QQ, 2)
    rows = [[QQ.of(x) for x in r] for r in [[1, 0, 0, 1], [0, 1, 0, 0]]]
    subalgebra_extension(a, basis=rows)
    # span{1, e12, e21} is not closed: e12 e21 = e11 falls outside
    bad = [[QQ.of(x) for x in r] for r in
           [[1, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0]]]
    with pytest.raises(AlgebraError):
        subalgebra_extension(a, basis=bad)


def test_extension_requires_exactly_one_description():
    a = group_algebra(QQ, cyclic(2))
    with pytest.raises(AlgebraError):
        subalgebra_extension(a)
    with pytest.raises(AlgebraError):
        subalgebra_extension(a, basis=[a.unit], subgroup=[0])


def test_extension_validation_rejects_nonunital_map():
    a = group_algebra(QQ, cyclic(2))
    b = trivial_algebra(QQ)
    iota = Matrix.from_cols(QQ, [unit_vec(QQ, 2, 1)])
    with pytest.raises(AlgebraError, match="unit"):
        Extension(b, a, iota)


def test_self_extension():
    a = group_algebra(QQ, cyclic(4))
    ext = self_extension(a)
    assert ext.base.dim == a.dim
    assert ext.embed(unit_vec(QQ, 4, 2)) == unit_vec(QQ, 4, 2)


# -- properties -------------------------------------------------------------

@given(st.integers(2, 6), st.data())
def test_group_algebra_associativity_random(n, data):
    a = group_algebra(GF(7), cyclic(n))
    f = a.field
    pick = lambda: [f.of(data.draw(st.integers(0, 6))) for _ in range(n)]
    x, y, z = pick(), pick(), pick()
    assert a.multiply(a.multiply(x, y), z) == a.multiply(x, a.multiply(y, z))


@given(st.data())
def test_mult_matrix_linearity(data):
    a = matrix_algebra(QQ, 2)
    rat = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    pick = lambda: [QQ.of(data.draw(rat)) for _ in range(4)]
    x, y = pick(), pick()
    s = data.draw(rat)
    scaled = [QQ.add(a_, QQ.mul(QQ.of(s), b_)) for a_, b_ in zip(x, y)]
    lhs = a.left_mult_matrix(scaled)
    rhs = a.left_mult_matrix(x) + a.left_mult_matrix(y).scale(QQ.of(s))
    assert lhs == rhs
