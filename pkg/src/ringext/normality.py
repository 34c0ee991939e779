"""Normality checks for subrings and their centralizer analogues.

A subring is normal in the sense tested here when contracting any
two-sided ideal of the big ring down to the subring yields a subspace
whose left and right translates span the same thing.  For group
algebras this recovers ordinary normality of the subgroup, and the
module-theoretic analogue replaces the subring by the invariant part
of a bimodule.  The checks in this file stay entirely inside exact
linear algebra: every "ideal" is a concrete subspace closed under both
multiplications, and every verdict is a rank comparison.

Also here: the double centralizer of the base inside the total
algebra, and the braided commutation law tying the centralizer to a
right-sided quasibase.  The latter replaces naive commutativity
(which can fail, e.g. for a full matrix ring over its scalars) by a
twisted rule that provably holds whenever the right quasibase exists.
"""

from dataclasses import dataclass
from typing import Optional, Sequence

from .linalg import Field, Matrix, Subspace, unit_vec, vec_add, vec_eq, zero_vec
from .algebra import AlgebraError, Extension, FDAlgebra, GroupData, group_algebra
from .bimodule import (Bimodule, BimoduleError, centralizer_subspace,
                       invariants_subspace, regular_bimodule)
from .canonical import CanonicalRings, InternalInconsistency
from .certify import D2Certificate, verify_d2


# ---------------------------------------------------------------------------
# ideals as closed subspaces


@dataclass
class Ideal:
    """A two-sided ideal presented by generators plus its closed span.

    closure is the least subspace containing the generators and stable
    under left and right multiplication by every basis element.
    """

    algebra: FDAlgebra
    generators: list
    closure: Subspace
    label: str = "J"

    @property
    def dim(self) -> int:
        return self.closure.dim


def ideal_closure(a: FDAlgebra, generators: Sequence[Sequence],
                  label: str = "J") -> Ideal:
    """Two-sided ideal generated by the given elements of a.

    Iterates multiply-and-span until the dimension stops growing; each
    pass multiplies the current basis by every algebra basis element on
    both sides, so the result is genuinely two-sided closed.
    """
    f = a.field
    gens = []
    for g in generators:
        if len(g) != a.dim:
            raise AlgebraError("ideal generator has wrong length")
        gens.append([f.of(c) for c in g])
    span = Subspace.from_vectors(f, a.dim, gens)
    while True:
        vecs = [r[:] for r in span.rows]
        for v in span.rows:
            for i in range(a.dim):
                vecs.append(a.basis_left_mult(i).apply(v))
                vecs.append(a.basis_right_mult(i).apply(v))
        grown = Subspace.from_vectors(f, a.dim, vecs)
        if grown.dim == span.dim:
            return Ideal(a, gens, grown, label)
        span = grown


def _translate_span(field: Field, dim: int, ops: Sequence[Matrix],
                    vectors: Sequence[Sequence]) -> Subspace:
    # span of op(v) over all listed operators and vectors
    return Subspace.from_vectors(field, dim,
                                 [op.apply(v) for v in vectors for op in ops])


def _two_sided_balance(a: FDAlgebra, sub: Subspace) -> dict:
    """Compare the left and right algebra translates of a subspace of a."""
    f = a.field
    lops = [a.basis_left_mult(i) for i in range(a.dim)]
    rops = [a.basis_right_mult(i) for i in range(a.dim)]
    left = _translate_span(f, a.dim, lops, sub.rows)
    right = _translate_span(f, a.dim, rops, sub.rows)
    return {
        "left_dim": left.dim,
        "right_dim": right.dim,
        "left_in_right": left.is_contained_in(right),
        "right_in_left": right.is_contained_in(left),
        "equal": left == right,
    }


def a_invariant_contraction(ext: Extension, j: Ideal) -> bool:
    """Does the ideal contract to a left-right balanced subspace of the base?

    Intersects the ideal with the embedded base and asks whether the
    span of algebra multiples on the left equals the span on the right.
    Every ideal passing this for every j makes the base a normal subring.
    """
    if j.algebra != ext.total:
        raise AlgebraError("ideal does not live in the extension's total algebra")
    contracted = j.closure.intersect(ext.image())
    return _two_sided_balance(ext.total, contracted)["equal"]


# ---------------------------------------------------------------------------
# normality of the centralizer and of bimodule invariants


def default_ideal_sample(a: FDAlgebra,
                         extra_generators: Optional[Sequence[Sequence]] = None) -> list:
    """Standard spread of ideals: zero, unit, augmentation when the
    algebra is a group algebra, one ideal per basis element, plus one
    per caller-supplied generator."""
    f = a.field
    out = [Ideal(a, [], Subspace.zero(f, a.dim), "0"),
           ideal_closure(a, [a.unit], "(1)")]
    if a.group is not None and a.dim > 1:
        gens = []
        for g in range(1, a.dim):
            v = zero_vec(f, a.dim)
            v[g] = f.one
            v[0] = f.neg(f.one)
            gens.append(v)
        out.append(ideal_closure(a, gens, "augmentation"))
    for i in range(a.dim):
        out.append(ideal_closure(a, [unit_vec(f, a.dim, i)], f"(e{i})"))
    for k, g in enumerate(extra_generators or []):
        out.append(ideal_closure(a, [g], f"(x{k})"))
    return out


def centralizer_normality_suite(cr: CanonicalRings,
                                ideals: Optional[Sequence[Ideal]] = None,
                                modules: Optional[Sequence[Bimodule]] = None) -> dict:
    """Normality facts about the centralizer of the base.

    Three layers, all reported as exact span comparisons:
      * the centralizer itself: algebra times centralizer versus
        centralizer times algebra inside the total algebra;
      * each sampled ideal, contracted to the centralizer, compared the
        same way;
      * the invariant part of each supplied bimodule over the total
        algebra (defaults: the regular bimodule and the tensor square
        over the base), with both inclusion directions reported so a
        one-sided quasibase can certify its one-sided inclusion.
    """
    a = cr.ext.total
    cent_rows = [r[:] for r in cr.centralizer_space.rows]
    if ideals is None:
        ideals = default_ideal_sample(a, extra_generators=cent_rows)
    mods = [cr.a_reg, cr.q.module]
    for m in modules or []:
        if m.left_algebra != a or m.right_algebra != a:
            raise BimoduleError(
                f"module {m.label} is not a bimodule over the total algebra")
        mods.append(m)

    cent_sub = Subspace.from_vectors(a.field, a.dim, cent_rows)
    report = {"centralizer": _two_sided_balance(a, cent_sub)}
    report["centralizer"]["dim"] = cent_sub.dim

    contractions = []
    for j in ideals:
        if j.algebra != a:
            raise AlgebraError(f"ideal {j.label} lives in the wrong algebra")
        contracted = j.closure.intersect(cent_sub)
        entry = {"ideal": j.label, "ideal_dim": j.dim,
                 "contracted_dim": contracted.dim}
        entry.update(_two_sided_balance(a, contracted))
        contractions.append(entry)
    report["ideal_contractions"] = contractions

    invariants = []
    for m in mods:
        inv = centralizer_subspace(m, cr.ext)
        left = _translate_span(m.field, m.dim, m.left_action, inv.rows)
        right = _translate_span(m.field, m.dim, m.right_action, inv.rows)
        invariants.append({
            "module": m.label,
            "invariants_dim": inv.dim,
            "left_dim": left.dim,
            "right_dim": right.dim,
            "left_in_right": left.is_contained_in(right),
            "right_in_left": right.is_contained_in(left),
            "equal": left == right,
        })
    report["bimodule_invariants"] = invariants
    report["all_equal"] = (report["centralizer"]["equal"]
                           and all(c["equal"] for c in contractions)
                           and all(v["equal"] for v in invariants))
    return report


# ---------------------------------------------------------------------------
# group algebras: three independent routes to subgroup normality


@dataclass
class HopfPairData:
    """A group algebra with the span of a subgroup's algebra inside it.

    k_plus is the kernel of the counit restricted to the subgroup span,
    spanned by differences h - 1; construction checks it really equals
    the intersection of the global augmentation ideal with the span.
    """

    group: GroupData
    subgroup: list[int]
    algebra: FDAlgebra
    span: Subspace
    k_plus: Subspace
    h_plus: Subspace
    counit: Matrix
    antipode: Matrix


def _validated_subgroup(group: GroupData, subgroup: Sequence[int]) -> list[int]:
    idx = list(subgroup)
    if len(set(idx)) != len(idx):
        raise AlgebraError("subgroup indices repeat")
    for i in idx:
        if not isinstance(i, int) or not 0 <= i < group.order:
            raise AlgebraError(f"subgroup index {i!r} out of range")
    hset = set(idx)
    if 0 not in hset:
        raise AlgebraError("subgroup does not contain the identity")
    for i in idx:
        if group.inverse[i] not in hset:
            raise AlgebraError("subgroup not closed under inversion")
        for j in idx:
            if group.cayley[i][j] not in hset:
                raise AlgebraError("subgroup not closed under multiplication")
    return idx


def hopf_pair(group: GroupData, subgroup: Sequence[int], field: Field) -> HopfPairData:
    idx = _validated_subgroup(group, subgroup)
    kg = group_algebra(field, group)
    n = group.order
    span = Subspace.from_vectors(field, n, [unit_vec(field, n, i) for i in idx])
    kp_gens = []
    for i in idx:
        if i == 0:
            continue
        v = zero_vec(field, n)
        v[i] = field.one
        v[0] = field.neg(field.one)
        kp_gens.append(v)
    k_plus = Subspace.from_vectors(field, n, kp_gens)
    hp_gens = []
    for g in range(1, n):
        v = zero_vec(field, n)
        v[g] = field.one
        v[0] = field.neg(field.one)
        hp_gens.append(v)
    h_plus = Subspace.from_vectors(field, n, hp_gens)
    if k_plus != h_plus.intersect(span):
        raise InternalInconsistency(
            "counit kernel of the subgroup span disagrees with the "
            "contracted augmentation ideal")
    counit = Matrix(field, 1, n, [[field.one] * n])
    anti = Matrix.zeros(field, n, n)
    for g in range(n):
        anti.data[group.inverse[g]][g] = field.one
    return HopfPairData(group, idx, kg, span, k_plus, h_plus, counit, anti)


def hopf_normality(group: GroupData, subgroup: Sequence[int], field: Field) -> dict:
    """Three independent normality verdicts for a subgroup span.

    subgroup_normal reads the multiplication table directly;
    conjugation_hopf_normal conjugates the subgroup span by every basis
    element through the algebra's multiplication operators and checks
    stability; augmentation_test compares the left and right ideals
    generated by the counit kernel of the span.  The three booleans
    agree for every pair; a disagreement would falsify the equivalence
    the checks encode.
    """
    pair = hopf_pair(group, subgroup, field)
    hset = set(pair.subgroup)
    table_normal = all(group.conjugate(g, h) in hset
                       for g in range(group.order) for h in pair.subgroup)

    kg = pair.algebra
    conj_stable = True
    for g in range(group.order):
        op = kg.basis_left_mult(g) @ kg.basis_right_mult(group.inverse[g])
        for h in pair.subgroup:
            if not pair.span.contains(op.apply(unit_vec(field, group.order, h))):
                conj_stable = False
                break
        if not conj_stable:
            break

    lops = [kg.basis_left_mult(i) for i in range(group.order)]
    rops = [kg.basis_right_mult(i) for i in range(group.order)]
    left_ideal = _translate_span(field, group.order, lops, pair.k_plus.rows)
    right_ideal = _translate_span(field, group.order, rops, pair.k_plus.rows)

    return {
        "subgroup_normal": table_normal,
        "conjugation_hopf_normal": conj_stable,
        "augmentation_test": left_ideal == right_ideal,
    }


# ---------------------------------------------------------------------------
# double centralizer


def double_centralizer(ext: Extension) -> dict:
    """The centralizer of the base and the centralizer of that.

    The base always lands inside its double centralizer; strict
    reports whether the containment is proper, i.e. whether commuting
    with everything that commutes with the base is weaker than lying
    in the base.
    """
    a_reg = regular_bimodule(ext.total)
    c = centralizer_subspace(a_reg, ext)
    cc = invariants_subspace(a_reg, [r[:] for r in c.rows])
    image = ext.image()
    if not image.is_contained_in(cc):
        raise InternalInconsistency(
            "base algebra escapes its own double centralizer")
    return {"centralizer": c, "double_centralizer": cc,
            "strict": cc.dim > image.dim}


# ---------------------------------------------------------------------------
# braided commutation against a right quasibase


def prebraided_check(cr: CanonicalRings, right_quasibase: D2Certificate) -> dict:
    """Twisted commutativity of the centralizer through a right quasibase.

    With pairs (u_j, gamma_j), where each u_j is a base-central tensor
    and each gamma_j a bimodule endomorphism of the total algebra, the
    law states s * r = sum_j gamma_j(r) * (u_j' s u_j'') for all s, r
    in the centralizer, with u' s u'' the two legs of u_j multiplied
    around s.  Naive commutativity s r = r s can fail while this holds;
    the verdict must not depend on which right quasibase is supplied.
    """
    if right_quasibase is None:
        raise BimoduleError("prebraided check needs a right quasibase")
    if right_quasibase.side != "right":
        raise BimoduleError("prebraided check needs a right-sided quasibase")
    if not verify_d2(cr, right_quasibase):
        raise BimoduleError("supplied right quasibase fails verification")

    a = cr.ext.total
    f = cr.field
    cent = cr.centralizer_space
    sandwich_ops = []
    for p in right_quasibase.pairs:
        tco = cr.t_coords(p.tensor)
        op = Matrix.zeros(f, cent.dim, cent.dim)
        for ti, c in enumerate(tco):
            if not f.is_zero(c):
                op = op + cr.cent_module_tensor.right_action[ti].scale(c)
        sandwich_ops.append(op)

    holds = True
    naive = True
    for s in cent.rows:
        s_co = cr.r_coords(s)
        for r in cent.rows:
            lhs = a.multiply(s, r)
            if not vec_eq(f, lhs, a.multiply(r, s)):
                naive = False
            acc = zero_vec(f, a.dim)
            for p, op in zip(right_quasibase.pairs, sandwich_ops):
                gval = p.endo.apply(r)
                sand = cr.r_lift(op.apply(s_co))
                acc = vec_add(f, acc, a.multiply(gval, sand))
            if not vec_eq(f, lhs, acc):
                holds = False
    return {"holds": holds, "naive_commutative": naive,
            "pairs": len(right_quasibase.pairs)}
