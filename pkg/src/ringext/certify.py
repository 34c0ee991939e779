"""Decision procedures with machine-checkable certificates.

Four properties of an extension B -> A are decided here, each through an
exact linear problem whose solution doubles as a certificate:

* separable: some fully A-central tensor multiplies out to 1;
* split: some B-B-linear conditional expectation A -> B fixes 1;
* H-separable: 1 (x) 1 is a combination of A-central tensors pushed by
  centralizer elements;
* left / right depth two: the identity-leg maps x -> x (x) 1 and
  y -> 1 (x) y factor through finitely many invariant tensors paired
  with bimodule endomorphisms (quasibases).

Every verifier is substitution only: it re-checks the defining identity
of the certificate against the raw extension data and never trusts the
search that produced it.  The depth-two verdicts are cross-checked
against an independent characterization (the tensor square splitting off
a finite power of the algebra as a one-sided bimodule); those two answers
agreeing is a theorem, so a mismatch raises InternalInconsistency.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

from .bimodule import (
    Bimodule,
    SummandWitness,
    dual_basis_witness,
    forget_left,
    hom_space,
    left_regular_module,
    restrict_left,
    restrict_right,
    right_regular_module,
    summand_witness,
)
from .canonical import CanonicalRings, InternalInconsistency
from .linalg import (
    Matrix,
    rank,
    span_decide,
    unit_vec,
    vec_add,
    vec_eq,
    vec_is_zero,
    zero_vec,
)


# ---------------------------------------------------------------------------
# certificates

@dataclass
class SeparabilityCertificate:
    """A-central tensor with multiplication value 1."""
    element: list  # tensor-square coordinates


@dataclass
class SplitCertificate:
    """Conditional expectation: a B-B-linear retraction of the embedding."""
    expectation: Matrix  # dim(B) x dim(A)


@dataclass
class HSepPair:
    casimir: list    # tensor-square coordinates, fully A-central
    multiplier: list  # element of A lying in the centralizer


@dataclass
class HSepCertificate:
    """1 (x) 1 written as a sum of Casimir elements times centralizer
    elements (acting through the second leg)."""
    pairs: list


@dataclass
class QuasibasePair:
    tensor: list   # tensor-square coordinates, base-central
    endo: Matrix   # B-B-linear endomorphism of A


@dataclass
class D2Certificate:
    """Left: x (x) 1 = sum tensor_a . endo_a(x).  Right: 1 (x) y =
    sum endo_a(y) . tensor_a.  The dot is the outer action of A on the
    corresponding leg of the tensor square."""
    side: str
    pairs: list
    reverse_order: bool = False


# ---------------------------------------------------------------------------
# verifiers (substitution only)

def _is_casimir(cr: CanonicalRings, qcoords: Sequence) -> bool:
    f = cr.field
    a = cr.ext.total
    for i in range(a.dim):
        left = cr.q.module.left_action[i].apply(qcoords)
        right = cr.q.module.right_action[i].apply(qcoords)
        if not vec_eq(f, left, right):
            return False
    return True


def _is_base_central_tensor(cr: CanonicalRings, qcoords: Sequence) -> bool:
    f = cr.field
    for i in range(cr.ext.base.dim):
        bi = cr.ext.iota.col(i)
        left = cr.q.module.left_operator(bi).apply(qcoords)
        right = cr.q.module.right_operator(bi).apply(qcoords)
        if not vec_eq(f, left, right):
            return False
    return True


def _is_centralizer_element(cr: CanonicalRings, acoords: Sequence) -> bool:
    f = cr.field
    a = cr.ext.total
    for i in range(cr.ext.base.dim):
        bi = cr.ext.iota.col(i)
        if not vec_eq(f, a.multiply(bi, acoords), a.multiply(acoords, bi)):
            return False
    return True


def _is_endo(cr: CanonicalRings, mat: Matrix) -> bool:
    """B-B-linearity of a candidate endomorphism of A, checked matrixwise."""
    a = cr.ext.total
    if mat.rows != a.dim or mat.cols != a.dim:
        return False
    for i in range(cr.ext.base.dim):
        bi = cr.ext.iota.col(i)
        lm = a.left_mult_matrix(bi)
        rm = a.right_mult_matrix(bi)
        if mat @ lm != lm @ mat or mat @ rm != rm @ mat:
            return False
    return True


def verify_separability(cr: CanonicalRings, cert: SeparabilityCertificate) -> bool:
    if not _is_casimir(cr, cert.element):
        return False
    value = cr.mu_matrix.apply(cert.element)
    return vec_eq(cr.field, value, cr.ext.total.unit)


def verify_split(cr: CanonicalRings, cert: SplitCertificate) -> bool:
    a, b = cr.ext.total, cr.ext.base
    f = cr.field
    e = cert.expectation
    if e.rows != b.dim or e.cols != a.dim:
        return False
    for i in range(b.dim):
        bi = cr.ext.iota.col(i)
        if e @ a.left_mult_matrix(bi) != b.basis_left_mult(i) @ e:
            return False
        if e @ a.right_mult_matrix(bi) != b.basis_right_mult(i) @ e:
            return False
    if not vec_eq(f, e.apply(a.unit), b.unit):
        return False
    # a retraction: composing with the embedding gives the identity of B
    return e @ cr.ext.iota == Matrix.identity(f, b.dim)


def verify_hsep(cr: CanonicalRings, cert: HSepCertificate) -> bool:
    f = cr.field
    acc = zero_vec(f, cr.dim_q)
    for pair in cert.pairs:
        if not _is_casimir(cr, pair.casimir):
            return False
        if not _is_centralizer_element(cr, pair.multiplier):
            return False
        pushed = cr.q.module.right_operator(pair.multiplier).apply(pair.casimir)
        acc = vec_add(f, acc, pushed)
    return vec_eq(f, acc, cr.one_tensor_one())


def verify_d2(cr: CanonicalRings, cert: D2Certificate, seed: int = 0,
              samples: int = 4) -> bool:
    f = cr.field
    a = cr.ext.total
    for pair in cert.pairs:
        if not _is_base_central_tensor(cr, pair.tensor):
            return False
        if not _is_endo(cr, pair.endo):
            return False
    # exact identity on every basis element of the free leg
    for k in range(a.dim):
        ek = unit_vec(f, a.dim, k)
        if cert.side == "left":
            want = cr.pure(ek, a.unit)
            got = zero_vec(f, cr.dim_q)
            for pair in cert.pairs:
                val = pair.endo.apply(ek)
                got = vec_add(f, got, cr.q.module.right_operator(val)
                              .apply(pair.tensor))
        else:
            want = cr.pure(a.unit, ek)
            got = zero_vec(f, cr.dim_q)
            for pair in cert.pairs:
                val = pair.endo.apply(ek)
                got = vec_add(f, got, cr.q.module.left_operator(val)
                              .apply(pair.tensor))
        if not vec_eq(f, want, got):
            return False
    # seeded spot checks of the two-leg identity
    rng = random.Random(seed)
    for _ in range(samples):
        x = _random_element(f, a.dim, rng)
        y = _random_element(f, a.dim, rng)
        want = cr.pure(x, y)
        got = zero_vec(f, cr.dim_q)
        for pair in cert.pairs:
            if cert.side == "left":
                val = a.multiply(pair.endo.apply(x), y)
                got = vec_add(f, got, cr.q.module.right_operator(val)
                              .apply(pair.tensor))
            else:
                val = a.multiply(x, pair.endo.apply(y))
                got = vec_add(f, got, cr.q.module.left_operator(val)
                              .apply(pair.tensor))
        if not vec_eq(f, want, got):
            return False
    return True


def _random_element(f, n: int, rng: random.Random) -> list:
    if isinstance(f.zero, int):
        return [f.of(rng.randrange(f.p)) for _ in range(n)]
    return [f.of(rng.randint(-3, 3)) for _ in range(n)]


# ---------------------------------------------------------------------------
# searches

def find_separability_element(cr: CanonicalRings
                              ) -> Optional[SeparabilityCertificate]:
    """Solve for a Casimir element with multiplication value 1."""
    f = cr.field
    cols = [cr.mu_matrix.apply(row) for row in cr.casimir_space.rows]
    coeffs = span_decide(f, cols, list(cr.ext.total.unit))
    if coeffs is None:
        return None
    elem = zero_vec(f, cr.dim_q)
    for c, row in zip(coeffs, cr.casimir_space.rows):
        if not f.is_zero(c):
            f.row_addmul(elem, row, c)
    cert = SeparabilityCertificate(elem)
    if not verify_separability(cr, cert):
        raise InternalInconsistency("separability element failed verification")
    return cert


def find_conditional_expectation(cr: CanonicalRings) -> Optional[SplitCertificate]:
    """Solve for a B-B-linear map A -> B fixing the unit."""
    f = cr.field
    b = cr.ext.base
    maps = hom_space(cr.restricted, cr.b_reg)
    if maps.dim == 0:
        return None
    cols = [mat.apply(cr.ext.total.unit) for mat in maps.basis]
    coeffs = span_decide(f, cols, list(b.unit))
    if coeffs is None:
        return None
    e = maps.element(coeffs)
    cert = SplitCertificate(e)
    if not verify_split(cr, cert):
        raise InternalInconsistency("conditional expectation failed verification")
    return cert


def find_hsep_system(cr: CanonicalRings) -> Optional[HSepCertificate]:
    """Express 1 (x) 1 through Casimir elements and centralizer multipliers."""
    f = cr.field
    cas_rows = cr.casimir_space.rows
    cent_rows = cr.centralizer_space.rows
    gens = []
    for crow in cas_rows:
        for rrow in cent_rows:
            gens.append(cr.q.module.right_operator(rrow).apply(crow))
    coeffs = span_decide(f, gens, cr.one_tensor_one())
    if coeffs is None:
        return None
    pairs = []
    nr = len(cent_rows)
    for a_idx, crow in enumerate(cas_rows):
        mult = zero_vec(f, cr.ext.total.dim)
        for b_idx, rrow in enumerate(cent_rows):
            c = coeffs[a_idx * nr + b_idx]
            if not f.is_zero(c):
                f.row_addmul(mult, rrow, c)
        if not vec_is_zero(f, mult):
            pairs.append(HSepPair(list(crow), mult))
    cert = HSepCertificate(pairs)
    if not verify_hsep(cr, cert):
        raise InternalInconsistency("H-separability system failed verification")
    return cert


def find_d2_quasibase(cr: CanonicalRings, side: str, reverse_order: bool = False,
                      seed: int = 0) -> Optional[D2Certificate]:
    """Solve the identity-leg factorization through invariant tensors.

    The unknowns are coefficients over (invariant tensor, endomorphism)
    basis pairs; the equations put one algebra basis element at a time
    into the free leg.  reverse_order enumerates the pairs backwards,
    which changes which canonical solution the solver picks without
    changing solvability; downstream checks use that to show their
    results do not depend on the particular quasibase.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    f = cr.field
    a = cr.ext.total
    t_rows = cr.tensor_space.rows
    s_mats = cr.endo_space.basis
    t_order = list(range(len(t_rows)))
    s_order = list(range(len(s_mats)))
    if reverse_order:
        t_order.reverse()
        s_order.reverse()

    targets = []
    for k in range(a.dim):
        ek = unit_vec(f, a.dim, k)
        targets.append(cr.pure(ek, a.unit) if side == "left"
                       else cr.pure(a.unit, ek))
    target = [x for chunk in targets for x in chunk]

    gens = []
    index = []
    for ti in t_order:
        trow = t_rows[ti]
        for si in s_order:
            smat = s_mats[si]
            col = []
            for k in range(a.dim):
                val = smat.apply(unit_vec(f, a.dim, k))
                if side == "left":
                    chunk = cr.q.module.right_operator(val).apply(trow)
                else:
                    chunk = cr.q.module.left_operator(val).apply(trow)
                col.extend(chunk)
            gens.append(col)
            index.append((ti, si))
    coeffs = span_decide(f, gens, target)
    if coeffs is None:
        return None
    folded: dict[int, Matrix] = {}
    for c, (ti, si) in zip(coeffs, index):
        if f.is_zero(c):
            continue
        add = s_mats[si].scale(c)
        folded[ti] = folded.get(ti, Matrix.zeros(f, a.dim, a.dim)) + add
    pairs = [QuasibasePair(list(t_rows[ti]), mat)
             for ti, mat in sorted(folded.items()) if not mat.is_zero()]
    cert = D2Certificate(side, pairs, reverse_order=reverse_order)
    if not verify_d2(cr, cert, seed=seed):
        raise InternalInconsistency(f"{side} quasibase failed verification")
    return cert


# ---------------------------------------------------------------------------
# independent characterizations

def d2_summand_witness(cr: CanonicalRings, side: str) -> Optional[SummandWitness]:
    """The tensor square as a summand of a finite power of the algebra,
    with the outer action forgotten down to B on the stated side."""
    if side == "left":
        q_side = restrict_left(cr.q.module, cr.ext, label="Q|B-A")
        a_side = restrict_left(cr.a_reg, cr.ext, label="A|B-A")
    else:
        q_side = restrict_right(cr.q.module, cr.ext, label="Q|A-B")
        a_side = restrict_right(cr.a_reg, cr.ext, label="A|A-B")
    return summand_witness(q_side, a_side)


def hsep_summand_witness(cr: CanonicalRings) -> Optional[SummandWitness]:
    """The tensor square as a summand of a finite power of the algebra,
    with both outer actions kept."""
    return summand_witness(cr.q.module, cr.a_reg)


def base_module_projectivity(cr: CanonicalRings) -> dict:
    """Finitely generated projectivity of A over B on each side."""
    right = dual_basis_witness(
        restrict_right(cr.a_reg, cr.ext), cr.ext.base, "right")
    left = dual_basis_witness(
        restrict_left(cr.a_reg, cr.ext), cr.ext.base, "left")
    return {"left": left, "right": right}


def endo_ring_probe(cr: CanonicalRings) -> Optional[bool]:
    """Left depth two read off the one-sided endomorphism ring.

    When A is finitely generated projective as a right B-module, the ring
    of right-B-linear endomorphisms of A, carrying A on the left and B on
    the right, splits off a finite power of A exactly when the extension
    is left depth two.  Returns None when the projectivity hypothesis
    fails, else the verdict.
    """
    a = cr.ext.total
    f = cr.field
    right_a = forget_left(restrict_right(cr.a_reg, cr.ext))
    if dual_basis_witness(right_a, cr.ext.base, "right") is None:
        return None
    endos = hom_space(right_a, right_a)
    k = endos.dim
    lefts = []
    rights = []
    for i in range(a.dim):
        lm = a.basis_left_mult(i)
        cols = [endos.coordinates(lm @ mat) for mat in endos.basis]
        if any(c is None for c in cols):
            raise InternalInconsistency(
                "left translation does not preserve the endomorphism space")
        lefts.append(Matrix.from_cols(f, cols))
    for i in range(cr.ext.base.dim):
        lm = a.left_mult_matrix(cr.ext.iota.col(i))
        cols = [endos.coordinates(mat @ lm) for mat in endos.basis]
        if any(c is None for c in cols):
            raise InternalInconsistency(
                "precomposition does not preserve the endomorphism space")
        rights.append(Matrix.from_cols(f, cols))
    e_bimod = Bimodule(a, cr.ext.base, k, lefts, rights, label="End(A|B)")
    a_ab = restrict_right(cr.a_reg, cr.ext)
    return summand_witness(e_bimod, a_ab) is not None


def module_facts(cr: CanonicalRings) -> dict:
    """Projectivity, generator, and cyclicity facts for the centralizer
    as a right module over the invariant tensor ring and as a left module
    over the endomorphism ring."""
    t_reg = right_regular_module(cr.tensor_ring)
    s_reg = left_regular_module(cr.endo_ring)
    r_over_t = cr.cent_module_tensor
    r_over_s = cr.cent_module_endo
    return {
        "cent_over_tensor_ring": {
            "projective": dual_basis_witness(
                r_over_t, cr.tensor_ring, "right") is not None,
            "generator": summand_witness(t_reg, r_over_t) is not None,
            "cyclic_via_unit": rank(cr.tensor_counit) == cr.centralizer.dim,
        },
        "cent_over_endo_ring": {
            "projective": dual_basis_witness(
                r_over_s, cr.endo_ring, "left") is not None,
            "generator": summand_witness(s_reg, r_over_s) is not None,
            "cyclic_via_unit": rank(cr.endo_counit) == cr.centralizer.dim,
        },
    }


# ---------------------------------------------------------------------------
# classification

@dataclass
class Classification:
    separable: bool
    split: bool
    hseparable: bool
    left_d2: bool
    right_d2: bool
    separability_element: Optional[SeparabilityCertificate]
    conditional_expectation: Optional[SplitCertificate]
    hsep_system: Optional[HSepCertificate]
    left_quasibase: Optional[D2Certificate]
    right_quasibase: Optional[D2Certificate]
    endo_d2: Optional[bool]
    base_projective: dict
    facts: dict
    consistency_notes: list = dc_field(default_factory=list)


def classify(cr: CanonicalRings, seed: int = 0) -> Classification:
    """Decide all four properties, cross-check every redundant
    characterization, and assemble the certificates."""
    sep = find_separability_element(cr)
    split = find_conditional_expectation(cr)
    hsep = find_hsep_system(cr)
    left_qb = find_d2_quasibase(cr, "left", seed=seed)
    right_qb = find_d2_quasibase(cr, "right", seed=seed)

    notes: list[str] = []

    # quasibases and one-sided summand witnesses must agree (theorem)
    for side, qb in (("left", left_qb), ("right", right_qb)):
        wit = d2_summand_witness(cr, side)
        if (qb is None) != (wit is None):
            raise InternalInconsistency(
                f"{side} quasibase and summand characterization disagree")
    notes.append("depth-two quasibases agree with the summand characterization")

    # the H-separability system and the two-sided summand must agree (theorem)
    hsep_wit = hsep_summand_witness(cr)
    if (hsep is None) != (hsep_wit is None):
        raise InternalInconsistency(
            "H-separability system and summand characterization disagree")
    notes.append("H-separability system agrees with the summand characterization")

    if hsep is not None:
        if sep is None:
            raise InternalInconsistency(
                "H-separable extension produced no separability element")
        if left_qb is None or right_qb is None:
            raise InternalInconsistency(
                "H-separable extension is missing a depth-two quasibase")
        _check_hsep_induced_quasibases(cr, hsep, seed)
        notes.append("explicit quasibases from the H-separability system verified")

    endo = endo_ring_probe(cr)
    if endo is not None:
        if endo != (left_qb is not None):
            raise InternalInconsistency(
                "endomorphism-ring depth-two detection disagrees with the quasibase")
        notes.append("endomorphism-ring depth-two detection agrees")

    return Classification(
        separable=sep is not None,
        split=split is not None,
        hseparable=hsep is not None,
        left_d2=left_qb is not None,
        right_d2=right_qb is not None,
        separability_element=sep,
        conditional_expectation=split,
        hsep_system=hsep,
        left_quasibase=left_qb,
        right_quasibase=right_qb,
        endo_d2=endo,
        base_projective={k: v is not None
                         for k, v in base_module_projectivity(cr).items()},
        facts=module_facts(cr),
        consistency_notes=notes,
    )


def _check_hsep_induced_quasibases(cr: CanonicalRings, hsep: HSepCertificate,
                                   seed: int) -> None:
    """An H-separability system yields explicit quasibases on both sides:
    pair each Casimir element with right (resp. left) multiplication by
    its centralizer multiplier.  Both must verify by substitution."""
    a = cr.ext.total
    left_pairs = [QuasibasePair(p.casimir, a.right_mult_matrix(p.multiplier))
                  for p in hsep.pairs]
    right_pairs = [QuasibasePair(p.casimir, a.left_mult_matrix(p.multiplier))
                   for p in hsep.pairs]
    if not verify_d2(cr, D2Certificate("left", left_pairs), seed=seed):
        raise InternalInconsistency(
            "H-separability system does not induce a left quasibase")
    if not verify_d2(cr, D2Certificate("right", right_pairs), seed=seed):
        raise InternalInconsistency(
            "H-separability system does not induce a right quasibase")
