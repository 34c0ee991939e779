"""Assemble analysis results into deterministic report documents.

A report is a plain JSON-able dict: input echo, dimensions, the
classification with its certificate payloads, isomorphism verdicts,
normality results, and the braided commutation verdict.  Two runs on
the same input and seed produce byte-identical JSON except for the
generated_at stamp.  Reports can be re-verified later: every
certificate payload is decoded and substituted back into its defining
equations against a freshly built extension.
"""

import json
from datetime import datetime, timezone
from typing import Optional

from . import __version__
from .bimodule import right_regular_module
from .canonical import CanonicalRings, build_canonical_rings
from .certify import (Classification, classify, verify_d2, verify_hsep,
                      verify_separability, verify_split)
from .equivalences import (VerifiedIso, chi_M, evaluation_map,
                           functor_iso_checks, gamma_M, pi_A_iso, rho_M,
                           split_counit, triangle_check)
from .normality import (a_invariant_contraction, centralizer_normality_suite,
                        default_ideal_sample, double_centralizer,
                        hopf_normality, prebraided_check)
from .serialize import (InputError, ParsedInput, d2_from_json, d2_json,
                        field_json, hsep_from_json, hsep_json, parse_input,
                        separability_from_json, separability_json,
                        split_from_json, split_json, vector_json)

TOOL = {"name": "ringext", "version": __version__}


def _iso_block(iso: VerifiedIso) -> dict:
    out = {"name": iso.name,
           "domain": iso.domain,
           "codomain": iso.codomain,
           "domain_dim": iso.domain_dim,
           "codomain_dim": iso.codomain_dim,
           "status": iso.status,
           "route": iso.route,
           "naturality_samples": iso.naturality_samples,
           "checks": dict(iso.checks)}
    if iso.detail:
        out["detail"] = iso.detail
    return out


def classification_block(cr: CanonicalRings, cls: Classification) -> dict:
    f = cr.field
    certs = {}
    if cls.separability_element is not None:
        certs["separability_element"] = separability_json(f, cls.separability_element)
    if cls.conditional_expectation is not None:
        certs["conditional_expectation"] = split_json(cls.conditional_expectation)
    if cls.hsep_system is not None:
        certs["hsep_system"] = hsep_json(f, cls.hsep_system)
    if cls.left_quasibase is not None:
        certs["left_quasibase"] = d2_json(f, cls.left_quasibase)
    if cls.right_quasibase is not None:
        certs["right_quasibase"] = d2_json(f, cls.right_quasibase)
    return {
        "separable": cls.separable,
        "split": cls.split,
        "hseparable": cls.hseparable,
        "left_depth_two": cls.left_d2,
        "right_depth_two": cls.right_d2,
        "endo_ring_detection": cls.endo_d2,
        "base_projective": dict(cls.base_projective),
        "module_facts": cls.facts,
        "consistency_notes": list(cls.consistency_notes),
        "certificates": certs,
    }


def equivalence_block(cr: CanonicalRings, cls: Classification,
                      modules, seed: int) -> dict:
    sep = cls.separability_element
    lqb = cls.left_quasibase

    def per_module(m) -> tuple:
        entry = {"triangle": triangle_check(cr, m)}
        entry["gamma"] = _iso_block(
            gamma_M(cr, m, separability=sep, left_quasibase=lqb, seed=seed))
        fi = functor_iso_checks(cr, m, left_quasibase=lqb, seed=seed)
        entry["induction"] = _iso_block(fi["induction"])
        entry["coinduction"] = _iso_block(fi["coinduction"])
        return entry, fi

    regular, fi = per_module(cr.a_reg)
    regular["chi"] = _iso_block(
        chi_M(cr, cr.a_reg, left_quasibase=lqb, seed=seed))
    regular["rho"] = _iso_block(
        rho_M(cr, cr.a_reg, left_quasibase=lqb, seed=seed))
    a_right = right_regular_module(cr.ext.total)
    out = {
        "regular": regular,
        "base_change_of_total": _iso_block(
            pi_A_iso(cr, left_quasibase=lqb, seed=seed)),
        "split_counit_on_base": _iso_block(
            split_counit(cr, cr.b_reg, split=cls.conditional_expectation,
                         seed=seed)),
        "evaluation_regular": _iso_block(
            evaluation_map(cr.ext.total, a_right, a_right, seed=seed)),
        "tensor_ring_fg_projective_over_centralizer":
            fi["tensor_ring_fg_projective_over_centralizer"],
        "endo_ring_fg_projective_over_centralizer":
            fi["endo_ring_fg_projective_over_centralizer"],
    }

    for m in modules:
        entry = {}
        if m.left_algebra is cr.ext.total:
            entry, _ = per_module(m)
        if m.right_algebra is cr.ext.total:
            entry["chi"] = _iso_block(chi_M(cr, m, left_quasibase=lqb, seed=seed))
            entry["rho"] = _iso_block(rho_M(cr, m, left_quasibase=lqb, seed=seed))
        out[m.label] = entry
    return out


def normality_block(cr: CanonicalRings, cls: Classification, ideals) -> dict:
    a = cr.ext.total
    sample = default_ideal_sample(
        a, extra_generators=[r[:] for r in cr.centralizer_space.rows])
    sample.extend(ideals)
    suite = centralizer_normality_suite(cr, ideals=sample)
    base_contractions = [{"ideal": j.label,
                          "balanced": a_invariant_contraction(cr.ext, j)}
                         for j in sample]
    out = {"centralizer_suite": suite,
           "base_ideal_contractions": base_contractions,
           "base_normal_on_sample": all(c["balanced"] for c in base_contractions)}

    if a.group is not None:
        idx = _subgroup_indices(cr)
        if idx is not None:
            out["hopf"] = hopf_normality(a.group, idx, cr.field)

    dc = double_centralizer(cr.ext)
    out["double_centralizer"] = {
        "centralizer_dim": dc["centralizer"].dim,
        "double_dim": dc["double_centralizer"].dim,
        "base_dim": cr.ext.base.dim,
        "strict": dc["strict"],
        "double_basis": [vector_json(cr.field, r)
                         for r in dc["double_centralizer"].rows],
    }

    if cls.right_quasibase is not None:
        out["prebraided"] = dict(
            prebraided_check(cr, cls.right_quasibase), applicable=True)
    else:
        out["prebraided"] = {"applicable": False}
    return out


def _subgroup_indices(cr: CanonicalRings) -> Optional[list]:
    f = cr.field
    idx = []
    for i in range(cr.ext.base.dim):
        col = cr.ext.iota.col(i)
        nz = [k for k, c in enumerate(col) if not f.is_zero(c)]
        if len(nz) != 1 or not f.is_one(col[nz[0]]):
            return None
        idx.append(nz[0])
    return sorted(idx)


def analysis_report(parsed: ParsedInput, command: str = "analyze",
                    rings: Optional[CanonicalRings] = None,
                    classification: Optional[Classification] = None) -> dict:
    """The full pipeline on one parsed input.

    Prebuilt canonical rings and classification may be supplied to
    reuse work; they must come from the same extension and seed.
    """
    cr = rings if rings is not None else build_canonical_rings(parsed.ext)
    cls = classification if classification is not None \
        else classify(cr, seed=parsed.seed)
    doc = {
        "tool": dict(TOOL),
        "command": command,
        "generated_at": datetime.now(timezone.utc).isoformat(),
        "seed": parsed.seed,
        "field": field_json(parsed.field),
        "input": parsed.echo,
        "dims": cr.dims(),
        "classification": classification_block(cr, cls),
        "equivalences": equivalence_block(cr, cls, parsed.modules, parsed.seed),
        "normality": normality_block(cr, cls, parsed.ideals),
    }
    return doc


def report_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# re-verification of emitted documents


def verify_report(doc) -> tuple:
    """Decode every certificate in a report and substitute it back.

    Returns (ok, messages).  The input echo is parsed exactly like a
    fresh input file, the extension is rebuilt, and each certificate
    payload must still satisfy its defining equations.  Verdict flags
    must agree with certificate presence.
    """
    msgs = []
    if not isinstance(doc, dict):
        return False, ["report is not a JSON object"]
    for key in ("input", "classification", "dims"):
        if key not in doc:
            return False, [f"report lacks the {key} block"]
    try:
        parsed = parse_input(doc["input"])
    except InputError as exc:
        return False, [f"input echo does not parse: {exc}"]
    cr = build_canonical_rings(parsed.ext)
    f = cr.field

    if doc["dims"] != cr.dims():
        msgs.append("recorded dimensions disagree with the rebuilt extension")

    cl = doc["classification"]
    certs = cl.get("certificates", {})
    flag_to_cert = {"separable": "separability_element",
                    "split": "conditional_expectation",
                    "hseparable": "hsep_system",
                    "left_depth_two": "left_quasibase",
                    "right_depth_two": "right_quasibase"}
    for flag, cert_key in flag_to_cert.items():
        if cl.get(flag) and cert_key not in certs:
            msgs.append(f"{flag} is asserted but no {cert_key} is attached")

    loc = "$.classification.certificates"
    try:
        if "separability_element" in certs:
            cert = separability_from_json(
                f, certs["separability_element"], cr.dim_q,
                f"{loc}.separability_element")
            if not verify_separability(cr, cert):
                msgs.append("separability element fails substitution")
        if "conditional_expectation" in certs:
            cert = split_from_json(
                f, certs["conditional_expectation"], cr.ext.base.dim,
                cr.ext.total.dim, f"{loc}.conditional_expectation")
            if not verify_split(cr, cert):
                msgs.append("conditional expectation fails substitution")
        if "hsep_system" in certs:
            cert = hsep_from_json(
                f, certs["hsep_system"], cr.dim_q, cr.ext.total.dim,
                f"{loc}.hsep_system")
            if not verify_hsep(cr, cert):
                msgs.append("H-separability system fails substitution")
        for key, side in (("left_quasibase", "left"), ("right_quasibase", "right")):
            if key in certs:
                cert = d2_from_json(f, certs[key], cr.dim_q, cr.ext.total.dim,
                                    f"{loc}.{key}")
                if cert.side != side:
                    msgs.append(f"{key} is labeled for the wrong side")
                elif not verify_d2(cr, cert, seed=parsed.seed):
                    msgs.append(f"{key} fails substitution")
    except InputError as exc:
        msgs.append(f"certificate payload malformed: {exc}")
    return not msgs, msgs


# ---------------------------------------------------------------------------
# prose rendering


def _yn(v) -> str:
    if v is None:
        return "n/a"
    return "yes" if v else "no"


def render_text(doc: dict) -> str:
    lines = []
    tool = doc.get("tool", TOOL)
    lines.append(f"{tool['name']} {tool['version']} "
                 f"{doc.get('command', 'analyze')} report (seed {doc.get('seed', 0)})")
    fld = doc.get("field")
    fld_txt = "Q" if fld == "Q" else f"F_{fld['Fp']}" if isinstance(fld, dict) else "?"
    d = doc.get("dims")
    if d:
        lines.append(f"field {fld_txt}; algebra dim {d.get('algebra')}, "
                     f"subalgebra dim {d.get('subalgebra')}")
        lines.append(f"tensor square dim {d.get('tensor_square')}; "
                     f"centralizer {d.get('centralizer')}; "
                     f"tensor ring {d.get('tensor_ring')}; "
                     f"endo ring {d.get('endo_ring')}; "
                     f"casimir elements {d.get('casimir')}")
    ct = doc.get("certify")
    if ct:
        lines.append(f"certificate search ({ct['kind']}): "
                     f"{'found' if ct['verdict'] else 'none exists'}")
        if ct["verdict"]:
            lines.append("substitution check: "
                         f"{'passed' if ct['verified'] else 'FAILED'}")
    cl = doc.get("classification")
    if cl:
        lines.append("classification: "
                     f"separable {_yn(cl['separable'])}; "
                     f"split {_yn(cl['split'])}; "
                     f"H-separable {_yn(cl['hseparable'])}; "
                     f"depth two left {_yn(cl['left_depth_two'])} "
                     f"right {_yn(cl['right_depth_two'])}")
        attached = sorted(cl.get("certificates", {}))
        if attached:
            lines.append("certificates attached: " + ", ".join(attached))
        for note in cl.get("consistency_notes", []):
            lines.append(f"  cross-check: {note}")
    eq = doc.get("equivalences")
    if eq:
        for name in sorted(eq):
            block = eq[name]
            if isinstance(block, bool):
                lines.append(f"{name}: {_yn(block)}")
                continue
            if "status" in block:
                lines.append(_iso_line(name, block))
                continue
            for sub in sorted(block):
                v = block[sub]
                if isinstance(v, bool):
                    lines.append(f"{name}.{sub}: {_yn(v)}")
                else:
                    lines.append(_iso_line(f"{name}.{sub}", v))
    nm = doc.get("normality")
    if nm:
        suite = nm.get("centralizer_suite")
        if suite:
            lines.append("centralizer normality: "
                         f"{'balanced' if suite.get('all_equal') else 'NOT balanced'} "
                         f"on {len(suite.get('ideal_contractions', []))} sampled ideals "
                         f"and {len(suite.get('bimodule_invariants', []))} bimodules")
        if "base_normal_on_sample" in nm:
            lines.append(f"base subring normal on sample: "
                         f"{_yn(nm.get('base_normal_on_sample'))}")
        if "hopf" in nm:
            h = nm["hopf"]
            lines.append("group-algebra normality: "
                         f"table {_yn(h['subgroup_normal'])}, "
                         f"conjugation {_yn(h['conjugation_hopf_normal'])}, "
                         f"augmentation ideal {_yn(h['augmentation_test'])}")
        dc = nm.get("double_centralizer")
        if dc:
            lines.append("double centralizer: base dim "
                         f"{dc['base_dim']} inside dim {dc['double_dim']}, "
                         f"strict {_yn(dc['strict'])}")
        pb = nm.get("prebraided")
        if pb is not None:
            if pb.get("applicable"):
                lines.append("braided commutation law: "
                             f"{_yn(pb['holds'])} "
                             f"(naive commutativity {_yn(pb['naive_commutative'])})")
            else:
                lines.append("braided commutation law: "
                             "not applicable (no right quasibase)")
    return "\n".join(lines) + "\n"


def _iso_line(name: str, block: dict) -> str:
    route = f" via {block['route']}" if block.get("route") else ""
    return (f"{name}: {block['status']}{route} "
            f"({block['domain_dim']} -> {block['codomain_dim']}, "
            f"{block['naturality_samples']} naturality samples)")
