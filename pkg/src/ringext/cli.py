"""Command line driver.

Subcommands: analyze (everything), certify <kind> (one certificate),
equivalence (isomorphism suite on one module), normality, hopf (group
algebra subgroup tests), verify (re-check a previously emitted JSON
report).  Exit codes: 0 the run completed and the report holds the
verdicts, 1 the input was rejected, 2 an internal invariant failed,
which is a bug trap rather than a data verdict.
"""

import argparse
import json
import sys
from typing import Optional

from .algebra import AlgebraError
from .canonical import InternalInconsistency, build_canonical_rings
from .certify import (classify, find_conditional_expectation,
                      find_d2_quasibase, find_hsep_system,
                      find_separability_element, verify_d2, verify_hsep,
                      verify_separability, verify_split)
from .equivalences import (chi_M, evaluation_map, functor_iso_checks, gamma_M,
                           pi_A_iso, rho_M, split_counit, triangle_check)
from .normality import hopf_normality
from .report import (TOOL, _iso_block, analysis_report, equivalence_block,
                     normality_block, render_text, report_json, verify_report)
from .serialize import (InputError, d2_json, field_json, hsep_json,
                        input_json, parse_input, separability_json,
                        split_json)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(str(exc), path)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc.msg}",
                         f"{path}:{exc.lineno}:{exc.colno}")


def _parsed_input(args):
    parsed = parse_input(_load_json(args.input))
    if args.seed is not None:
        parsed.seed = args.seed
        parsed.echo = input_json(parsed)
    return parsed


def _emit(doc: dict, args) -> int:
    text = report_json(doc) if args.json else render_text(doc)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _stamp(parsed, command: str) -> dict:
    from datetime import datetime, timezone
    return {"tool": dict(TOOL),
            "command": command,
            "generated_at": datetime.now(timezone.utc).isoformat(),
            "seed": parsed.seed,
            "field": field_json(parsed.field),
            "input": parsed.echo}


def cmd_analyze(args) -> int:
    parsed = _parsed_input(args)
    return _emit(analysis_report(parsed), args)


_CERT_KINDS = ("separable", "split", "hsep", "d2-left", "d2-right")


def cmd_certify(args) -> int:
    parsed = _parsed_input(args)
    cr = build_canonical_rings(parsed.ext)
    f = cr.field
    kind = args.kind
    if kind == "separable":
        cert = find_separability_element(cr)
        payload = None if cert is None else separability_json(f, cert)
        ok = None if cert is None else verify_separability(cr, cert)
    elif kind == "split":
        cert = find_conditional_expectation(cr)
        payload = None if cert is None else split_json(cert)
        ok = None if cert is None else verify_split(cr, cert)
    elif kind == "hsep":
        cert = find_hsep_system(cr)
        payload = None if cert is None else hsep_json(f, cert)
        ok = None if cert is None else verify_hsep(cr, cert)
    else:
        side = "left" if kind == "d2-left" else "right"
        cert = find_d2_quasibase(cr, side, seed=parsed.seed)
        payload = None if cert is None else d2_json(f, cert)
        ok = None if cert is None else verify_d2(cr, cert, seed=parsed.seed)
    if cert is not None and not ok:
        raise InternalInconsistency(
            f"solver produced a {kind} certificate that fails substitution")
    doc = _stamp(parsed, f"certify {kind}")
    doc["dims"] = cr.dims()
    doc["certify"] = {"kind": kind, "verdict": cert is not None,
                      "certificate": payload,
                      "verified": bool(ok) if cert is not None else None}
    return _emit(doc, args)


def cmd_equivalence(args) -> int:
    parsed = _parsed_input(args)
    cr = build_canonical_rings(parsed.ext)
    cls = classify(cr, seed=parsed.seed)
    name = args.module
    if name == "regular":
        m = cr.a_reg
    else:
        found = [x for x in parsed.modules if x.label == name]
        if not found:
            raise InputError(f"no module labeled {name!r} in the input",
                             "$.modules")
        m = found[0]
    sep = cls.separability_element
    lqb = cls.left_quasibase
    seed = parsed.seed
    entry = {}
    if m.left_algebra is cr.ext.total:
        entry["triangle"] = triangle_check(cr, m)
        entry["gamma"] = _iso_block(
            gamma_M(cr, m, separability=sep, left_quasibase=lqb, seed=seed))
        fi = functor_iso_checks(cr, m, left_quasibase=lqb, seed=seed)
        entry["induction"] = _iso_block(fi["induction"])
        entry["coinduction"] = _iso_block(fi["coinduction"])
    if m.right_algebra is cr.ext.total:
        entry["chi"] = _iso_block(chi_M(cr, m, left_quasibase=lqb, seed=seed))
        entry["rho"] = _iso_block(rho_M(cr, m, left_quasibase=lqb, seed=seed))
    doc = _stamp(parsed, f"equivalence {name}")
    doc["dims"] = cr.dims()
    doc["equivalences"] = {
        name: entry,
        "base_change_of_total": _iso_block(
            pi_A_iso(cr, left_quasibase=lqb, seed=seed)),
    }
    return _emit(doc, args)


def cmd_normality(args) -> int:
    parsed = _parsed_input(args)
    cr = build_canonical_rings(parsed.ext)
    cls = classify(cr, seed=parsed.seed)
    doc = _stamp(parsed, "normality")
    doc["dims"] = cr.dims()
    doc["normality"] = normality_block(cr, cls, parsed.ideals)
    return _emit(doc, args)


def cmd_hopf(args) -> int:
    parsed = _parsed_input(args)
    a = parsed.ext.total
    if a.group is None:
        raise InputError("the hopf command needs a group algebra", "$.algebra")
    f = parsed.field
    idx = []
    for i in range(parsed.ext.base.dim):
        col = parsed.ext.iota.col(i)
        nz = [k for k, c in enumerate(col) if not f.is_zero(c)]
        if len(nz) != 1 or not f.is_one(col[nz[0]]):
            raise InputError("the hopf command needs a subgroup subalgebra",
                             "$.subalgebra")
        idx.append(nz[0])
    idx.sort()
    verdicts = hopf_normality(a.group, idx, f)
    if len(set(verdicts.values())) != 1:
        raise InternalInconsistency(
            "the three subgroup normality tests disagree: " + repr(verdicts))
    doc = _stamp(parsed, "hopf")
    doc["normality"] = {"hopf": verdicts, "subgroup": idx}
    return _emit(doc, args)


def cmd_verify(args) -> int:
    doc = _load_json(args.report)
    ok, msgs = verify_report(doc)
    if ok:
        sys.stdout.write("report verifies: every certificate "
                         "re-checks by substitution\n")
        return EXIT_OK
    for m in msgs:
        sys.stderr.write(f"verification failure: {m}\n")
    return EXIT_INPUT


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="ringext",
        description="Exact structure analysis of finite dimensional "
                    "algebra extensions.")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("input", help="path to a JSON input document")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true",
                         help="emit the machine-readable JSON report")
        fmt.add_argument("--text", action="store_true",
                         help="emit the prose report (default)")
        p.add_argument("--seed", type=int, default=None,
                       help="override the sampling seed from the input")
        p.add_argument("-o", "--output", default=None,
                       help="write the report to a file instead of stdout")

    p = sub.add_parser("analyze", help="full classification and verification")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("certify", help="search for one certificate kind")
    p.add_argument("kind", choices=_CERT_KINDS)
    common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("equivalence",
                       help="isomorphism suite on one module")
    common(p)
    p.add_argument("--module", default="regular",
                   help="module label from the input, or \"regular\"")
    p.set_defaults(func=cmd_equivalence)

    p = sub.add_parser("normality", help="normality and braiding suite")
    common(p)
    p.set_defaults(func=cmd_normality)

    p = sub.add_parser("hopf", help="subgroup normality, three ways")
    common(p)
    p.set_defaults(func=cmd_hopf)

    p = sub.add_parser("verify", help="re-verify an emitted JSON report")
    p.add_argument("report", help="path to a JSON report document")
    p.set_defaults(func=cmd_verify)
    return top


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"input error at {exc.location}: {exc.reason}\n")
        return EXIT_INPUT
    except AlgebraError as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return EXIT_INPUT
    except InternalInconsistency as exc:
        sys.stderr.write(f"internal inconsistency: {exc}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
