"""Exact classification of finite-dimensional ring extensions.

Given an extension B -> A of finite-dimensional algebras over Q or F_p,
this package constructs the centralizer ring, the bimodule endomorphism
ring, and the invariant tensor-square ring, decides separability,
splitting, H-separability, and left/right depth-two, produces
machine-checkable certificates for each positive verdict, and verifies
the module category equivalences that those certificates induce.
"""

__version__ = "0.1.0"

from .linalg import QQ, GF, LinalgError, Matrix, Subspace
from .algebra import AlgebraError, Extension, FDAlgebra, GroupData, group_algebra
from .canonical import CanonicalRings, InternalInconsistency, build_canonical_rings
from .certify import Classification, classify
from .equivalences import VerifiedIso
from .serialize import InputError, parse_input
from .report import analysis_report, render_text, report_json, verify_report

__all__ = [
    "QQ",
    "GF",
    "LinalgError",
    "Matrix",
    "Subspace",
    "AlgebraError",
    "FDAlgebra",
    "GroupData",
    "Extension",
    "group_algebra",
    "CanonicalRings",
    "InternalInconsistency",
    "build_canonical_rings",
    "Classification",
    "classify",
    "VerifiedIso",
    "InputError",
    "parse_input",
    "analysis_report",
    "render_text",
    "report_json",
    "verify_report",
    "__version__",
]
