"""Exact cyclic-operad and BV structures on Hochschild cochains.

Domain modules:
- exactfield: ℚ and GF(p) scalars, flint matrices, subspaces and quotients
- algcore: Algebra presentations, Frobenius structures, Nakayama grading
- hochschild: Cochain complex, cup product, endomorphism operad
- cyclic: Contraactions, cocyclic operator τ, Connes boundary B
- bv: Cohomology, Gerstenhaber and BV suites, Nakayama weight splitting
- hopf: Hopf presentations, Ext_H(k, k_ς) and its BV structure
- dualcheck: Dual right bialgebroids and their translation map
"""

from .algcore import (
    AlgebraPresentation,
    FrobeniusStructure,
    algebra_from_dict,
    frobenius_structure,
    nakayama_grading,
    validate_algebra,
)
from .bv import ClassAlgebra, cohomology, gerstenhaber_report, bv_report, nakayama_weight_report
from .cyclic import Contraaction, cyclic_structure, frobenius_contraaction
from .dualcheck import build_envelope, build_from_hopf, dual_instance, dual_report, dual_translation
from .errors import BvextError
from .exactfield import FieldSpec
from .hochschild import EndomorphismOperad, HochschildComplex, algebra_bimodule
from .hopf import HopfAlgebraPresentation, hopf_from_dict, trivial_contraaction, validate_hopf
from .results import CheckResult, SuiteReport

__version__ = "0.1.0"

__all__ = [
    "AlgebraPresentation",
    "FrobeniusStructure",
    "algebra_from_dict",
    "frobenius_structure",
    "nakayama_grading",
    "validate_algebra",
    "ClassAlgebra",
    "cohomology",
    "gerstenhaber_report",
    "bv_report",
    "nakayama_weight_report",
    "Contraaction",
    "cyclic_structure",
    "frobenius_contraaction",
    "build_envelope",
    "build_from_hopf",
    "dual_instance",
    "dual_report",
    "dual_translation",
    "BvextError",
    "FieldSpec",
    "EndomorphismOperad",
    "HochschildComplex",
    "algebra_bimodule",
    "HopfAlgebraPresentation",
    "hopf_from_dict",
    "trivial_contraaction",
    "validate_hopf",
    "CheckResult",
    "SuiteReport",
]
