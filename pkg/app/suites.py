"""Suite groups behind each subcommand.

Every group takes a loaded Instance, the RunConfig and an optional event
registry, and returns the SuiteReports it produced. Under `all`, groups
whose prerequisites the instance lacks (no Frobenius functional, σ not
diagonalizable, S² ≠ Ad_ς, ...) are skipped with a finding instead of
aborting the run.
"""

import logging
from typing import Callable, Dict, List, Optional, Tuple

from bvext.algcore import frobenius_identities, frobenius_structure, is_symmetric, validate_algebra
from bvext.bv import ClassAlgebra, bv_report, cohomology, gerstenhaber_report, nakayama_weight_report
from bvext.cyclic import (
    cyclic_operad_report,
    cyclic_report,
    cyclic_structure,
    frobenius_contraaction,
    stability_report,
    symmetric_contraaction_crosscheck,
    twisted_coefficient_report,
)
from bvext.dualcheck import ayd_report, build_envelope, build_from_hopf, dual_report
from bvext.errors import (
    CharacteristicError,
    NotCyclic,
    NotDiagonalizable,
    NotFrobenius,
    NotSymmetric,
    TwistedInvolutionFails,
)
from bvext.events.registry import EventRegistry, publish
from bvext.hochschild import (
    EndomorphismOperad,
    algebra_bimodule,
    coface_consistency_report,
    composition_oracle_report,
    operad_axiom_report,
)
from bvext.hopf import (
    HopfCochainOperad,
    ext_bv_report,
    hopf_cyclic_structure,
    hopf_tau_report,
    trivial_contraaction,
    twisted_involution_check,
    validate_hopf,
)
from bvext.results import SuiteReport

from .config import RunConfig
from .corpus import Instance

logger = logging.getLogger("bvext")

SuiteGroup = Callable[[Instance, RunConfig, Optional[EventRegistry]], List[SuiteReport]]

# Missing structure that `all` reports as a skipped group
SKIPPABLE_ERRORS = (
    NotFrobenius,
    NotDiagonalizable,
    CharacteristicError,
    NotCyclic,
    NotSymmetric,
    TwistedInvolutionFails,
)


def _operad(instance: Instance):
    return HopfCochainOperad(instance.hopf) if instance.is_hopf else EndomorphismOperad(instance.algebra)


def _prefixed(prefix: str, report: SuiteReport) -> SuiteReport:
    """Prefix the suite name, e.g. hh_cosimplicial."""
    report.suite = f"{prefix}{report.suite}"
    return report


def _algebra_bv(instance: Instance, degree: int, registry: Optional[EventRegistry]) -> List[SuiteReport]:
    """Gerstenhaber suite on HH^•(A, A); BV suite when the Frobenius γ is stable."""
    A = instance.algebra
    operad = EndomorphismOperad(A)
    H = cohomology(operad, degree)
    cs = None
    if A.frobenius is not None:
        fs = frobenius_structure(A)
        cs = cyclic_structure(frobenius_contraaction(fs, algebra_bimodule(A)), operad)
    algebra = ClassAlgebra(H, cs)
    reports = [gerstenhaber_report(algebra, degree, registry)]
    if cs is not None and cs.contraaction.stable:
        reports.append(bv_report(algebra, degree, registry))
    else:
        reason = "no Frobenius functional" if cs is None else "Frobenius γ is not stable; see `nakayama`"
        reports.append(_skipped("bv", instance, reason, registry))
    return reports


def _skipped(name: str, instance: Instance, reason: str, registry: Optional[EventRegistry]) -> SuiteReport:
    report = SuiteReport(name, instance.name)
    report.add_finding(f"skipped: {reason}")
    publish(registry, {"finding": report.findings[-1], "suite": name})
    return report


# =============================================================================
# Groups
# =============================================================================

def run_validate(instance: Instance, config: RunConfig, registry: Optional[EventRegistry] = None) -> List[SuiteReport]:
    """Algebra or Hopf axioms, then the contraactions together with their aYD checks."""
    if instance.is_hopf:
        h = instance.hopf
        report = validate_hopf(h)
        reports = [report]
        if report.passed:
            contraaction = trivial_contraaction(h)
            reports.append(contraaction.check_axioms())
            reports.append(ayd_report(build_from_hopf(h), contraaction, registry))
        return reports

    A = instance.algebra
    report = validate_algebra(A)
    reports = [report]
    if report.passed and A.frobenius is not None:
        fs = frobenius_structure(A)
        reports.append(frobenius_identities(fs))
        reports.append(stability_report(fs, registry))
        reports.append(ayd_report(build_envelope(A), frobenius_contraaction(fs), registry))
    return reports


def run_cohomology(instance: Instance, config: RunConfig, registry: Optional[EventRegistry] = None) -> List[SuiteReport]:
    """HH^•(A, A) or Ext_H(k, k) dimensions and the cosimplicial consistency checks.

    A Hopf input gets both tables: Ext_H(k, k) and HH^•(H, H) of its algebra.
    """
    degree = config.degree_for(instance.dim)
    cx = _operad(instance)
    H = cohomology(cx, degree)
    report = SuiteReport("cohomology", cx.label)
    report.dimensions["Ext" if instance.is_hopf else "HH"] = H.dims()
    logger.info("%s: dims %s through degree %d", cx.label, H.dims(), degree)
    reports = [report, coface_consistency_report(cx, degree)]
    if instance.is_hopf:
        hh = EndomorphismOperad(instance.algebra)
        report.dimensions["HH"] = cohomology(hh, degree).dims()
        logger.info("%s: dims %s through degree %d", hh.label, report.dimensions["HH"], degree)
        reports.append(_prefixed("hh_", coface_consistency_report(hh, degree)))
    return reports


def run_operad(instance: Instance, config: RunConfig, registry: Optional[EventRegistry] = None) -> List[SuiteReport]:
    """Operad axioms for every bound triple; passes after the first are named operad_p_q_r."""
    passes = config.operad_passes_for(instance.dim)
    operad = _operad(instance)
    reports = []
    for index, (p, q, r) in enumerate(passes):
        report = operad_axiom_report(operad, p, q, r, registry)
        if index:
            report.suite = f"operad_{p}_{q}_{r}"
        reports.append(report)
    p, q, _ = passes[0]
    reports.append(composition_oracle_report(operad, min(p, 2), min(q, 2)))
    return reports


def run_cyclic(instance: Instance, config: RunConfig, registry: Optional[EventRegistry] = None) -> List[SuiteReport]:
    """τ suites on C^•(A, A) with the Frobenius γ, or on C^•(H, k_ς)."""
    degree = config.degree_for(instance.dim)
    p, q, _ = config.operad_bounds_for(instance.dim)
    if instance.is_hopf:
        h = instance.hopf
        cs = hopf_cyclic_structure(h)
        return [
            hopf_tau_report(h, degree, registry),
            cyclic_operad_report(cs, p, q, registry),
            cyclic_report(cs, degree, registry),
        ]

    A = instance.algebra
    fs = frobenius_structure(A)
    cs = cyclic_structure(frobenius_contraaction(fs, algebra_bimodule(A)), EndomorphismOperad(A))
    reports = [
        stability_report(fs, registry),
        cyclic_operad_report(cs, p, q, registry),
        cyclic_report(cs, degree, registry),
    ]
    if is_symmetric(fs):
        reports.append(symmetric_contraaction_crosscheck(fs))
    reports.append(twisted_coefficient_report(fs, degree, registry=registry))
    return reports


def run_bv(instance: Instance, config: RunConfig, registry: Optional[EventRegistry] = None) -> List[SuiteReport]:
    """Gerstenhaber suite always; BV suite when τ^{n+1} = id."""
    degree = config.degree_for(instance.dim)
    if instance.is_hopf:
        h = instance.hopf
        if twisted_involution_check(h):
            p, q, _ = config.operad_bounds_for(instance.dim)
            reports = [ext_bv_report(h, degree, (p, q), registry)]
        else:
            H = cohomology(HopfCochainOperad(h), degree)
            report = gerstenhaber_report(ClassAlgebra(H), degree, registry)
            report.add_finding("S² ≠ Ad_ς: no BV operator on Ext")
            reports = [report]
        if instance.algebra.frobenius is not None:
            reports.extend(_prefixed("hh_", r) for r in _algebra_bv(instance, degree, registry))
        return reports

    return _algebra_bv(instance, degree, registry)


def run_nakayama(instance: Instance, config: RunConfig, registry: Optional[EventRegistry] = None) -> List[SuiteReport]:
    degree = config.degree_for(instance.dim)
    fs = frobenius_structure(instance.algebra)
    return [nakayama_weight_report(fs, degree, registry)]


def run_dual(instance: Instance, config: RunConfig, registry: Optional[EventRegistry] = None) -> List[SuiteReport]:
    """Right bialgebroid U* of A^e or of H, with the contraaction dictionaries."""
    if instance.is_hopf:
        h = instance.hopf
        return [dual_report(build_from_hopf(h), trivial_contraaction(h), registry)]
    A = instance.algebra
    contraaction = frobenius_contraaction(frobenius_structure(A)) if A.frobenius is not None else None
    return [dual_report(build_envelope(A), contraaction, registry)]


GROUPS: Dict[str, SuiteGroup] = {
    "validate": run_validate,
    "cohomology": run_cohomology,
    "operad": run_operad,
    "cyclic": run_cyclic,
    "bv": run_bv,
    "nakayama": run_nakayama,
    "dual": run_dual,
}

ALL_GROUPS: Tuple[str, ...] = tuple(GROUPS)


def groups_for(command: str) -> Tuple[str, ...]:
    return ALL_GROUPS if command == "all" else (command,)


def instance_is_valid(instance: Instance) -> bool:
    if instance.is_hopf:
        return validate_hopf(instance.hopf).passed
    return validate_algebra(instance.algebra).passed


def run_group(group: str, instance: Instance, config: RunConfig,
              registry: Optional[EventRegistry] = None, lenient: bool = False) -> List[SuiteReport]:
    """Run one group; with lenient set, missing structure becomes a skipped suite.

    Raises:
        KeyError: If the group name is unknown
        BvextError: Any domain error not covered by the lenient skip
    """
    runner = GROUPS[group]
    if lenient and group != "validate" and not instance_is_valid(instance):
        return [_skipped(group, instance, "presentation failed validation", registry)]
    try:
        return runner(instance, config, registry)
    except SKIPPABLE_ERRORS as e:
        if not lenient:
            raise
        logger.info("Skipping %s on %s: %s", group, instance.name, e.message)
        return [_skipped(group, instance, f"{type(e).__name__}: {e.message}", registry)]
