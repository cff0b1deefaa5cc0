"""Finite-dimensional Hopf algebras and the BV structure on Ext_H(k, k_ς).

This module provides:
- HopfAlgebraPresentation / hopf_from_dict: H with Δ, ε_H, S and a grouplike ς
- validate_hopf: Bialgebra, antipode and grouplike axioms
- HopfContraaction / trivial_contraaction: γ(f) = f(ς) on k_ς
- tau_hopf: (τf)(h¹..hⁿ) = f(h²₍₁₎, .., hⁿ₍₁₎, S(hⁿ₍₂₎)⋯S(h²₍₂₎)S(h¹)ς)
- twisted_involution_check / defect_operator: S² against Ad_ς
- HopfCochainOperad: C^•(H, k) with insertion through Δ-iterates
- hopf_tau_report / ext_bv_report: Cyclicity and BV suites
- dual_hopf: H* built directly from the structure tensors

Δ(b_i) = Σ comult[i][j][k] b_j ⊗ b_k and S(b_j) = Σ_k antipode[k][j] b_k.
"""
from dataclasses import dataclass, replace
from functools import cached_property
from itertools import product
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .algcore import AlgebraPresentation, algebra_from_dict, algebra_to_dict, validate_algebra
from .bv import ClassAlgebra, bv_report, cohomology, gerstenhaber_report
from .constants import MAX_COCHAIN_DIM
from .cyclic import Contraaction, CyclicStructure, cyclic_operad_report, cyclic_report
from .errors import DimensionMismatch, NotGrouplike, SchemaError, TwistedInvolutionFails
from .events.registry import EventRegistry, EventType, publish, publish_check
from .exactfield import FieldSpec, Matrix, first_difference, kron, mat_inverse
from .hochschild import (
    Cochain,
    CochainOperad,
    ComplexOperator,
    HochschildComplex,
    trivial_module,
)
from .results import SuiteReport


@dataclass(frozen=True, eq=False)
class HopfAlgebraPresentation:
    """Hopf algebra H over k with a distinguished grouplike ς."""

    algebra: AlgebraPresentation
    comult: np.ndarray
    counit: np.ndarray
    antipode: np.ndarray
    grouplike: np.ndarray

    def __post_init__(self):
        d = self.algebra.dim
        shapes = {
            "comult": (self.comult.shape, (d, d, d)),
            "counit": (self.counit.shape, (d,)),
            "antipode": (self.antipode.shape, (d, d)),
            "grouplike": (self.grouplike.shape, (d,)),
        }
        for name, (found, expected) in shapes.items():
            if found != expected:
                raise DimensionMismatch(f"{name} has shape {found}, expected {expected}")

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def label(self) -> str:
        return self.algebra.label

    def with_grouplike(self, grouplike: Sequence) -> "HopfAlgebraPresentation":
        return replace(self, grouplike=self.field.array(list(grouplike)))

    def coproduct(self, v: Sequence) -> np.ndarray:
        return np.tensordot(np.asarray(v, dtype=object), self.comult, axes=([0], [0]))

    def epsilon(self, v: Sequence):
        return np.asarray(v, dtype=object).dot(self.counit)

    def S(self, v: Sequence) -> np.ndarray:
        return self.antipode.dot(np.asarray(v, dtype=object))

    @cached_property
    def grouplike_inverse(self) -> np.ndarray:
        """ς⁻¹ = S(ς).

        Raises:
            NotGrouplike: If ς S(ς) ≠ 1
        """
        inverse = self.S(self.grouplike)
        if not np.all(self.algebra.multiply(self.grouplike, inverse) == self.algebra.unit):
            raise NotGrouplike("ς S(ς) ≠ 1", {"grouplike": [self.field.serialize(x) for x in self.grouplike]})
        return inverse

    @cached_property
    def translation(self) -> np.ndarray:
        """T[u, p, m]: u₊ ⊗ u₋ = u₍₁₎ ⊗ S(u₍₂₎) = Σ T[u, p, m] b_p ⊗ b_m."""
        return np.tensordot(self.comult, self.antipode, axes=([2], [1]))


def _tensor_field(field: FieldSpec, data: Any, shape: Tuple[int, ...], name: str) -> np.ndarray:
    if isinstance(data, dict) and "entries" in data:
        out = field.zeros(shape)
        for entry in data["entries"]:
            *index, value = entry
            if len(index) != len(shape):
                raise SchemaError(f"'{name}' entry {entry} has the wrong arity")
            out[tuple(int(i) for i in index)] = out[tuple(int(i) for i in index)] + field(value)
        return out
    arr = field.array(data)
    if arr.shape != shape:
        raise SchemaError(f"'{name}' has shape {arr.shape}, expected {shape}")
    return arr


def hopf_from_dict(data: Dict[str, Any], field_override: Optional[FieldSpec] = None) -> HopfAlgebraPresentation:
    """Parse the algebra schema extended by comult, counit, antipode, grouplike.

    "antipode" lists S(b_i) row by row; "grouplike" defaults to the unit.

    Raises:
        SchemaError: If a Hopf field is missing or malformed
    """
    algebra = algebra_from_dict(data, field_override)
    f, d = algebra.field, algebra.dim
    for key in ("comult", "counit", "antipode"):
        if key not in data:
            raise SchemaError(f"Hopf algebra '{algebra.label}' lacks '{key}'")
    comult = _tensor_field(f, data["comult"], (d, d, d), "comult")
    counit = _tensor_field(f, data["counit"], (d,), "counit")
    antipode = _tensor_field(f, data["antipode"], (d, d), "antipode").T.copy()
    grouplike = _tensor_field(f, data["grouplike"], (d,), "grouplike") if "grouplike" in data else algebra.unit.copy()
    return HopfAlgebraPresentation(algebra, comult, counit, antipode, grouplike)


def hopf_to_dict(h: HopfAlgebraPresentation) -> Dict[str, Any]:
    ser = np.frompyfunc(h.field.serialize, 1, 1)
    out = algebra_to_dict(h.algebra)
    out.update({
        "comult": ser(h.comult).tolist(),
        "counit": ser(h.counit).tolist(),
        "antipode": ser(h.antipode.T).tolist(),
        "grouplike": ser(h.grouplike).tolist(),
    })
    return out


# =============================================================================
# Validation
# =============================================================================

def _delta_product(h: HopfAlgebraPresentation, a: int, b: int) -> np.ndarray:
    """Δ(b_a)Δ(b_b) in H ⊗ H."""
    c = h.algebra.structure_constants
    left = np.tensordot(h.comult[a], c, axes=([0], [0]))           # [k1, j2, j]
    both = np.tensordot(left, h.comult[b], axes=([1], [0]))        # [k1, j, k2]
    return np.tensordot(both, c, axes=([0, 2], [0, 1]))            # [j, k]


def validate_hopf(h: HopfAlgebraPresentation) -> SuiteReport:
    """All Hopf axioms on basis elements and pairs."""
    report = SuiteReport("hopf", h.label)
    report.extend(validate_algebra(h.algebra))
    f, A, d = h.field, h.algebra, h.dim
    c = A.structure_constants

    bad = None
    for a in range(d):
        left = np.tensordot(h.comult[a], h.comult, axes=([0], [0])).transpose(1, 2, 0)
        right = np.tensordot(h.comult[a], h.comult, axes=([1], [0]))
        if not np.all(left == right):
            bad = a
            break
    report.record("coassociativity", bad is None, witness=bad, cases=d)

    bad = None
    for a in range(d):
        e = f.unit_vector(d, a)
        if not (np.all(np.tensordot(h.counit, h.comult[a], axes=([0], [0])) == e)
                and np.all(h.comult[a].dot(h.counit) == e)):
            bad = a
            break
    report.record("counitality", bad is None, witness=bad, cases=d)

    bad_delta = bad_eps = None
    for a in range(d):
        for b in range(d):
            delta_ab = np.tensordot(c[a, b], h.comult, axes=([0], [0]))
            if bad_delta is None and not np.all(delta_ab == _delta_product(h, a, b)):
                bad_delta = [a, b]
            if bad_eps is None and h.epsilon(c[a, b]) != h.counit[a] * h.counit[b]:
                bad_eps = [a, b]
    unit_ok = bool(np.all(h.coproduct(A.unit) == np.multiply.outer(A.unit, A.unit))) and h.epsilon(A.unit) == f.one
    report.record("comult_multiplicative", bad_delta is None and unit_ok, witness=bad_delta, cases=d * d + 1)
    report.record("counit_multiplicative", bad_eps is None, witness=bad_eps, cases=d * d)

    bad = None
    for a in range(d):
        expected = A.unit * h.counit[a]
        # m(S ⊗ id)Δ and m(id ⊗ S)Δ
        left = f.zeros(d)
        right = f.zeros(d)
        for j in range(d):
            for k in range(d):
                coef = h.comult[a, j, k]
                if coef != 0:
                    left = left + A.multiply(h.S(f.unit_vector(d, j)), f.unit_vector(d, k)) * coef
                    right = right + A.multiply(f.unit_vector(d, j), h.S(f.unit_vector(d, k))) * coef
        if not (np.all(left == expected) and np.all(right == expected)):
            bad = a
            break
    report.record("antipode", bad is None, witness=bad, cases=d)

    g = h.grouplike
    grouplike_ok = bool(np.all(h.coproduct(g) == np.multiply.outer(g, g))) and h.epsilon(g) == f.one
    report.record("grouplike", grouplike_ok, cases=1)
    return report


def _require_grouplike(h: HopfAlgebraPresentation) -> None:
    g = h.grouplike
    if not (np.all(h.coproduct(g) == np.multiply.outer(g, g)) and h.epsilon(g) == h.field.one):
        raise NotGrouplike(
            "Δς ≠ ς ⊗ ς or ε(ς) ≠ 1",
            {"grouplike": [h.field.serialize(x) for x in g]},
        )
    h.grouplike_inverse


def twisted_involution_check(h: HopfAlgebraPresentation) -> bool:
    """S²(h) = ς h ς⁻¹ for all basis h.

    Raises:
        NotGrouplike: If ς is not grouplike or not invertible
    """
    return bool(np.all(defect_operator(h) == h.field.identity(h.dim)))


def defect_operator(h: HopfAlgebraPresentation) -> np.ndarray:
    """Matrix of h ↦ ς⁻¹ S²(h) ς."""
    _require_grouplike(h)
    A, f = h.algebra, h.field
    out = f.zeros((h.dim, h.dim))
    for j in range(h.dim):
        s2 = h.S(h.S(f.unit_vector(h.dim, j)))
        out[:, j] = A.multiply(A.multiply(h.grouplike_inverse, s2), h.grouplike)
    return out


# =============================================================================
# Contraaction and τ
# =============================================================================

@dataclass(frozen=True, eq=False)
class HopfContraaction(Contraaction):
    """γ(f) = f(ς) on k_ς; τ uses the translation u₊ ⊗ u₋ = u₍₁₎ ⊗ S(u₍₂₎)."""

    hopf: Optional[HopfAlgebraPresentation] = None

    def check_axioms(self) -> SuiteReport:
        h = self.hopf
        f, d = self.field, h.dim
        report = SuiteReport("contramodule", self.label)
        G = self.gamma
        # γ̇(γ̈(g)) = g(ς ⊗ ς) against γ(g ∘ Δ) = g(Δς)
        lhs = G.dot(kron(f, f.identity(d), G))
        rhs = h.coproduct(h.grouplike).reshape(1, d * d)
        report.record("contraassociativity", bool(np.all(lhs == rhs)), cases=d * d)
        report.record("counitality", G.dot(h.counit)[0] == f.one, cases=1)
        return report

    def cyclic_defect(self) -> np.ndarray:
        return defect_operator(self.hopf)

    def literal_tau_entries(self, cx: HochschildComplex, n: int) -> Iterator[Tuple[int, int, Any]]:
        if n == 0:
            yield from super().literal_tau_entries(cx, n)
            return
        yield from _translation_tau_entries(self.hopf, cx, n)

    def power_prediction(self, cx: HochschildComplex, n: int) -> Optional[Matrix]:
        """τ^{n+1} on C^n(H, k_ς): f ↦ f ∘ (D⁻¹)^{⊗n} for D = ς⁻¹S²(−)ς."""
        f = self.field
        if n == 0 or self.stable:
            return f.identity_matrix(cx.cochain_dim(n))
        inverse = f.to_array(mat_inverse(f.matrix(self.cyclic_defect())))
        return f.matrix(kron(f, *([inverse.T] * n)))


def trivial_contraaction(h: HopfAlgebraPresentation) -> HopfContraaction:
    """γ(f) = f(ς) on k_ς.

    Raises:
        NotGrouplike: If ς is not grouplike
    """
    _require_grouplike(h)
    module = trivial_module(h.algebra, h.counit, label="k_sigma")
    gamma = h.grouplike.reshape(1, h.dim).copy()
    return HopfContraaction(h.algebra, module, gamma, f"k_sigma over {h.label}", hopf=h)


def _translation_tau_entries(h: HopfAlgebraPresentation, cx: HochschildComplex, n: int) -> Iterator[Tuple[int, int, Any]]:
    """γ(u¹₊ f(u²₊, .., uⁿ₊, uⁿ₋⋯u¹₋ (−))) with γ = evaluation at ς."""
    c = h.algebra.structure_constants
    T = h.translation
    right_by_grouplike = np.tensordot(c, h.grouplike, axes=([1], [0]))   # [m, w]: b_m ς
    acc = np.tensordot(np.tensordot(h.counit, T, axes=([0], [1])), right_by_grouplike, axes=([1], [0]))
    step = np.tensordot(T, c, axes=([2], [0]))                         # [u, p, w, w']
    for _ in range(2, n + 1):
        acc = np.tensordot(acc, step, axes=([-1], [2]))
    for index, value in np.ndenumerate(acc):
        if value == 0:
            continue
        u1, pairs, w = index[0], index[1:-1], index[-1]
        targets = (u1,) + tuple(pairs[0::2])
        sources = tuple(pairs[1::2]) + (w,)
        yield cx.flat_index(targets, 0), cx.flat_index(sources, 0), value


def tau_hopf(h: HopfAlgebraPresentation, n: int, cx: Optional[HochschildComplex] = None) -> ComplexOperator:
    """τ on C^n(H, k) from Δ-iterates, S and ς directly."""
    f, A, d = h.field, h.algebra, h.dim
    cx = cx or HochschildComplex(A, trivial_module(A, h.counit, "k_sigma"))
    size = cx.cochain_dim(n)
    if n == 0:
        return ComplexOperator(0, 0, f.identity_matrix(size), "tau_hopf")
    splits = [
        [(j, k, h.comult[u, j, k]) for j in range(d) for k in range(d) if h.comult[u, j, k] != 0]
        for u in range(d)
    ]
    images = [h.S(f.unit_vector(d, j)) for j in range(d)]
    entries: Dict[Tuple[int, int], Any] = {}
    for args in product(range(d), repeat=n):
        start = A.multiply(images[args[0]], h.grouplike)
        for choice in product(*(splits[u] for u in args[1:])):
            vec, coef = start, f.one
            for _, k, value in choice:
                vec = A.multiply(images[k], vec)
                coef = coef * value
            firsts = tuple(j for j, _, _ in choice)
            for w in range(d):
                if vec[w] != 0:
                    key = (cx.flat_index(args, 0), cx.flat_index(firsts + (w,), 0))
                    entries[key] = entries.get(key, f.zero) + coef * vec[w]
    return ComplexOperator(n, n, f.matrix_from_entries(size, size, entries), "tau_hopf")


# =============================================================================
# Operad
# =============================================================================

class HopfCochainOperad(CochainOperad):
    """C^•(H, k): f ∘_i g inserts Σ g(h¹₍₁₎, .., h^q₍₁₎) h¹₍₂₎⋯h^q₍₂₎."""

    def __init__(self, h: HopfAlgebraPresentation, max_cochain_dim: int = MAX_COCHAIN_DIM):
        super().__init__(h.algebra, trivial_module(h.algebra, h.counit, "k_sigma"), max_cochain_dim)
        self.hopf = h

    @property
    def label(self) -> str:
        return f"C({self.hopf.label}, k)"

    def lift(self, g: Cochain) -> np.ndarray:
        q = g.degree
        c = self.algebra.structure_constants
        state = np.multiply.outer(g.coefficients[..., 0], self.algebra.unit)
        for i in range(1, q + 1):
            merged = np.tensordot(self.hopf.comult, state, axes=([1], [i - 1]))
            merged = np.tensordot(merged, c, axes=([1, merged.ndim - 1], [1, 0]))
            state = np.moveaxis(merged, 0, i - 1)
        return state

    def identity(self) -> Cochain:
        return Cochain(1, self.hopf.counit.reshape(self.d, 1).copy())

    def multiplication(self) -> Cochain:
        values = np.tensordot(self.algebra.structure_constants, self.hopf.counit, axes=([2], [0]))
        return Cochain(2, values.reshape(self.d, self.d, 1))

    def unit_element(self) -> Cochain:
        return Cochain(0, self.field.array([1]))


def hopf_cyclic_structure(h: HopfAlgebraPresentation) -> CyclicStructure:
    return CyclicStructure(HopfCochainOperad(h), trivial_contraaction(h))


# =============================================================================
# Reports
# =============================================================================

def hopf_tau_report(h: HopfAlgebraPresentation, bound: int, registry: Optional[EventRegistry] = None) -> SuiteReport:
    """The two τ constructions agree, and τ^{n+1} = id iff S² = Ad_ς."""
    suite = "hopf_tau"
    report = SuiteReport(suite, h.label)
    cs = hopf_cyclic_structure(h)
    cx = cs.complex
    mismatch = None
    for n in range(0, bound + 1):
        if first_difference(cs.tau(n).matrix, tau_hopf(h, n, cx).matrix) is not None:
            mismatch = n
            break
    publish_check(registry, suite, report.record("tau_hopf_matches_translation", mismatch is None, witness=mismatch, cases=bound + 1))

    involutive = twisted_involution_check(h)
    powers = [
        first_difference(cs.tau_power(n), h.field.identity_matrix(cx.cochain_dim(n))) is None
        for n in range(0, bound + 1)
    ]
    report.record("twisted_involution", involutive, informational=True)
    publish_check(
        registry, suite,
        report.record("cyclic_iff_twisted_involution", all(powers) == involutive, witness=powers, cases=bound + 1),
    )
    cs.check_power_prediction(report, bound, registry)
    return report


def ext_bv_report(h: HopfAlgebraPresentation, bound: int, operad_bounds: Tuple[int, int] = (2, 2),
                  registry: Optional[EventRegistry] = None) -> SuiteReport:
    """BV structure on Ext_H(k, k_ς).

    Raises:
        TwistedInvolutionFails: If S² ≠ Ad_ς
    """
    if not twisted_involution_check(h):
        raise TwistedInvolutionFails(f"S² ≠ Ad_ς on {h.label}")
    suite = "ext_bv"
    report = SuiteReport(suite, h.label)
    publish(registry, {"type": EventType.SUITE_START.value, "suite": suite})
    cs = hopf_cyclic_structure(h)
    H = cohomology(cs.complex, bound, label=f"Ext({h.label})")
    report.dimensions["Ext"] = H.dims()
    report.extend(hopf_tau_report(h, bound, registry), prefix="tau.")
    report.extend(cyclic_operad_report(cs, *operad_bounds, registry=registry), prefix="cyclic_operad.")
    report.extend(cyclic_report(cs, bound, registry), prefix="cyclic.")
    algebra = ClassAlgebra(H, cs)
    report.extend(gerstenhaber_report(algebra, bound, registry), prefix="gerstenhaber.")
    report.extend(bv_report(algebra, bound, registry), prefix="bv.")
    publish(registry, {"type": EventType.SUITE_COMPLETE.value, "suite": suite, "passed": report.passed})
    return report


# =============================================================================
# Dual Hopf algebra
# =============================================================================

@dataclass(frozen=True, eq=False)
class DualHopf:
    """H* on the dual basis δ_i: product, coproduct, unit, counit and S*."""

    field: FieldSpec
    structure_constants: np.ndarray
    comult: np.ndarray
    unit: np.ndarray
    counit: np.ndarray
    antipode: np.ndarray


def dual_hopf(h: HopfAlgebraPresentation) -> DualHopf:
    """(φψ)(u) = φ(u₍₁₎)ψ(u₍₂₎), Δφ(u ⊗ v) = φ(uv), 1 = ε_H, counit φ ↦ φ(1), S* = Sᵀ."""
    return DualHopf(
        h.field,
        h.comult.transpose(1, 2, 0).copy(),
        h.algebra.structure_constants.transpose(2, 0, 1).copy(),
        h.counit.copy(),
        h.algebra.unit.copy(),
        h.antipode.T.copy(),
    )
