"""Dual right bialgebroids of left Hopf algebroids and their translation map.

This module provides:
- LeftHopfAlgebroidInstance: U with s, t, Δ_ℓ, ε, u₊ ⊗ u₋ and a dual basis of U_◃
- build_envelope / build_from_hopf: The families U = A^e and U = H
- sch_report: Translation-map identities of U in paired form
- DualBialgebroidInstance / dual_instance: U* = Hom_{A^op}(U_◃, A)
- dual_translation: φ⁻ ⊗ φ⁺ = Σ_i e^i ⊗ (e_i ⇀̃ φ)
- hopf_galois_report: Right Hopf identities of U*, and S* on H* in the Hopf case
- harpoon_slice_witness: A basis pair with (u ⇀ φ) ≠ (u ⇀̃ φ)
- dictionary_report: Contraactions as U*-actions, U-modules as U*-comodules
- ayd_report: Anti Yetter-Drinfel'd compatibility of a contraaction with the U-action

Elements of U* are stored by their values: an array of shape (dim U, dim A)
whose row u holds ⟨φ, b_u⟩. Tensor products over A or A^op are never
formed. Both sides of an identity are compared after pairing the
tensor factors against a dual basis, which is faithful because U_◃ is free.

Index conventions for lifts to U ⊗_k U: Δ_ℓ(b_u) = Σ comult[u, i, j] b_i ⊗ b_j
and u₊ ⊗ u₋ = Σ translation[u, p, m] b_p ⊗ b_m.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Any, List, Optional, Tuple

import numpy as np

from .algcore import AlgebraPresentation, validate_algebra
from .cyclic import Contraaction
from .errors import AxiomViolation, DimensionMismatch, IndexOutOfRange
from .events.registry import EventRegistry, EventType, publish, publish_check
from .exactfield import FieldSpec
from .hochschild import CoefficientModule
from .hopf import HopfAlgebraPresentation, dual_hopf
from .results import SuiteReport

ENVELOPE = "envelope"
HOPF = "hopf"


def ground_algebra(field: FieldSpec) -> AlgebraPresentation:
    """The base k of a Hopf algebra viewed as a bialgebroid."""
    return AlgebraPresentation(field, 1, ("1",), field.array([[[1]]]), field.array([1]), name="k")


def _mismatch(lhs: np.ndarray, rhs: np.ndarray) -> Optional[List[int]]:
    """First index where two arrays differ, or None."""
    if lhs.shape != rhs.shape:
        raise DimensionMismatch(f"Comparing shapes {lhs.shape} and {rhs.shape}")
    diff = np.argwhere(np.asarray(lhs != rhs, dtype=bool))
    if len(diff) == 0:
        return None
    return [int(x) for x in diff[0]]


def _pair_lift(lift: np.ndarray, pairing: np.ndarray) -> np.ndarray:
    """Contract the trailing (p, m) axes of a U ⊗ U lift against pairing[p, m, ...]."""
    return np.tensordot(lift, pairing, axes=([-2, -1], [0, 1]))


def _support(tensor: np.ndarray) -> List[List[Tuple[Tuple[int, ...], Any]]]:
    """Nonzero entries of tensor[w] for each leading index w."""
    out = []
    for w in range(tensor.shape[0]):
        mask = np.asarray(tensor[w] != 0, dtype=bool)
        out.append([(tuple(int(i) for i in idx), tensor[w][tuple(idx)]) for idx in np.argwhere(mask)])
    return out


# =============================================================================
# Left Hopf algebroids
# =============================================================================

@dataclass(frozen=True, eq=False)
class LeftHopfAlgebroidInstance:
    """A desk-scale left Hopf algebroid (U, A).

    source[α] = s(b_α) and target[α] = t(b_α) as vectors in U; counit[u] = ε(b_u)
    in A. dual_basis[i] = e_i ∈ U and dual_functionals[i, u] = ⟨e^i, b_u⟩ ∈ A
    witness that U_◃ is free with u = Σ_i e_i ◃ ⟨e^i, u⟩. frame[u, α, β, g] writes
    b_u = Σ s(b_α) t(b_β) f_g for a basis f_g of U as a free left A^e-module.
    """

    kind: str
    base: AlgebraPresentation
    carrier: AlgebraPresentation
    source: np.ndarray
    target: np.ndarray
    comult: np.ndarray
    counit: np.ndarray
    translation: np.ndarray
    dual_basis: np.ndarray
    dual_functionals: np.ndarray
    frame: np.ndarray
    label: str = ""
    hopf: Optional[HopfAlgebraPresentation] = None

    def __post_init__(self):
        n, r = self.carrier.dim, self.base.dim
        k = self.dual_basis.shape[0]
        g = self.frame.shape[-1] if self.frame.ndim == 4 else -1
        shapes = {
            "source": (self.source.shape, (r, n)),
            "target": (self.target.shape, (r, n)),
            "comult": (self.comult.shape, (n, n, n)),
            "counit": (self.counit.shape, (n, r)),
            "translation": (self.translation.shape, (n, n, n)),
            "dual_basis": (self.dual_basis.shape, (k, n)),
            "dual_functionals": (self.dual_functionals.shape, (k, n, r)),
            "frame": (self.frame.shape, (n, r, r, g)),
        }
        for name, (found, expected) in shapes.items():
            if found != expected:
                raise DimensionMismatch(f"{name} has shape {found}, expected {expected}")

    @property
    def field(self) -> FieldSpec:
        return self.carrier.field

    @property
    def dim(self) -> int:
        return self.carrier.dim

    @property
    def base_dim(self) -> int:
        return self.base.dim

    @property
    def rank(self) -> int:
        """Number of elements in the dual basis of U_◃."""
        return self.dual_basis.shape[0]

    def s(self, a: Any) -> np.ndarray:
        return np.asarray(a, dtype=object).dot(self.source)

    def t(self, a: Any) -> np.ndarray:
        return np.asarray(a, dtype=object).dot(self.target)

    @cached_property
    def source_products(self) -> np.ndarray:
        """[α, w, k]: s(b_α)·b_w."""
        return np.tensordot(self.source, self.carrier.structure_constants, axes=([1], [0]))

    @cached_property
    def target_products(self) -> np.ndarray:
        """[p, α, k]: b_p·t(b_α)."""
        out = np.tensordot(self.carrier.structure_constants, self.target, axes=([1], [1]))
        return out.transpose(0, 2, 1)

    def left_pairing(self, values: np.ndarray) -> np.ndarray:
        """[p, m, k]: ⟨φ, b_p⟩ ▹ b_m, the pairing of U_◃ ⊗_A ▹U with φ."""
        return np.tensordot(values, self.source_products, axes=([1], [0]))

    def right_pairing(self, values: np.ndarray) -> np.ndarray:
        """[p, m, k]: ⟨ψ, b_m⟩ ▶ b_p, the pairing of ▶U ⊗_{A^op} U_◃ with ψ."""
        return np.tensordot(self.target_products, values, axes=([1], [1])).transpose(0, 2, 1)

    def functional(self, i: int) -> np.ndarray:
        if not 0 <= i < self.rank:
            raise IndexOutOfRange(f"Dual basis index {i} outside 0..{self.rank - 1}")
        return self.dual_functionals[i]

    def module_action(self, coefficient: CoefficientModule) -> np.ndarray:
        """[u, c, c']: the left U-action on a coefficient module.

        For A^e this is (x ⊗ y)·m = x ▹ m ◃ y; for H it is the left action itself.
        """
        if self.kind == HOPF:
            return coefficient.left_action
        d, m = self.base_dim, coefficient.dim_m
        out = np.empty((d, d, m, m), dtype=object)
        for x in range(d):
            for y in range(d):
                out[x, y] = coefficient.left_action[x].dot(coefficient.right_action[y])
        return out.reshape(d * d, m, m)


def build_envelope(algebra: AlgebraPresentation) -> LeftHopfAlgebroidInstance:
    """U = A ⊗ A^op with s(a) = a⊗1, t(b) = 1⊗b and ε(a⊗b) = ab.

    Δ_ℓ(a⊗b) = (a⊗1) ⊗_A (1⊗b) and (a⊗b)₊ ⊗ (a⊗b)₋ = (a⊗1) ⊗ (b⊗1).
    The basis element b_x ⊗ b_y has index x·d + y; U_◃ is free on e_i = b_i ⊗ 1
    and U is free of rank one over A^e.
    """
    f, d = algebra.field, algebra.dim
    n = d * d
    c = algebra.structure_constants
    one = algebra.unit
    eye = f.identity(d)

    # (x⊗y)(x'⊗y') = xx' ⊗ y'y
    outer = np.multiply.outer(c, c.transpose(1, 0, 2))
    consts = np.ascontiguousarray(outer.transpose(0, 3, 1, 4, 2, 5).reshape(n, n, n))
    labels = tuple(f"{a}⊗{b}" for a in algebra.basis_labels for b in algebra.basis_labels)
    carrier = AlgebraPresentation(
        f, n, labels, consts, np.multiply.outer(one, one).reshape(n), name=f"{algebra.label}^e",
    )

    source = np.multiply.outer(eye, one).reshape(d, n)
    target = np.multiply.outer(one, eye).transpose(1, 0, 2).reshape(d, n)

    units = np.multiply.outer(one, one)
    comult = f.zeros((d, d, d, d, d, d))
    translation = f.zeros((d, d, d, d, d, d))
    for x in range(d):
        for y in range(d):
            comult[x, y, x, :, :, y] = units
            translation[x, y, x, :, y, :] = units

    functionals = np.multiply.outer(eye, eye).reshape(d, n, d)
    # b_x ⊗ b_y = s(b_x) t(b_y) · 1
    frame = np.multiply.outer(eye, eye).transpose(0, 2, 1, 3).reshape(n, d, d, 1)
    return LeftHopfAlgebroidInstance(
        ENVELOPE, algebra, carrier, source, target,
        comult.reshape(n, n, n), c.reshape(n, d).copy(), translation.reshape(n, n, n),
        source.copy(), functionals, frame, f"{algebra.label}^e",
    )


def build_from_hopf(h: HopfAlgebraPresentation) -> LeftHopfAlgebroidInstance:
    """U = H over k with u₊ ⊗ u₋ = u₍₁₎ ⊗ S(u₍₂₎)."""
    f, n = h.field, h.dim
    unit_row = h.algebra.unit.reshape(1, n)
    return LeftHopfAlgebroidInstance(
        HOPF, ground_algebra(f), h.algebra, unit_row.copy(), unit_row.copy(),
        h.comult, h.counit.reshape(n, 1).copy(), h.translation,
        f.identity(n), f.identity(n).reshape(n, n, 1), f.identity(n).reshape(n, 1, 1, n), h.label, hopf=h,
    )


def sch_report(u: LeftHopfAlgebroidInstance, registry: Optional[EventRegistry] = None) -> SuiteReport:
    """Translation-map identities Sch1 to Sch9.

    Sch1 is the Takeuchi condition u₊ ◃ a ⊗ u₋ = u₊ ⊗ a ▶ u₋.
    Elements of U_◃ ⊗_A ▹U are paired through x ⊗ y ↦ ⟨e^i, x⟩ ▹ y and
    elements of ▶U ⊗_{A^op} U_◃ through x ⊗ y ↦ ⟨e^i, y⟩ ▶ x.
    """
    suite = "sch"
    report = SuiteReport(suite, u.label)
    n, r, k = u.dim, u.base_dim, u.rank
    c = u.carrier.structure_constants
    T = u.translation
    one = u.carrier.unit

    # Sch1: u₊ ◃ a ⊗ u₋ = u₊ ⊗ a ▶ u₋
    witness = None
    for i in range(k):
        psi = u.functional(i)
        paired = _pair_lift(T, u.right_pairing(psi))
        for alpha in range(r):
            t_alpha = u.target[alpha]
            lhs = paired.dot(u.carrier.left_matrix(t_alpha).T)
            shifted = u.carrier.right_matrix(t_alpha).T.dot(psi)
            rhs = _pair_lift(T, u.right_pairing(shifted))
            bad = _mismatch(lhs, rhs)
            if bad is not None:
                witness = {"functional": i, "a": alpha, "at": bad}
                break
        if witness is not None:
            break
    publish_check(registry, suite, report.record("Sch1", witness is None, witness=witness, cases=k * r * n))

    # Sch2: u₊₍₁₎ ⊗_A u₊₍₂₎u₋ = u ⊗_A 1
    lifted = np.tensordot(T, u.comult, axes=([1], [0]))           # (u, m, a, b)
    lift2 = np.tensordot(lifted, c, axes=([3, 1], [0, 1]))         # (u, a, M)
    witness = None
    for i in range(k):
        pairing = u.left_pairing(u.functional(i))
        lhs = _pair_lift(lift2, pairing)
        rhs = np.tensordot(pairing, one, axes=([1], [0]))
        bad = _mismatch(lhs, rhs)
        if bad is not None:
            witness = {"functional": i, "at": bad}
            break
    publish_check(registry, suite, report.record("Sch2", witness is None, witness=witness, cases=k * n))

    # Sch3: u₍₁₎₊ ⊗_{A^op} u₍₁₎₋u₍₂₎ = u ⊗_{A^op} 1
    lifted = np.tensordot(u.comult, T, axes=([1], [0]))           # (u, b, p, m)
    lift3 = np.tensordot(lifted, c, axes=([1, 3], [1, 0]))         # (u, p, M)
    witness = None
    for i in range(k):
        pairing = u.right_pairing(u.functional(i))
        lhs = _pair_lift(lift3, pairing)
        rhs = np.tensordot(pairing, one, axes=([1], [0]))
        bad = _mismatch(lhs, rhs)
        if bad is not None:
            witness = {"functional": i, "at": bad}
            break
    publish_check(registry, suite, report.record("Sch3", witness is None, witness=witness, cases=k * n))

    # Sch4: u₊₍₁₎ ⊗_A u₊₍₂₎ ⊗_{A^op} u₋ = u₍₁₎ ⊗_A u₍₂₎₊ ⊗_{A^op} u₍₂₎₋
    # paired through x ⊗ y ⊗ z ↦ s(⟨e^i, x⟩) y t(⟨e^j, z⟩)
    comult_terms, translation_terms = _support(u.comult), _support(T)
    left_pairings = [u.left_pairing(u.functional(i)) for i in range(k)]
    right_shifts = np.tensordot(u.dual_functionals, u.target_products, axes=([2], [1]))   # (j, z, p, q)

    def pair_inner(triples):
        out = u.field.zeros((k, k, n))
        for (x, y, z), coef in triples:
            for i in range(k):
                out[i] = out[i] + np.tensordot(right_shifts[:, z], left_pairings[i][x, y], axes=([1], [0])) * coef
        return out

    witness = None
    for w in range(n):
        lhs = [((a, b, m), x * y) for (p, m), x in translation_terms[w] for (a, b), y in comult_terms[p]]
        rhs = [((a, p, m), x * y) for (a, b), x in comult_terms[w] for (p, m), y in translation_terms[b]]
        bad = _mismatch(pair_inner(lhs), pair_inner(rhs))
        if bad is not None:
            witness = {"u": w, "at": bad}
            break
    publish_check(registry, suite, report.record("Sch4", witness is None, witness=witness, cases=n * k * k))

    # Sch5: u₊ ⊗_{A^op} u₋₍₁₎ ⊗_A u₋₍₂₎ = u₊₊ ⊗_{A^op} u₋ ⊗_A u₊₋
    # the last leg is balanced against t on the first and s on the second:
    # x ⊗ y ⊗ s(a)t(b)f_g ↦ x t(b) ⊗ t(a) y ⊗ f_g
    frame_terms = _support(u.frame)
    target_left = np.tensordot(u.target, c, axes=([1], [0]))                          # (α, y, q)
    frames = u.frame.shape[3]

    def reduce_outer(triples):
        out = u.field.zeros((n, n, frames))
        for (x, y, z), coef in triples:
            for (alpha, beta, g), value in frame_terms[z]:
                out[:, :, g] = out[:, :, g] + np.multiply.outer(
                    u.target_products[x, beta], target_left[alpha, y]) * (coef * value)
        return out

    witness = None
    for w in range(n):
        lhs = [((p, a, b), x * y) for (p, m), x in translation_terms[w] for (a, b), y in comult_terms[m]]
        rhs = [((q, m, l), x * y) for (p, m), x in translation_terms[w] for (q, l), y in translation_terms[p]]
        bad = _mismatch(reduce_outer(lhs), reduce_outer(rhs))
        if bad is not None:
            witness = {"u": w, "at": bad}
            break
    publish_check(registry, suite, report.record("Sch5", witness is None, witness=witness, cases=n))

    # Sch6: (uv)₊ ⊗ (uv)₋ = u₊v₊ ⊗ v₋u₋
    product_lift = np.tensordot(c, T, axes=([2], [0]))            # (u, v, P, M)
    split_lift = u.field.zeros((n, n, n, n))
    terms = [[(p, m, T[w, p, m]) for p, m in zip(*np.nonzero(np.asarray(T[w] != 0, dtype=bool)))] for w in range(n)]
    for a in range(n):
        for b in range(n):
            for p, m, x in terms[a]:
                for q, l, y in terms[b]:
                    split_lift[a, b] += np.multiply.outer(c[p, q], c[l, m]) * (x * y)
    witness = None
    for i in range(k):
        pairing = u.right_pairing(u.functional(i))
        bad = _mismatch(_pair_lift(product_lift, pairing), _pair_lift(split_lift, pairing))
        if bad is not None:
            witness = {"functional": i, "at": bad}
            break
    publish_check(registry, suite, report.record("Sch6", witness is None, witness=witness, cases=k * n * n))

    # Sch7: u₊u₋ = s(ε(u))
    bad = _mismatch(np.tensordot(T, c, axes=([1, 2], [0, 1])), u.counit.dot(u.source))
    publish_check(registry, suite, report.record("Sch7", bad is None, witness=bad, cases=n))

    # Sch8: ε(u₋) ▶ u₊ = u
    restored = _pair_lift(T, u.right_pairing(u.counit))
    bad = _mismatch(restored, u.field.identity(n))
    publish_check(registry, suite, report.record("Sch8", bad is None, witness=bad, cases=n))

    # Sch9: (s(a)t(b))₊ ⊗ (s(a)t(b))₋ = s(a) ⊗ s(b)
    witness = None
    for i in range(k):
        pairing = u.right_pairing(u.functional(i))
        for alpha in range(r):
            for beta in range(r):
                w = u.carrier.multiply(u.source[alpha], u.target[beta])
                lhs = _pair_lift(np.tensordot(w, T, axes=([0], [0])), pairing)
                rhs = np.tensordot(u.source[alpha], np.tensordot(u.source[beta], pairing, axes=([0], [1])), axes=([0], [0]))
                bad = _mismatch(lhs, rhs)
                if bad is not None:
                    witness = {"functional": i, "a": alpha, "b": beta, "at": bad}
                    break
            if witness is not None:
                break
        if witness is not None:
            break
    publish_check(registry, suite, report.record("Sch9", witness is None, witness=witness, cases=k * r * r))
    return report


# =============================================================================
# The dual right bialgebroid U*
# =============================================================================

@dataclass(frozen=True, eq=False)
class DualBialgebroidInstance:
    """U* = Hom_{A^op}(U_◃, A) with the product (φψ)(u) = ⟨ψ, ⟨φ, u₍₁₎⟩ ▹ u₍₂₎⟩.

    The k-basis of U* is b_α ▶ e^i with index i·dim A + α.
    """

    algebroid: LeftHopfAlgebroidInstance

    @property
    def field(self) -> FieldSpec:
        return self.algebroid.field

    @property
    def label(self) -> str:
        return f"{self.algebroid.label}*"

    @property
    def dim(self) -> int:
        return self.algebroid.rank * self.algebroid.base_dim

    @cached_property
    def basis(self) -> List[np.ndarray]:
        u = self.algebroid
        out = []
        for i in range(u.rank):
            for alpha in range(u.base_dim):
                out.append(self.blact(u.base.basis_vector(alpha), u.functional(i)))
        return out

    def coordinates(self, values: np.ndarray) -> np.ndarray:
        """Coordinates on b_α ▶ e^i, read off from ⟨φ, e_i⟩."""
        return np.tensordot(self.algebroid.dual_basis, values, axes=([1], [0])).reshape(-1)

    def from_coordinates(self, coords: Any) -> np.ndarray:
        coords = np.asarray(coords, dtype=object)
        out = self.field.zeros((self.algebroid.dim, self.algebroid.base_dim))
        for k, value in enumerate(coords):
            if value != 0:
                out = out + self.basis[k] * value
        return out

    def pair(self, values: np.ndarray, u: Any) -> np.ndarray:
        """⟨φ, u⟩ ∈ A."""
        return np.asarray(u, dtype=object).dot(values)

    def blact(self, a: Any, values: np.ndarray) -> np.ndarray:
        """⟨a ▶ φ, u⟩ = a⟨φ, u⟩."""
        return values.dot(self.algebroid.base.left_matrix(a).T)

    def ract(self, values: np.ndarray, a: Any) -> np.ndarray:
        """⟨φ ◃ a, u⟩ = ⟨φ, a ▹ u⟩."""
        u = self.algebroid
        return u.carrier.left_matrix(u.s(a)).T.dot(values)

    # ------------------------------------------------------------------
    # Algebra structure
    # ------------------------------------------------------------------

    def product_matrix(self, values: np.ndarray) -> np.ndarray:
        """K with (φψ)(b_u) = Σ_w K[u, w] ⟨ψ, b_w⟩ for the left factor φ."""
        u = self.algebroid
        inserted = np.tensordot(values, u.source_products, axes=([1], [0]))   # (i, j, w)
        return np.tensordot(u.comult, inserted, axes=([1, 2], [0, 1]))

    def product(self, phi: np.ndarray, psi: np.ndarray) -> np.ndarray:
        return self.product_matrix(phi).dot(psi)

    @cached_property
    def unit(self) -> np.ndarray:
        """The counit ε of U."""
        return self.algebroid.counit.copy()

    def counit(self, values: np.ndarray) -> np.ndarray:
        """π(φ) = φ(1_U)."""
        return self.pair(values, self.algebroid.carrier.unit)

    def source_map(self, a: Any) -> np.ndarray:
        """s^r(a) = ε((·) ◀ a), i.e. u ↦ ε(u s(a))."""
        u = self.algebroid
        return u.carrier.right_matrix(u.s(a)).T.dot(u.counit)

    def target_map(self, a: Any) -> np.ndarray:
        """t^r(a) = aε(·)."""
        return self.blact(a, self.algebroid.counit)

    @cached_property
    def algebra(self) -> AlgebraPresentation:
        """U* as a presentation on the basis b_α ▶ e^i."""
        u = self.algebroid
        f, n = self.field, self.dim
        consts = f.zeros((n, n, n))
        for a, left in enumerate(self.basis):
            k = self.product_matrix(left)
            for b, right in enumerate(self.basis):
                consts[a, b] = self.coordinates(k.dot(right))
        labels = tuple(
            f"{u.base.basis_labels[alpha]}▶e^{i}" for i in range(u.rank) for alpha in range(u.base_dim)
        )
        return AlgebraPresentation(f, n, labels, consts, self.coordinates(self.unit), name=self.label)

    # ------------------------------------------------------------------
    # Actions of U on U*
    # ------------------------------------------------------------------

    def harpoon(self, v: Any, values: np.ndarray) -> np.ndarray:
        """(v ⇀ φ)(u) = φ(uv)."""
        return self.algebroid.carrier.right_matrix(v).T.dot(values)

    def slice(self, w: Any, values: np.ndarray) -> np.ndarray:
        """(w ⇀̃ φ)(v) = ε(φ(w₋v) ▶ w₊)."""
        u = self.algebroid
        c = u.carrier.structure_constants
        lift = np.tensordot(np.asarray(w, dtype=object), u.translation, axes=([0], [0]))   # (p, m)
        shifted = np.tensordot(c, values, axes=([2], [0]))                                  # (m, v, α)
        weights = np.tensordot(u.target_products, u.counit, axes=([2], [0]))                # (p, α, r)
        inner = np.tensordot(lift, shifted, axes=([1], [0]))                                # (p, v, α)
        return np.tensordot(inner, weights, axes=([0, 2], [0, 1]))

    def coproduct(self, values: np.ndarray) -> List[Tuple[np.ndarray, np.ndarray]]:
        """Δ_r φ = Σ_i (e_i ⇀ φ) ⊗_A e^i."""
        u = self.algebroid
        return [(self.harpoon(u.dual_basis[i], values), u.functional(i)) for i in range(u.rank)]

    @cached_property
    def evaluation_weights(self) -> np.ndarray:
        """[i, v, u, k]: ⟨e^i, b_v⟩ ▶ b_u."""
        u = self.algebroid
        shifts = np.tensordot(u.dual_functionals, u.target, axes=([2], [0]))   # (i, v, q)
        return np.tensordot(shifts, u.carrier.structure_constants, axes=([2], [1]))

    def pair_coproduct(self, terms: List[Tuple[np.ndarray, np.ndarray]]) -> np.ndarray:
        """[u, v]: Σ ⟨φ', ⟨φ'', b_v⟩ ▶ b_u⟩ for φ' ⊗_A φ'' given as pairs."""
        u = self.algebroid
        out = self.field.zeros((u.dim, u.dim, u.base_dim))
        for left, right in terms:
            shifts = right.dot(u.target)                                               # (v, q)
            moved = np.tensordot(shifts, u.carrier.structure_constants, axes=([1], [1]))  # (v, u, k)
            out = out + np.tensordot(moved, left, axes=([2], [0])).transpose(1, 0, 2)
        return out

    # ------------------------------------------------------------------
    # Structure report
    # ------------------------------------------------------------------

    @cached_property
    def structure_report(self) -> SuiteReport:
        """Product, source/target maps, the coproduct and the dual-basis decompositions."""
        report = SuiteReport("dual_structure", self.label)
        u = self.algebroid
        f, r, n = self.field, u.base_dim, u.dim
        report.extend(validate_algebra(self.algebra), prefix="LDMon.")

        bad_s = bad_t = bad_st = None
        for a in range(r):
            ea = u.base.basis_vector(a)
            for b in range(r):
                eb = u.base.basis_vector(b)
                ab = u.base.multiply(ea, eb)
                ba = u.base.multiply(eb, ea)
                if bad_s is None and _mismatch(self.product(self.source_map(ea), self.source_map(eb)), self.source_map(ab)) is not None:
                    bad_s = [a, b]
                if bad_t is None and _mismatch(self.product(self.target_map(ea), self.target_map(eb)), self.target_map(ba)) is not None:
                    bad_t = [a, b]
                st = self.product(self.source_map(ea), self.target_map(eb))
                ts = self.product(self.target_map(eb), self.source_map(ea))
                if bad_st is None and _mismatch(st, ts) is not None:
                    bad_st = [a, b]
        report.record("source_multiplicative", bad_s is None, witness=bad_s, cases=r * r)
        report.record("target_antimultiplicative", bad_t is None, witness=bad_t, cases=r * r)
        report.record("source_target_commute", bad_st is None, witness=bad_st, cases=r * r)
        report.record("counit_of_unit", _mismatch(self.counit(self.unit), u.base.unit) is None, cases=1)

        witness = None
        for k, phi in enumerate(self.basis):
            lhs = self.pair_coproduct(self.coproduct(phi))
            rhs = np.tensordot(u.carrier.structure_constants, phi, axes=([2], [0]))
            bad = _mismatch(lhs, rhs)
            if bad is not None:
                witness = {"phi": k, "at": bad}
                break
        report.record("trattovideo", witness is None, witness=witness, cases=self.dim * n * n)

        # u = Σ_i e_i ◃ ⟨e^i, u⟩
        rebuilt = f.zeros((n, n))
        for i in range(u.rank):
            moved = u.dual_functionals[i].dot(u.target)               # (u, q): t(⟨e^i, b_u⟩)
            rebuilt = rebuilt + np.tensordot(moved, u.carrier.left_multiplication, axes=([1], [0])).dot(u.dual_basis[i])
        bad = _mismatch(rebuilt, f.identity(n))
        report.record("schizzaestrappa1", bad is None, witness=bad, cases=n)

        # φ = Σ_i ⟨φ, e_i⟩ ▶ e^i
        witness = None
        for k, phi in enumerate(self.basis):
            rebuilt = f.zeros(phi.shape)
            for i in range(u.rank):
                rebuilt = rebuilt + self.blact(self.pair(phi, u.dual_basis[i]), u.functional(i))
            if _mismatch(rebuilt, phi) is not None:
                witness = k
                break
        report.record("schizzaestrappa2", witness is None, witness=witness, cases=self.dim)

        if u.kind == HOPF:
            expected = dual_hopf(u.hopf).structure_constants
            bad = _mismatch(self.algebra.structure_constants, expected)
            report.record("product_matches_dual_hopf", bad is None, witness=bad, cases=self.dim ** 2)
        return report


def dual_instance(u: LeftHopfAlgebroidInstance, verify: bool = False) -> DualBialgebroidInstance:
    """Build U* for a left Hopf algebroid with an explicit dual basis.

    Raises:
        AxiomViolation: If verify is set and a structure identity fails
    """
    d = DualBialgebroidInstance(u)
    if verify and not d.structure_report.passed:
        failure = d.structure_report.first_failure()
        raise AxiomViolation(
            f"Dual of {u.label} fails {failure.name}",
            {"check": failure.name, "witness": failure.witness},
        )
    return d


# =============================================================================
# Translation map of U*
# =============================================================================

@dataclass(frozen=True, eq=False)
class DualTranslation:
    """φ⁻ ⊗_{A^op} φ⁺ as the pairs (e^i, e_i ⇀̃ φ)."""

    dual: DualBialgebroidInstance
    terms: List[Tuple[np.ndarray, np.ndarray]]

    def evaluate(self) -> np.ndarray:
        """[u, w]: Σ ⟨φ⁺, ⟨φ⁻, b_u⟩ ▹ b_w⟩."""
        return pair_right_tensor(self.dual, self.terms)

    def coordinate_tensor(self) -> np.ndarray:
        """Σ coords(φ⁻) ⊗ coords(φ⁺) on the k-basis of U*."""
        d = self.dual
        out = d.field.zeros((d.dim, d.dim))
        for minus, plus in self.terms:
            out = out + np.multiply.outer(d.coordinates(minus), d.coordinates(plus))
        return out


def pair_right_tensor(d: DualBialgebroidInstance, terms: List[Tuple[np.ndarray, np.ndarray]]) -> np.ndarray:
    """[u, w]: Σ ⟨y, ⟨x, b_u⟩ ▹ b_w⟩ for x ⊗_{A^op} y given as pairs (x, y)."""
    u = d.algebroid
    out = d.field.zeros((u.dim, u.dim, u.base_dim))
    for x, y in terms:
        shifted = np.tensordot(u.source_products, y, axes=([2], [0]))     # (α, w, r)
        out = out + np.tensordot(x, shifted, axes=([1], [0]))
    return out


def pair_three_right_left(d: DualBialgebroidInstance, terms: List[Tuple[np.ndarray, np.ndarray, np.ndarray]]) -> np.ndarray:
    """[i, w, j, α]: Σ ⟨y, s(⟨x, e_i⟩) b_w t(⟨z, e_j⟩)⟩ for x ⊗_{A^op} y ⊗_A z given as triples.

    x and z only need the dual basis: their A^op-linearity moves everything
    else into the middle argument.
    """
    u = d.algebroid
    c = u.carrier.structure_constants
    out = d.field.zeros((u.rank, u.dim, u.rank, u.base_dim))
    for x, y, z in terms:
        left = u.dual_basis.dot(x).dot(u.source)                       # (i, p)
        right = u.dual_basis.dot(z).dot(u.target)                      # (j, m)
        shifted = np.tensordot(left, c, axes=([1], [0]))               # (i, w, q)
        tail = np.tensordot(np.tensordot(right, c, axes=([1], [1])), y, axes=([2], [0]))   # (j, q, α)
        out = out + np.tensordot(shifted, tail, axes=([2], [1]))
    return out


def pair_three_left_right(d: DualBialgebroidInstance, terms: List[Tuple[np.ndarray, np.ndarray, np.ndarray]]) -> np.ndarray:
    """[i, v, w, α]: Σ ⟨z, s(⟨x, e_i t(⟨y, b_v⟩)⟩) b_w⟩ for x ⊗_A y ⊗_{A^op} z given as triples."""
    u = d.algebroid
    c = u.carrier.structure_constants
    starts = np.tensordot(u.dual_basis, c, axes=([1], [0]))            # (i, m, q): e_i b_m
    out = d.field.zeros((u.rank, u.dim, u.dim, u.base_dim))
    for x, y, z in terms:
        shifts = y.dot(u.target)                                       # (v, m)
        inner = np.tensordot(starts, shifts, axes=([1], [1]))          # (i, q, v)
        values = np.tensordot(inner, x, axes=([1], [0]))               # (i, v, α')
        tail = np.tensordot(u.source_products, z, axes=([2], [0]))     # (α', w, α)
        out = out + np.tensordot(values, tail, axes=([2], [0]))
    return out


def dual_translation(d: DualBialgebroidInstance, phi: np.ndarray) -> DualTranslation:
    """φ⁻ ⊗_{A^op} φ⁺ = Σ_i e^i ⊗ (e_i ⇀̃ φ)."""
    u = d.algebroid
    terms = [(u.functional(i), d.slice(u.dual_basis[i], phi)) for i in range(u.rank)]
    return DualTranslation(d, terms)


def harpoon_slice_witness(d: DualBialgebroidInstance) -> Optional[Tuple[int, int]]:
    """First (u, φ) on the bases with (b_u ⇀ φ) ≠ (b_u ⇀̃ φ)."""
    u = d.algebroid
    for w in range(u.dim):
        vec = u.carrier.basis_vector(w)
        for k, phi in enumerate(d.basis):
            if _mismatch(d.harpoon(vec, phi), d.slice(vec, phi)) is not None:
                return w, k
    return None


def hopf_galois_report(d: DualBialgebroidInstance, registry: Optional[EventRegistry] = None) -> SuiteReport:
    """Right Hopf identities of U* for every basis φ, in paired form.

    Rch2 pairs V_◀ ⊗_A ▶V through φ ⊗ ψ ↦ ⟨φ, ⟨ψ, v⟩ ▶ u⟩; Rch3, Rch9 and the
    translation itself pair ▶V ⊗_{A^op} V_◃ through x ⊗ y ↦ ⟨y, ⟨x, u⟩ ▹ w⟩.
    Rch4 and Rch5 pair their three factors with pair_three_right_left and
    pair_three_left_right.
    """
    suite = "hopf_galois"
    report = SuiteReport(suite, d.label)
    u = d.algebroid
    f, n, r, k = d.field, u.dim, u.base_dim, u.rank
    c = u.carrier.structure_constants
    left_products = [d.product_matrix(u.functional(i)) for i in range(k)]
    functional_slices = [[d.slice(u.dual_basis[i], u.functional(j)) for j in range(k)] for i in range(k)]
    weights = d.evaluation_weights
    sw = u.source_products

    functional_harpoons = [[d.harpoon(u.dual_basis[i], u.functional(j)) for j in range(k)] for i in range(k)]
    translations = [dual_translation(d, phi) for phi in d.basis]

    names = ("Rch1", "Rch2", "Rch3", "Rch4", "Rch5", "Rch7", "Rch8", "sondreck")
    failures = {name: None for name in names}
    for index, phi in enumerate(d.basis):
        translation = translations[index]
        slices = [plus for _, plus in translation.terms]

        if failures["Rch1"] is None:
            # φ⁻ ◃ b ⊗ φ⁺ = φ⁻ ⊗ b ▶ φ⁺
            for alpha in range(r):
                b = u.base.basis_vector(alpha)
                lhs = pair_right_tensor(d, [(d.ract(minus, b), plus) for minus, plus in translation.terms])
                rhs = pair_right_tensor(d, [(minus, d.blact(b, plus)) for minus, plus in translation.terms])
                bad = _mismatch(lhs, rhs)
                if bad is not None:
                    failures["Rch1"] = {"phi": index, "b": alpha, "at": bad}
                    break

        if failures["Rch2"] is None:
            # φ⁻φ⁺⁽¹⁾ ⊗_A φ⁺⁽²⁾ = ε ⊗_A φ
            lhs = f.zeros((n, n, r))
            for i in range(k):
                for j in range(k):
                    combined = left_products[i].dot(d.harpoon(u.dual_basis[j], slices[i]))
                    lhs = lhs + np.tensordot(weights[j], combined, axes=([2], [0]))
            moved = np.tensordot(phi.dot(u.target), c, axes=([1], [1]))        # (v, u, k)
            rhs = moved.dot(u.counit)
            bad = _mismatch(lhs, rhs)
            if bad is not None:
                failures["Rch2"] = {"phi": index, "at": bad}

        if failures["Rch3"] is None:
            # φ⁽¹⁾φ⁽²⁾⁻ ⊗_{A^op} φ⁽²⁾⁺ = 1 ⊗_{A^op} φ
            terms = []
            for j in range(k):
                k_matrix = d.product_matrix(d.harpoon(u.dual_basis[j], phi))
                for i in range(k):
                    terms.append((k_matrix.dot(u.functional(i)), functional_slices[i][j]))
            lhs = pair_right_tensor(d, terms)
            rhs = pair_right_tensor(d, [(d.unit, phi)])
            bad = _mismatch(lhs, rhs)
            if bad is not None:
                failures["Rch3"] = {"phi": index, "at": bad}

        if failures["Rch4"] is None:
            # φ⁽¹⁾⁻ ⊗ φ⁽¹⁾⁺ ⊗_A φ⁽²⁾ = φ⁻ ⊗ φ⁺⁽¹⁾ ⊗_A φ⁺⁽²⁾
            lhs = pair_three_right_left(d, [
                (u.functional(j), d.slice(u.dual_basis[j], d.harpoon(u.dual_basis[i], phi)), u.functional(i))
                for i in range(k) for j in range(k)
            ])
            rhs = pair_three_right_left(d, [
                (u.functional(j), d.harpoon(u.dual_basis[i], slices[j]), u.functional(i))
                for i in range(k) for j in range(k)
            ])
            bad = _mismatch(lhs, rhs)
            if bad is not None:
                failures["Rch4"] = {"phi": index, "at": bad}

        if failures["Rch5"] is None:
            # φ⁻⁽¹⁾ ⊗_A φ⁻⁽²⁾ ⊗ φ⁺ = φ⁺⁻ ⊗_A φ⁻ ⊗ φ⁺⁺
            lhs = pair_three_left_right(d, [
                (functional_harpoons[i][j], u.functional(i), slices[j]) for i in range(k) for j in range(k)
            ])
            rhs = pair_three_left_right(d, [
                (u.functional(i), u.functional(j), d.slice(u.dual_basis[i], slices[j]))
                for i in range(k) for j in range(k)
            ])
            bad = _mismatch(lhs, rhs)
            if bad is not None:
                failures["Rch5"] = {"phi": index, "at": bad}

        if failures["Rch7"] is None:
            # φ⁻φ⁺ = s^r(π(φ))
            lhs = f.zeros(phi.shape)
            for i in range(k):
                lhs = lhs + left_products[i].dot(slices[i])
            bad = _mismatch(lhs, d.source_map(d.counit(phi)))
            if bad is not None:
                failures["Rch7"] = {"phi": index, "at": bad}

        if failures["Rch8"] is None:
            # φ⁺ ◃ π(φ⁻) = φ
            lhs = f.zeros(phi.shape)
            for i in range(k):
                lhs = lhs + d.ract(slices[i], d.counit(u.functional(i)))
            bad = _mismatch(lhs, phi)
            if bad is not None:
                failures["Rch8"] = {"phi": index, "at": bad}

        if failures["sondreck"] is None:
            # φ⁺ ◃ ⟨φ⁻, u⟩ = u ⇀̃ φ
            lhs = translation.evaluate()
            rhs = np.stack([d.slice(u.carrier.basis_vector(w), phi) for w in range(n)])
            bad = _mismatch(lhs, rhs)
            if bad is not None:
                failures["sondreck"] = {"phi": index, "at": bad}

    cases = {"Rch1": d.dim * r, "Rch4": d.dim * k * n * k, "Rch5": d.dim * k * n * n, "Rch7": d.dim, "Rch8": d.dim}
    for name, witness in failures.items():
        cases_for = cases.get(name, d.dim * n * n)
        publish_check(registry, suite, report.record(name, witness is None, witness=witness, cases=cases_for))

    # Rch6: (φψ)⁻ ⊗ (φψ)⁺ = ψ⁻φ⁻ ⊗ φ⁺ψ⁺
    witness = None
    for a, phi in enumerate(d.basis):
        for b, psi in enumerate(d.basis):
            lhs = dual_translation(d, d.product(phi, psi)).evaluate()
            rhs = pair_right_tensor(d, [
                (d.product(psi_minus, phi_minus), d.product(phi_plus, psi_plus))
                for phi_minus, phi_plus in translations[a].terms
                for psi_minus, psi_plus in translations[b].terms
            ])
            bad = _mismatch(lhs, rhs)
            if bad is not None:
                witness = {"phi": a, "psi": b, "at": bad}
                break
        if witness is not None:
            break
    publish_check(registry, suite, report.record("Rch6", witness is None, witness=witness, cases=d.dim ** 2))

    # Rch9: (s^r(b) t^r(b'))⁻ ⊗ (s^r(b) t^r(b'))⁺ = s^r(b') ⊗ s^r(b)
    witness = None
    for alpha in range(r):
        ea = u.base.basis_vector(alpha)
        for beta in range(r):
            eb = u.base.basis_vector(beta)
            v = d.product(d.source_map(ea), d.target_map(eb))
            lhs = dual_translation(d, v).evaluate()
            rhs = pair_right_tensor(d, [(d.source_map(eb), d.source_map(ea))])
            bad = _mismatch(lhs, rhs)
            if bad is not None:
                witness = {"b": alpha, "b'": beta, "at": bad}
                break
        if witness is not None:
            break
    publish_check(registry, suite, report.record("Rch9", witness is None, witness=witness, cases=r * r))

    found = harpoon_slice_witness(d)
    report.record("harpoon_differs_from_slice", found is not None, witness=found, informational=True)

    if u.kind == HOPF:
        # φ⁻ ⊗ φ⁺ = S*(φ₍₁₎) ⊗ φ₍₂₎ on H*
        dual = dual_hopf(u.hopf)
        bad_phi = None
        for index, phi in enumerate(d.basis):
            lhs = dual_translation(d, phi).coordinate_tensor()
            rhs = dual.antipode.dot(dual.comult[index])
            if _mismatch(lhs, rhs) is not None:
                bad_phi = index
                break
        publish_check(
            registry, suite,
            report.record("translation_matches_antipode", bad_phi is None, witness=bad_phi, cases=d.dim),
        )
    return report


# =============================================================================
# Dictionaries
# =============================================================================

def contraaction_action(d: DualBialgebroidInstance, contraaction: Contraaction) -> List[np.ndarray]:
    """φ·m = γ(m⟨φ, −⟩) as one matrix per basis φ."""
    u = d.algebroid
    rho = u.module_action(contraaction.coefficient)
    m = contraaction.coefficient.dim_m
    # right A-action on M through t
    right = np.tensordot(u.target, rho, axes=([1], [0]))                 # (α, c, c')
    out = []
    for phi in d.basis:
        values = np.tensordot(u.dual_basis.dot(phi), right, axes=([1], [0]))   # (i, c, c')
        out.append(contraaction.gamma.dot(values.reshape(u.rank * m, m)))
    return out


def dictionary_report(u: LeftHopfAlgebroidInstance, contraaction: Contraaction,
                      registry: Optional[EventRegistry] = None) -> SuiteReport:
    """Contraaction ↔ left U*-action and left U-module ↔ right U*-comodule.

    Args:
        u: Left Hopf algebroid
        contraaction: γ on a coefficient module, read as a map on Hom_{A^op}(U, M)
            through f ↦ (b_i ↦ f(e_i))
    """
    suite = "dictionary"
    report = SuiteReport(suite, f"{u.label} on {contraaction.coefficient.label}")
    publish(registry, {"type": EventType.SUITE_START.value, "suite": suite})
    d = dual_instance(u)
    m = contraaction.coefficient.dim_m
    if contraaction.gamma.shape != (m, u.rank * m):
        raise DimensionMismatch(f"γ of shape {contraaction.gamma.shape} does not act on Hom_(A^op)({u.label}, M)")
    report.extend(contraaction.check_axioms(), prefix="contramodule.")

    actions = contraaction_action(d, contraaction)
    structure = d.algebra.structure_constants
    witness = None
    for a in range(d.dim):
        for b in range(d.dim):
            combined = np.tensordot(structure[a, b], np.stack(actions), axes=([0], [0]))
            if _mismatch(combined, actions[a].dot(actions[b])) is not None:
                witness = [a, b]
                break
        if witness is not None:
            break
    publish_check(registry, suite, report.record("bellitalia", witness is None, witness=witness, cases=d.dim ** 2 * m))

    unit_action = np.tensordot(d.coordinates(d.unit), np.stack(actions), axes=([0], [0]))
    publish_check(
        registry, suite,
        report.record("unit_acts_trivially", _mismatch(unit_action, d.field.identity(m)) is None, cases=m),
    )

    # γ(f) = Σ_i e^i · f(e_i)
    coords = [d.coordinates(u.functional(i)) for i in range(u.rank)]
    rebuilt = np.hstack([np.tensordot(coords[i], np.stack(actions), axes=([0], [0])) for i in range(u.rank)])
    bad = _mismatch(rebuilt, contraaction.gamma)
    publish_check(registry, suite, report.record("mistmistmist", bad is None, witness=bad, cases=u.rank * m))

    rho = u.module_action(contraaction.coefficient)
    stacked = np.tensordot(u.carrier.structure_constants, rho, axes=([2], [0]))   # (u, v, c, c')
    witness = None
    for a in range(u.dim):
        for b in range(u.dim):
            if _mismatch(stacked[a, b], rho[a].dot(rho[b])) is not None:
                witness = [a, b]
                break
        if witness is not None:
            break
    report.record("module_action", witness is None, witness=witness, cases=u.dim ** 2)

    # m ↦ Σ_i e_i m ⊗ e^i and back through um = m⁽⁰⁾⟨m⁽¹⁾, u⟩
    coaction = [np.tensordot(u.dual_basis[i], rho, axes=([0], [0])) for i in range(u.rank)]
    rebuilt = np.zeros_like(rho)
    for w in range(u.dim):
        total = d.field.zeros((m, m))
        for i in range(u.rank):
            shift = np.tensordot(u.t(u.dual_functionals[i, w]), rho, axes=([0], [0]))
            total = total + shift.dot(coaction[i])
        rebuilt[w] = total
    bad = _mismatch(rebuilt, rho)
    publish_check(registry, suite, report.record("vetrorotto", bad is None, witness=bad, cases=u.dim * m))

    publish(registry, {"type": EventType.SUITE_COMPLETE.value, "suite": suite, "passed": report.passed})
    return report


def ayd_report(u: LeftHopfAlgebroidInstance, contraaction: Contraaction,
               registry: Optional[EventRegistry] = None) -> SuiteReport:
    """Anti Yetter-Drinfel'd compatibility of a contraaction with the U-action.

    romaedintorni compares a ▹ m ◃ b with the bimodule structure read off γ,
    a·m = γ(u ↦ m ◃ ε(u s(a))). nawas1 is u·γ(f) = γ(u₊₍₂₎ f(u₋ (−) u₊₍₁₎))
    on every basis map f: e_i ↦ m_c. Stability is reported as a finding.
    """
    suite = "ayd"
    report = SuiteReport(suite, f"{u.label} on {contraaction.coefficient.label}")
    publish(registry, {"type": EventType.SUITE_START.value, "suite": suite})
    n, r, k = u.dim, u.base_dim, u.rank
    m = contraaction.coefficient.dim_m
    if contraaction.gamma.shape != (m, k * m):
        raise DimensionMismatch(f"γ of shape {contraaction.gamma.shape} does not act on Hom_(A^op)({u.label}, M)")
    c = u.carrier.structure_constants
    rho = u.module_action(contraaction.coefficient)                          # (w, M, M')
    blocks = contraaction.gamma.reshape(m, k, m)                             # (M_out, i, M)
    right = np.tensordot(u.target, rho, axes=([1], [0]))                     # (β, M, M'): ρ(t(b_β))
    starts = np.tensordot(u.dual_basis, c, axes=([1], [0]))                  # (i, q, w): e_i b_q

    shifted = np.tensordot(u.source, starts, axes=([1], [1]))                # (α, i, w): e_i s(b_α)
    weights = np.tensordot(np.tensordot(shifted, u.counit, axes=([2], [0])), right, axes=([2], [0]))
    induced = np.tensordot(blocks, weights, axes=([1, 2], [1, 2]))           # (M_out, α, M')
    left = np.tensordot(u.source, rho, axes=([1], [0]))                      # (α, M, M')
    witness = None
    for a in range(r):
        for b in range(r):
            if _mismatch(left[a].dot(right[b]), induced[:, a, :].dot(right[b])) is not None:
                witness = [a, b]
                break
        if witness is not None:
            break
    publish_check(registry, suite, report.record("romaedintorni", witness is None, witness=witness, cases=r * r))

    # f_(i, c)(b_v) = ρ(t(⟨e^i, b_v⟩)) m_c
    extension = np.tensordot(np.tensordot(u.dual_functionals, u.target, axes=([2], [0])), rho, axes=([2], [0]))
    sandwiched = np.tensordot(c, starts, axes=([1], [2]))                    # (m, w, j, a): b_m e_j b_a
    values = np.tensordot(sandwiched, extension, axes=([1], [1]))            # (m, j, a, i, M, c)
    lift = np.tensordot(np.tensordot(u.translation, u.comult, axes=([1], [0])), rho, axes=([3], [0]))   # (u, m, a, M, M')
    witness = None
    for w in range(n):
        moved = np.tensordot(lift[w], values, axes=([0, 1, 3], [0, 2, 4]))   # (M, j, i, c)
        rhs = np.tensordot(blocks, moved, axes=([1, 2], [1, 0]))             # (M_out, i, c)
        lhs = np.tensordot(rho[w], blocks, axes=([1], [0]))
        bad = _mismatch(lhs, rhs)
        if bad is not None:
            witness = {"u": w, "at": bad}
            break
    publish_check(registry, suite, report.record("nawas1", witness is None, witness=witness, cases=n * k * m))

    if not contraaction.stable:
        report.add_finding("stablehalt: γ((−)m) ≠ m, the cocyclic module is only para-cyclic")
        publish(registry, {"finding": report.findings[-1], "suite": suite})
    publish(registry, {"type": EventType.SUITE_COMPLETE.value, "suite": suite, "passed": report.passed})
    return report


def dual_report(u: LeftHopfAlgebroidInstance, contraaction: Optional[Contraaction] = None,
                registry: Optional[EventRegistry] = None) -> SuiteReport:
    """Sch suite of U, structure of U*, right Hopf identities, the dictionaries and the aYD checks."""
    suite = "dual"
    report = SuiteReport(suite, u.label)
    publish(registry, {"type": EventType.SUITE_START.value, "suite": suite})
    report.extend(sch_report(u, registry), prefix="sch.")
    d = dual_instance(u)
    report.dimensions["U*"] = [d.dim]
    report.extend(d.structure_report, prefix="dual.")
    report.extend(hopf_galois_report(d, registry), prefix="hopf_galois.")
    if contraaction is not None:
        report.extend(dictionary_report(u, contraaction, registry), prefix="dictionary.")
        report.extend(ayd_report(u, contraaction, registry), prefix="ayd.")
    publish(registry, {"type": EventType.SUITE_COMPLETE.value, "suite": suite, "passed": report.passed})
    return report
