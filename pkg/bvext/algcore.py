"""Finite-dimensional algebras and Frobenius structures.

This module provides:
- AlgebraPresentation: Structure constants, unit, multiplication helpers
- validate_algebra: Associativity and unitality report
- FrobeniusStructure / frobenius_structure: Functional, dual bases, Nakayama σ
- frobenius_identities: Decomposition and coproduct identities of ε
- is_symmetric: σ = id, cross-checked against ε(ab) = ε(ba)
- NakayamaGrading / nakayama_grading: Eigenspace splitting A = ⊕ A_λ

Conventions: b_i·b_j = Σ_k c[i][j][k] b_k. Linear maps are matrices acting
on column coordinate vectors, so σ(b_j) = Σ_k σ[k][j] b_k.
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import (
    AxiomViolation,
    CharacteristicError,
    DimensionMismatch,
    NotDiagonalizable,
    NotFrobenius,
    SchemaError,
)
from .exactfield import (
    FieldSpec,
    Subspace,
    kernel_basis,
    membership,
    rank,
    sort_key,
)
from .results import SuiteReport

# Largest prime for which eigenvalues are found by exhaustive search
MAX_EIGEN_SEARCH_PRIME = 1009


@dataclass(frozen=True, eq=False)
class AlgebraPresentation:
    """Finite-dimensional unital associative algebra given by structure constants."""

    field: FieldSpec
    dim: int
    basis_labels: Tuple[str, ...]
    structure_constants: np.ndarray
    unit: np.ndarray
    name: str = ""
    frobenius: Optional[np.ndarray] = None

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise DimensionMismatch(f"Algebra dimension must be positive, got {n}")
        if len(self.basis_labels) != n:
            raise DimensionMismatch(f"{len(self.basis_labels)} labels for dimension {n}")
        if self.structure_constants.shape != (n, n, n):
            raise DimensionMismatch(f"Structure constants of shape {self.structure_constants.shape}, expected {(n, n, n)}")
        if self.unit.shape != (n,):
            raise DimensionMismatch(f"Unit vector of shape {self.unit.shape}, expected {(n,)}")
        if self.frobenius is not None and self.frobenius.shape != (n,):
            raise DimensionMismatch(f"Frobenius functional of shape {self.frobenius.shape}, expected {(n,)}")

    @property
    def label(self) -> str:
        return self.name or f"algebra[{self.dim}]"

    def basis_vector(self, i: int) -> np.ndarray:
        return self.field.unit_vector(self.dim, i)

    def _check(self, v: Sequence) -> np.ndarray:
        v = np.asarray(v, dtype=object)
        if v.shape != (self.dim,):
            raise DimensionMismatch(f"Vector of shape {v.shape} in algebra of dimension {self.dim}")
        return v

    def multiply(self, x: Sequence, y: Sequence) -> np.ndarray:
        """Bilinear extension of the structure constants."""
        x, y = self._check(x), self._check(y)
        return np.tensordot(y, np.tensordot(x, self.structure_constants, axes=([0], [0])), axes=([0], [0]))

    @cached_property
    def left_multiplication(self) -> np.ndarray:
        """L[a] with L[a] @ v = b_a·v; shape (n, n, n)."""
        return np.ascontiguousarray(self.structure_constants.transpose(0, 2, 1))

    @cached_property
    def right_multiplication(self) -> np.ndarray:
        """R[a] with R[a] @ v = v·b_a; shape (n, n, n)."""
        return np.ascontiguousarray(self.structure_constants.transpose(1, 2, 0))

    def left_matrix(self, a: Sequence) -> np.ndarray:
        return np.tensordot(self._check(a), self.left_multiplication, axes=([0], [0]))

    def right_matrix(self, a: Sequence) -> np.ndarray:
        return np.tensordot(self._check(a), self.right_multiplication, axes=([0], [0]))

    def apply_map(self, matrix: np.ndarray, v: Sequence) -> np.ndarray:
        return np.asarray(matrix, dtype=object).dot(self._check(v))

    def opposite(self) -> "AlgebraPresentation":
        """A^op: same basis, b_i ∘ b_j = b_j·b_i."""
        return AlgebraPresentation(
            self.field, self.dim, self.basis_labels,
            np.ascontiguousarray(self.structure_constants.transpose(1, 0, 2)),
            self.unit, f"{self.label}^op",
        )

    def format_vector(self, v: Sequence) -> str:
        terms = []
        for coeff, label in zip(self._check(v), self.basis_labels):
            if coeff != 0:
                terms.append(f"{self.field.serialize(coeff)}*{label}")
        return " + ".join(terms) if terms else "0"


def algebra_from_dict(data: Dict[str, Any], field_override: Optional[FieldSpec] = None) -> AlgebraPresentation:
    """Build a presentation from the JSON schema.

    Schema: {"field": "Q" | {"GF": p}, "dim": n, "basis": [labels],
    "mul": c[i][j][k] nested list or {"entries": [[i, j, k, value], ...]},
    "unit": vector, "frobenius": optional vector, "name": optional}.

    Raises:
        SchemaError: If a required key is missing or malformed
    """
    try:
        field_spec = field_override or FieldSpec.parse(data.get("field", "Q"))
        n = int(data["dim"])
        labels = tuple(str(x) for x in data.get("basis", [f"b{i}" for i in range(n)]))
        consts = _structure_constants(field_spec, n, data["mul"])
        unit = field_spec.array(data["unit"])
        frob = data.get("frobenius")
        frobenius = field_spec.array(frob) if frob is not None else None
    except KeyError as e:
        raise SchemaError(f"Missing key {e} in algebra presentation") from e
    except (TypeError, ValueError) as e:
        raise SchemaError(f"Malformed algebra presentation: {e}") from e
    return AlgebraPresentation(field_spec, n, labels, consts, unit, str(data.get("name", "")), frobenius)


def _structure_constants(field_spec: FieldSpec, n: int, mul: Any) -> np.ndarray:
    if isinstance(mul, dict):
        consts = field_spec.zeros((n, n, n))
        for entry in mul.get("entries", []):
            i, j, k, value = entry
            consts[int(i), int(j), int(k)] += field_spec(value)
        return consts
    consts = field_spec.array(mul)
    if consts.shape != (n, n, n):
        raise SchemaError(f"'mul' has shape {consts.shape}, expected {(n, n, n)}")
    return consts


def algebra_to_dict(p: AlgebraPresentation) -> Dict[str, Any]:
    ser = p.field.serialize
    return {
        "name": p.name,
        "field": p.field.to_json(),
        "dim": p.dim,
        "basis": list(p.basis_labels),
        "mul": [[[ser(x) for x in row] for row in plane] for plane in p.structure_constants],
        "unit": [ser(x) for x in p.unit],
        **({"frobenius": [ser(x) for x in p.frobenius]} if p.frobenius is not None else {}),
    }


def _first_mismatch(left: np.ndarray, right: np.ndarray) -> Optional[Tuple[int, ...]]:
    diff = np.argwhere((left != right).astype(bool))
    if len(diff) == 0:
        return None
    return tuple(int(x) for x in diff[0])


def validate_algebra(p: AlgebraPresentation) -> SuiteReport:
    """Associativity on all n³ triples and two-sided unitality.

    Returns:
        SuiteReport with "associativity" and "unitality" checks; witnesses are
        the first failing basis triple / basis index
    """
    report = SuiteReport("validate", p.label)
    c = p.structure_constants
    n = p.dim

    # (b_i b_j) b_k and b_i (b_j b_k), both indexed (i, j, k, out)
    left = np.tensordot(c, c, axes=([2], [0]))
    right = np.moveaxis(np.tensordot(c, c, axes=([2], [1])), 2, 0)
    bad = _first_mismatch(left, right)
    report.record(
        "associativity", bad is None,
        witness=None if bad is None else list(bad[:3]),
        detail="" if bad is None else "(b_i b_j) b_k != b_i (b_j b_k) at (i, j, k)",
        cases=n ** 3,
    )

    identity = p.field.identity(n)
    left_unit = np.tensordot(p.unit, c, axes=([0], [0]))
    right_unit = np.tensordot(c, p.unit, axes=([1], [0]))
    bad_left = _first_mismatch(left_unit, identity)
    bad_right = _first_mismatch(right_unit, identity)
    witness = None
    if bad_left is not None:
        witness = {"side": "left", "basis": bad_left[0]}
    elif bad_right is not None:
        witness = {"side": "right", "basis": bad_right[0]}
    report.record("unitality", witness is None, witness=witness, cases=2 * n)
    return report


# =============================================================================
# Frobenius structures
# =============================================================================

@dataclass(frozen=True, eq=False)
class FrobeniusStructure:
    """Frobenius functional ε with dual bases and the Nakayama automorphism.

    e_i is the presentation basis b_i; e^j = Σ_k dual_basis_eup[j][k] b_k.
    """

    algebra: AlgebraPresentation
    functional: np.ndarray
    gram: np.ndarray
    dual_basis_eup: np.ndarray
    nakayama: np.ndarray

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    def epsilon(self, v: Sequence):
        return np.asarray(v, dtype=object).dot(self.functional)

    def sigma(self, v: Sequence) -> np.ndarray:
        return self.nakayama.dot(np.asarray(v, dtype=object))

    @cached_property
    def nakayama_inverse(self) -> np.ndarray:
        f = self.field
        return f.to_array(f.matrix(self.nakayama).inv())

    def eup(self, i: int) -> np.ndarray:
        return self.dual_basis_eup[i]


def frobenius_structure(p: AlgebraPresentation, epsilon: Optional[Sequence] = None) -> FrobeniusStructure:
    """Dual basis and Nakayama automorphism of a Frobenius functional.

    Args:
        p: The algebra
        epsilon: Row vector ε(b_i); defaults to the presentation's "frobenius"

    Returns:
        FrobeniusStructure with all invariants verified

    Raises:
        NotFrobenius: If the Gram matrix H[k][i] = ε(b_k b_i) is singular
        AxiomViolation: If a computed invariant fails (internal guard)
    """
    f = p.field
    if epsilon is None:
        if p.frobenius is None:
            raise NotFrobenius(f"{p.label} carries no Frobenius functional")
        epsilon = p.frobenius
    eps = f.array(list(epsilon))
    if eps.shape != (p.dim,):
        raise DimensionMismatch(f"Functional of shape {eps.shape} for dimension {p.dim}")

    gram = np.tensordot(p.structure_constants, eps, axes=([2], [0]))
    if rank(gram, f) < p.dim:
        raise NotFrobenius(
            f"Gram matrix of ε on {p.label} is singular",
            {"functional": [f.serialize(x) for x in eps]},
        )
    gram_inv = f.to_array(f.matrix(gram).inv())
    eup = gram_inv
    # ε(b_i b_j) = ε(σ(b_j) b_i)  ⇔  σ = (H⁻¹)ᵀ H
    sigma = gram_inv.T.dot(gram)
    structure = FrobeniusStructure(p, eps, gram, eup, sigma)
    _verify_frobenius(structure)
    return structure


def _verify_frobenius(fs: FrobeniusStructure) -> None:
    p, f = fs.algebra, fs.field
    n = p.dim
    for j in range(n):
        for i in range(n):
            value = fs.epsilon(p.multiply(fs.eup(j), p.basis_vector(i)))
            if value != (f.one if i == j else f.zero):
                raise AxiomViolation("Dual basis fails ε(e^j e_i) = δ", {"j": j, "i": i})
    for a in range(n):
        for b in range(n):
            lhs = fs.gram[a, b]
            rhs = fs.epsilon(p.multiply(fs.sigma(p.basis_vector(b)), p.basis_vector(a)))
            if lhs != rhs:
                raise AxiomViolation("Nakayama σ fails ε(ab) = ε(σ(b)a)", {"a": a, "b": b})


def frobenius_identities(fs: FrobeniusStructure) -> SuiteReport:
    """Decomposition identities of a Frobenius functional.

    Checks a = Σ ε(a e_i) e^i = Σ ε(e^i a) e_i, 1 = Σ ε(e_i) e^i = Σ ε(e^i) e_i,
    the twisted coproduct identity Σ e_i a ⊗ e^i = Σ e_i ⊗ σ(a) e^i and that σ
    is a unital algebra automorphism. The form Δ(σ(a)) = Σ e_i a ⊗ e^i with
    Δ(x) = Σ x e_i ⊗ e^i is recorded as informational only.
    """
    p, f = fs.algebra, fs.field
    n = p.dim
    report = SuiteReport("frobenius", p.label)
    e = [p.basis_vector(i) for i in range(n)]
    eup = [fs.eup(i) for i in range(n)]

    def decomposition_failure(form: str) -> Optional[int]:
        for a in range(n):
            if form == "right":
                total = sum((eup[i] * fs.epsilon(p.multiply(e[a], e[i])) for i in range(n)), f.zeros(n))
            else:
                total = sum((e[i] * fs.epsilon(p.multiply(eup[i], e[a])) for i in range(n)), f.zeros(n))
            if not np.all(total == e[a]):
                return a
        return None

    for form in ("right", "left"):
        bad = decomposition_failure(form)
        report.record(f"decomposition_{form}", bad is None, witness=bad, cases=n)

    one_a = sum((eup[i] * fs.epsilon(e[i]) for i in range(n)), f.zeros(n))
    one_b = sum((e[i] * fs.epsilon(eup[i]) for i in range(n)), f.zeros(n))
    report.record("unit_decomposition", bool(np.all(one_a == p.unit) and np.all(one_b == p.unit)), cases=2)

    twisted_bad = None
    literal_bad = None
    for a in range(n):
        sa = fs.sigma(e[a])
        lhs = np.array([np.multiply.outer(p.multiply(e[i], e[a]), eup[i]) for i in range(n)]).sum(axis=0)
        rhs = np.array([np.multiply.outer(e[i], p.multiply(sa, eup[i])) for i in range(n)]).sum(axis=0)
        delta_sa = np.array([np.multiply.outer(p.multiply(sa, e[i]), eup[i]) for i in range(n)]).sum(axis=0)
        if twisted_bad is None and not np.all(lhs == rhs):
            twisted_bad = a
        if literal_bad is None and not np.all(lhs == delta_sa):
            literal_bad = a
    report.record("twisted_coproduct", twisted_bad is None, witness=twisted_bad, cases=n)
    report.record(
        "literal_delta_sigma", literal_bad is None, witness=literal_bad, cases=n,
        detail="Δ(σ(a)) pairs to σ(a)z, Σ e_i a ⊗ e^i to za", informational=True,
    )

    auto_bad = None
    for i in range(n):
        for j in range(n):
            lhs = fs.sigma(p.multiply(e[i], e[j]))
            rhs = p.multiply(fs.sigma(e[i]), fs.sigma(e[j]))
            if not np.all(lhs == rhs):
                auto_bad = [i, j]
                break
        if auto_bad:
            break
    unital = bool(np.all(fs.sigma(p.unit) == p.unit))
    report.record("nakayama_automorphism", auto_bad is None and unital, witness=auto_bad, cases=n * n + 1)
    return report


def is_symmetric(fs: FrobeniusStructure) -> bool:
    """True iff σ = id; equivalently ε(ab) = ε(ba) on all basis pairs.

    Raises:
        AxiomViolation: If the two characterizations disagree
    """
    by_sigma = bool(np.all(fs.nakayama == fs.field.identity(fs.algebra.dim)))
    by_trace = bool(np.all(fs.gram == fs.gram.T))
    if by_sigma != by_trace:
        raise AxiomViolation("σ = id and ε(ab) = ε(ba) disagree", {"sigma_identity": by_sigma})
    return by_sigma


# =============================================================================
# Nakayama grading
# =============================================================================

@dataclass(frozen=True, eq=False)
class NakayamaGrading:
    """A = ⊕_λ A_λ for a diagonalizable σ."""

    field: FieldSpec
    eigenvalues: Tuple[Any, ...]
    eigenspaces: Tuple[Subspace, ...]
    weight_of_basis: Tuple[Any, ...]
    eigenbasis: np.ndarray  # rows are eigenvectors, ordered by eigenvalue

    def eigenspace(self, value) -> Subspace:
        for lam, space in zip(self.eigenvalues, self.eigenspaces):
            if lam == value:
                return space
        return Subspace.zero(self.field, self.eigenbasis.shape[1])

    def weight_of(self, v: Sequence) -> Optional[Any]:
        """Eigenvalue of a homogeneous nonzero vector, None otherwise."""
        for lam, space in zip(self.eigenvalues, self.eigenspaces):
            if space.contains(v):
                return lam
        return None


def eigenvalues_in_field(field: FieldSpec, matrix: np.ndarray) -> List[Any]:
    """Distinct eigenvalues of a square matrix lying in the ground field."""
    n = matrix.shape[0]
    if field.characteristic == 0:
        poly = field.matrix(matrix).charpoly()
        _, factors = poly.factor()
        roots = []
        for factor, _mult in factors:
            if factor.degree() == 1:
                roots.append(field(-factor[0] / factor[1]))
        return sorted(set(roots), key=sort_key)
    if field.p > MAX_EIGEN_SEARCH_PRIME:
        raise CharacteristicError(f"Eigenvalue search over {field.label} is not supported")
    identity = field.identity(n)
    return [
        field(x) for x in range(field.p)
        if rank(matrix - identity * field(x), field) < n
    ]


def eigen_grading(field: FieldSpec, sigma: np.ndarray, algebra: Optional[AlgebraPresentation] = None) -> NakayamaGrading:
    """Split field^n into eigenspaces of sigma.

    Raises:
        NotDiagonalizable: If the eigenspaces do not span
        AxiomViolation: If A_λ A_μ ⊄ A_λμ or 1 ∉ A_1 (algebra supplied)
    """
    n = sigma.shape[0]
    values = eigenvalues_in_field(field, sigma)
    identity = field.identity(n)
    spaces = [kernel_basis(sigma - identity * lam, field) for lam in values]
    total = sum(s.dim for s in spaces)
    if total != n:
        raise NotDiagonalizable(
            "σ does not split into eigenspaces over the ground field",
            {"eigenvalues": [field.serialize(v) for v in values], "span_dim": total, "dim": n},
        )
    rows, weights = [], []
    for lam, space in zip(values, spaces):
        for row in space.basis:
            rows.append(row)
            weights.append(lam)
    grading = NakayamaGrading(field, tuple(values), tuple(spaces), tuple(weights), np.array(rows, dtype=object))
    if algebra is not None:
        _verify_grading(grading, algebra)
    return grading


def _verify_grading(grading: NakayamaGrading, p: AlgebraPresentation) -> None:
    if not grading.eigenspace(p.field.one).contains(p.unit):
        raise AxiomViolation("1 is not in A_1")
    for lam, space in zip(grading.eigenvalues, grading.eigenspaces):
        for mu, other in zip(grading.eigenvalues, grading.eigenspaces):
            target = grading.eigenspace(lam * mu)
            for u in space.basis:
                for v in other.basis:
                    if not target.contains(p.multiply(u, v)):
                        raise AxiomViolation(
                            "A_λ A_μ is not contained in A_λμ",
                            {"lambda": p.field.serialize(lam), "mu": p.field.serialize(mu)},
                        )


def nakayama_grading(fs: FrobeniusStructure, permit_prime_field: bool = False) -> NakayamaGrading:
    """Eigen-splitting of the Nakayama automorphism.

    Raises:
        CharacteristicError: Over GF(p) unless permit_prime_field
        NotDiagonalizable: If σ does not split over the ground field
    """
    fs.field.require_characteristic_zero("nakayama_grading", permit=permit_prime_field)
    return eigen_grading(fs.field, fs.nakayama, fs.algebra)
