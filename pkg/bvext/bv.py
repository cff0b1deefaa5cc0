"""Cohomology, induced class operations and the Gerstenhaber / BV suites.

This module provides:
- CohomologyPresentation / cohomology: H^n of a complex or of a subcomplex
- ClassAlgebra / induced_op: ⌣, {,} and B on classes, with well-definedness
- gerstenhaber_report: Unit, associativity, commutativity, Jacobi, Leibniz
- bv_report: B² = 0 and the BV identity on classes
- WeightDecomposition / weight_decomposition: C^p(A, A) = ⊕_λ C^p_λ
- nakayama_weight_report: Weight splitting, vanishing of H(C_λ) for λ ≠ 1
  and the BV identity on the weight-1 part

"Equal in cohomology" always means the difference lies in the image of β.
"""
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .algcore import FrobeniusStructure, NakayamaGrading, nakayama_grading
from .constants import NAKAYAMA_CUP_DEGREE, PERTURBATION_RANGE, PERTURBATION_SEED
from .cyclic import (
    CyclicStructure,
    cyclic_structure,
    frobenius_contraaction,
    twisted_coefficient_report,
)
from .errors import DimensionMismatch, IndexOutOfRange, NotCocycle, NotCyclic
from .events.registry import EventRegistry, EventType, publish, publish_check
from .exactfield import (
    FieldSpec,
    QuotientPresentation,
    Subspace,
    first_difference,
    image_basis,
    kernel_basis,
    kron,
    mat_inverse,
    quotient,
    sort_key,
)
from .hochschild import Cochain, CochainOperad, EndomorphismOperad, HochschildComplex, algebra_bimodule
from .results import SuiteReport


# =============================================================================
# Cohomology
# =============================================================================

@dataclass(frozen=True, eq=False)
class CohomologyPresentation:
    """H^n = (ker β_n ∩ V_n) / β(V_{n−1}) for n ≤ max_degree.

    subspaces holds V_n per degree; None means the full cochain spaces.
    """

    complex: HochschildComplex
    quotients: Tuple[QuotientPresentation, ...]
    subspaces: Optional[Tuple[Subspace, ...]] = None
    label: str = ""

    @property
    def field(self) -> FieldSpec:
        return self.complex.field

    @property
    def max_degree(self) -> int:
        return len(self.quotients) - 1

    def dim(self, n: int) -> int:
        return self._quotient(n).dim

    def dims(self) -> List[int]:
        return [q.dim for q in self.quotients]

    def _quotient(self, n: int) -> QuotientPresentation:
        if not 0 <= n <= self.max_degree:
            raise IndexOutOfRange(f"Cohomology computed through degree {self.max_degree}, asked for {n}")
        return self.quotients[n]

    def domain(self, n: int) -> Optional[Subspace]:
        if self.subspaces is None:
            return None
        return self.subspaces[n]

    def class_cochain(self, n: int, k: int) -> Cochain:
        return self.complex.from_vector(n, self._quotient(n).class_reps[k])

    def representative(self, n: int, coords: Sequence) -> Cochain:
        return self.complex.from_vector(n, self._quotient(n).representative(coords))

    def is_coboundary(self, f: Cochain) -> bool:
        return self._quotient(f.degree).is_trivial(f.vector())

    def reduce(self, f: Cochain) -> np.ndarray:
        """Class coordinates of a cocycle.

        Raises:
            NotCocycle: If βf ≠ 0 or f leaves the subcomplex
        """
        n = f.degree
        q = self._quotient(n)
        vec = f.vector()
        domain = self.domain(n)
        if domain is not None and not domain.contains(vec):
            raise NotCocycle(f"Cochain of degree {n} leaves the subcomplex")
        if not self.complex.beta(f).is_zero():
            raise NotCocycle(f"Cochain of degree {n} is not a cocycle")
        return q.reduce(vec)


def _span_columns(cx: HochschildComplex, n_source: int, domain: Optional[Subspace]) -> Subspace:
    beta = cx.differential(n_source).matrix
    if domain is not None:
        if domain.dim == 0:
            return Subspace.zero(cx.field, cx.cochain_dim(n_source + 1))
        beta = beta * cx.field.matrix(domain.basis.T)
    return image_basis(beta, cx.field)


def _cocycles(cx: HochschildComplex, n: int, domain: Optional[Subspace]) -> Subspace:
    f = cx.field
    size = cx.cochain_dim(n)
    beta = cx.differential(n).matrix
    if domain is None:
        return kernel_basis(beta, f)
    if domain.dim == 0:
        return Subspace.zero(f, size)
    coords = kernel_basis(beta * f.matrix(domain.basis.T), f)
    if coords.dim == 0:
        return Subspace.zero(f, size)
    rows = f.matrix(coords.basis) * f.matrix(domain.basis)
    return Subspace.span(f, size, f.to_array(rows))


def cohomology(cx: HochschildComplex, max_degree: int,
               subspaces: Optional[Sequence[Subspace]] = None, label: str = "") -> CohomologyPresentation:
    """Cohomology through max_degree, optionally of the subcomplex V_• ⊂ C^•.

    Raises:
        BudgetExceeded: If a cochain space exceeds the cap
    """
    cx.cochain_dim(max_degree + 1)  # largest space touched, checked before any work
    quotients = []
    for n in range(0, max_degree + 1):
        domain = subspaces[n] if subspaces is not None else None
        cocycles = _cocycles(cx, n, domain)
        if n == 0:
            boundaries = Subspace.zero(cx.field, cx.cochain_dim(0))
        else:
            boundaries = _span_columns(cx, n - 1, subspaces[n - 1] if subspaces is not None else None)
        quotients.append(quotient(cocycles, boundaries))
    kept = tuple(subspaces[: max_degree + 1]) if subspaces is not None else None
    return CohomologyPresentation(cx, tuple(quotients), kept, label or cx.label)


# =============================================================================
# Class operations
# =============================================================================

def _sign(field: FieldSpec, k: int):
    return field.one if k % 2 == 0 else -field.one


class ClassAlgebra:
    """⌣, {,} and B on cohomology classes, computed on representatives."""

    def __init__(self, cohomology: CohomologyPresentation, cyclic: Optional[CyclicStructure] = None,
                 seed: int = PERTURBATION_SEED):
        self.H = cohomology
        self.cx = cohomology.complex
        self.field = cohomology.field
        self.cyclic = cyclic
        self._rng = np.random.default_rng(seed)

    # cochain level -------------------------------------------------------

    def cup(self, f: Optional[Cochain], g: Optional[Cochain]) -> Optional[Cochain]:
        if f is None or g is None:
            return None
        return self.cx.cup(f, g)

    def bracket(self, f: Optional[Cochain], g: Optional[Cochain]) -> Optional[Cochain]:
        if f is None or g is None or f.degree + g.degree == 0:
            return None
        if not isinstance(self.cx, CochainOperad):
            raise DimensionMismatch("The bracket needs a cochain operad")
        return self.cx.bracket(f, g)

    def boundary(self, f: Optional[Cochain]) -> Optional[Cochain]:
        """B on a cochain; None stands for the zero cochain in degree −1."""
        if f is None or f.degree == 0:
            return None
        if self.cyclic is None:
            raise NotCyclic("No cyclic structure supplied for B")
        return self.cx.apply(self.cyclic.connes_B(f.degree), f)

    def combine(self, degree: int, *terms: Tuple[Any, Optional[Cochain]]) -> Cochain:
        total = self.cx.zero(degree)
        for scalar, term in terms:
            if term is not None:
                total = total + term.scale(scalar)
        return total

    # class level ---------------------------------------------------------

    def unit_class(self) -> np.ndarray:
        return self.H.reduce(self.cx.unit_cochain())

    def perturbed(self, n: int, k: int) -> Cochain:
        """Representative of basis class k plus a deterministic coboundary."""
        rep = self.H.class_cochain(n, k)
        if n == 0:
            return rep
        domain = self.H.domain(n - 1)
        if domain is None:
            coords = self._rng.integers(-PERTURBATION_RANGE, PERTURBATION_RANGE + 1, self.cx.cochain_dim(n - 1))
            x = self.cx.from_vector(n - 1, self.field.array([int(c) for c in coords]))
        else:
            if domain.dim == 0:
                return rep
            coords = self._rng.integers(-PERTURBATION_RANGE, PERTURBATION_RANGE + 1, domain.dim)
            x = self.cx.from_vector(n - 1, domain.combine(self.field.array([int(c) for c in coords])))
        return rep + self.cx.beta(x)

    def classes(self, n: int) -> range:
        return range(self.H.dim(n))


def induced_op(algebra: ClassAlgebra, op: str, classes: Sequence[Tuple[int, int]]) -> Optional[np.ndarray]:
    """Apply op ∈ {cup, bracket, B} to basis classes given as (degree, index).

    Returns:
        Class coordinates of the result, or None when it lands in degree −1

    Raises:
        NotCyclic: For B without a cyclic structure
    """
    reps = [algebra.H.class_cochain(n, k) for n, k in classes]
    if op == "cup":
        result = algebra.cup(*reps)
    elif op == "bracket":
        result = algebra.bracket(*reps)
    elif op == "B":
        result = algebra.boundary(*reps)
    else:
        raise ValueError(f"Unknown class operation '{op}'")
    if result is None:
        return None
    return algebra.H.reduce(result)


class _Tally:
    """Cases and first witness of one identity family."""

    def __init__(self):
        self.cases = 0
        self.witness = None

    def observe(self, ok: bool, witness: Any) -> None:
        self.cases += 1
        if not ok and self.witness is None:
            self.witness = witness


def _record(report: SuiteReport, registry: Optional[EventRegistry], name: str, tally: _Tally) -> None:
    check = report.record(name, tally.witness is None, witness=tally.witness, cases=tally.cases)
    publish_check(registry, report.suite, check)


def _well_defined(algebra: ClassAlgebra, op: str, classes: Sequence[Tuple[int, int]]) -> bool:
    """Same class from perturbed representatives."""
    base = induced_op(algebra, op, classes)
    reps = [algebra.perturbed(n, k) for n, k in classes]
    if op == "cup":
        other = algebra.cup(*reps)
    elif op == "bracket":
        other = algebra.bracket(*reps)
    else:
        other = algebra.boundary(*reps)
    if other is None or base is None:
        return other is None and base is None
    return bool(np.all(algebra.H.reduce(other) == base))


def gerstenhaber_report(algebra: ClassAlgebra, bound: int, registry: Optional[EventRegistry] = None) -> SuiteReport:
    """Gerstenhaber axioms on all basis classes with total degree ≤ bound."""
    suite = "gerstenhaber"
    H, cx, f = algebra.H, algebra.cx, algebra.field
    bound = min(bound, H.max_degree)
    report = SuiteReport(suite, H.label)
    report.dimensions["H"] = H.dims()
    publish(registry, {"type": EventType.SUITE_START.value, "suite": suite})

    def basis(n):
        return [(n, k) for k in algebra.classes(n)]

    tallies = {name: _Tally() for name in (
        "cup_unit", "cup_associative", "cup_graded_commutative", "bracket_antisymmetric",
        "graded_jacobi", "graded_leibniz", "cup_well_defined", "bracket_well_defined",
    )}
    unit = cx.unit_cochain()
    for p in range(0, bound + 1):
        for a in basis(p):
            rep = H.class_cochain(*a)
            tallies["cup_unit"].observe(H.is_coboundary(cx.cup(unit, rep) - rep), a)

    for p in range(0, bound + 1):
        for q in range(0, bound - p + 1):
            for a in basis(p):
                for b in basis(q):
                    x, y = H.class_cochain(*a), H.class_cochain(*b)
                    xy = cx.cup(x, y)
                    tallies["cup_graded_commutative"].observe(
                        H.is_coboundary(xy - cx.cup(y, x).scale(_sign(f, p * q))), [a, b]
                    )
                    tallies["cup_well_defined"].observe(_well_defined(algebra, "cup", [a, b]), [a, b])
                    if p + q >= 1 and p + q - 1 <= bound:
                        xb = algebra.bracket(x, y)
                        yb = algebra.bracket(y, x)
                        tallies["bracket_antisymmetric"].observe(
                            H.is_coboundary(xb + yb.scale(_sign(f, (p - 1) * (q - 1)))), [a, b]
                        )
                        tallies["bracket_well_defined"].observe(_well_defined(algebra, "bracket", [a, b]), [a, b])

    for p in range(0, bound + 1):
        for q in range(0, bound + 1):
            for r in range(0, bound + 1):
                for a in basis(p):
                    for b in basis(q):
                        for c in basis(r):
                            x, y, z = (H.class_cochain(*t) for t in (a, b, c))
                            if p + q + r <= bound:
                                assoc = cx.cup(cx.cup(x, y), z) - cx.cup(x, cx.cup(y, z))
                                tallies["cup_associative"].observe(H.is_coboundary(assoc), [a, b, c])
                            if 0 <= p + q + r - 2 <= bound and p + q >= 1 and q + r >= 1 and r + p >= 1:
                                jacobi = algebra.combine(
                                    p + q + r - 2,
                                    (_sign(f, (p - 1) * (r - 1)), algebra.bracket(x, algebra.bracket(y, z))),
                                    (_sign(f, (q - 1) * (p - 1)), algebra.bracket(y, algebra.bracket(z, x))),
                                    (_sign(f, (r - 1) * (q - 1)), algebra.bracket(z, algebra.bracket(x, y))),
                                )
                                tallies["graded_jacobi"].observe(H.is_coboundary(jacobi), [a, b, c])
                            if 0 <= p + q + r - 1 <= bound and p + q + r >= 1:
                                # {α⌣β, γ} = {α, γ}⌣β + (−1)^{p(r−1)} α⌣{β, γ}
                                n = p + q + r - 1
                                leibniz = algebra.combine(
                                    n,
                                    (f.one, algebra.bracket(cx.cup(x, y), z)),
                                    (-f.one, algebra.cup(algebra.bracket(x, z), y)),
                                    (-_sign(f, p * (r - 1)), algebra.cup(x, algebra.bracket(y, z))),
                                )
                                tallies["graded_leibniz"].observe(H.is_coboundary(leibniz), [a, b, c])

    for name, tally in tallies.items():
        _record(report, registry, name, tally)
    publish(registry, {"type": EventType.SUITE_COMPLETE.value, "suite": suite, "passed": report.passed})
    return report


def _require_cyclic(algebra: ClassAlgebra, bound: int) -> None:
    cs = algebra.cyclic
    if cs is None:
        raise NotCyclic("No cyclic structure supplied")
    f = algebra.field
    for n in range(0, bound + 1):
        power = cs.tau_power(n)
        domain = algebra.H.domain(n) if n <= algebra.H.max_degree else None
        if domain is None and algebra.H.subspaces is None:
            if first_difference(power, f.identity_matrix(power.nrows())) is not None:
                raise NotCyclic(f"τ^{n + 1} ≠ id on C^{n}", {"degree": n})
        elif domain is not None:
            for row in domain.basis:
                if not np.all(f.apply(power, row) == row):
                    raise NotCyclic(f"τ^{n + 1} ≠ id on the subcomplex in degree {n}", {"degree": n})


def bv_report(algebra: ClassAlgebra, bound: int, registry: Optional[EventRegistry] = None) -> SuiteReport:
    """B² = 0 and {α, β} = (−1)^p (B(α⌣β) − B(α)⌣β − (−1)^p α⌣B(β)) on classes.

    Raises:
        NotCyclic: If τ^{n+1} ≠ id on the (sub)complex
    """
    suite = "bv"
    H, cx, f = algebra.H, algebra.cx, algebra.field
    bound = min(bound, H.max_degree)
    _require_cyclic(algebra, bound)
    report = SuiteReport(suite, H.label)
    report.dimensions["H"] = H.dims()
    publish(registry, {"type": EventType.SUITE_START.value, "suite": suite})

    square, cocycle, well_defined, identity = _Tally(), _Tally(), _Tally(), _Tally()
    for p in range(0, bound + 1):
        for k in algebra.classes(p):
            x = H.class_cochain(p, k)
            bx = algebra.boundary(x)
            if bx is None:
                continue
            cocycle.observe(cx.beta(bx).is_zero(), [p, k])
            bbx = algebra.boundary(bx)
            square.observe(bbx is None or H.is_coboundary(bbx), [p, k])
            well_defined.observe(_well_defined(algebra, "B", [(p, k)]), [p, k])

    for p in range(0, bound + 1):
        for q in range(0, bound - p + 1):
            if p + q == 0:
                continue
            for a in algebra.classes(p):
                for b in algebra.classes(q):
                    x, y = H.class_cochain(p, a), H.class_cochain(q, b)
                    sp = _sign(f, p)
                    n = p + q - 1
                    rhs = algebra.combine(
                        n,
                        (sp, algebra.boundary(cx.cup(x, y))),
                        (-sp, algebra.cup(algebra.boundary(x), y)),
                        (-f.one, algebra.cup(x, algebra.boundary(y))),
                    )
                    identity.observe(H.is_coboundary(algebra.bracket(x, y) - rhs), [[p, a], [q, b]])

    for name, tally in (("B_cocycle", cocycle), ("B_squared_zero", square),
                        ("B_well_defined", well_defined), ("bv_identity", identity)):
        _record(report, registry, name, tally)
    publish(registry, {"type": EventType.SUITE_COMPLETE.value, "suite": suite, "passed": report.passed})
    return report


# =============================================================================
# Nakayama weights
# =============================================================================

@dataclass(frozen=True, eq=False)
class WeightDecomposition:
    """C^p(A, A)_λ = {φ : φ((A^{⊗p})_μ) ⊆ A_{λμ}} for p ≤ max_degree."""

    grading: NakayamaGrading
    weights: Tuple[Any, ...]
    components: Tuple[Dict[Any, Subspace], ...]
    # Inverse of the stacked component bases, per degree; rows of the
    # stack are grouped by weight in the order of `weights`.
    _splitters: Tuple[Any, ...] = ()

    @property
    def max_degree(self) -> int:
        return len(self.components) - 1

    def component(self, n: int, weight) -> Subspace:
        found = self.components[n].get(weight)
        if found is None:
            size = self.grading.eigenbasis.shape[1] ** (n + 1)
            return Subspace.zero(self.grading.field, size)
        return found

    def weight_one(self) -> List[Subspace]:
        one = self.grading.field.one
        return [self.component(n, one) for n in range(self.max_degree + 1)]

    def split(self, n: int, vector: Sequence) -> Dict[Any, np.ndarray]:
        """Homogeneous components of a cochain vector."""
        f = self.grading.field
        coords = f.apply(self._splitters[n].transpose(), np.asarray(vector, dtype=object))
        out, offset = {}, 0
        for lam in self.weights:
            space = self.components[n].get(lam)
            if space is None or space.dim == 0:
                continue
            part = coords[offset: offset + space.dim]
            out[lam] = space.combine(part)
            offset += space.dim
        return out

    def project_weight_one(self, n: int, vector: Sequence) -> np.ndarray:
        f = self.grading.field
        return self.split(n, vector).get(f.one, f.zeros(len(vector)))


def weight_decomposition(grading: NakayamaGrading, max_degree: int) -> WeightDecomposition:
    """Homogeneous cochains from the eigenbasis: v_J ↦ v_k has weight w_k / Π w_J."""
    f = grading.field
    P = grading.eigenbasis
    d = P.shape[0]
    P_inv = f.to_array(mat_inverse(f.matrix(P)))
    w = grading.weight_of_basis
    weights = set()
    components, splitters = [], []
    for n in range(0, max_degree + 1):
        rows = kron(f, *([P_inv.T] * n + [P]))
        groups: Dict[Any, List[int]] = {}
        for index in range(rows.shape[0]):
            digits = np.unravel_index(index, (d,) * (n + 1))
            lam = w[digits[-1]]
            for j in digits[:-1]:
                lam = lam / w[j]
            groups.setdefault(f(lam), []).append(index)
        spaces = {}
        for lam in sorted(groups, key=sort_key):
            spaces[lam] = Subspace.span(f, rows.shape[1], rows[groups[lam]])
            weights.add(lam)
        components.append(spaces)
    ordered = tuple(sorted(weights, key=sort_key))
    for spaces in components:
        stacked = np.vstack([spaces[lam].basis for lam in ordered if lam in spaces and spaces[lam].dim])
        splitters.append(mat_inverse(f.matrix(stacked)))
    return WeightDecomposition(grading, ordered, tuple(components), tuple(splitters))


def nakayama_weight_report(fs: FrobeniusStructure, bound: int,
                           registry: Optional[EventRegistry] = None) -> SuiteReport:
    """Weight splitting of C^•(A, A) under σ and BV on the weight-1 part.

    Raises:
        NotDiagonalizable: If σ does not split over the ground field
    """
    suite = "nakayama"
    A, f = fs.algebra, fs.field
    grading = nakayama_grading(fs)
    operad = EndomorphismOperad(A)
    cs = cyclic_structure(frobenius_contraaction(fs, algebra_bimodule(A)), operad)
    weights = weight_decomposition(grading, bound + 1)
    report = SuiteReport(suite, A.label)
    report.dimensions["weights"] = [f.serialize(lam) for lam in weights.weights]
    publish(registry, {"type": EventType.SUITE_START.value, "suite": suite})

    splitting = _Tally()
    for n in range(0, bound + 1):
        total = sum(weights.component(n, lam).dim for lam in weights.weights)
        splitting.observe(total == operad.cochain_dim(n), n)
    _record(report, registry, "weight_splitting", splitting)

    preserve, homotopy, tau_stable, cup_weight = _Tally(), _Tally(), _Tally(), _Tally()
    for n in range(0, bound + 1):
        beta = operad.differential(n).matrix
        t = cs.cyclic_operator(n).matrix
        lhs, _ = cs.homotopy_residual(n)
        for lam in weights.weights:
            source, target = weights.component(n, lam), weights.component(n + 1, lam)
            scale = f.one - f.inverse(lam)
            for k, row in enumerate(source.basis):
                preserve.observe(target.contains(f.apply(beta, row)), [n, f.serialize(lam), k])
                homotopy.observe(bool(np.all(f.apply(lhs, row) == row * scale)), [n, f.serialize(lam), k])
                image = f.apply(t, row)
                tau_stable.observe(source.contains(image), [n, f.serialize(lam), k])
    _record(report, registry, "beta_preserves_weight", preserve)
    _record(report, registry, "weighted_homotopy", homotopy)
    _record(report, registry, "tau_preserves_weight", tau_stable)

    one_power = _Tally()
    one_spaces = weights.weight_one()
    for n in range(0, bound + 1):
        power = cs.tau_power(n)
        for k, row in enumerate(one_spaces[n].basis):
            one_power.observe(bool(np.all(f.apply(power, row) == row)), [n, k])
    _record(report, registry, "tau_power_identity_on_weight_one", one_power)

    cup_bound = min(bound, NAKAYAMA_CUP_DEGREE)
    for p in range(0, cup_bound + 1):
        for q in range(0, cup_bound - p + 1):
            for lam in weights.weights:
                for mu in weights.weights:
                    target = weights.component(p + q, lam * mu)
                    for row in weights.component(p, lam).basis:
                        for col in weights.component(q, mu).basis:
                            product = operad.cup(operad.from_vector(p, row), operad.from_vector(q, col))
                            cup_weight.observe(target.contains(product.vector()), [p, q, f.serialize(lam), f.serialize(mu)])
    _record(report, registry, "cup_multiplies_weights", cup_weight)
    if cup_bound < bound:
        report.add_finding(f"cup_multiplies_weights: checked through total degree {cup_bound}, not {bound}")
        publish(registry, {"finding": report.findings[-1], "suite": suite})

    full = cohomology(operad, bound)
    vanishing = _Tally()
    for lam in weights.weights:
        if lam == f.one:
            continue
        part = cohomology(operad, bound, [weights.component(n, lam) for n in range(bound + 1)])
        report.dimensions[f"H(C_{f.serialize(lam)})"] = part.dims()
        vanishing.observe(all(x == 0 for x in part.dims()), f.serialize(lam))
    _record(report, registry, "nontrivial_weights_acyclic", vanishing)

    weight_one = cohomology(operad, bound, one_spaces[: bound + 1], label=f"C_1({A.label})")
    report.dimensions["H(A,A)"] = full.dims()
    report.dimensions["H(C_1)"] = weight_one.dims()
    match = _Tally()
    match.observe(full.dims() == weight_one.dims(), {"full": full.dims(), "weight_one": weight_one.dims()})
    _record(report, registry, "weight_one_quasi_isomorphic", match)

    twisted = twisted_coefficient_report(fs, bound, weight_one.dims(), registry)
    report.extend(twisted, prefix="twisted.")
    report.extend(bv_report(ClassAlgebra(weight_one, cs), bound, registry), prefix="weight_one.")
    publish(registry, {"type": EventType.SUITE_COMPLETE.value, "suite": suite, "passed": report.passed})
    return report
