"""Contraactions, the cocyclic operator τ and the Connes boundary B.

This module provides:
- Contraaction: γ: Hom_k(A, M) → M with its contramodule axiom suite
- frobenius_contraaction: γ(f) = Σ_i ε(f(e_i)) e^i on _σA (or on A)
- symmetric_contraaction_crosscheck: γ against g ↦ g(− ⊗ 1_A) on symmetric algebras
- stability_defect: D(m) = γ(a ↦ a·m)
- stability_report: D = σ on A and D = id on _σA
- CyclicStructure: Cached τ, its inverse, the extra codegeneracy and B per degree
- tau / cyclic_operator / connes_B: Operator entry points
- cyclic_operad_report / cyclic_report / twisted_coefficient_report: Suites

`tau` is the literal operator f ↦ {(a_1..a_n) ↦ γ(a_1 ▹ f(a_2..a_n, −))}.
Its inverse `cyclic_operator` satisfies the cyclic operad identities in the
left-to-right slot order of module hochschild and is the τ every suite uses.
"""
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .algcore import AlgebraPresentation, FrobeniusStructure, is_symmetric
from .errors import AxiomViolation, CoefficientNotAlgebra, DimensionMismatch, IndexOutOfRange, NotSymmetric
from .events.registry import EventRegistry, EventType, publish, publish_check
from .exactfield import (
    FieldSpec,
    Matrix,
    first_difference,
    kron,
    mat_inverse,
    mat_pow,
    mat_scale,
    rank,
)
from .hochschild import (
    Cochain,
    CochainOperad,
    CoefficientModule,
    ComplexOperator,
    HochschildComplex,
    SparseCochain,
    algebra_bimodule,
    twisted_bimodule,
)
from .results import SuiteReport

PLAIN_ACTION = "plain"
MODULE_ACTION = "module"


# =============================================================================
# Contraactions
# =============================================================================

@dataclass(frozen=True, eq=False)
class Contraaction:
    """Right A^e-contraaction γ on a coefficient module.

    gamma has shape (dim_m, d·dim_m); column a·dim_m + c is γ of the map
    sending b_a to the c-th basis vector of M and the other basis elements to 0.
    """

    algebra: AlgebraPresentation
    coefficient: CoefficientModule
    gamma: np.ndarray
    label: str = ""

    def __post_init__(self):
        d, m = self.algebra.dim, self.coefficient.dim_m
        if self.gamma.shape != (m, d * m):
            raise DimensionMismatch(f"γ must have shape {(m, d * m)}, got {self.gamma.shape}")

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    def apply(self, f: Sequence) -> np.ndarray:
        """γ of a map A → M given as its flattened (a, c) coordinate vector."""
        return self.gamma.dot(np.asarray(f, dtype=object).reshape(-1))

    @cached_property
    def gamma_tensor(self) -> np.ndarray:
        m = self.coefficient.dim_m
        return self.gamma.reshape(m, self.algebra.dim, m)

    def cyclic_defect(self) -> np.ndarray:
        """Operator whose triviality makes the cocyclic module cyclic."""
        return stability_defect(self, MODULE_ACTION)

    @cached_property
    def stable(self) -> bool:
        d = self.cyclic_defect()
        return bool(np.all(d == self.field.identity(d.shape[0])))

    def check_axioms(self) -> SuiteReport:
        """Right linearity, contraassociativity and counitality of γ."""
        report = SuiteReport("contramodule", self.label or self.coefficient.label)
        f, A, M = self.field, self.algebra, self.coefficient
        d, m = A.dim, M.dim_m
        G = self.gamma
        consts = A.structure_constants

        bad = None
        for a in range(d):
            # (P_a f)(x) = f(a x)
            pa = f.zeros((d * m, d * m))
            for x in range(d):
                for y in range(d):
                    v = consts[a, x, y]
                    if v != 0:
                        for c in range(m):
                            pa[x * m + c, y * m + c] = v
            if not np.all(G.dot(pa) == M.right_action[a].dot(G)):
                bad = a
                break
        report.record("right_linearity", bad is None, witness=bad, cases=d)

        inner = kron(f, f.identity(d), G)
        unit_insert = f.zeros((d * m, d * d * m))
        for x in range(d):
            for y in range(d):
                if A.unit[y] != 0:
                    for c in range(m):
                        unit_insert[x * m + c, (x * d + y) * m + c] = A.unit[y]
        lhs, rhs = G.dot(inner), G.dot(unit_insert)
        witness = _first_column_mismatch(lhs, rhs)
        report.record("contraassociativity", witness is None, witness=witness, cases=d * d * m)

        bad = None
        for k in range(m):
            # a ↦ m_k · a
            g = M.right_action[:, :, k].reshape(-1)
            if not np.all(G.dot(g) == f.unit_vector(m, k)):
                bad = k
                break
        report.record("counitality", bad is None, witness=bad, cases=m)
        return report

    def literal_tau_entries(self, cx: HochschildComplex, n: int) -> Iterator[Tuple[int, int, Any]]:
        """Entries of τ on C^n: target (a_1, .., a_n, c), source (a_2, .., a_n, x, c')."""
        d, m = cx.d, cx.m
        # W[a1, c, x, c'] = Σ_{c''} γ[c, (x, c'')] L[a1, c'', c']
        weights = np.tensordot(self.gamma_tensor, self.coefficient.left_action, axes=([2], [1]))
        weights = weights.transpose(2, 0, 1, 3)
        if n == 0:
            for c in range(m):
                for c2 in range(m):
                    total = cx.field.zero
                    for x in range(d):
                        total = total + weights[x, c, x, c2]
                    if total != 0:
                        yield c, c2, total
            return
        for a1 in range(d):
            for rest in product(range(d), repeat=n - 1):
                for c in range(m):
                    for x in range(d):
                        for c2 in range(m):
                            v = weights[a1, c, x, c2]
                            if v != 0:
                                yield cx.flat_index((a1,) + rest, c), cx.flat_index(rest + (x,), c2), v

    def power_prediction(self, cx: HochschildComplex, n: int) -> Optional[Matrix]:
        """Predicted τ^{n+1} on C^n: f ↦ D⁻¹ ∘ f ∘ D^{⊗n} for the module defect D."""
        if self.coefficient.dim_m != self.algebra.dim:
            return None
        f = self.field
        defect = stability_defect(self, MODULE_ACTION)
        inverse = f.to_array(mat_inverse(f.matrix(defect)))
        return f.matrix(kron(f, *([defect.T] * n + [inverse]))) if n else f.matrix(inverse)


def _first_column_mismatch(lhs: np.ndarray, rhs: np.ndarray) -> Optional[int]:
    for j in range(lhs.shape[1]):
        if not np.all(lhs[:, j] == rhs[:, j]):
            return j
    return None


def frobenius_contraaction(fs: FrobeniusStructure, coefficient: Optional[CoefficientModule] = None) -> Contraaction:
    """γ(f) = Σ_i ε(f(e_i)) e^i.

    Args:
        fs: Frobenius structure
        coefficient: _σA by default; A itself for the operad suites

    Raises:
        AxiomViolation: If a contramodule axiom fails (internal guard)
    """
    A, f = fs.algebra, fs.field
    if coefficient is None:
        coefficient = twisted_bimodule(A, fs.nakayama)
    d = A.dim
    if coefficient.dim_m != d:
        raise DimensionMismatch("The Frobenius contraaction lives on a module of dimension dim A")
    gamma = f.zeros((d, d * d))
    for i in range(d):
        eup = fs.eup(i)
        for c in range(d):
            if fs.functional[c] != 0:
                gamma[:, i * d + c] = eup * fs.functional[c]
    c = Contraaction(A, coefficient, gamma, f"frobenius on {coefficient.label}")
    report = c.check_axioms()
    if not report.passed:
        failure = report.first_failure()
        raise AxiomViolation(
            f"Frobenius contraaction fails {failure.name}",
            {"check": failure.name, "witness": failure.witness},
        )
    return c


def symmetric_contraaction_crosscheck(fs: FrobeniusStructure) -> SuiteReport:
    """Compare γ with g ↦ g(− ⊗ 1_A) transported along a ↦ ε(a ·).

    For every basis map f: A → A, c1 = γ(f) and c2 is the element with
    ε(c2 x) = ε(f(x)) for all x.

    Raises:
        NotSymmetric: If ε(ab) ≠ ε(ba) for some a, b
    """
    if not is_symmetric(fs):
        raise NotSymmetric(f"{fs.algebra.label} is not symmetric for the given functional")
    A, f = fs.algebra, fs.field
    d = A.dim
    c = frobenius_contraaction(fs, algebra_bimodule(A))
    gram_inv = mat_inverse(f.matrix(fs.gram.T))
    report = SuiteReport("symmetric_crosscheck", A.label)
    witness = None
    for k in range(d * d):
        g = f.unit_vector(d * d, k)
        c1 = c.apply(g)
        values = g.reshape(d, d).dot(fs.functional)
        c2 = f.apply(gram_inv, values)
        if not np.all(c1 == c2):
            witness = [k // d, k % d]
            break
    report.record("gamma_matches_unit_insertion", witness is None, witness=witness, cases=d * d)
    return report


def stability_defect(c: Contraaction, action: str = PLAIN_ACTION) -> np.ndarray:
    """D(b_k) = γ(a ↦ a·b_k).

    `plain` multiplies in A and needs dim M = dim A; `module` uses the
    coefficient's left action.
    """
    d, m = c.algebra.dim, c.coefficient.dim_m
    if action == PLAIN_ACTION:
        if m != d:
            raise DimensionMismatch("The plain stability defect needs M = A as a vector space")
        source = c.algebra.structure_constants  # [a, k, c]
    elif action == MODULE_ACTION:
        source = c.coefficient.left_action.transpose(0, 2, 1)  # [a, k, c]
    else:
        raise ValueError(f"Unknown action '{action}'")
    out = c.field.zeros((m, m))
    for k in range(m):
        out[:, k] = c.apply(source[:, k, :])
    return out


def stability_report(fs: FrobeniusStructure, registry: Optional[EventRegistry] = None) -> SuiteReport:
    """Contramodule axioms of both Frobenius contraactions and their defects.

    On A the plain defect is σ itself; on _σA the module defect is the identity.
    """
    suite = "stability"
    A, f = fs.algebra, fs.field
    report = SuiteReport(suite, A.label)
    on_algebra = frobenius_contraaction(fs, algebra_bimodule(A))
    on_twisted = frobenius_contraaction(fs)
    report.extend(on_algebra.check_axioms(), prefix="A.")
    report.extend(on_twisted.check_axioms(), prefix="sigmaA.")

    defect = stability_defect(on_algebra, PLAIN_ACTION)
    mismatch = _first_column_mismatch(defect, fs.nakayama)
    publish_check(registry, suite, report.record("defect_equals_nakayama", mismatch is None, witness=mismatch, cases=A.dim))
    twisted = on_twisted.cyclic_defect()
    mismatch = _first_column_mismatch(twisted, f.identity(A.dim))
    publish_check(registry, suite, report.record("twisted_defect_trivial", mismatch is None, witness=mismatch, cases=A.dim))
    publish_check(registry, suite, report.record("stable", on_algebra.stable, informational=True))
    return report


# =============================================================================
# Cyclic structure
# =============================================================================

class CyclicStructure:
    """τ, its inverse, σ_ex and B on a Hochschild complex carrying a contraaction."""

    def __init__(self, complex: HochschildComplex, contraaction: Contraaction):
        if complex.module.dim_m != contraaction.coefficient.dim_m or complex.d != contraaction.algebra.dim:
            raise DimensionMismatch("Contraaction and complex disagree on dimensions")
        self.complex = complex
        self.contraaction = contraaction
        self.field = complex.field
        self._sparse_columns: Dict[int, Dict[Tuple[int, ...], SparseCochain]] = {}

    @property
    def label(self) -> str:
        return self.complex.label

    def tau(self, n: int) -> ComplexOperator:
        cx = self.complex
        key = ("tau", n)
        cached = cx.cached_operator(key)
        if cached is not None:
            return cached
        entries: Dict[Tuple[int, int], Any] = {}
        for r, col, v in self.contraaction.literal_tau_entries(cx, n):
            entries[(r, col)] = entries.get((r, col), self.field.zero) + v
        size = cx.cochain_dim(n)
        return cx.cache_operator(key, ComplexOperator(n, n, self.field.matrix_from_entries(size, size, entries), "tau"))

    def cyclic_operator(self, n: int) -> ComplexOperator:
        cx = self.complex
        key = ("cyclic", n)
        cached = cx.cached_operator(key)
        if cached is not None:
            return cached
        try:
            inverse = mat_inverse(self.tau(n).matrix)
        except ZeroDivisionError as e:
            raise AxiomViolation(f"τ is not invertible on C^{n}", {"degree": n}) from e
        return cx.cache_operator(key, ComplexOperator(n, n, inverse, "t"))

    def extra_codegeneracy(self, n: int) -> ComplexOperator:
        """σ_ex = σ_{n−1} ∘ τ : C^n → C^{n−1}."""
        cx = self.complex
        key = ("extra_codegeneracy", n)
        cached = cx.cached_operator(key)
        if cached is not None:
            return cached
        matrix = cx.codegeneracy_operator(n - 1, n).matrix * self.cyclic_operator(n).matrix
        return cx.cache_operator(key, ComplexOperator(n, n - 1, matrix, "s_ex"))

    def _lambda(self, n: int) -> Matrix:
        t = self.cyclic_operator(n).matrix
        return t if n % 2 == 0 else mat_scale(t, -self.field.one, self.field)

    def connes_B(self, n: int) -> ComplexOperator:
        """B = N ∘ σ_ex ∘ (id − λ) : C^n → C^{n−1}, λ = (−1)^n τ, N = Σ_{j<n} λ^j."""
        if n < 1:
            raise IndexOutOfRange(f"B is defined from degree 1, got {n}")
        cx = self.complex
        key = ("B", n)
        cached = cx.cached_operator(key)
        if cached is not None:
            return cached
        f = self.field
        size_n, size_low = cx.cochain_dim(n), cx.cochain_dim(n - 1)
        lam_low = self._lambda(n - 1)
        norm = f.zero_matrix(size_low, size_low)
        power = f.identity_matrix(size_low)
        for _ in range(n):
            norm = norm + power
            power = power * lam_low
        matrix = norm * self.extra_codegeneracy(n).matrix * (f.identity_matrix(size_n) - self._lambda(n))
        return cx.cache_operator(key, ComplexOperator(n, n - 1, matrix, "B"))

    def tau_power(self, n: int) -> Matrix:
        return mat_pow(self.cyclic_operator(n).matrix, n + 1, self.field)

    def matches_prediction(self, n: int) -> Optional[bool]:
        """τ^{n+1} against the contraaction's closed form; None when it has none."""
        predicted = self.contraaction.power_prediction(self.complex, n)
        if predicted is None:
            return None
        return first_difference(self.tau_power(n), predicted) is None

    def check_power_prediction(self, report: SuiteReport, max_degree: int,
                               registry: Optional[EventRegistry] = None) -> None:
        """Record tau_power_prediction over the degrees that have a closed form."""
        bad, compared, unchecked = None, 0, []
        for n in range(0, max_degree + 1):
            outcome = self.matches_prediction(n)
            if outcome is None:
                unchecked.append(n)
                continue
            compared += 1
            if bad is None and not outcome:
                bad = n
        if compared:
            publish_check(
                registry, report.suite,
                report.record("tau_power_prediction", bad is None, witness=bad, cases=compared),
            )
        if unchecked:
            report.add_finding(f"tau_power_prediction: no closed form in degrees {unchecked}")
            publish(registry, {"finding": report.findings[-1], "suite": report.suite})

    def homotopy_residual(self, n: int) -> Tuple[Matrix, Matrix]:
        """(β_{n−1}B_n + B_{n+1}β_n, id − τ^{n+1}) on C^n."""
        cx, f = self.complex, self.field
        size = cx.cochain_dim(n)
        lhs = self.connes_B(n + 1).matrix * cx.differential(n).matrix
        if n >= 1:
            lhs = lhs + cx.differential(n - 1).matrix * self.connes_B(n).matrix
        return lhs, f.identity_matrix(size) - self.tau_power(n)

    def apply_cyclic(self, n: int, f: Cochain) -> Cochain:
        return self.complex.apply(self.cyclic_operator(n), f)

    def sparse_apply(self, n: int, f: SparseCochain) -> SparseCochain:
        """τ on a sparse cochain, through cached sparse columns."""
        columns = self._columns(n)
        out: SparseCochain = {}
        for key, value in f.items():
            for tkey, tvalue in columns[key].items():
                acc = out.get(tkey, self.field.zero) + value * tvalue
                if acc == 0:
                    out.pop(tkey, None)
                else:
                    out[tkey] = acc
        return out

    def _columns(self, n: int) -> Dict[Tuple[int, ...], SparseCochain]:
        if n not in self._sparse_columns:
            cx = self.complex
            dense = self.field.to_array(self.cyclic_operator(n).matrix)
            columns: Dict[Tuple[int, ...], SparseCochain] = {}
            for j in range(dense.shape[1]):
                columns[cx.key_of(n, j)] = {
                    cx.key_of(n, int(i)): dense[i, j] for i in range(dense.shape[0]) if dense[i, j] != 0
                }
            self._sparse_columns[n] = columns
        return self._sparse_columns[n]


def cyclic_structure(c: Contraaction, complex: Optional[HochschildComplex] = None) -> CyclicStructure:
    return CyclicStructure(complex or HochschildComplex(c.algebra, c.coefficient), c)


def tau(c: Contraaction, n: int, complex: Optional[HochschildComplex] = None) -> ComplexOperator:
    return cyclic_structure(c, complex).tau(n)


def cyclic_operator(c: Contraaction, n: int, complex: Optional[HochschildComplex] = None) -> ComplexOperator:
    return cyclic_structure(c, complex).cyclic_operator(n)


def connes_B(c: Contraaction, n: int, complex: Optional[HochschildComplex] = None) -> ComplexOperator:
    return cyclic_structure(c, complex).connes_B(n)


# =============================================================================
# Suites
# =============================================================================

def _sparse_equal(a: SparseCochain, b: SparseCochain) -> bool:
    return a == b


def cyclic_operad_report(cs: CyclicStructure, max_p: int, max_q: int,
                         registry: Optional[EventRegistry] = None) -> SuiteReport:
    """Cyclic operad identities on basis cochains.

    τ(φ ∘_1 ψ) = τψ ∘_q τφ, τ(φ ∘_i ψ) = τφ ∘_{i−1} ψ, τ𝟙 = 𝟙, τμ = μ and
    τ^{n+1} against the prediction D⁻¹ ∘ f ∘ D^{⊗n}. The instance is cyclic
    iff the stability defect D is the identity.

    Raises:
        CoefficientNotAlgebra: If the complex is not a cochain operad
    """
    operad = cs.complex
    if not isinstance(operad, CochainOperad):
        raise CoefficientNotAlgebra("Cyclic operad identities need the coefficient A itself")
    suite = "cyclic_operad"
    report = SuiteReport(suite, operad.label)
    publish(registry, {"type": EventType.SUITE_START.value, "suite": suite})

    basis = {
        n: [operad.basis_sparse(n, k) for k in range(operad.cochain_dim(n))]
        for n in range(max(max_p, max_q) + 1)
    }
    first = [0, None]
    inner = [0, None]
    for p in range(1, max_p + 1):
        for q in range(0, max_q + 1):
            for ip, phi in enumerate(basis[p]):
                tau_phi = cs.sparse_apply(p, phi)
                for iq, psi in enumerate(basis[q]):
                    if q >= 1:
                        first[0] += 1
                        lhs = cs.sparse_apply(p + q - 1, operad.sparse_circ(phi, p, 1, psi, q))
                        rhs = operad.sparse_circ(cs.sparse_apply(q, psi), q, q, tau_phi, p)
                        if first[1] is None and not _sparse_equal(lhs, rhs):
                            first[1] = [p, ip, q, iq]
                    for i in range(2, p + 1):
                        inner[0] += 1
                        lhs = cs.sparse_apply(p + q - 1, operad.sparse_circ(phi, p, i, psi, q))
                        rhs = operad.sparse_circ(tau_phi, p, i - 1, psi, q)
                        if inner[1] is None and not _sparse_equal(lhs, rhs):
                            inner[1] = [p, ip, i, q, iq]
    for name, (cases, witness) in (("tau_first_slot", first), ("tau_inner_slot", inner)):
        publish_check(registry, suite, report.record(name, witness is None, witness=witness, cases=cases))

    one, mu = operad.identity(), operad.multiplication()
    publish_check(registry, suite, report.record("tau_identity", cs.apply_cyclic(1, one) == one, cases=1))
    publish_check(registry, suite, report.record("tau_multiplication", cs.apply_cyclic(2, mu) == mu, cases=1))

    cs.check_power_prediction(report, max_p + max_q - 1, registry)

    cyclic = cs.contraaction.stable
    publish_check(
        registry, suite,
        report.record("cyclic", cyclic, detail="stability defect is the identity" if cyclic else "D ≠ id", informational=True),
    )
    publish(registry, {"type": EventType.SUITE_COMPLETE.value, "suite": suite, "passed": report.passed})
    return report


def cyclic_report(cs: CyclicStructure, max_degree: int, registry: Optional[EventRegistry] = None) -> SuiteReport:
    """Homotopy βB + Bβ = id − τ^{n+1}, τ against its prediction, and B² = 0 when stable."""
    suite = "cyclic"
    cx, f = cs.complex, cs.field
    report = SuiteReport(suite, cs.label)
    publish(registry, {"type": EventType.SUITE_START.value, "suite": suite})

    ranks: List[int] = []
    bad_homotopy = None
    for n in range(0, max_degree + 1):
        size = cx.cochain_dim(n)
        ranks.append(rank(cs.cyclic_operator(n).matrix - f.identity_matrix(size), f))
        lhs, rhs = cs.homotopy_residual(n)
        if bad_homotopy is None:
            diff = first_difference(lhs, rhs)
            if diff is not None:
                bad_homotopy = [n, diff[0], diff[1]]
    report.dimensions["rank(tau-id)"] = ranks
    cs.check_power_prediction(report, max_degree, registry)
    publish_check(registry, suite, report.record("connes_homotopy", bad_homotopy is None, witness=bad_homotopy, cases=max_degree + 1))

    stable = all(
        first_difference(cs.tau_power(n), f.identity_matrix(cx.cochain_dim(n))) is None
        for n in range(0, max_degree + 1)
    )
    publish_check(registry, suite, report.record("cyclic", stable, informational=True))
    if stable:
        bad_square = bad_anti = None
        for n in range(1, max_degree + 1):
            if n >= 2 and bad_square is None:
                square = cs.connes_B(n - 1).matrix * cs.connes_B(n).matrix
                if first_difference(square, f.zero_matrix(square.nrows(), square.ncols())) is not None:
                    bad_square = n
            lhs, _ = cs.homotopy_residual(n)
            if bad_anti is None and first_difference(lhs, f.zero_matrix(lhs.nrows(), lhs.ncols())) is not None:
                bad_anti = n
        publish_check(registry, suite, report.record("B_squared_zero", bad_square is None, witness=bad_square, cases=max_degree))
        publish_check(registry, suite, report.record("B_anticommutes_beta", bad_anti is None, witness=bad_anti, cases=max_degree))
    publish(registry, {"type": EventType.SUITE_COMPLETE.value, "suite": suite, "passed": report.passed})
    return report


def twisted_coefficient_report(fs: FrobeniusStructure, max_degree: int,
                               weight_one_dims: Optional[Sequence[int]] = None,
                               registry: Optional[EventRegistry] = None) -> SuiteReport:
    """τ^{n+1} = id on C^•(A, _σA), with dim H(A, _σA) as a finding."""
    A, f = fs.algebra, fs.field
    c = frobenius_contraaction(fs)
    cs = cyclic_structure(c)
    cx = cs.complex
    report = SuiteReport("twisted_coefficient", cx.label)
    bad = None
    for n in range(0, max_degree + 1):
        if first_difference(cs.tau_power(n), f.identity_matrix(cx.cochain_dim(n))) is not None:
            bad = n
            break
    publish_check(registry, report.suite, report.record("tau_power_identity", bad is None, witness=bad, cases=max_degree + 1))

    dims = []
    previous_rank = 0
    for n in range(0, max_degree + 1):
        beta_rank = rank(cx.differential(n).matrix, f)
        dims.append(cx.cochain_dim(n) - beta_rank - previous_rank)
        previous_rank = beta_rank
    report.dimensions["H(A, sigma A)"] = dims
    if weight_one_dims is not None:
        report.dimensions["H(C_1)"] = list(weight_one_dims)
        same = list(weight_one_dims) == dims
        report.add_finding(
            f"dim H^n(A, _σA) = {dims} {'matches' if same else 'differs from'} dim H^n(C_1) = {list(weight_one_dims)}"
        )
        publish(registry, {"finding": report.findings[-1], "suite": report.suite})
    return report
