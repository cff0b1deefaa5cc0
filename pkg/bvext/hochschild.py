"""Hochschild cochains and the endomorphism operad.

This module provides:
- CoefficientModule: Bimodule coefficients (A, _σA, k via a counit, zero)
- Cochain / ComplexOperator: Dense cochain tensors and materialized operators
- HochschildComplex: Cofaces, codegeneracies, the differential β and cup
- CochainOperad / EndomorphismOperad: Insertions ∘_i, 𝟙, μ, e, the bracket
- Sparse evaluation of insertions on basis cochains and a brute-force oracle
- operad_axiom_report / composition_oracle_report: Exhaustive operad suites

Cofaces follow the classical left-to-right order:
d_0 f(a_1..a_{n+1}) = a_1 ▹ f(a_2..), d_i multiplies a_i a_{i+1},
d_{n+1} f = f(a_1..a_n) ◃ a_{n+1}. Insertion slot i of f ∘_i g counts from
the left as well.
"""
from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .algcore import AlgebraPresentation
from .constants import MAX_COCHAIN_DIM
from .errors import BudgetExceeded, CoefficientNotAlgebra, DimensionMismatch, IndexOutOfRange
from .events.registry import EventRegistry, EventType, publish, publish_check
from .exactfield import FieldSpec, Matrix
from .results import SuiteReport

SparseCochain = Dict[Tuple[int, ...], Any]


# =============================================================================
# Coefficients
# =============================================================================

@dataclass(frozen=True, eq=False)
class CoefficientModule:
    """Bimodule M over A with left_action[a] @ m = b_a ▹ m and right_action[a] @ m = m ◃ b_a."""

    label: str
    field: FieldSpec
    algebra_dim: int
    dim_m: int
    left_action: np.ndarray
    right_action: np.ndarray
    product: Optional[np.ndarray] = None
    unit: Optional[np.ndarray] = None

    def __post_init__(self):
        shape = (self.algebra_dim, self.dim_m, self.dim_m)
        if self.left_action.shape != shape or self.right_action.shape != shape:
            raise DimensionMismatch(f"Module actions must have shape {shape}")

    def check_bimodule(self, algebra: AlgebraPresentation) -> SuiteReport:
        """Unital left and right actions that commute."""
        report = SuiteReport("bimodule", self.label)
        f, n, m = self.field, algebra.dim, self.dim_m
        one = algebra.unit
        eye = f.identity(m)
        left_one = np.tensordot(one, self.left_action, axes=([0], [0]))
        right_one = np.tensordot(one, self.right_action, axes=([0], [0]))
        report.record("unital", bool(np.all(left_one == eye) and np.all(right_one == eye)), cases=2)

        bad_left = bad_right = bad_commute = None
        c = algebra.structure_constants
        for a in range(n):
            for b in range(n):
                ab_left = np.tensordot(c[a, b], self.left_action, axes=([0], [0]))
                ab_right = np.tensordot(c[a, b], self.right_action, axes=([0], [0]))
                if bad_left is None and not np.all(self.left_action[a].dot(self.left_action[b]) == ab_left):
                    bad_left = [a, b]
                if bad_right is None and not np.all(self.right_action[b].dot(self.right_action[a]) == ab_right):
                    bad_right = [a, b]
                if bad_commute is None and not np.all(
                    self.left_action[a].dot(self.right_action[b]) == self.right_action[b].dot(self.left_action[a])
                ):
                    bad_commute = [a, b]
        report.record("left_action", bad_left is None, witness=bad_left, cases=n * n)
        report.record("right_action", bad_right is None, witness=bad_right, cases=n * n)
        report.record("actions_commute", bad_commute is None, witness=bad_commute, cases=n * n)
        return report


def algebra_bimodule(algebra: AlgebraPresentation) -> CoefficientModule:
    """A over itself, with its own product."""
    return CoefficientModule(
        algebra.label, algebra.field, algebra.dim, algebra.dim,
        algebra.left_multiplication, algebra.right_multiplication,
        algebra.structure_constants, algebra.unit,
    )


def twisted_bimodule(algebra: AlgebraPresentation, sigma: np.ndarray) -> CoefficientModule:
    """_σA: a ▹ m ◃ b = σ(a) m b."""
    left = np.tensordot(sigma, algebra.left_multiplication, axes=([0], [0]))
    return CoefficientModule(
        f"_sigma {algebra.label}", algebra.field, algebra.dim, algebra.dim,
        left, algebra.right_multiplication, algebra.structure_constants, algebra.unit,
    )


def trivial_module(algebra: AlgebraPresentation, counit: Sequence, label: str = "k") -> CoefficientModule:
    """The ground field with both actions through a counit."""
    f = algebra.field
    action = np.asarray(counit, dtype=object).reshape(algebra.dim, 1, 1)
    return CoefficientModule(
        label, f, algebra.dim, 1, action, action.copy(),
        f.array([[[1]]]), f.array([1]),
    )


def zero_module(algebra: AlgebraPresentation) -> CoefficientModule:
    f = algebra.field
    empty = f.zeros((algebra.dim, 0, 0))
    return CoefficientModule("0", f, algebra.dim, 0, empty, empty.copy())


# =============================================================================
# Cochains and operators
# =============================================================================

@dataclass(frozen=True, eq=False)
class Cochain:
    """Element of C^n(A, M) = Hom(A^{⊗n}, M) as a tensor of shape (d,)*n + (m,)."""

    degree: int
    coefficients: np.ndarray

    def vector(self) -> np.ndarray:
        return self.coefficients.reshape(-1)

    def __add__(self, other: "Cochain") -> "Cochain":
        _same_degree(self, other)
        return Cochain(self.degree, self.coefficients + other.coefficients)

    def __sub__(self, other: "Cochain") -> "Cochain":
        _same_degree(self, other)
        return Cochain(self.degree, self.coefficients - other.coefficients)

    def scale(self, value) -> "Cochain":
        return Cochain(self.degree, self.coefficients * value)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return (
            self.degree == other.degree
            and self.coefficients.shape == other.coefficients.shape
            and bool(np.all(self.coefficients == other.coefficients))
        )

    __hash__ = None

    def is_zero(self) -> bool:
        return bool(np.all(self.coefficients == 0))

    def to_dict(self, field: FieldSpec) -> Dict[str, Any]:
        ser = np.frompyfunc(field.serialize, 1, 1)
        return {"degree": self.degree, "coeffs": ser(self.coefficients).tolist()}


def _same_degree(a: Cochain, b: Cochain) -> None:
    if a.degree != b.degree or a.coefficients.shape != b.coefficients.shape:
        raise DimensionMismatch(f"Cochains of degree {a.degree} and {b.degree} cannot be combined")


@dataclass(frozen=True, eq=False)
class ComplexOperator:
    """A linear operator between cochain spaces, as a flint matrix."""

    source_degree: int
    target_degree: int
    matrix: Matrix
    name: str = ""

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.matrix.nrows(), self.matrix.ncols())


def _sign(field: FieldSpec, k: int):
    return field.one if k % 2 == 0 else -field.one


class HochschildComplex:
    """C^•(A, M) with its cosimplicial structure and cup product."""

    def __init__(self, algebra: AlgebraPresentation, module: CoefficientModule,
                 max_cochain_dim: int = MAX_COCHAIN_DIM):
        if module.algebra_dim != algebra.dim:
            raise DimensionMismatch("Coefficient module is over an algebra of another dimension")
        self.algebra = algebra
        self.module = module
        self.field = algebra.field
        self.d = algebra.dim
        self.m = module.dim_m
        self.max_cochain_dim = max_cochain_dim
        self._operators: Dict[Tuple[Any, ...], ComplexOperator] = {}

    @property
    def label(self) -> str:
        return f"C({self.algebra.label}, {self.module.label})"

    # ------------------------------------------------------------------
    # Spaces
    # ------------------------------------------------------------------

    def cochain_dim(self, n: int) -> int:
        size = self.d ** n * self.m
        if size > self.max_cochain_dim:
            raise BudgetExceeded(
                f"dim C^{n} = {size} exceeds the cap {self.max_cochain_dim}",
                {"degree": n, "dim": size, "cap": self.max_cochain_dim},
            )
        return size

    def shape(self, n: int) -> Tuple[int, ...]:
        return (self.d,) * n + (self.m,)

    def zero(self, n: int) -> Cochain:
        return Cochain(n, self.field.zeros(self.shape(n)))

    def cochain(self, n: int, values: Any) -> Cochain:
        arr = np.asarray(values, dtype=object)
        if arr.shape != self.shape(n):
            arr = self.field.array(values).reshape(self.shape(n))
        return Cochain(n, arr)

    def from_vector(self, n: int, vector: Sequence) -> Cochain:
        vec = np.asarray(vector, dtype=object)
        if vec.shape != (self.cochain_dim(n),):
            raise DimensionMismatch(f"Vector of shape {vec.shape} for C^{n}")
        return Cochain(n, vec.reshape(self.shape(n)))

    def basis_cochain(self, n: int, index: int) -> Cochain:
        return self.from_vector(n, self.field.unit_vector(self.cochain_dim(n), index))

    def flat_index(self, args: Sequence[int], c: int) -> int:
        idx = 0
        for a in args:
            idx = idx * self.d + a
        return idx * self.m + c

    def key_of(self, n: int, index: int) -> Tuple[int, ...]:
        """Multi-index (a_1, ..., a_n, c) of a flat cochain coordinate."""
        return tuple(int(x) for x in np.unravel_index(index, self.shape(n)))

    def apply(self, op: ComplexOperator, f: Cochain) -> Cochain:
        if f.degree != op.source_degree:
            raise DimensionMismatch(f"Operator on C^{op.source_degree} applied to C^{f.degree}")
        return self.from_vector(op.target_degree, self.field.apply(op.matrix, f.vector()))

    # ------------------------------------------------------------------
    # Cofaces and codegeneracies, tensor path
    # ------------------------------------------------------------------

    def coface(self, i: int, f: Cochain) -> Cochain:
        """d_i f for 0 ≤ i ≤ n+1."""
        n = f.degree
        if not 0 <= i <= n + 1:
            raise IndexOutOfRange(f"Coface index {i} outside 0..{n + 1}")
        t = f.coefficients
        if i == 0:
            out = np.moveaxis(np.tensordot(self.module.left_action, t, axes=([2], [n])), 1, -1)
        elif i == n + 1:
            out = np.tensordot(t, self.module.right_action, axes=([n], [2]))
        else:
            merged = np.tensordot(t, self.algebra.structure_constants, axes=([i - 1], [2]))
            out = np.moveaxis(merged, [-2, -1], [i - 1, i])
        return Cochain(n + 1, np.ascontiguousarray(out))

    def codegeneracy(self, j: int, f: Cochain) -> Cochain:
        """σ_j f (a_1..a_{n-1}) = f(a_1..a_j, 1, a_{j+1}..a_{n-1})."""
        n = f.degree
        if not 0 <= j <= n - 1:
            raise IndexOutOfRange(f"Codegeneracy index {j} outside 0..{n - 1}")
        return Cochain(n - 1, np.tensordot(f.coefficients, self.algebra.unit, axes=([j], [0])))

    def beta(self, f: Cochain) -> Cochain:
        total = self.zero(f.degree + 1)
        for i in range(f.degree + 2):
            total = total + self.coface(i, f).scale(_sign(self.field, i))
        return total

    # ------------------------------------------------------------------
    # Materialized operators, index path
    # ------------------------------------------------------------------

    def _coface_entries(self, i: int, n: int) -> Iterator[Tuple[int, int, Any]]:
        d, m = self.d, self.m
        if i == 0:
            left = self.module.left_action
            for a1 in range(d):
                for rest in product(range(d), repeat=n):
                    for c in range(m):
                        for c2 in range(m):
                            v = left[a1, c, c2]
                            if v != 0:
                                yield self.flat_index((a1,) + rest, c), self.flat_index(rest, c2), v
        elif i == n + 1:
            right = self.module.right_action
            for rest in product(range(d), repeat=n):
                for a in range(d):
                    for c in range(m):
                        for c2 in range(m):
                            v = right[a, c, c2]
                            if v != 0:
                                yield self.flat_index(rest + (a,), c), self.flat_index(rest, c2), v
        else:
            consts = self.algebra.structure_constants
            for args in product(range(d), repeat=n + 1):
                head, pair, tail = args[: i - 1], args[i - 1: i + 1], args[i + 1:]
                for x in range(d):
                    v = consts[pair[0], pair[1], x]
                    if v == 0:
                        continue
                    for c in range(m):
                        yield self.flat_index(args, c), self.flat_index(head + (x,) + tail, c), v

    def _operator(self, key: Tuple[Any, ...], source: int, target: int,
                  entries: Iterator[Tuple[int, int, Any]], name: str) -> ComplexOperator:
        if key not in self._operators:
            acc: Dict[Tuple[int, int], Any] = {}
            for r, c, v in entries:
                acc[(r, c)] = acc.get((r, c), self.field.zero) + v
            matrix = self.field.matrix_from_entries(self.cochain_dim(target), self.cochain_dim(source), acc)
            self._operators[key] = ComplexOperator(source, target, matrix, name)
        return self._operators[key]

    def coface_operator(self, i: int, n: int) -> ComplexOperator:
        if not 0 <= i <= n + 1:
            raise IndexOutOfRange(f"Coface index {i} outside 0..{n + 1}")
        return self._operator(("coface", i, n), n, n + 1, self._coface_entries(i, n), f"d_{i}")

    def differential(self, n: int) -> ComplexOperator:
        """β = Σ_i (−1)^i d_i : C^n → C^{n+1}."""
        def entries():
            for i in range(n + 2):
                sign = _sign(self.field, i)
                for r, c, v in self._coface_entries(i, n):
                    yield r, c, v * sign
        return self._operator(("beta", n), n, n + 1, entries(), "beta")

    def codegeneracy_operator(self, j: int, n: int) -> ComplexOperator:
        if not 0 <= j <= n - 1:
            raise IndexOutOfRange(f"Codegeneracy index {j} outside 0..{n - 1}")

        def entries():
            unit = self.algebra.unit
            for args in product(range(self.d), repeat=n - 1):
                for x in range(self.d):
                    if unit[x] == 0:
                        continue
                    full = args[:j] + (x,) + args[j:]
                    for c in range(self.m):
                        yield self.flat_index(args, c), self.flat_index(full, c), unit[x]
        return self._operator(("codegeneracy", j, n), n, n - 1, entries(), f"s_{j}")

    def cache_operator(self, key: Tuple[Any, ...], op: ComplexOperator) -> ComplexOperator:
        """Store an operator built elsewhere (τ, B, ...) under a key."""
        self._operators.setdefault(key, op)
        return self._operators[key]

    def cached_operator(self, key: Tuple[Any, ...]) -> Optional[ComplexOperator]:
        return self._operators.get(key)

    # ------------------------------------------------------------------
    # Products
    # ------------------------------------------------------------------

    def cup(self, f: Cochain, g: Cochain) -> Cochain:
        """(f ⌣ g)(a_1..a_{p+q}) = f(a_1..a_p) · g(a_{p+1}..a_{p+q}).

        Raises:
            CoefficientNotAlgebra: If the coefficient module has no product
        """
        if self.module.product is None:
            raise CoefficientNotAlgebra(f"{self.module.label} carries no product")
        p = f.degree
        head = np.tensordot(f.coefficients, self.module.product, axes=([p], [0]))
        full = np.tensordot(head, g.coefficients, axes=([p], [g.degree]))
        return Cochain(p + g.degree, np.ascontiguousarray(np.moveaxis(full, p, -1)))

    def unit_cochain(self) -> Cochain:
        """The 0-cochain 1_M."""
        if self.module.unit is None:
            raise CoefficientNotAlgebra(f"{self.module.label} carries no unit")
        return Cochain(0, self.module.unit.copy())


# =============================================================================
# Operad structure
# =============================================================================

class CochainOperad(HochschildComplex):
    """Hochschild cochains with insertion compositions.

    f ∘_i g inserts lift(g), an A-valued cochain built from g, into slot i of f.
    Subclasses define lift, the identity 𝟙 ∈ O(1), μ ∈ O(2) and e ∈ O(0).
    """

    def __init__(self, algebra: AlgebraPresentation, module: CoefficientModule,
                 max_cochain_dim: int = MAX_COCHAIN_DIM):
        super().__init__(algebra, module, max_cochain_dim)
        self._basis_lifts: Dict[Tuple[int, ...], SparseCochain] = {}

    def lift(self, g: Cochain) -> np.ndarray:
        raise NotImplementedError

    def identity(self) -> Cochain:
        raise NotImplementedError

    def multiplication(self) -> Cochain:
        raise NotImplementedError

    def unit_element(self) -> Cochain:
        raise NotImplementedError

    def circ(self, f: Cochain, i: int, g: Cochain) -> Cochain:
        """f ∘_i g of degree p+q−1; zero when p = 0.

        Raises:
            IndexOutOfRange: If i ∉ 1..p for p ≥ 1, or p = q = 0
        """
        p, q = f.degree, g.degree
        if p == 0:
            if q == 0:
                raise IndexOutOfRange("Composition of two 0-cochains has degree −1")
            return self.zero(q - 1)
        if not 1 <= i <= p:
            raise IndexOutOfRange(f"Insertion slot {i} outside 1..{p}")
        lifted = self.lift(g)
        merged = np.tensordot(lifted, f.coefficients, axes=([q], [i - 1]))
        out = np.moveaxis(merged, list(range(q)), list(range(i - 1, i - 1 + q)))
        return Cochain(p + q - 1, np.ascontiguousarray(out))

    def pre_lie(self, f: Cochain, g: Cochain) -> Cochain:
        """f ∘̄ g = Σ_{i=1}^{p} (−1)^{(i−1)(q−1)} f ∘_i g."""
        p, q = f.degree, g.degree
        if p + q == 0:
            raise IndexOutOfRange("Pre-Lie product of two 0-cochains has degree −1")
        total = self.zero(p + q - 1)
        for i in range(1, p + 1):
            total = total + self.circ(f, i, g).scale(_sign(self.field, (i - 1) * (q - 1)))
        return total

    def bracket(self, f: Cochain, g: Cochain) -> Cochain:
        """{f, g} = f ∘̄ g − (−1)^{(p−1)(q−1)} g ∘̄ f."""
        p, q = f.degree, g.degree
        return self.pre_lie(f, g) - self.pre_lie(g, f).scale(_sign(self.field, (p - 1) * (q - 1)))

    # ------------------------------------------------------------------
    # Sparse evaluation on basis cochains
    # ------------------------------------------------------------------

    def to_sparse(self, f: Cochain) -> SparseCochain:
        out: SparseCochain = {}
        for index in np.flatnonzero((f.coefficients != 0).astype(bool).reshape(-1)):
            out[self.key_of(f.degree, int(index))] = f.coefficients.reshape(-1)[index]
        return out

    def from_sparse(self, n: int, f: SparseCochain) -> Cochain:
        out = self.zero(n)
        for key, value in f.items():
            out.coefficients[key] = value
        return out

    def basis_sparse(self, n: int, index: int) -> SparseCochain:
        return {self.key_of(n, index): self.field.one}

    def sparse_lift(self, g: SparseCochain, q: int) -> SparseCochain:
        """lift(g) as a sparse A-valued cochain, through cached basis lifts."""
        out: SparseCochain = {}
        for key, value in g.items():
            if key not in self._basis_lifts:
                basis = self.zero(q)
                basis.coefficients[key] = self.field.one
                lifted = Cochain(q, self.lift(basis))
                self._basis_lifts[key] = {
                    k: v for k, v in np.ndenumerate(lifted.coefficients) if v != 0
                }
            for lkey, lvalue in self._basis_lifts[key].items():
                acc = out.get(lkey, self.field.zero) + value * lvalue
                if acc == 0:
                    out.pop(lkey, None)
                else:
                    out[lkey] = acc
        return out

    def sparse_circ(self, f: SparseCochain, p: int, i: int, g: SparseCochain, q: int) -> SparseCochain:
        """f ∘_i g on sparse cochains; keys are (a_1, ..., a_n, c)."""
        if p == 0 or not f or not g:
            return {}
        lifted = self.sparse_lift(g, q)
        by_output: Dict[int, List[Tuple[Tuple[int, ...], Any]]] = {}
        for key, value in lifted.items():
            by_output.setdefault(key[-1], []).append((key[:-1], value))
        out: SparseCochain = {}
        for fkey, fvalue in f.items():
            matches = by_output.get(fkey[i - 1])
            if not matches:
                continue
            head, tail = fkey[: i - 1], fkey[i:]
            for gargs, gvalue in matches:
                key = head + gargs + tail
                acc = out.get(key, self.field.zero) + fvalue * gvalue
                if acc == 0:
                    out.pop(key, None)
                else:
                    out[key] = acc
        return out

    def brute_force_circ(self, f: Cochain, i: int, g: Cochain) -> Cochain:
        """Oracle: evaluate f(a_1, .., lift(g)(a_i..), ..) on every basis multi-index."""
        p, q = f.degree, g.degree
        if p == 0:
            return self.zero(q - 1)
        lifted = self.lift(g)
        out = self.zero(p + q - 1)
        for args in product(range(self.d), repeat=p + q - 1):
            inner = lifted[args[i - 1: i - 1 + q]]
            for c in range(self.m):
                total = self.field.zero
                for x in range(self.d):
                    if inner[x] != 0:
                        total = total + inner[x] * f.coefficients[args[: i - 1] + (x,) + args[i - 1 + q:] + (c,)]
                out.coefficients[args + (c,)] = total
        return out


class EndomorphismOperad(CochainOperad):
    """C^•(A, A): Gerstenhaber insertion, 𝟙 = id_A, μ = multiplication, e = 1_A."""

    def __init__(self, algebra: AlgebraPresentation, max_cochain_dim: int = MAX_COCHAIN_DIM):
        super().__init__(algebra, algebra_bimodule(algebra), max_cochain_dim)

    def lift(self, g: Cochain) -> np.ndarray:
        return g.coefficients

    def sparse_lift(self, g: SparseCochain, q: int) -> SparseCochain:
        return g

    def identity(self) -> Cochain:
        return Cochain(1, self.field.identity(self.d).T.copy())

    def multiplication(self) -> Cochain:
        return Cochain(2, self.algebra.structure_constants.copy())

    def unit_element(self) -> Cochain:
        return Cochain(0, self.algebra.unit.copy())


def _sparse_equal(a: SparseCochain, b: SparseCochain) -> bool:
    return {k: v for k, v in a.items() if v != 0} == {k: v for k, v in b.items() if v != 0}


def _basis_range(operad: CochainOperad, n: int) -> range:
    return range(operad.cochain_dim(n))


def operad_axiom_report(operad: CochainOperad, max_p: int, max_q: int, max_r: int,
                        registry: Optional[EventRegistry] = None) -> SuiteReport:
    """Exhaustive check of the operad axioms on basis cochains.

    For φ ∈ O(p), ψ ∈ O(q), χ ∈ O(r) with 1 ≤ p ≤ max_p, 0 ≤ q ≤ max_q,
    0 ≤ r ≤ max_r, every instance of
        (φ ∘_i ψ) ∘_j χ = (φ ∘_j χ) ∘_{i+r−1} ψ        j < i
                        = φ ∘_i (ψ ∘_{j−i+1} χ)        i ≤ j < q+i
                        = (φ ∘_{j−q+1} χ) ∘_i ψ        j ≥ q+i
    together with the unit laws for 𝟙 and the multiplication axioms for μ, e.

    Returns:
        SuiteReport; witnesses are (p, φ, i, q, ψ, j, r, χ) with basis indices
    """
    suite = "operad"
    report = SuiteReport(suite, operad.label)
    publish(registry, {"type": EventType.SUITE_START.value, "suite": suite})

    families = {"composition_left": [0, None], "composition_nested": [0, None], "composition_right": [0, None]}
    basis = {
        n: [operad.basis_sparse(n, k) for k in _basis_range(operad, n)]
        for n in range(max(max_p, max_q, max_r) + 1)
    }
    inner_cache: Dict[Tuple[int, int, int, int, int], SparseCochain] = {}

    def compose_basis(pa: int, ia: int, slot: int, qb: int, ib: int) -> SparseCochain:
        key = (pa, ia, slot, qb, ib)
        if key not in inner_cache:
            inner_cache[key] = operad.sparse_circ(basis[pa][ia], pa, slot, basis[qb][ib], qb)
        return inner_cache[key]

    for p in range(1, max_p + 1):
        for q in range(0, max_q + 1):
            for r in range(0, max_r + 1):
                pq = p + q - 1
                if pq < 1:
                    continue
                for ip, phi in enumerate(basis[p]):
                    for iq, psi in enumerate(basis[q]):
                        for i in range(1, p + 1):
                            outer = compose_basis(p, ip, i, q, iq)
                            for ir, chi in enumerate(basis[r]):
                                for j in range(1, pq + 1):
                                    lhs = operad.sparse_circ(outer, pq, j, chi, r)
                                    if j < i:
                                        family = "composition_left"
                                        rhs = operad.sparse_circ(compose_basis(p, ip, j, r, ir), p + r - 1, i + r - 1, psi, q)
                                    elif j < q + i:
                                        family = "composition_nested"
                                        rhs = operad.sparse_circ(phi, p, i, compose_basis(q, iq, j - i + 1, r, ir), q + r - 1)
                                    else:
                                        family = "composition_right"
                                        rhs = operad.sparse_circ(compose_basis(p, ip, j - q + 1, r, ir), p + r - 1, i, psi, q)
                                    families[family][0] += 1
                                    if families[family][1] is None and not _sparse_equal(lhs, rhs):
                                        families[family][1] = [p, ip, i, q, iq, j, r, ir]
    for name, (cases, witness) in families.items():
        check = report.record(name, witness is None, witness=witness, cases=cases)
        publish_check(registry, suite, check)

    _unit_checks(operad, report, max(max_p, max_q, max_r), registry)
    _multiplication_checks(operad, report, registry)
    publish(registry, {"type": EventType.SUITE_COMPLETE.value, "suite": suite, "passed": report.passed})
    return report


def _unit_checks(operad: CochainOperad, report: SuiteReport, max_degree: int,
                 registry: Optional[EventRegistry]) -> None:
    one = operad.to_sparse(operad.identity())
    bad_right = bad_left = None
    cases = 0
    for n in range(0, max_degree + 1):
        for k in _basis_range(operad, n):
            phi = operad.basis_sparse(n, k)
            cases += 1
            if bad_left is None and not _sparse_equal(operad.sparse_circ(one, 1, 1, phi, n), phi):
                bad_left = [n, k]
            for i in range(1, n + 1):
                if bad_right is None and not _sparse_equal(operad.sparse_circ(phi, n, i, one, 1), phi):
                    bad_right = [n, k, i]
    for name, witness in (("unit_right", bad_right), ("unit_left", bad_left)):
        publish_check(registry, report.suite, report.record(name, witness is None, witness=witness, cases=cases))


def _multiplication_checks(operad: CochainOperad, report: SuiteReport,
                           registry: Optional[EventRegistry]) -> None:
    mu, e, one = operad.multiplication(), operad.unit_element(), operad.identity()
    assoc = operad.circ(mu, 1, mu) == operad.circ(mu, 2, mu)
    publish_check(registry, report.suite, report.record("mu_associative", assoc, cases=1))
    unital = operad.circ(mu, 1, e) == one and operad.circ(mu, 2, e) == one
    publish_check(registry, report.suite, report.record("mu_unit", unital, cases=2))


def composition_oracle_report(operad: CochainOperad, max_p: int = 2, max_q: int = 2) -> SuiteReport:
    """Tensor-contraction ∘_i against the sparse path and the brute-force oracle."""
    report = SuiteReport("composition_oracle", operad.label)
    witness = None
    cases = 0
    for p in range(1, max_p + 1):
        for q in range(0, max_q + 1):
            for ip in _basis_range(operad, p):
                phi = operad.basis_cochain(p, ip)
                for iq in _basis_range(operad, q):
                    psi = operad.basis_cochain(q, iq)
                    for i in range(1, p + 1):
                        cases += 1
                        dense = operad.circ(phi, i, psi)
                        oracle = operad.brute_force_circ(phi, i, psi)
                        sparse = operad.from_sparse(
                            p + q - 1,
                            operad.sparse_circ(operad.to_sparse(phi), p, i, operad.to_sparse(psi), q),
                        )
                        if witness is None and not (dense == oracle and dense == sparse):
                            witness = [p, ip, i, q, iq]
    report.record("circ_matches_oracle", witness is None, witness=witness, cases=cases)
    return report


def coface_consistency_report(cx: HochschildComplex, max_degree: int) -> SuiteReport:
    """Tensor cofaces against the materialized matrices, and β∘β = 0."""
    report = SuiteReport("cosimplicial", cx.label)
    witness = None
    cases = 0
    for n in range(0, max_degree + 1):
        for k in range(cx.cochain_dim(n)):
            f = cx.basis_cochain(n, k)
            for i in range(n + 2):
                cases += 1
                if witness is None and cx.coface(i, f) != cx.apply(cx.coface_operator(i, n), f):
                    witness = [n, k, i]
    report.record("coface_matrices", witness is None, witness=witness, cases=cases)
    square_bad = None
    for n in range(0, max_degree):
        square = cx.differential(n + 1).matrix * cx.differential(n).matrix
        if square != cx.field.zero_matrix(square.nrows(), square.ncols()):
            square_bad = n
            break
    report.record("beta_squared_zero", square_bad is None, witness=square_bad, cases=max_degree)
    return report
