"""Exact scalars and the linear-algebra kernel.

This module provides the arithmetic every cohomology computation rests on:
- FieldSpec: The ground field (ℚ or GF(p)), scalar parsing and serialization
- Matrix helpers: flint matrices (fmpq_mat / nmod_mat) built from numpy
  object arrays, products, inverses and identity tests
- rref / kernel_basis / image_basis: Reduced echelon computations
- Subspace: Canonical reduced-echelon span with coordinates
- QuotientPresentation / quotient: Cocycles modulo coboundaries
- membership: Coordinates of a vector in a subspace, if it lies there

Vectors and cochain tensors are numpy arrays of dtype object holding flint
scalars; matrices used for rank and product computations are flint matrices.
Nothing here rounds.
"""
from dataclasses import dataclass, field as dataclass_field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from flint import fmpq, fmpq_mat, fmpz, nmod, nmod_mat

from .errors import CharacteristicError, ContainmentError, DimensionMismatch, FieldError

RATIONALS = "rationals"
PRIME_FIELD = "prime_field"

Matrix = Union[fmpq_mat, nmod_mat]


@dataclass(frozen=True)
class FieldSpec:
    """Ground field of a presentation: the rationals or a prime field."""

    kind: str = RATIONALS
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.p is not None:
                raise FieldError("The rational field takes no modulus", {"p": self.p})
        elif self.kind == PRIME_FIELD:
            if self.p is None or self.p < 2 or not fmpz(self.p).is_prime():
                raise FieldError(f"GF(p) requires a prime p, got {self.p}", {"p": self.p})
        else:
            raise FieldError(f"Unknown field kind '{self.kind}'")

    # ------------------------------------------------------------------
    # Construction and naming
    # ------------------------------------------------------------------

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(RATIONALS)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(PRIME_FIELD, int(p))

    @classmethod
    def parse(cls, value: Any) -> "FieldSpec":
        """Parse "Q", {"GF": p}, "GF7" or "GF(7)".

        Raises:
            FieldError: If the value names no supported field
        """
        if isinstance(value, FieldSpec):
            return value
        if isinstance(value, dict):
            if set(value.keys()) != {"GF"}:
                raise FieldError(f"Unknown field object {value}")
            return cls.prime(_parse_int(value["GF"]))
        if isinstance(value, str):
            text = value.strip().replace(" ", "")
            if text.upper() in ("Q", "QQ", "RATIONALS"):
                return cls.rationals()
            if text.upper().startswith("GF"):
                digits = text[2:].strip("()")
                return cls.prime(_parse_int(digits))
        raise FieldError(f"Unknown field '{value}'")

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == RATIONALS else self.p

    @property
    def label(self) -> str:
        return "Q" if self.kind == RATIONALS else f"GF({self.p})"

    def to_json(self) -> Any:
        return "Q" if self.kind == RATIONALS else {"GF": self.p}

    def require_characteristic_zero(self, operation: str, permit: bool = False) -> None:
        """Refuse char-p inputs for operations that assume characteristic zero."""
        if self.characteristic != 0 and not permit:
            raise CharacteristicError(
                f"{operation} requires characteristic zero, got {self.label}",
                {"operation": operation, "field": self.label},
            )

    # ------------------------------------------------------------------
    # Scalars
    # ------------------------------------------------------------------

    @property
    def zero(self):
        return fmpq(0) if self.kind == RATIONALS else nmod(0, self.p)

    @property
    def one(self):
        return fmpq(1) if self.kind == RATIONALS else nmod(1, self.p)

    def __call__(self, value: Any):
        """Convert an int, a "p/q" string or a flint scalar into this field."""
        if isinstance(value, np.integer):
            value = int(value)
        if self.kind == RATIONALS:
            if isinstance(value, fmpq):
                return value
            if isinstance(value, nmod):
                raise FieldError("Cannot read a residue as a rational")
            if isinstance(value, (int, fmpz)):
                return fmpq(int(value))
            if isinstance(value, str):
                num, den = _parse_fraction(value)
                return fmpq(num, den)
            raise FieldError(f"Cannot convert {value!r} to a rational")

        if isinstance(value, nmod):
            if value.modulus() != self.p:
                raise FieldError(f"Residue modulo {value.modulus()} used in {self.label}")
            return value
        if isinstance(value, (int, fmpz)):
            return nmod(int(value), self.p)
        if isinstance(value, fmpq):
            return nmod(int(value.p), self.p) / nmod(int(value.q), self.p)
        if isinstance(value, str):
            num, den = _parse_fraction(value)
            if den % self.p == 0:
                raise FieldError(f"Denominator of '{value}' vanishes in {self.label}")
            return nmod(num, self.p) / nmod(den, self.p)
        raise FieldError(f"Cannot convert {value!r} to {self.label}")

    def serialize(self, x) -> str:
        """Scalar as a string: "p/q" (or "p") over ℚ, the residue over GF(p)."""
        if self.kind == RATIONALS:
            x = self(x)
            return f"{x.p}" if x.q == 1 else f"{x.p}/{x.q}"
        return str(int(self(x)))

    def inverse(self, x):
        return self.one / self(x)

    # ------------------------------------------------------------------
    # numpy object arrays
    # ------------------------------------------------------------------

    def zeros(self, shape) -> np.ndarray:
        return np.full(shape, self.zero, dtype=object)

    def array(self, values: Any) -> np.ndarray:
        """Convert nested lists (ints, strings, scalars) to an object array."""
        raw = np.asarray(values, dtype=object)
        if raw.size == 0:
            return self.zeros(raw.shape)
        return np.frompyfunc(self, 1, 1)(raw).astype(object)

    def identity(self, n: int) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    def unit_vector(self, n: int, i: int) -> np.ndarray:
        out = self.zeros(n)
        out[i] = self.one
        return out

    # ------------------------------------------------------------------
    # flint matrices
    # ------------------------------------------------------------------

    def matrix(self, rows: Any) -> Matrix:
        """Flint matrix from a 2-D object array (or nested lists)."""
        arr = rows if isinstance(rows, np.ndarray) else self.array(rows)
        if arr.ndim != 2:
            raise DimensionMismatch(f"Expected a 2-D array, got shape {arr.shape}")
        r, c = arr.shape
        flat = list(arr.reshape(-1))
        if self.kind == RATIONALS:
            return fmpq_mat(r, c, [self(v) for v in flat])
        return nmod_mat(r, c, [int(self(v)) for v in flat], self.p)

    def zero_matrix(self, rows: int, cols: int) -> Matrix:
        if self.kind == RATIONALS:
            return fmpq_mat(rows, cols)
        return nmod_mat(rows, cols, self.p)

    def identity_matrix(self, n: int) -> Matrix:
        return self.scalar_matrix(n, self.one)

    def scalar_matrix(self, n: int, value) -> Matrix:
        m = self.zero_matrix(n, n)
        value = self(value)
        for i in range(n):
            m[i, i] = value
        return m

    def matrix_from_entries(self, rows: int, cols: int, entries: Dict[Tuple[int, int], Any]) -> Matrix:
        """Flint matrix from a dict of nonzero entries (accumulated)."""
        m = self.zero_matrix(rows, cols)
        for (i, j), value in entries.items():
            if value != 0:
                m[i, j] = self(value)
        return m

    def to_array(self, m: Matrix) -> np.ndarray:
        r, c = m.nrows(), m.ncols()
        out = self.zeros((r, c))
        for i in range(r):
            for j in range(c):
                out[i, j] = self(m[i, j])
        return out

    def column(self, vector: np.ndarray) -> Matrix:
        return self.matrix(np.asarray(vector, dtype=object).reshape(-1, 1))

    def apply(self, m: Matrix, vector: np.ndarray) -> np.ndarray:
        """Matrix times column vector, returned as a 1-D object array."""
        if m.ncols() != len(vector):
            raise DimensionMismatch(f"Matrix with {m.ncols()} columns applied to vector of length {len(vector)}")
        if m.nrows() == 0:
            return self.zeros(0)
        if m.ncols() == 0:
            return self.zeros(m.nrows())
        product = m * self.column(vector)
        return np.array([self(product[i, 0]) for i in range(m.nrows())], dtype=object)


def _parse_int(value: Any) -> int:
    try:
        return int(value)
    except (TypeError, ValueError) as e:
        raise FieldError(f"Expected an integer, got {value!r}") from e


def _parse_fraction(text: str) -> Tuple[int, int]:
    parts = text.strip().split("/")
    try:
        if len(parts) == 1:
            return int(parts[0]), 1
        if len(parts) == 2:
            num, den = int(parts[0]), int(parts[1])
            if den == 0:
                raise FieldError(f"Zero denominator in '{text}'")
            return num, den
    except ValueError as e:
        raise FieldError(f"Malformed scalar '{text}'") from e
    raise FieldError(f"Malformed scalar '{text}'")


def field_of(m: Any, default: Optional[FieldSpec] = None) -> FieldSpec:
    """Infer the field of a flint matrix or a nonempty object array."""
    if isinstance(m, fmpq_mat):
        return FieldSpec.rationals()
    if isinstance(m, nmod_mat):
        return FieldSpec.prime(m.modulus())
    arr = np.asarray(m, dtype=object)
    if arr.size:
        first = arr.reshape(-1)[0]
        if isinstance(first, nmod):
            return FieldSpec.prime(first.modulus())
        if isinstance(first, fmpq):
            return FieldSpec.rationals()
    if default is None:
        raise FieldError("Cannot infer the field of an empty or untyped array")
    return default


def as_matrix(m: Any, field: Optional[FieldSpec] = None) -> Tuple[Matrix, FieldSpec]:
    field = field or field_of(m)
    if isinstance(m, (fmpq_mat, nmod_mat)):
        return m, field
    return field.matrix(np.asarray(m, dtype=object)), field


# =============================================================================
# Matrix arithmetic
# =============================================================================

def mat_pow(m: Matrix, k: int, field: FieldSpec) -> Matrix:
    result = field.identity_matrix(m.nrows())
    for _ in range(k):
        result = result * m
    return result


def mat_scale(m: Matrix, value, field: FieldSpec) -> Matrix:
    return field.scalar_matrix(m.nrows(), value) * m


def mat_inverse(m: Matrix) -> Matrix:
    """Inverse of a square flint matrix; ZeroDivisionError if singular."""
    return m.inv()


def is_zero_matrix(m: Matrix) -> bool:
    return all(m[i, j] == 0 for i in range(m.nrows()) for j in range(m.ncols()))


def first_difference(a: Matrix, b: Matrix) -> Optional[Tuple[int, int]]:
    """First (row, col) where two equally-shaped matrices differ, or None."""
    if (a.nrows(), a.ncols()) != (b.nrows(), b.ncols()):
        raise DimensionMismatch(
            f"Cannot compare {a.nrows()}x{a.ncols()} with {b.nrows()}x{b.ncols()}"
        )
    if a == b:
        return None
    for j in range(a.ncols()):
        for i in range(a.nrows()):
            if a[i, j] != b[i, j]:
                return (i, j)
    return None


def kron(field: FieldSpec, *arrays: np.ndarray) -> np.ndarray:
    """Kronecker product of 2-D object arrays (row-major index order)."""
    result = np.asarray(arrays[0], dtype=object)
    for nxt in arrays[1:]:
        nxt = np.asarray(nxt, dtype=object)
        outer = np.multiply.outer(result, nxt)
        r1, c1 = result.shape
        r2, c2 = nxt.shape
        result = outer.transpose(0, 2, 1, 3).reshape(r1 * r2, c1 * c2)
    return result


# =============================================================================
# Echelon computations
# =============================================================================

@dataclass(frozen=True, eq=False)
class RrefResult:
    """Reduced row echelon form with rank and pivot columns."""
    rank: int
    pivots: Tuple[int, ...]
    reduced: np.ndarray


def rref(m: Any, field: Optional[FieldSpec] = None) -> RrefResult:
    """Reduced row echelon form of a matrix.

    Args:
        m: flint matrix or 2-D object array
        field: Ground field, required when m is an empty array

    Returns:
        RrefResult with rank, pivot columns and the reduced matrix
    """
    if isinstance(m, np.ndarray) and (m.ndim != 2 or 0 in m.shape):
        field = field or field_of(m, FieldSpec.rationals())
        shape = m.shape if m.ndim == 2 else (0, 0)
        return RrefResult(0, (), field.zeros(shape))
    mat, field = as_matrix(m, field)
    rows, cols = mat.nrows(), mat.ncols()
    if rows == 0 or cols == 0:
        return RrefResult(0, (), field.zeros((rows, cols)))
    reduced_mat, rank = mat.rref()
    reduced = field.to_array(reduced_mat)
    pivots: List[int] = []
    for i in range(rank):
        for j in range(cols):
            if reduced[i, j] != 0:
                pivots.append(j)
                break
    return RrefResult(int(rank), tuple(pivots), reduced)


def rank(m: Any, field: Optional[FieldSpec] = None) -> int:
    if isinstance(m, np.ndarray) and (m.ndim != 2 or 0 in m.shape):
        return 0
    mat, _ = as_matrix(m, field)
    if mat.nrows() == 0 or mat.ncols() == 0:
        return 0
    return int(mat.rank())


@dataclass(frozen=True, eq=False)
class Subspace:
    """Subspace of field^n held as a canonical reduced-echelon basis."""

    field: FieldSpec
    ambient_dim: int
    basis: np.ndarray
    pivots: Tuple[int, ...] = ()

    @classmethod
    def span(cls, field: FieldSpec, ambient_dim: int, rows: Any) -> "Subspace":
        """Canonical basis of the span of the given row vectors."""
        arr = np.asarray(rows, dtype=object)
        if arr.size == 0:
            return cls.zero(field, ambient_dim)
        arr = arr.reshape(-1, ambient_dim)
        result = rref(arr, field)
        return cls(field, ambient_dim, result.reduced[: result.rank].copy(), result.pivots)

    @classmethod
    def zero(cls, field: FieldSpec, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, field.zeros((0, ambient_dim)), ())

    @classmethod
    def full(cls, field: FieldSpec, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, field.identity(ambient_dim), tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def combine(self, coords: Sequence) -> np.ndarray:
        """Σ_k coords[k]·basis[k]."""
        if self.dim == 0:
            return self.field.zeros(self.ambient_dim)
        row = self.field.matrix(np.asarray(coords, dtype=object).reshape(1, -1))
        product = row * self.field.matrix(self.basis)
        return np.array([self.field(product[0, j]) for j in range(self.ambient_dim)], dtype=object)

    def coordinates(self, v: Sequence) -> Optional[np.ndarray]:
        return membership(self, v)

    def contains(self, v: Sequence) -> bool:
        return membership(self, v) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis.shape == other.basis.shape
            and bool(np.all(self.basis == other.basis))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.ambient_dim, self.dim, self.pivots))


def kernel_basis(m: Any, field: Optional[FieldSpec] = None, cols: Optional[int] = None) -> Subspace:
    """Subspace {v : m·v = 0}.

    Args:
        m: flint matrix or 2-D object array
        field: Ground field, required when m is empty
        cols: Number of columns, required when m is an empty array without shape
    """
    if isinstance(m, np.ndarray):
        field = field or field_of(m, FieldSpec.rationals())
        ncols = m.shape[1] if m.ndim == 2 else (cols or 0)
    else:
        field = field or field_of(m)
        ncols = m.ncols()
    result = rref(m, field)
    free = [j for j in range(ncols) if j not in result.pivots]
    vectors = []
    for f in free:
        v = field.zeros(ncols)
        v[f] = field.one
        for k, p in enumerate(result.pivots):
            v[p] = -result.reduced[k, f]
        vectors.append(v)
    if not vectors:
        return Subspace.zero(field, ncols)
    return Subspace.span(field, ncols, np.array(vectors, dtype=object))


def image_basis(m: Any, field: Optional[FieldSpec] = None) -> Subspace:
    """Column space of m as a subspace of the target."""
    if isinstance(m, np.ndarray):
        field = field or field_of(m, FieldSpec.rationals())
        return Subspace.span(field, m.shape[0], m.T)
    mat, field = as_matrix(m, field)
    if mat.nrows() == 0 or mat.ncols() == 0:
        return Subspace.zero(field, mat.nrows())
    return Subspace.span(field, mat.nrows(), field.to_array(mat.transpose()))


def membership(s: Subspace, v: Sequence) -> Optional[np.ndarray]:
    """Coordinates c with Σ c_k basis_k = v, or None if v ∉ s.

    Raises:
        DimensionMismatch: If v does not have the ambient dimension
    """
    v = np.asarray(v, dtype=object)
    if v.shape != (s.ambient_dim,):
        raise DimensionMismatch(f"Vector of shape {v.shape} in ambient dimension {s.ambient_dim}")
    coords = np.array([s.field(v[p]) for p in s.pivots], dtype=object)
    if s.dim == 0:
        return coords if all(x == 0 for x in v) else None
    if bool(np.all(s.combine(coords) == v)):
        return coords
    return None


# =============================================================================
# Quotients
# =============================================================================

@dataclass(frozen=True, eq=False)
class QuotientPresentation:
    """numerator / denominator with chosen class representatives.

    reduce(v) = v[rep_pivots] − v[den_pivots]·D[:, rep_pivots], where D is the
    denominator basis. It sends each representative to its unit vector and
    annihilates the denominator.
    """

    ambient_dim: int
    numerator: Subspace
    denominator: Subspace
    class_reps: np.ndarray
    rep_pivots: Tuple[int, ...] = ()
    _correction: np.ndarray = dataclass_field(default=None, repr=False)

    @property
    def field(self) -> FieldSpec:
        return self.numerator.field

    @property
    def dim(self) -> int:
        return self.class_reps.shape[0]

    def reduce(self, v: Sequence) -> np.ndarray:
        """Class coordinates of v (meaningful for v in the numerator)."""
        v = np.asarray(v, dtype=object)
        if v.shape != (self.ambient_dim,):
            raise DimensionMismatch(f"Vector of shape {v.shape} in ambient dimension {self.ambient_dim}")
        out = np.array([self.field(v[p]) for p in self.rep_pivots], dtype=object)
        if self.denominator.dim and self.dim:
            head = np.array([v[p] for p in self.denominator.pivots], dtype=object)
            out = out - head.dot(self._correction)
        return out

    def representative(self, coords: Sequence) -> np.ndarray:
        """Σ coords[k]·class_reps[k]."""
        if self.dim == 0:
            return self.field.zeros(self.ambient_dim)
        return Subspace(self.field, self.ambient_dim, self.class_reps).combine(coords)

    def is_trivial(self, v: Sequence) -> bool:
        """True iff v lies in the denominator."""
        return self.denominator.contains(v)


def quotient(numerator: Subspace, denominator: Subspace) -> QuotientPresentation:
    """Present numerator / denominator.

    Raises:
        ContainmentError: If denominator ⊄ numerator
    """
    field = numerator.field
    n = numerator.ambient_dim
    if denominator.ambient_dim != n:
        raise DimensionMismatch("Numerator and denominator live in different spaces")
    for k, row in enumerate(denominator.basis):
        if not numerator.contains(row):
            raise ContainmentError(
                "Denominator is not contained in the numerator",
                {"denominator_row": k},
            )

    rows = numerator.basis
    if denominator.dim and numerator.dim:
        head = field.matrix(rows[:, list(denominator.pivots)])
        rows_mat = field.matrix(rows) - head * field.matrix(denominator.basis)
        rows = field.to_array(rows_mat)
    reps = Subspace.span(field, n, rows) if numerator.dim else Subspace.zero(field, n)
    expected = numerator.dim - denominator.dim
    if reps.dim != expected:
        raise ContainmentError(
            "Quotient dimension mismatch",
            {"expected": expected, "found": reps.dim},
        )

    correction = None
    if denominator.dim and reps.dim:
        correction = denominator.basis[:, list(reps.pivots)]
    return QuotientPresentation(n, numerator, denominator, reps.basis, reps.pivots, correction)


def sort_key(x) -> Any:
    """Deterministic ordering key for scalars of either field."""
    if isinstance(x, nmod):
        return (int(x),)
    return (x,)
