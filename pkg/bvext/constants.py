"""Shared constants for the BV engine.

Degree bounds, hard caps and report settings are kept here so that the
CLI, the suites and the tests agree on them.
"""

# =============================================================================
# Report format
# =============================================================================

SCHEMA_VERSION = 1

OUTPUT_FORMATS = ("table", "json")

# =============================================================================
# Degree bounds
# =============================================================================

# Default total degree for cohomology, cyclic and BV suites, keyed by dim A
DEFAULT_MAX_DEGREE_SMALL = 4   # dim A <= 3
DEFAULT_MAX_DEGREE_LARGE = 3   # dim A >= 4
SMALL_ALGEBRA_DIM = 3

# Default (max_p, max_q, max_r) for the exhaustive operad suite
DEFAULT_OPERAD_BOUNDS_SMALL = (3, 3, 3)
DEFAULT_OPERAD_BOUNDS_LARGE = (2, 2, 2)
# Extra passes for dim A >= 4 that reach arity 3 in one slot at a time
DEFAULT_OPERAD_SLOT_PASSES_LARGE = ((3, 1, 1), (1, 3, 1), (1, 1, 3))

# Total degree through which the Nakayama suite checks that cup multiplies weights
NAKAYAMA_CUP_DEGREE = 2

# Hard cap on the dimension of a single cochain space (dim A)^n * dim M
MAX_COCHAIN_DIM = 4096

# =============================================================================
# Exit codes
# =============================================================================

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

# =============================================================================
# Well-definedness samples
# =============================================================================

# Seed for the coboundary perturbations of induced class operations
PERTURBATION_SEED = 20240607
PERTURBATION_RANGE = 3


def default_max_degree(algebra_dim: int) -> int:
    """Return the default degree bound for an algebra of the given dimension."""
    if algebra_dim <= SMALL_ALGEBRA_DIM:
        return DEFAULT_MAX_DEGREE_SMALL
    return DEFAULT_MAX_DEGREE_LARGE


def default_operad_bounds(algebra_dim: int) -> tuple:
    """Return the default operad suite bounds for an algebra of the given dimension."""
    if algebra_dim <= SMALL_ALGEBRA_DIM:
        return DEFAULT_OPERAD_BOUNDS_SMALL
    return DEFAULT_OPERAD_BOUNDS_LARGE


def default_operad_passes(algebra_dim: int) -> tuple:
    """All (max_p, max_q, max_r) triples the operad suite runs by default."""
    if algebra_dim <= SMALL_ALGEBRA_DIM:
        return (DEFAULT_OPERAD_BOUNDS_SMALL,)
    return (DEFAULT_OPERAD_BOUNDS_LARGE,) + DEFAULT_OPERAD_SLOT_PASSES_LARGE
