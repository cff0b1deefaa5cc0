"""Cohomology, Gerstenhaber and BV suite tests

Requirements:
- HH^•(A, A) dimensions match hand computations for the shipped algebras
- Non-cocycles are refused when reduced to class coordinates
- Gerstenhaber identities hold on classes for every algebra
- The BV identity holds when τ^{n+1} = id and is refused otherwise
- Nakayama weights split the complex, non-trivial weights are acyclic
  and the weight-1 part carries the BV structure
- The cup-weight check states its degree cap when the bound is higher
"""

import numpy as np
import pytest

from bvext.algcore import frobenius_structure, nakayama_grading
from bvext.bv import (
    ClassAlgebra,
    bv_report,
    cohomology,
    gerstenhaber_report,
    induced_op,
    nakayama_weight_report,
    weight_decomposition,
)
from bvext.cyclic import cyclic_structure, frobenius_contraaction
from bvext.errors import BudgetExceeded, CharacteristicError, IndexOutOfRange, NotCocycle, NotCyclic
from bvext.hochschild import EndomorphismOperad, algebra_bimodule


def _class_algebra(algebra, degree, cyclic=True):
    operad = EndomorphismOperad(algebra)
    cs = None
    if cyclic:
        fs = frobenius_structure(algebra)
        cs = cyclic_structure(frobenius_contraaction(fs, algebra_bimodule(algebra)), operad)
    return ClassAlgebra(cohomology(operad, degree), cs)


class TestCohomology:
    """Dimension tables of HH^•(A, A)"""

    @pytest.mark.parametrize("name,degree,expected", [
        ("rationals", 4, [1, 0, 0, 0, 0]),
        ("dual_numbers", 4, [2, 1, 1, 1, 1]),
        ("truncated_cubic", 3, [3, 2, 2, 2]),
        ("matrix_m2", 2, [1, 0, 0]),
    ])
    def test_dimension_anchors(self, name, degree, expected, request):
        algebra = request.getfixturevalue(name)
        assert cohomology(EndomorphismOperad(algebra), degree).dims() == expected

    def test_group_algebra_is_separable(self, group_c2):
        """ℚ[C₂] is semisimple: only the centre survives"""
        assert cohomology(EndomorphismOperad(group_c2.algebra), 3).dims() == [2, 0, 0, 0]

    def test_reduce_refuses_non_cocycle(self, dual_numbers):
        H = cohomology(EndomorphismOperad(dual_numbers), 2)
        with pytest.raises(NotCocycle):
            H.reduce(H.complex.basis_cochain(1, 0))

    def test_class_representatives_reduce_to_unit_vectors(self, dual_numbers):
        H = cohomology(EndomorphismOperad(dual_numbers), 2)
        f = H.field
        for n in range(3):
            for k in range(H.dim(n)):
                assert list(H.reduce(H.class_cochain(n, k))) == list(f.unit_vector(H.dim(n), k))

    def test_degree_outside_table(self, dual_numbers):
        H = cohomology(EndomorphismOperad(dual_numbers), 2)
        with pytest.raises(IndexOutOfRange):
            H.dim(3)

    def test_budget_checked_before_work(self, matrix_m2):
        with pytest.raises(BudgetExceeded):
            cohomology(EndomorphismOperad(matrix_m2), 20)


class TestGerstenhaber:
    """gerstenhaber_report and the induced operations"""

    @pytest.mark.parametrize("name,degree", [("dual_numbers", 3), ("truncated_cubic", 2), ("nakayama_algebra", 2)])
    def test_identities_hold(self, name, degree, request):
        algebra = _class_algebra(request.getfixturevalue(name), degree, cyclic=False)
        report = gerstenhaber_report(algebra, degree)
        assert report.passed, report.first_failure()
        assert report.get("graded_jacobi").cases > 0

    def test_unit_class_acts_trivially(self, dual_numbers):
        algebra = _class_algebra(dual_numbers, 2, cyclic=False)
        unit = algebra.unit_class()
        assert any(x != 0 for x in unit)
        for k in algebra.classes(1):
            rep = algebra.H.class_cochain(1, k)
            assert np.all(algebra.H.reduce(algebra.cup(algebra.cx.unit_cochain(), rep)) == algebra.H.reduce(rep))

    def test_bracket_into_negative_degree(self, dual_numbers):
        algebra = _class_algebra(dual_numbers, 2, cyclic=False)
        assert induced_op(algebra, "bracket", [(0, 0), (0, 1)]) is None

    def test_unknown_operation(self, dual_numbers):
        algebra = _class_algebra(dual_numbers, 1, cyclic=False)
        with pytest.raises(ValueError):
            induced_op(algebra, "wedge", [(0, 0)])


class TestBV:
    """bv_report on stable and unstable instances"""

    def test_dual_numbers(self, dual_numbers):
        report = bv_report(_class_algebra(dual_numbers, 3), 3)
        assert report.passed, report.first_failure()
        assert report.get("bv_identity").cases > 0
        assert report.dimensions["H"] == [2, 1, 1, 1]

    def test_matrix_algebra(self, matrix_m2):
        report = bv_report(_class_algebra(matrix_m2, 2), 2)
        assert report.passed, report.first_failure()

    def test_boundary_needs_cyclic_structure(self, dual_numbers):
        algebra = _class_algebra(dual_numbers, 2, cyclic=False)
        with pytest.raises(NotCyclic):
            algebra.boundary(algebra.H.class_cochain(1, 0))
        with pytest.raises(NotCyclic):
            bv_report(algebra, 2)

    def test_unstable_refused(self, nakayama_algebra):
        with pytest.raises(NotCyclic):
            bv_report(_class_algebra(nakayama_algebra, 2), 2)


class TestNakayamaWeights:
    """Weight splitting under σ"""

    def setup_method(self):
        self.bound = 2

    def test_components_fill_the_complex(self, nakayama_algebra):
        grading = nakayama_grading(frobenius_structure(nakayama_algebra))
        weights = weight_decomposition(grading, self.bound)
        for n in range(self.bound + 1):
            total = sum(weights.component(n, lam).dim for lam in weights.weights)
            assert total == 4 ** (n + 1)

    def test_split_recombines(self, nakayama_algebra):
        grading = nakayama_grading(frobenius_structure(nakayama_algebra))
        weights = weight_decomposition(grading, 1)
        f = grading.field
        vector = f.array(list(range(16)))
        parts = weights.split(1, vector)
        total = f.zeros(16)
        for part in parts.values():
            total = total + part
        assert np.all(total == vector)

    def test_report(self, nakayama_algebra):
        report = nakayama_weight_report(frobenius_structure(nakayama_algebra), self.bound)
        assert report.passed, report.first_failure()
        assert set(report.dimensions["weights"]) == {"-1", "1"}
        assert report.dimensions["H(C_-1)"] == [0] * (self.bound + 1)
        assert report.dimensions["H(A,A)"] == report.dimensions["H(C_1)"]
        assert report.get("weight_one.bv_identity").passed
        assert report.get("twisted.tau_power_identity").passed

    def test_symmetric_algebra_has_one_weight(self, dual_numbers):
        report = nakayama_weight_report(frobenius_structure(dual_numbers), self.bound)
        assert report.passed, report.first_failure()
        assert report.dimensions["weights"] == ["1"]

    def test_cup_degree_cap_is_a_finding(self, dual_numbers):
        fs = frobenius_structure(dual_numbers)
        capped = nakayama_weight_report(fs, 3)
        assert "cup_multiplies_weights: checked through total degree 2, not 3" in capped.findings
        within = nakayama_weight_report(fs, self.bound)
        assert not any(f.startswith("cup_multiplies_weights") for f in within.findings)

    def test_prime_field_refused(self, gf2_dual_numbers):
        with pytest.raises(CharacteristicError):
            nakayama_weight_report(frobenius_structure(gf2_dual_numbers.algebra), self.bound)
