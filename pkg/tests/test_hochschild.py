"""Hochschild complex and endomorphism operad tests

Requirements:
- Tensor cofaces agree with the materialized coface matrices and β∘β = 0
- Codegeneracies insert the unit; σ_j μ is the identity cochain
- The cup product has the unit cochain as two-sided unit
- Operad axioms and the composition oracle hold on basis cochains
- Index and budget violations raise domain errors
"""

import pytest

from bvext.errors import BudgetExceeded, CoefficientNotAlgebra, IndexOutOfRange
from bvext.hochschild import (
    EndomorphismOperad,
    HochschildComplex,
    algebra_bimodule,
    coface_consistency_report,
    composition_oracle_report,
    operad_axiom_report,
    trivial_module,
    zero_module,
)


class TestCosimplicial:
    """Cofaces, codegeneracies and β"""

    def setup_method(self):
        self.degree = 3

    @pytest.mark.parametrize("name", ["dual_numbers", "nakayama_algebra"])
    def test_coface_consistency(self, name, request):
        algebra = request.getfixturevalue(name)
        report = coface_consistency_report(EndomorphismOperad(algebra), self.degree)
        assert report.passed, report.first_failure()
        assert report.get("coface_matrices").cases > 0

    def test_beta_on_non_cocycle(self, dual_numbers):
        """f(1) = 1, f(x) = 0 gives βf(1, 1) = 1"""
        cx = EndomorphismOperad(dual_numbers)
        f = cx.basis_cochain(1, 0)
        beta = cx.beta(f)
        assert not beta.is_zero()
        assert beta.coefficients[0, 0, 0] == cx.field.one

    def test_beta_kills_zero_cochains_of_commutative_algebra(self, truncated_cubic):
        cx = EndomorphismOperad(truncated_cubic)
        for k in range(cx.cochain_dim(0)):
            assert cx.beta(cx.basis_cochain(0, k)).is_zero()

    def test_codegeneracy_of_multiplication(self, matrix_m2):
        """μ(1, a) = μ(a, 1) = a"""
        operad = EndomorphismOperad(matrix_m2)
        mu = operad.multiplication()
        assert operad.codegeneracy(0, mu) == operad.identity()
        assert operad.codegeneracy(1, mu) == operad.identity()

    def test_coface_index_out_of_range(self, dual_numbers):
        cx = EndomorphismOperad(dual_numbers)
        with pytest.raises(IndexOutOfRange):
            cx.coface(3, cx.basis_cochain(1, 0))
        with pytest.raises(IndexOutOfRange):
            cx.codegeneracy(1, cx.basis_cochain(1, 0))

    def test_trivial_coefficients(self, group_c2):
        """C^•(kC₂, k) through the counit is still a complex"""
        cx = HochschildComplex(group_c2.algebra, trivial_module(group_c2.algebra, group_c2.counit))
        report = coface_consistency_report(cx, self.degree)
        assert report.passed, report.first_failure()
        assert cx.cochain_dim(2) == 4


class TestBudget:
    """Hard cap on cochain dimensions"""

    def test_cap_raises(self, matrix_m2):
        """dim C^3(M₂, M₂) = 256"""
        cx = HochschildComplex(matrix_m2, algebra_bimodule(matrix_m2), max_cochain_dim=64)
        assert cx.cochain_dim(2) == 64
        with pytest.raises(BudgetExceeded) as excinfo:
            cx.cochain_dim(3)
        assert excinfo.value.exit_code == 5
        assert excinfo.value.details["dim"] == 256


class TestCup:
    """Cup product on cochains"""

    def test_unit_cochain_is_two_sided_unit(self, nakayama_algebra):
        cx = EndomorphismOperad(nakayama_algebra)
        unit = cx.unit_cochain()
        for k in range(cx.cochain_dim(1)):
            f = cx.basis_cochain(1, k)
            assert cx.cup(unit, f) == f
            assert cx.cup(f, unit) == f

    def test_cup_degrees_add(self, dual_numbers):
        cx = EndomorphismOperad(dual_numbers)
        product = cx.cup(cx.basis_cochain(1, 1), cx.basis_cochain(2, 3))
        assert product.degree == 3

    def test_module_without_product(self, dual_numbers):
        cx = HochschildComplex(dual_numbers, zero_module(dual_numbers))
        with pytest.raises(CoefficientNotAlgebra):
            cx.cup(cx.zero(1), cx.zero(1))


class TestOperad:
    """Insertions ∘_i, 𝟙, μ and the bracket"""

    def test_axioms_on_dual_numbers(self, dual_numbers):
        report = operad_axiom_report(EndomorphismOperad(dual_numbers), 2, 2, 2)
        assert report.passed, report.first_failure()
        for family in ("composition_left", "composition_nested", "composition_right"):
            assert report.get(family).cases > 0
        assert report.get("mu_associative").passed
        assert report.get("mu_unit").passed

    def test_axioms_on_trivial_coefficients(self, sweedler):
        from bvext.hopf import HopfCochainOperad

        report = operad_axiom_report(HopfCochainOperad(sweedler), 2, 1, 1)
        assert report.passed, report.first_failure()

    def test_composition_oracle(self, nakayama_algebra):
        report = composition_oracle_report(EndomorphismOperad(nakayama_algebra), 2, 1)
        assert report.passed, report.first_failure()

    def test_identity_is_unit(self, truncated_cubic):
        operad = EndomorphismOperad(truncated_cubic)
        one = operad.identity()
        for k in range(operad.cochain_dim(2)):
            f = operad.basis_cochain(2, k)
            assert operad.circ(one, 1, f) == f
            assert operad.circ(f, 1, one) == f
            assert operad.circ(f, 2, one) == f

    def test_bracket_of_multiplication_vanishes(self, matrix_m2):
        """{μ, μ} = 0 is associativity"""
        operad = EndomorphismOperad(matrix_m2)
        mu = operad.multiplication()
        assert operad.bracket(mu, mu).is_zero()

    def test_zero_cochains_do_not_compose(self, dual_numbers):
        operad = EndomorphismOperad(dual_numbers)
        e = operad.unit_element()
        with pytest.raises(IndexOutOfRange):
            operad.circ(e, 1, e)
        with pytest.raises(IndexOutOfRange):
            operad.circ(operad.identity(), 2, e)

    def test_insertion_into_zero_cochain_is_zero(self, dual_numbers):
        operad = EndomorphismOperad(dual_numbers)
        result = operad.circ(operad.unit_element(), 1, operad.multiplication())
        assert result.degree == 1
        assert result.is_zero()
