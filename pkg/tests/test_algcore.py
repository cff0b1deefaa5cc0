"""Algebra presentation and Frobenius structure tests

Requirements:
- Validation reports associativity and unitality with the first failing witness
- Frobenius dual bases satisfy ε(e^j e_i) = δ and the decomposition identities
- The Nakayama automorphism is the identity exactly on symmetric instances
- Eigen-splitting of σ grades the algebra
"""

import pytest

from app.corpus import corpus_path, load_instance
from bvext.algcore import (
    algebra_from_dict,
    algebra_to_dict,
    frobenius_identities,
    frobenius_structure,
    is_symmetric,
    nakayama_grading,
    validate_algebra,
)
from bvext.errors import CharacteristicError, NotFrobenius, SchemaError
from bvext.exactfield import FieldSpec


class TestValidateAlgebra:
    """validate_algebra"""

    def test_corpus_algebras_pass(self, rationals, dual_numbers, truncated_cubic, matrix_m2, nakayama_algebra):
        for algebra in (rationals, dual_numbers, truncated_cubic, matrix_m2, nakayama_algebra):
            report = validate_algebra(algebra)
            assert report.passed, report.first_failure()

    def test_dual_numbers_cases(self, dual_numbers):
        """ℚ[x]/(x²): all 8 triples checked"""
        assert validate_algebra(dual_numbers).get("associativity").cases == 8

    def test_broken_unit_fails(self):
        """The shipped broken input fails unitality"""
        algebra = load_instance(corpus_path("broken_unit")).algebra
        report = validate_algebra(algebra)
        assert not report.passed
        assert report.get("associativity").passed
        assert not report.get("unitality").passed
        assert report.get("unitality").witness["side"] in ("left", "right")

    def test_non_associative_witness(self):
        """b_0 b_0 = b_1 with b_1 b_0 = b_0 breaks associativity"""
        data = {
            "dim": 2,
            "mul": {"entries": [[0, 0, 1, 1], [1, 0, 0, 1]]},
            "unit": [0, 0],
        }
        report = validate_algebra(algebra_from_dict(data))
        assert not report.get("associativity").passed
        assert len(report.get("associativity").witness) == 3


class TestSchema:
    """algebra_from_dict / algebra_to_dict"""

    def test_missing_key(self):
        with pytest.raises(SchemaError):
            algebra_from_dict({"dim": 1, "unit": [1]})

    def test_wrong_shape(self):
        with pytest.raises(SchemaError):
            algebra_from_dict({"dim": 2, "mul": [[[1]]], "unit": [1, 0]})

    def test_round_trip(self, dual_numbers):
        again = algebra_from_dict(algebra_to_dict(dual_numbers))
        assert again.dim == dual_numbers.dim
        assert (again.structure_constants == dual_numbers.structure_constants).all()

    def test_field_override(self):
        """--field GF2 reads the same integers modulo 2"""
        data = {"field": "Q", "dim": 1, "mul": [[[1]]], "unit": [1]}
        algebra = algebra_from_dict(data, FieldSpec.prime(2))
        assert algebra.field == FieldSpec.prime(2)


class TestFrobeniusStructure:
    """frobenius_structure and frobenius_identities"""

    def test_dual_basis_of_dual_numbers(self, dual_numbers):
        """ε(x) = 1: e^0 = x, e^1 = 1"""
        fs = frobenius_structure(dual_numbers)
        f = fs.field
        assert list(fs.eup(0)) == [f.zero, f.one]
        assert list(fs.eup(1)) == [f.one, f.zero]

    def test_singular_gram_raises(self, dual_numbers):
        """ε = δ_1 on ℚ[x]/(x²) is degenerate"""
        with pytest.raises(NotFrobenius):
            frobenius_structure(dual_numbers, [1, 0])

    def test_missing_functional_raises(self):
        algebra = load_instance(corpus_path("broken_unit")).algebra
        with pytest.raises(NotFrobenius):
            frobenius_structure(algebra)

    @pytest.mark.parametrize("name", ["rationals", "dual_numbers", "truncated_cubic", "matrix_m2", "nakayama"])
    def test_identities_hold(self, name):
        fs = frobenius_structure(load_instance(corpus_path(name)).algebra)
        report = frobenius_identities(fs)
        assert report.passed, report.first_failure()

    def test_literal_delta_sigma_is_informational(self, nakayama_algebra):
        """Δ(σ(a)) = Σ e_i a ⊗ e^i fails for non-central σ but never fails the suite"""
        report = frobenius_identities(frobenius_structure(nakayama_algebra))
        literal = report.get("literal_delta_sigma")
        assert literal.informational
        assert report.passed


class TestNakayama:
    """Nakayama automorphism and its eigen-splitting"""

    @pytest.mark.parametrize("name", ["rationals", "dual_numbers", "truncated_cubic", "matrix_m2"])
    def test_symmetric_instances(self, name):
        assert is_symmetric(frobenius_structure(load_instance(corpus_path(name)).algebra))

    def test_two_cycle_swaps_idempotents(self, nakayama_algebra):
        """σ(e1) = e2, σ(a) = b"""
        fs = frobenius_structure(nakayama_algebra)
        f = fs.field
        assert not is_symmetric(fs)
        assert list(fs.sigma(f.unit_vector(4, 0))) == list(f.unit_vector(4, 1))
        assert list(fs.sigma(f.unit_vector(4, 2))) == list(f.unit_vector(4, 3))

    def test_grading_weights(self, nakayama_algebra):
        """Weights ±1, each of dimension 2, with 1 ∈ A_1"""
        fs = frobenius_structure(nakayama_algebra)
        grading = nakayama_grading(fs)
        f = fs.field
        assert set(grading.eigenvalues) == {f.one, -f.one}
        assert grading.eigenspace(f.one).dim == 2
        assert grading.eigenspace(-f.one).dim == 2
        assert grading.weight_of(nakayama_algebra.unit) == f.one

    def test_symmetric_grading_is_trivial(self, dual_numbers):
        grading = nakayama_grading(frobenius_structure(dual_numbers))
        assert len(grading.eigenvalues) == 1

    def test_prime_field_refused(self, gf2_dual_numbers):
        fs = frobenius_structure(gf2_dual_numbers.algebra)
        with pytest.raises(CharacteristicError):
            nakayama_grading(fs)
        assert nakayama_grading(fs, permit_prime_field=True).eigenvalues
