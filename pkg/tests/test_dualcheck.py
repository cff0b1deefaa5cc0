"""Dual bialgebroid and translation map tests

Requirements:
- The translation map identities of U hold for envelopes and Hopf algebras
- A translation with swapped coproduct legs breaks the mixed coproduct identities
- U* is an associative unital algebra with commuting source and target maps
- The right Hopf identities Rch1 to Rch9 of U* hold and, for U = H, φ⁻ ⊗ φ⁺ = S*(φ₍₁₎) ⊗ φ₍₂₎
- u ⇀ φ and u ⇀̃ φ differ on non-commutative Hopf algebras
- Contraactions become U*-actions and U-modules become U*-comodules
- k_ς is an aYD contramodule when S(u₍₂₎)ςu₍₁₎ = ε(u)ς, _σA always, A only for a symmetric functional
"""

import dataclasses

import numpy as np
import pytest

from bvext.algcore import frobenius_structure, validate_algebra
from bvext.cyclic import frobenius_contraaction
from bvext.dualcheck import (
    ENVELOPE,
    HOPF,
    ayd_report,
    build_envelope,
    build_from_hopf,
    dictionary_report,
    dual_instance,
    dual_report,
    dual_translation,
    ground_algebra,
    harpoon_slice_witness,
    hopf_galois_report,
    sch_report,
)
from bvext.errors import DimensionMismatch
from bvext.hochschild import algebra_bimodule
from bvext.hopf import trivial_contraaction


class TestLeftHopfAlgebroid:
    """build_envelope, build_from_hopf and the Sch identities"""

    def test_envelope_shape(self, dual_numbers):
        u = build_envelope(dual_numbers)
        assert u.kind == ENVELOPE
        assert u.dim == 4
        assert u.base_dim == 2
        assert u.rank == 2
        assert validate_algebra(u.carrier).passed

    def test_hopf_over_ground_field(self, sweedler):
        u = build_from_hopf(sweedler)
        assert u.kind == HOPF
        assert u.base_dim == 1
        assert u.rank == sweedler.dim
        assert ground_algebra(sweedler.field).dim == 1

    @pytest.mark.parametrize("name", ["dual_numbers", "nakayama_algebra"])
    def test_sch_on_envelopes(self, name, request):
        report = sch_report(build_envelope(request.getfixturevalue(name)))
        assert report.passed, report.first_failure()

    def test_sch_on_hopf(self, sweedler):
        report = sch_report(build_from_hopf(sweedler))
        assert report.passed, report.first_failure()
        assert report.get("Sch7").cases == 4

    @pytest.mark.parametrize("name", ["dual_numbers", "group_c2", "sweedler"])
    def test_mixed_coproduct_identities(self, name, request):
        instance = request.getfixturevalue(name)
        u = build_envelope(instance) if name == "dual_numbers" else build_from_hopf(instance)
        report = sch_report(u)
        assert report.get("Sch4").passed
        assert report.get("Sch5").passed
        assert report.get("Sch4").cases == u.dim * u.rank * u.rank

    def test_swapped_translation_is_caught(self, sweedler):
        """u₍₂₎ ⊗ S(u₍₁₎) instead of u₍₁₎ ⊗ S(u₍₂₎)"""
        swapped = np.tensordot(sweedler.comult, sweedler.antipode, axes=([1], [1]))
        u = dataclasses.replace(build_from_hopf(sweedler), translation=swapped)
        report = sch_report(u)
        assert not report.get("Sch4").passed
        assert not report.get("Sch5").passed
        assert report.get("Sch4").witness is not None

    def test_frame_shape_is_checked(self, dual_numbers):
        u = build_envelope(dual_numbers)
        with pytest.raises(DimensionMismatch):
            dataclasses.replace(u, frame=u.frame.reshape(u.dim, u.base_dim, u.base_dim))


class TestDualBialgebroid:
    """U* and its structure report"""

    def test_dimension(self, truncated_cubic):
        d = dual_instance(build_envelope(truncated_cubic))
        assert d.dim == 9
        assert len(d.basis) == 9

    def test_structure_on_envelope(self, nakayama_algebra):
        d = dual_instance(build_envelope(nakayama_algebra), verify=True)
        report = d.structure_report
        assert report.passed, report.first_failure()
        assert report.get("LDMon.associativity").passed
        assert report.get("trattovideo").passed

    def test_structure_on_hopf(self, sweedler):
        report = dual_instance(build_from_hopf(sweedler)).structure_report
        assert report.passed, report.first_failure()
        assert report.get("product_matches_dual_hopf").passed

    def test_coordinates_round_trip(self, dual_numbers):
        d = dual_instance(build_envelope(dual_numbers))
        f = d.field
        for k, phi in enumerate(d.basis):
            assert list(d.coordinates(phi)) == list(f.unit_vector(d.dim, k))
            assert (d.from_coordinates(d.coordinates(phi)) == phi).all()

    def test_unit_is_counit_of_u(self, dual_numbers):
        d = dual_instance(build_envelope(dual_numbers))
        for phi in d.basis:
            assert (d.product(d.unit, phi) == phi).all()
            assert (d.product(phi, d.unit) == phi).all()


class TestTranslation:
    """φ⁻ ⊗ φ⁺ and the right Hopf identities"""

    @pytest.mark.parametrize("name", ["group_c2", "sweedler", "gf2_dual_numbers"])
    def test_hopf_galois_on_hopf(self, name, request):
        d = dual_instance(build_from_hopf(request.getfixturevalue(name)))
        report = hopf_galois_report(d)
        assert report.passed, report.first_failure()
        assert report.get("translation_matches_antipode").passed
        for name in ("Rch1", "Rch4", "Rch5", "Rch6"):
            assert report.get(name).passed

    def test_hopf_galois_on_envelope(self, dual_numbers):
        report = hopf_galois_report(dual_instance(build_envelope(dual_numbers)))
        assert report.passed, report.first_failure()
        assert report.get("translation_matches_antipode") is None
        for name in ("Rch1", "Rch4", "Rch5", "Rch6"):
            assert report.get(name).passed

    def test_identity_case_counts(self, sweedler):
        d = dual_instance(build_from_hopf(sweedler))
        report = hopf_galois_report(d)
        assert report.get("Rch1").cases == 4
        assert report.get("Rch4").cases == 4 * 4 * 4 * 4
        assert report.get("Rch6").cases == 16

    def test_translation_has_one_term_per_dual_basis_element(self, matrix_m2):
        d = dual_instance(build_envelope(matrix_m2))
        assert len(dual_translation(d, d.basis[0]).terms) == 4

    def test_harpoon_differs_from_slice(self, sweedler):
        """S(x) = −gx ≠ x is seen by the pairing"""
        assert harpoon_slice_witness(dual_instance(build_from_hopf(sweedler))) is not None

    def test_harpoon_equals_slice_on_commutative_group(self, group_c2):
        assert harpoon_slice_witness(dual_instance(build_from_hopf(group_c2))) is None


class TestDictionary:
    """Contraactions and modules through U*"""

    def test_hopf_contraaction(self, sweedler):
        u = build_from_hopf(sweedler)
        report = dictionary_report(u, trivial_contraaction(sweedler))
        assert report.passed, report.first_failure()
        assert report.get("bellitalia").passed
        assert report.get("mistmistmist").passed
        assert report.get("vetrorotto").passed

    def test_frobenius_contraaction_on_envelope(self, nakayama_algebra):
        fs = frobenius_structure(nakayama_algebra)
        report = dictionary_report(build_envelope(nakayama_algebra), frobenius_contraaction(fs))
        assert report.passed, report.first_failure()
        assert report.get("contramodule.contraassociativity").passed

    def test_dual_report(self, group_c2):
        report = dual_report(build_from_hopf(group_c2), trivial_contraaction(group_c2))
        assert report.passed, report.first_failure()
        assert report.dimensions["U*"] == [2]
        assert report.get("sch.Sch1").passed
        assert report.get("dictionary.unit_acts_trivially").passed
        assert report.get("ayd.nawas1").passed

    def test_dual_report_without_contraaction(self, dual_numbers):
        report = dual_report(build_envelope(dual_numbers))
        assert report.passed, report.first_failure()
        assert not any(c.name.startswith("dictionary.") for c in report.checks)


class TestAntiYetterDrinfeld:
    """romaedintorni and nawas1 for k_ς, _σA and A"""

    def test_trivial_contraaction_on_sweedler(self, sweedler):
        report = ayd_report(build_from_hopf(sweedler), trivial_contraaction(sweedler))
        assert report.passed, report.first_failure()
        assert report.get("nawas1").cases == 16
        assert report.findings == []

    def test_untwisted_grouplike_on_sweedler(self, sweedler):
        """S(x₍₂₎)x₍₁₎ = 2x ≠ ε(x)"""
        h = sweedler.with_grouplike(sweedler.algebra.unit)
        report = ayd_report(build_from_hopf(h), trivial_contraaction(h))
        assert report.get("romaedintorni").passed
        assert not report.get("nawas1").passed
        assert report.get("nawas1").witness["u"] == 2
        assert report.findings[0].startswith("stablehalt:")

    @pytest.mark.parametrize("name", ["group_c2", "gf2_dual_numbers"])
    def test_cocommutative_hopf(self, name, request):
        h = request.getfixturevalue(name)
        assert ayd_report(build_from_hopf(h), trivial_contraaction(h)).passed

    @pytest.mark.parametrize("name", ["dual_numbers", "nakayama_algebra"])
    def test_frobenius_on_twisted_module(self, name, request):
        A = request.getfixturevalue(name)
        report = ayd_report(build_envelope(A), frobenius_contraaction(frobenius_structure(A)))
        assert report.passed, report.first_failure()
        assert report.findings == []

    def test_frobenius_on_algebra_of_symmetric_functional(self, dual_numbers):
        fs = frobenius_structure(dual_numbers)
        report = ayd_report(build_envelope(dual_numbers), frobenius_contraaction(fs, algebra_bimodule(dual_numbers)))
        assert report.passed, report.first_failure()

    def test_frobenius_on_algebra_with_nakayama_twist(self, nakayama_algebra):
        """The left action read off γ is a·m = σ(a)m"""
        fs = frobenius_structure(nakayama_algebra)
        report = ayd_report(build_envelope(nakayama_algebra), frobenius_contraaction(fs, algebra_bimodule(nakayama_algebra)))
        assert not report.get("romaedintorni").passed
        assert not report.get("nawas1").passed
