"""Exact field and linear-algebra kernel tests

Requirements:
- Arithmetic over Q and GF(p) is exact; p must be prime
- rref, kernel, image and membership agree with hand computations
- Quotients send representatives to unit vectors and kill the denominator
"""

import numpy as np
import pytest

from bvext.errors import CharacteristicError, ContainmentError, DimensionMismatch, FieldError
from bvext.exactfield import (
    FieldSpec,
    Subspace,
    image_basis,
    kernel_basis,
    membership,
    quotient,
    rank,
    rref,
)


class TestFieldSpec:
    """FieldSpec parsing and scalar conversion"""

    @pytest.mark.parametrize("text", ["Q", "q", "QQ", "rationals"])
    def test_parse_rationals(self, text):
        """Every spelling of the rationals parses to characteristic 0"""
        assert FieldSpec.parse(text).characteristic == 0

    @pytest.mark.parametrize("value", ["GF7", "GF(7)", {"GF": 7}, "gf7"])
    def test_parse_prime_field(self, value):
        """GF7, GF(7) and {"GF": 7} name the same field"""
        assert FieldSpec.parse(value) == FieldSpec.prime(7)

    @pytest.mark.parametrize("value", ["GF4", "GF(1)", "R", {"F": 2}, 3])
    def test_parse_rejects_unknown_fields(self, value):
        """Composite moduli and unknown names raise FieldError"""
        with pytest.raises(FieldError):
            FieldSpec.parse(value)

    def test_field_error_exit_code(self):
        assert FieldError("x").exit_code == 4

    def test_fraction_strings(self, QQ):
        """"p/q" strings convert exactly"""
        assert QQ("1/3") + QQ("2/3") == QQ.one
        assert QQ.serialize(QQ("-6/4")) == "-3/2"

    def test_prime_field_reduces(self):
        f = FieldSpec.prime(5)
        assert f(7) == f(2)
        assert f("1/2") * f(2) == f.one
        assert f.serialize(f(-1)) == "4"

    def test_denominator_divisible_by_p(self):
        with pytest.raises(FieldError):
            FieldSpec.prime(3)("1/3")

    def test_characteristic_zero_guard(self, GF2):
        """Characteristic-zero operations refuse GF(p) unless permitted"""
        with pytest.raises(CharacteristicError):
            GF2.require_characteristic_zero("eigen-splitting")
        GF2.require_characteristic_zero("eigen-splitting", permit=True)

    def test_json_label_round_trip(self):
        for f in (FieldSpec.rationals(), FieldSpec.prime(11)):
            assert FieldSpec.parse(f.to_json()) == f


class TestRref:
    """Reduced row echelon form"""

    def test_identity(self, QQ):
        result = rref(QQ.identity(2), QQ)
        assert result.rank == 2
        assert result.pivots == (0, 1)

    def test_zero(self, QQ):
        result = rref(QQ.zeros((3, 3)), QQ)
        assert result.rank == 0
        assert result.pivots == ()

    def test_rank_one(self, QQ):
        """[[1,2],[2,4]] reduces to [[1,2],[0,0]]"""
        result = rref(QQ.array([[1, 2], [2, 4]]), QQ)
        assert result.rank == 1
        assert list(result.reduced[0]) == [QQ(1), QQ(2)]
        assert all(x == 0 for x in result.reduced[1])

    def test_rank_depends_on_field(self, QQ):
        """[[1,1],[1,-1]] is invertible over Q but singular over GF(2)"""
        m = [[1, 1], [1, -1]]
        assert rank(QQ.array(m), QQ) == 2
        assert rank(FieldSpec.prime(2).array(m), FieldSpec.prime(2)) == 1


class TestSubspaces:
    """Kernels, images and membership"""

    def test_kernel_dimension(self, QQ):
        """dim ker = cols − rank"""
        m = QQ.array([[1, 2, 3], [2, 4, 6]])
        kernel = kernel_basis(m, QQ)
        assert kernel.dim == 2
        for row in kernel.basis:
            assert all(x == 0 for x in m.dot(row))

    def test_kernel_of_invertible_is_zero(self, QQ):
        assert kernel_basis(QQ.identity(3), QQ).dim == 0

    def test_image(self, QQ):
        m = QQ.array([[1, 0], [0, 0], [0, 1]])
        image = image_basis(m, QQ)
        assert image.dim == 2
        assert image.contains(QQ.array([3, 0, 5]))
        assert not image.contains(QQ.array([0, 1, 0]))

    def test_membership_coordinates(self, QQ):
        s = Subspace.span(QQ, 3, QQ.array([[1, 1, 0], [0, 1, 1]]))
        v = QQ.array([2, 5, 3])
        coords = membership(s, v)
        assert coords is not None
        assert all(s.combine(coords) == v)

    def test_membership_rejects_wrong_shape(self, QQ):
        s = Subspace.full(QQ, 2)
        with pytest.raises(DimensionMismatch):
            membership(s, QQ.array([1, 2, 3]))

    def test_canonical_basis_makes_equality_structural(self, QQ):
        """Different spanning sets of the same subspace compare equal"""
        a = Subspace.span(QQ, 2, QQ.array([[1, 1]]))
        b = Subspace.span(QQ, 2, QQ.array([[3, 3], [-2, -2]]))
        assert a == b


class TestQuotient:
    """Quotient presentations"""

    def test_reduce_representatives_and_denominator(self, QQ):
        numerator = Subspace.span(QQ, 3, QQ.array([[1, 0, 0], [0, 1, 0]]))
        denominator = Subspace.span(QQ, 3, QQ.array([[1, 1, 0]]))
        q = quotient(numerator, denominator)
        assert q.dim == 1
        rep = q.class_reps[0]
        assert list(q.reduce(rep)) == [QQ.one]
        assert all(x == 0 for x in q.reduce(QQ.array([1, 1, 0])))
        assert q.is_trivial(QQ.array([2, 2, 0]))

    def test_denominator_must_be_contained(self, QQ):
        numerator = Subspace.span(QQ, 2, QQ.array([[1, 0]]))
        denominator = Subspace.span(QQ, 2, QQ.array([[0, 1]]))
        with pytest.raises(ContainmentError):
            quotient(numerator, denominator)

    def test_trivial_quotient(self, QQ):
        full = Subspace.full(QQ, 2)
        assert quotient(full, full).dim == 0
        assert quotient(full, Subspace.zero(QQ, 2)).dim == 2
