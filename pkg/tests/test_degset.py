"""Tests membership, enumeration, normalization and description of degree sets"""

import pytest

from selfdeg.core.degset import (
    EMPTY,
    contains,
    describe,
    enumerate,
    has_trivial_band,
    intersect,
    negate,
    normalize,
    scale,
    union,
)
from selfdeg.types import (
    AllIntegers,
    BinaryForm,
    Finite,
    FormImage,
    IntersectionOf,
    Periodic,
    ResidueSet,
    RootPredicate,
    SolConditions,
    SquaresOf,
    TrivialBand,
    UnionOf,
    UnitTimesForm,
)
from selfdeg.types.exceptions import InvalidInputError, UnsupportedClassError

from .test_base import TestSelfDeg_Base


def periodic(modulus, *residues):
    return Periodic(residues=ResidueSet.of(modulus, residues))


class TestSelfDeg_DegreeSets(TestSelfDeg_Base):
    """Tests the degree set algebra on hand-checked shapes"""

    def test_periodic_membership(self):
        """Residues decide membership, including negative degrees"""
        s = periodic(35, 1, 11, 16)
        assert contains(s, 36)
        assert contains(s, -19)
        assert not contains(s, 0)
        assert enumerate(s, -40, 40) == [-34, -24, -19, 1, 11, 16, 36]

    def test_squares(self):
        """Root predicates filter the squares"""
        odd = SquaresOf(predicate=RootPredicate.ODD)
        assert enumerate(odd, -5, 50) == [1, 9, 25, 49]
        assert not contains(odd, 4)
        assert not contains(odd, -1)
        everything = SquaresOf()
        assert enumerate(everything, 0, 16) == [0, 1, 4, 9, 16]
        assert enumerate(everything, 2, 8) == [4]
        assert enumerate(everything, -9, -1) == []
        nil = SquaresOf(predicate=RootPredicate.LOESCHIAN_1_MOD_6)
        assert enumerate(nil, 1, 400) == [1, 49, 169, 361]
        assert not contains(nil, 25)
        assert contains(SquaresOf(predicate=RootPredicate.TWO_SQUARES_1_MOD_4), 25)
        assert not contains(SquaresOf(predicate=RootPredicate.TWO_SQUARES_1_MOD_4), 9)

    def test_form_images(self):
        """Plain and Sol-conditioned form images"""
        golden = FormImage(form=BinaryForm(A=1, B=-1, C=-1))
        assert enumerate(golden, 1, 20) == [1, 4, 5, 9, 11, 16, 19, 20]
        sol = FormImage(
            form=BinaryForm(A=2, B=2, C=-1),
            conditions=SolConditions(a=1, b=1, c=2, d=3),
        )
        assert enumerate(sol, 1, 13) == [1, 4, 6, 9, 13]
        assert contains(sol, -2)
        assert contains(sol, -3)
        assert not contains(sol, -1)
        assert contains(sol, 0)

    def test_unit_times_form(self):
        """(kt + 1) times a value of a definite model form"""
        s = UnitTimesForm(k=4, form=BinaryForm(A=1, B=0, C=1))
        assert contains(s, 5)
        assert contains(s, -3)
        assert not contains(s, 3)
        assert contains(s, 0)
        assert describe(s) == "{ (4t+1)(p^2 + q^2) : t, p, q ∈ Z }"
        hexagonal = UnitTimesForm(k=3, form=BinaryForm(A=1, B=-1, C=1))
        assert describe(hexagonal) == "{ (3t+1)(p^2 - pq + q^2) : t, p, q ∈ Z }"
        assert contains(hexagonal, -2)
        assert not contains(hexagonal, 2)

    def test_trivial_band(self):
        """Kleene logic leaves -1 unknown and refuses enumeration"""
        band = TrivialBand()
        assert contains(band, 1) is True
        assert contains(band, 0) is True
        assert contains(band, -1) is None
        assert contains(band, 2) is False
        assert has_trivial_band(union(band, Finite(values=(5,))))
        assert contains(UnionOf(members=(band, Finite(values=(-1,)))), -1) is True
        assert contains(IntersectionOf(members=(band, Finite(values=(2,)))), -1) is False
        assert contains(IntersectionOf(members=(band, AllIntegers())), -1) is None
        with pytest.raises(UnsupportedClassError):
            enumerate(band, 0, 3)
        with pytest.raises(InvalidInputError):
            enumerate(AllIntegers(), 3, 0)

    def test_normalize(self):
        """Periodic parts fold into one residue set"""
        assert normalize(periodic(4, 0, 1, 2, 3)) == AllIntegers()
        assert normalize(periodic(6, 1, 3, 5)) == periodic(2, 1)
        assert intersect(periodic(5, 1, 4), periodic(7, 1)) == periodic(35, 1, 29)
        assert intersect(periodic(2, 0), periodic(2, 1)) == EMPTY
        assert union(periodic(2, 0), periodic(2, 1)) == AllIntegers()
        assert union(periodic(3, 1), Finite(values=(4, 5))) == UnionOf(
            members=(periodic(3, 1), Finite(values=(5,)))
        )
        assert negate(periodic(7, 1, 2, 4)) == periodic(7, 3, 5, 6)
        assert scale(3, periodic(2, 1)) == periodic(6, 3)
        assert scale(0, SquaresOf()) == Finite(values=(0,))
        nested = UnionOf(members=(UnionOf(members=(periodic(3, 0),)), periodic(3, 1)))
        assert normalize(nested) == periodic(3, 0, 1)

    def test_scaled_members(self):
        """Scaling by a negative factor flips and stretches the members"""
        odd = SquaresOf(predicate=RootPredicate.ODD)
        s = union(odd, scale(-3, odd))
        assert enumerate(s, -30, 30) == [-27, -3, 1, 9, 25]
        assert contains(s, -75)
        assert not contains(s, -9)

    def test_describe(self):
        """Canonical text of every shape"""
        assert describe(AllIntegers()) == "Z"
        assert describe(EMPTY) == "∅"
        assert describe(Finite(values=(0,))) == "{0}"
        assert describe(periodic(35, 1, 11, 16)) == "35Z + {1, 11, 16}"
        assert describe(TrivialBand()) == "{0, 1} ⊆ D ⊆ {-1, 0, 1}"
        assert describe(SquaresOf(predicate=RootPredicate.ODD)) == "{ l^2 : l odd }"
        odd_with_zero = union(SquaresOf(predicate=RootPredicate.ODD), Finite(values=(0,)))
        assert describe(odd_with_zero) == "{ l^2 : l odd } ∪ {0}"
        assert describe(union(periodic(2, 1), Finite(values=(0,)))) == "2Z + {1} ∪ {0}"
        unit_sol = FormImage(
            form=BinaryForm(A=1, B=1, C=-1),
            conditions=SolConditions(a=1, b=1, c=1, d=2),
        )
        assert describe(unit_sol) == "{ p^2 + pr - r^2 : p, r ∈ Z }"

    def test_describe_is_order_independent(self):
        """Unions describe the same whatever order they were built in"""
        a = SquaresOf(predicate=RootPredicate.ODD)
        b = periodic(5, 2)
        assert describe(union(a, b)) == describe(union(b, a))
        assert union(a, b) == union(b, a)
