"""Tests the exact number theory helpers"""

import pytest

from selfdeg.core.numth import (
    crt_merge,
    euler_phi,
    factorize,
    is_perfect_square,
    lift,
    minimal_period,
    minus_one_is_square_mod,
    residue_negate,
    residue_product,
    residue_union,
    square_divisors,
    squares_mod,
    units_mod,
)
from selfdeg.types import ResidueSet
from selfdeg.types.exceptions import InvalidInputError

from .test_base import TestSelfDeg_Base


class TestSelfDeg_Numth(TestSelfDeg_Base):
    """Tests factorization, unit groups and residue-set arithmetic"""

    def test_factorize(self):
        """Factorizations come back in canonical order"""
        assert factorize(360).factors == ((2, 3), (3, 2), (5, 1))
        assert factorize(1).factors == ()
        assert factorize(97).primes == (97,)
        with pytest.raises(InvalidInputError):
            factorize(0)
        with pytest.raises(InvalidInputError):
            factorize(-12)

    def test_units_and_squares(self):
        """Units and squares modulo small m"""
        assert units_mod(8).residues == (1, 3, 5, 7)
        assert units_mod(1).residues == (0,)
        assert squares_mod(7).residues == (0, 1, 2, 4)
        assert squares_mod(7, units_only=True).residues == (1, 2, 4)
        assert squares_mod(8).residues == (0, 1, 4)
        assert squares_mod(24, units_only=True).residues == (1,)
        with pytest.raises(InvalidInputError):
            units_mod(0)

    def test_crt_merge(self):
        """Intersections over the lcm, including incompatible residues"""
        merged = crt_merge(ResidueSet(modulus=4, residues=(1,)), ResidueSet(modulus=6, residues=(3,)))
        assert merged == ResidueSet(modulus=12, residues=(9,))
        empty = crt_merge(ResidueSet(modulus=4, residues=(0,)), ResidueSet(modulus=6, residues=(1,)))
        assert empty.modulus == 12
        assert empty.residues == ()
        everything = ResidueSet(modulus=1, residues=(0,))
        assert crt_merge(everything, ResidueSet(modulus=5, residues=(1, 4))).residues == (1, 4)

    def test_residue_arithmetic(self):
        """Union, negation, product and lifting of residue sets"""
        evens = ResidueSet(modulus=2, residues=(0,))
        threes = ResidueSet(modulus=3, residues=(0,))
        assert residue_union(evens, threes) == ResidueSet(modulus=6, residues=(0, 2, 3, 4))
        assert residue_negate(ResidueSet(modulus=7, residues=(1, 2, 4))).residues == (3, 5, 6)
        squares = squares_mod(7, units_only=True)
        assert residue_product(squares, squares) == squares
        assert lift(ResidueSet(modulus=3, residues=(1,)), 6).residues == (1, 4)
        with pytest.raises(InvalidInputError):
            lift(ResidueSet(modulus=3, residues=(1,)), 7)
        with pytest.raises(InvalidInputError):
            residue_product(evens, threes)

    def test_minimal_period(self):
        """A residue set is rewritten at its smallest period"""
        assert minimal_period(ResidueSet(modulus=12, residues=(1, 5, 9))) == ResidueSet(
            modulus=4, residues=(1,)
        )
        assert minimal_period(ResidueSet(modulus=2, residues=(0, 1))).modulus == 1
        as_is = ResidueSet(modulus=35, residues=(1, 11, 16))
        assert minimal_period(as_is) == as_is

    def test_squares_and_divisors(self):
        """Perfect squares, square divisors and the totient"""
        assert is_perfect_square(49) == 7
        assert is_perfect_square(0) == 0
        assert is_perfect_square(50) is None
        assert is_perfect_square(-4) is None
        assert square_divisors(72) == [1, 2, 3, 6]
        assert square_divisors(-50) == [1, 5]
        assert euler_phi(36) == 12
        assert euler_phi(1) == 1
        with pytest.raises(InvalidInputError):
            square_divisors(0)

    def test_minus_one_is_square_mod(self):
        """-1 is a square mod p exactly when a brute-force search finds a root"""
        for p in range(1, 200):
            brute = any((h * h + 1) % p == 0 for h in range(p))
            assert minus_one_is_square_mod(p) == brute, p
