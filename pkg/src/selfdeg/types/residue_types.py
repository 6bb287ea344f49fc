"""Types for factorizations and residue-class sets"""

from bisect import bisect_left
from typing import Iterable, Tuple

from pydantic import Field, model_validator
from typing_extensions import Self

from selfdeg.types.base_types import FrozenModel


class Factorization(FrozenModel):
    """Prime factorization of a positive integer"""

    n: int = Field(ge=1)
    """The factored integer"""
    factors: Tuple[Tuple[int, int], ...] = ()
    """(prime, exponent) pairs, primes strictly increasing"""

    @model_validator(mode="after")
    def validate_factors(self) -> Self:
        """Checks that the factors multiply back to n in canonical order"""
        product = 1
        previous = 1
        for prime, exponent in self.factors:
            if prime <= previous or exponent < 1:
                raise ValueError(f"Factors of {self.n} are not in canonical order")
            product *= prime**exponent
            previous = prime
        if product != self.n:
            raise ValueError(f"Factors multiply to {product}, not {self.n}")
        return self

    @property
    def primes(self) -> Tuple[int, ...]:
        """The distinct primes dividing n"""
        return tuple(prime for prime, _ in self.factors)


class ResidueSet(FrozenModel):
    """A set of integers described by its residues modulo `modulus`.

    Membership of d is decided by d mod modulus alone; modulus 1 with
    residues (0,) is the set of all integers.
    """

    modulus: int = Field(ge=1)
    """The period of the set"""
    residues: Tuple[int, ...] = ()
    """Sorted, duplicate-free residues in [0, modulus)"""

    @model_validator(mode="after")
    def validate_residues(self) -> Self:
        """Checks that residues are sorted, unique and reduced"""
        previous = -1
        for residue in self.residues:
            if not previous < residue < self.modulus:
                raise ValueError(
                    f"Residues must be sorted, unique and in [0, {self.modulus})"
                )
            previous = residue
        return self

    @classmethod
    def of(cls, modulus: int, values: Iterable[int]) -> "ResidueSet":
        """Builds a ResidueSet from arbitrary integers, reducing them mod `modulus`"""
        return cls(modulus=modulus, residues=tuple(sorted({v % modulus for v in values})))

    def __contains__(self, d: int) -> bool:
        """Membership is decided by d mod modulus"""
        r = d % self.modulus
        i = bisect_left(self.residues, r)
        return i < len(self.residues) and self.residues[i] == r

    @property
    def is_everything(self) -> bool:
        """True when every integer is a member"""
        return len(self.residues) == self.modulus
