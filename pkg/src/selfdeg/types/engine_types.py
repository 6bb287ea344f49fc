"""Types produced by the degree engine"""

from typing import Dict, Tuple

from pydantic import model_validator
from typing_extensions import Self

from selfdeg.types.base_types import FrozenModel
from selfdeg.types.residue_types import ResidueSet


class UnitClassData(FrozenModel):
    """Multiplicity data of unit classes and the stabilizer set built from it.

    Classes are either cosets of the unit squares (lens summands) or single
    units (exceptional fibers); each class is named by its least residue.
    """

    modulus: int
    classes: Tuple[int, ...]
    """Representative of every class of the group"""
    counts: Dict[int, int]
    """class representative -> multiplicity l"""
    b_sets: Dict[int, Tuple[int, ...]]
    """l -> B_l, only for the l that occur"""
    c_sets: Dict[int, Tuple[int, ...]]
    """l -> C_l, only for the l that occur"""
    stabilizer: Tuple[int, ...]
    """C, the intersection of all C_l"""
    residues: ResidueSet
    """Preimage of C as residues mod `modulus`"""


class ReversalReport(FrozenModel):
    """Orientation-reversal predicates of a lens space"""

    has_degree_minus_one: bool
    has_orientation_reversing_homeo: bool
    every_degree_minus_one_homotopic_to_homeo: bool

    @model_validator(mode="after")
    def validate_implications(self) -> Self:
        """A reversing homeomorphism is a degree -1 map"""
        if self.has_orientation_reversing_homeo and not self.has_degree_minus_one:
            raise ValueError("orientation-reversing homeomorphism without degree -1")
        if (
            self.every_degree_minus_one_homotopic_to_homeo
            and self.has_degree_minus_one
            and not self.has_orientation_reversing_homeo
        ):
            raise ValueError("degree -1 maps homotopic to a missing homeomorphism")
        return self
