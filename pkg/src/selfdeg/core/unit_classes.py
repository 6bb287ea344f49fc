"""Stabilizer sets of unit-class multiplicities, shared by lens sums and exceptional fibers"""

from collections import Counter
from typing import Callable, Dict, Iterable, List, Tuple

from selfdeg.core.numth import squares_mod, units_mod
from selfdeg.types.engine_types import UnitClassData
from selfdeg.types.exceptions import InvariantViolationError
from selfdeg.types.residue_types import ResidueSet

ClassOf = Callable[[int], int]


def square_coset_of(modulus: int) -> ClassOf:
    """Maps a unit mod `modulus` to the least residue of its coset of unit squares"""
    squares = squares_mod(modulus, units_only=True).residues

    def class_of(unit: int) -> int:
        return min((unit * s) % modulus for s in squares)

    return class_of


def unit_of(modulus: int) -> ClassOf:
    """Maps an integer coprime to `modulus` to its residue"""
    return lambda unit: unit % modulus


def stabilizer_data(
    modulus: int, class_of: ClassOf, labels: Iterable[int]
) -> UnitClassData:
    """Builds the multiplicities, B_l, C_l and their intersection C.

    Parameters
    ----------
    modulus : int
        The modulus of the unit group
    class_of : ClassOf
        Projection from units to class representatives; must be a group homomorphism
    labels : Iterable[int]
        Units counted with repetition (lens q's or fiber betas)

    Returns
    -------
    UnitClassData
        C is the set of classes a with a * B_l = B_l for every l >= 1, and its
        preimage is returned as residues mod `modulus`
    """
    units = units_mod(modulus).residues
    classes = tuple(sorted({class_of(u) for u in units}))
    counts = Counter(class_of(label % modulus) for label in labels)

    b_sets: Dict[int, Tuple[int, ...]] = {}
    for cls, count in counts.items():
        b_sets[count] = b_sets.get(count, ()) + (cls,)
    b_sets = {count: tuple(sorted(b)) for count, b in sorted(b_sets.items())}

    c_sets: Dict[int, Tuple[int, ...]] = {}
    for count, b in b_sets.items():
        members = set(b)
        c_sets[count] = tuple(
            a for a in classes if all(class_of(a * x) in members for x in b)
        )

    stabilizer: List[int] = [
        a for a in classes if all(a in c for c in c_sets.values())
    ]
    identity = class_of(1 % modulus)
    if identity not in stabilizer:
        raise InvariantViolationError(f"Stabilizer mod {modulus} does not contain 1")
    if any(class_of(a * b) not in stabilizer for a in stabilizer for b in stabilizer):
        raise InvariantViolationError(f"Stabilizer mod {modulus} is not closed")

    return UnitClassData(
        modulus=modulus,
        classes=classes,
        counts={cls: counts.get(cls, 0) for cls in classes},
        b_sets=b_sets,
        c_sets=c_sets,
        stabilizer=tuple(stabilizer),
        residues=ResidueSet.of(modulus, (u for u in units if class_of(u) in stabilizer)),
    )
