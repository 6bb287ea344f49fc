"""Degree sets of Nil and H^2 x E^1 Seifert manifolds"""

from collections import defaultdict
from typing import DefaultDict, Dict, List

from selfdeg.core.degset import normalize
from selfdeg.core.manifold import euler_number, nil_triple, orbifold_chi
from selfdeg.core.unit_classes import stabilizer_data, unit_of
from selfdeg.types.degree_types import (
    AllIntegers,
    DegreeSet,
    IntersectionOf,
    Periodic,
    RootPredicate,
    SquaresOf,
)
from selfdeg.types.engine_types import UnitClassData
from selfdeg.types.exceptions import InvalidInputError
from selfdeg.types.manifold_types import Seifert

NIL_PREDICATES = {
    (2, 3, 6): RootPredicate.LOESCHIAN_1_MOD_6,
    (3, 3, 3): RootPredicate.LOESCHIAN_1_MOD_3,
    (2, 4, 4): RootPredicate.TWO_SQUARES_1_MOD_4,
}


def d_nil_seifert(s: Seifert) -> DegreeSet:
    """D(M) for the Nil Seifert manifolds over the three Euclidean triangle orbifolds"""
    triple = nil_triple(s)
    if triple is None or euler_number(s) == 0:
        raise InvalidInputError(
            "Only Nil Seifert manifolds over S^2(2,3,6), S^2(3,3,3) and S^2(2,4,4) "
            "have a Seifert formula: use TB/TSB for the others"
        )
    return SquaresOf(predicate=NIL_PREDICATES[triple])


def fiber_classes(s: Seifert) -> Dict[int, UnitClassData]:
    """Unit-class data of the betas, one entry per distinct exceptional multiplicity"""
    betas: DefaultDict[int, List[int]] = defaultdict(list)
    for slope in s.slopes:
        if slope.alpha >= 2:
            betas[slope.alpha].append(slope.beta)
    return {
        alpha: stabilizer_data(alpha, unit_of(alpha), labels)
        for alpha, labels in sorted(betas.items())
    }


def d_h2e1(s: Seifert) -> DegreeSet:
    """D(M) for a Seifert manifold with e = 0 over a hyperbolic base orbifold"""
    if euler_number(s) != 0 or orbifold_chi(s) >= 0:
        raise InvalidInputError("H^2 x E^1 manifolds need e = 0 and χ < 0")
    factors = tuple(
        Periodic(residues=data.residues) for data in fiber_classes(s).values()
    )
    if not factors:
        return AllIntegers()
    return normalize(IntersectionOf(members=factors))
