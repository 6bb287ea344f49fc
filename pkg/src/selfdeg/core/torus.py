"""Degree sets of torus bundles and torus semi-bundles"""

import math
from typing import Optional, Tuple

from selfdeg.core.degset import scale, union
from selfdeg.core.manifold import classify, semibundle_shape
from selfdeg.core.numth import factorize
from selfdeg.types.degree_types import (
    AllIntegers,
    DegreeSet,
    FormImage,
    Periodic,
    RootPredicate,
    SquaresOf,
    UnitTimesForm,
)
from selfdeg.types.exceptions import InvalidInputError, InvariantViolationError
from selfdeg.types.form_types import BinaryForm, SolConditions
from selfdeg.types.manifold_types import Geometry, TorusBundle
from selfdeg.types.residue_types import ResidueSet

FINITE_ORDER_BY_TRACE = {1: 6, 0: 4, -1: 3}
DELTA_BY_ORDER = {3: 1, 4: 0, 6: 1}


def _require_unimodular(a: int, b: int, c: int, d: int) -> None:
    det = a * d - b * c
    if det != 1:
        raise InvalidInputError(f"det = {det} ≠ 1")


def sol_form(a: int, b: int, c: int, d: int) -> BinaryForm:
    """c p^2 + (d - a) pr - b r^2, the Sol form scaled by c"""
    return BinaryForm(A=c, B=d - a, C=-b)


def d_torus_bundle(a: int, b: int, c: int, d: int) -> DegreeSet:
    """D(M_phi) for the torus bundle with monodromy (a, b; c, d)"""
    _require_unimodular(a, b, c, d)
    geometry = classify(TorusBundle(a=a, b=b, c=c, d=d))
    if geometry == Geometry.E3:
        if (b, c) == (0, 0) and a == d:
            return AllIntegers()
        k = FINITE_ORDER_BY_TRACE[a + d]
        return UnitTimesForm(k=k, form=BinaryForm(A=1, B=-DELTA_BY_ORDER[k], C=1))
    if geometry == Geometry.NIL:
        return SquaresOf(predicate=RootPredicate.ALL)
    return FormImage(form=sol_form(a, b, c, d), conditions=SolConditions(a=a, b=b, c=c, d=d))


def semibundle_delta(a: int, d: int) -> int:
    """ad / gcd(a, d)^2, sign kept"""
    return (a * d) // math.gcd(a, d) ** 2


def d_torus_semibundle(a: int, b: int, c: int, d: int) -> DegreeSet:
    """D(N_phi) for the torus semi-bundle glued by (a, b; c, d) in canonical coordinates"""
    shape = semibundle_shape(a, b, c, d)
    if shape is None:
        raise InvalidInputError(
            f"({a},{b};{c},{d}) is not a canonical semi-bundle gluing"
        )
    odd_squares = SquaresOf(predicate=RootPredicate.ODD)
    if shape == "identity":
        return AllIntegers()
    if shape == "antidiagonal":
        return Periodic(residues=ResidueSet(modulus=2, residues=(1,)))
    if shape == "lower_unipotent":
        return SquaresOf(predicate=RootPredicate.ALL)
    if shape in ("flip_shear", "upper_unipotent"):
        return odd_squares
    delta = semibundle_delta(a, d)
    if delta % 2 == 0:
        return odd_squares
    return union(odd_squares, scale(delta, odd_squares))


def bundle_order(a: int, b: int, c: int, d: int) -> Optional[int]:
    """Order of (a, b; c, d) in SL(2, Z), None when infinite"""
    power = (a, b, c, d)
    for k in range(1, 7):
        if power == (1, 0, 0, 1):
            return k
        w, x, y, z = power
        power = (w * a + x * c, w * b + x * d, y * a + z * c, y * b + z * d)
    return None


def sol_minus_one_witness(a: int, b: int, c: int, d: int) -> Optional[Tuple[int, int]]:
    """A pair (p, r) realizing degree -1 on a Sol bundle of trace +-3, None for other traces"""
    _require_unimodular(a, b, c, d)
    trace = a + d
    if abs(trace) != 3:
        return None
    p, r = (1 - d, c) if trace == 3 else (-1 - d, c)
    conditions = SolConditions(a=a, b=b, c=c, d=d)
    if sol_form(a, b, c, d)(p, r) != -c or not conditions.admits(p, r):
        raise InvariantViolationError(f"({p}, {r}) does not realize -1 for ({a},{b};{c},{d})")
    return p, r


def trace_obstructs_minus_one(trace: int) -> bool:
    """True when trace^2 - 4 has a prime 3 mod 4 to an odd power, which rules out degree -1"""
    discriminant = trace * trace - 4
    if discriminant <= 0:
        return False
    return any(
        prime % 4 == 3 and exponent % 2 == 1
        for prime, exponent in factorize(discriminant).factors
    )
