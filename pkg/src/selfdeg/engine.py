"""
Degree engine: dispatches a manifold descriptor to the formula of its class
"""

import logging
import math
from typing import Optional

from pydantic import ValidationError

from selfdeg.core.degset import contains, union
from selfdeg.core.loggers import Logger
from selfdeg.core.manifold import (
    canonicalize,
    classify,
    ensure_valid,
    essential_pieces,
    is_rp3_sum_rp3,
    order,
)
from selfdeg.core.numth import factorize, minus_one_is_square_mod
from selfdeg.core.seifert import d_h2e1, d_nil_seifert
from selfdeg.core.spherical import d_spherical
from selfdeg.core.sums import d_connected_sum
from selfdeg.core.torus import (
    d_torus_bundle,
    d_torus_semibundle,
    sol_minus_one_witness,
    trace_obstructs_minus_one,
)
from selfdeg.types.degree_types import AllIntegers, DegreeSet, Finite, TrivialBand
from selfdeg.types.engine_types import ReversalReport
from selfdeg.types.exceptions import InvalidInputError, InvariantViolationError
from selfdeg.types.manifold_types import (
    ConnectedSum,
    Geometry,
    ManifoldDesc,
    S2xS1,
    Seifert,
    Spherical,
    SphericalGroup,
    TorusBundle,
    TorusSemiBundle,
)

__all__ = [
    "degrees",
    "geometry_of",
    "lens_reversal_report",
    "minus_one_in",
    "sol_minus_one_witness",
    "spherical_minus_one",
    "trace_obstructs_minus_one",
    "with_zero",
]


def _connected_sum_degrees(desc: ConnectedSum, logger: logging.Logger) -> DegreeSet:
    if is_rp3_sum_rp3(desc):
        logger.debug("RP^3 # RP^3: every integer is a degree")
        return AllIntegers()
    pieces = essential_pieces(desc)
    if not pieces:
        return AllIntegers()
    if len(pieces) == 1 and pieces[0].multiplicity == 1:
        return _degrees(pieces[0].piece, logger)
    if not all(isinstance(s.piece, (S2xS1, Spherical)) for s in pieces):
        logger.debug("Connected sum with an aspherical piece: trivial band")
        return TrivialBand()
    return d_connected_sum(desc)


def _degrees(desc: ManifoldDesc, logger: logging.Logger) -> DegreeSet:
    if isinstance(desc, S2xS1):
        return AllIntegers()
    if isinstance(desc, Spherical):
        logger.debug(f"Spherical manifold of order {order(desc.group)}")
        return d_spherical(desc.group)
    if isinstance(desc, ConnectedSum):
        return _connected_sum_degrees(desc, logger)
    if isinstance(desc, TorusBundle):
        logger.debug(f"Torus bundle ({desc.a},{desc.b};{desc.c},{desc.d})")
        return d_torus_bundle(desc.a, desc.b, desc.c, desc.d)
    if isinstance(desc, TorusSemiBundle):
        logger.debug(f"Torus semi-bundle ({desc.a},{desc.b};{desc.c},{desc.d})")
        return d_torus_semibundle(desc.a, desc.b, desc.c, desc.d)
    if isinstance(desc, Seifert):
        geometry = classify(desc)
        logger.debug(f"Seifert manifold with {geometry} geometry")
        if geometry == Geometry.NIL:
            return d_nil_seifert(desc)
        if geometry == Geometry.H2xE1:
            return d_h2e1(desc)
        return TrivialBand()
    raise InvalidInputError(f"Unknown manifold descriptor {desc!r}")


def degrees(desc: ManifoldDesc) -> DegreeSet:
    """Returns D(M), the set of degrees of self-maps of the manifold `desc` describes

    Parameters
    ----------
    desc : ManifoldDesc
        Any descriptor; it is validated and canonicalized first

    Returns
    -------
    DegreeSet
        The set exactly as the classification formulas state it, so 0 is
        missing from some classes (see `with_zero`)
    """
    logger = Logger.get_engine_logger()
    result = _degrees(canonicalize(ensure_valid(desc)), logger)
    logger.debug(f"D(M) has shape {result.kind}")
    return result


def geometry_of(desc: ManifoldDesc) -> Geometry:
    """Geometry tag of a descriptor, after validation"""
    return Geometry(classify(canonicalize(ensure_valid(desc))))


def minus_one_in(desc: ManifoldDesc) -> Optional[bool]:
    """Whether -1 is a degree; None when undetermined"""
    return contains(degrees(desc), -1)


def with_zero(s: DegreeSet) -> DegreeSet:
    """s together with 0, the degree of a constant map"""
    return union(s, Finite(values=(0,)))


def spherical_minus_one(group: SphericalGroup) -> bool:
    """Whether the spherical manifold with this group has a degree -1 self-map: h^2 = -1 mod |pi_1|"""
    return minus_one_is_square_mod(order(group))


def _is_reversal_rigid(p: int) -> bool:
    """p in {1, 2, p1^e, 2 p1^e} with p1 a prime 1 mod 4"""
    if p in (1, 2):
        return True
    odd = p // 2 if p % 2 == 0 else p
    if odd % 2 == 0:
        return False
    primes = factorize(odd).primes
    return len(primes) == 1 and primes[0] % 4 == 1


def lens_reversal_report(p: int, q: int) -> ReversalReport:
    """Orientation-reversal predicates of L(p, q)"""
    if p < 1:
        raise InvalidInputError(f"p = {p} must be ≥ 1")
    if math.gcd(p, q) != 1:
        raise InvalidInputError(f"gcd({p}, {q}) ≠ 1")
    homeo = (q * q + 1) % p == 0
    try:
        return ReversalReport(
            has_degree_minus_one=minus_one_is_square_mod(p),
            has_orientation_reversing_homeo=homeo,
            every_degree_minus_one_homotopic_to_homeo=homeo and _is_reversal_rigid(p),
        )
    except ValidationError as e:
        raise InvariantViolationError(f"Inconsistent reversal report for L({p},{q}): {e}") from e
