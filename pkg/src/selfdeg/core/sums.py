"""Degree sets of connected sums of spherical manifolds and S^2 x S^1"""

import math
from collections import defaultdict
from typing import DefaultDict, Dict, List, Sequence, Tuple

from selfdeg.core.degset import negate, normalize, union
from selfdeg.core.manifold import canonicalize, is_rp3_sum_rp3
from selfdeg.core.numth import squares_mod
from selfdeg.core.spherical import d_iso_spherical
from selfdeg.core.unit_classes import square_coset_of, stabilizer_data
from selfdeg.types.degree_types import AllIntegers, DegreeSet, IntersectionOf, Periodic
from selfdeg.types.engine_types import UnitClassData
from selfdeg.types.exceptions import InvalidInputError
from selfdeg.types.manifold_types import (
    ConnectedSum,
    Lens,
    S2xS1,
    Spherical,
    SphericalGroup,
)
from selfdeg.types.residue_types import ResidueSet


def _require_coprime(p: int, qs: Sequence[int]) -> None:
    if p < 1:
        raise InvalidInputError(f"p = {p} must be ≥ 1")
    for q in qs:
        if math.gcd(p, q) != 1:
            raise InvalidInputError(f"q = {q} is not coprime to p = {p}")


def lens_pair_residues(p: int, q: int, q_prime: int) -> ResidueSet:
    """{k^2 q^-1 q' mod p : gcd(k, p) = 1}"""
    _require_coprime(p, (q, q_prime))
    factor = pow(q, -1, p) * q_prime if p > 1 else 0
    return ResidueSet.of(p, (s * factor for s in squares_mod(p, units_only=True).residues))


def d_iso_lens_pair(p: int, q: int, q_prime: int) -> DegreeSet:
    """Degrees of maps L(p, q) -> L(p, q') inducing isomorphisms on pi_1"""
    return normalize(Periodic(residues=lens_pair_residues(p, q, q_prime)))


def lens_class_partition(p: int, qs: Sequence[int]) -> UnitClassData:
    """Counts the summands L(p, q_i) per coset of unit squares and builds the stabilizer C"""
    _require_coprime(p, qs)
    return stabilizer_data(p, square_coset_of(p), qs)


def d_iso_lens_group(p: int, qs: Sequence[int]) -> DegreeSet:
    """D_iso of L(p, q_1) # ... # L(p, q_n)"""
    if not qs:
        raise InvalidInputError(f"No lens summands of order {p} given")
    return normalize(Periodic(residues=lens_class_partition(p, qs).residues))


def d_iso_oriented_pair_group(group: SphericalGroup, m: int, n: int) -> DegreeSet:
    """D_iso of m P # n P-bar for a non-lens spherical P"""
    if isinstance(group, Lens):
        raise InvalidInputError("Lens summands are handled by their q classes, not by orientation")
    if m < 0 or n < 0 or m + n < 1:
        raise InvalidInputError(f"Need m, n ≥ 0 with m + n ≥ 1, got m = {m}, n = {n}")
    iso = d_iso_spherical(group)
    if m != n:
        return iso
    return union(iso, negate(iso))


def _group_key(group: SphericalGroup) -> str:
    return group.model_dump_json()


def d_connected_sum(desc: ConnectedSum) -> DegreeSet:
    """D(M) for a connected sum of spherical pieces and copies of S^2 x S^1"""
    canonical = canonicalize(desc)
    summands = canonical.pieces if isinstance(canonical, ConnectedSum) else ()
    if is_rp3_sum_rp3(canonical):
        raise InvalidInputError("RP^3 # RP^3 is not a connected sum of this class")

    oriented: Dict[str, Tuple[SphericalGroup, List[int]]] = {}
    lenses: DefaultDict[int, List[int]] = defaultdict(list)
    count = 0
    for summand in summands:
        piece = summand.piece
        if isinstance(piece, S2xS1):
            count += summand.multiplicity
            continue
        if not isinstance(piece, Spherical):
            raise InvalidInputError(
                f"{piece.kind} pieces are outside the connected sums of spherical "
                "manifolds and S^2 x S^1"
            )
        group = piece.group
        if isinstance(group, Lens):
            if group.p > 1:
                lenses[group.p].extend([group.q] * summand.multiplicity)
                count += summand.multiplicity
            continue
        entry = oriented.setdefault(_group_key(group), (group, [0, 0]))
        entry[1][1 if piece.reversed else 0] += summand.multiplicity
        count += summand.multiplicity
    if count < 2:
        raise InvalidInputError("A connected sum needs at least two prime pieces")

    factors: List[DegreeSet] = [
        d_iso_oriented_pair_group(group, m, n) for group, (m, n) in oriented.values()
    ]
    factors.extend(d_iso_lens_group(p, qs) for p, qs in sorted(lenses.items()))
    if not factors:
        return AllIntegers()
    return normalize(IntersectionOf(members=tuple(factors)))
