"""Degree sets of spherical manifolds"""

from typing import Callable, Iterable, Set

from selfdeg.core.degset import normalize
from selfdeg.core.manifold import order
from selfdeg.core.numth import crt_merge, squares_mod
from selfdeg.types.degree_types import DegreeSet, Periodic
from selfdeg.types.manifold_types import (
    I120,
    O48,
    T24,
    DPrime,
    DStar,
    Lens,
    ProductZm,
    SphericalGroup,
    TPrime,
)
from selfdeg.types.residue_types import ResidueSet

EXCEPTIONAL_ROWS = {
    "t24": (0, 1, 16),
    "o48": (0, 1, 25),
    "i120": (0, 1, 49),
}


def iso_residues(group: SphericalGroup) -> ResidueSet:
    """{k^2 mod N : gcd(k, N) = 1} with N = |pi_1|"""
    return squares_mod(order(group), units_only=True)


def d_iso_spherical(group: SphericalGroup) -> DegreeSet:
    """Degrees of self-maps inducing isomorphisms on pi_1"""
    return normalize(Periodic(residues=iso_residues(group)))


def _power_closure(base: int, modulus: int) -> Set[int]:
    """{base^i mod modulus : i >= 0}"""
    powers: Set[int] = set()
    current = 1 % modulus
    while current not in powers:
        powers.add(current)
        current = (current * base) % modulus
    return powers


def _scaled_squares(
    factors: Iterable[int], modulus: int, skip: Callable[[int], bool] = lambda k: False
) -> Set[int]:
    """{k^2 * f mod modulus} over k in [0, modulus) not skipped and f in factors"""
    squares = {(k * k) % modulus for k in range(modulus) if not skip(k)}
    return {(s * f) % modulus for s in squares for f in factors}


def _tprime_residues(q: int) -> Set[int]:
    modulus = 8 * 3**q
    shift = 3**q if q % 2 == 0 else 3 ** (q + 1)
    bases = [3 ** (2 * q - 2 * p) - shift for p in range(1, q + 1)]
    return _scaled_squares(bases, modulus, skip=lambda k: k % 3 == 0)


def _dprime_residues(n_prime: int, q: int) -> Set[int]:
    modulus = n_prime * 2**q
    first = _power_closure(1 - pow(n_prime, 2**q - 1, modulus), modulus)
    residues: Set[int] = set()
    for p in range(1, q + 1):
        exponent = (2 * p - q) * (n_prime - 1)
        if exponent < 0:
            continue
        second = _power_closure(1 - pow(2, exponent, modulus), modulus)
        products = {(x * y) % modulus for x in first for y in second}
        residues |= _scaled_squares(products, modulus)
    return residues


def spherical_residues(group: SphericalGroup) -> ResidueSet:
    """Residues of D(M) modulo |pi_1| for the spherical manifold with group `group`"""
    modulus = order(group)
    if isinstance(group, Lens):
        return squares_mod(modulus)
    if isinstance(group, DStar):
        n = group.n
        values = {(h * h) % modulus for h in range(1, modulus, 2)} | {0, (n * n) % modulus}
        return ResidueSet.of(modulus, values)
    if isinstance(group, (T24, O48, I120)):
        return ResidueSet.of(modulus, EXCEPTIONAL_ROWS[group.kind])
    if isinstance(group, ProductZm):
        return crt_merge(spherical_residues(group.inner), squares_mod(group.m))
    if isinstance(group, TPrime):
        values = _tprime_residues(group.q)
    elif isinstance(group, DPrime):
        values = _dprime_residues(group.n_prime, group.q)
    else:
        values = set()
    values |= {0} | set(iso_residues(group).residues)
    return ResidueSet.of(modulus, values)


def d_spherical(group: SphericalGroup) -> DegreeSet:
    """D(M) of the spherical manifold with fundamental group `group`"""
    return normalize(Periodic(residues=spherical_residues(group)))
