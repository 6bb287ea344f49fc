"""Exact elementary number theory shared by every degree computation"""

import math
from itertools import product
from typing import Iterable, List, Optional

from sympy import divisors, factorint
from sympy.ntheory.modular import solve_congruence

from selfdeg.types.exceptions import InvalidInputError
from selfdeg.types.residue_types import Factorization, ResidueSet

ALL_INTEGERS = ResidueSet(modulus=1, residues=(0,))


def factorize(n: int) -> Factorization:
    """Returns the prime factorization of n >= 1; factorize(1) has no factors"""
    if n < 1:
        raise InvalidInputError(f"Cannot factorize {n}: expected a positive integer")
    return Factorization(n=n, factors=tuple(sorted(factorint(n).items())))


def units_mod(m: int) -> ResidueSet:
    """The units of Z/m; the trivial ring Z/1 has the single unit 0"""
    if m < 1:
        raise InvalidInputError(f"Modulus must be positive, got {m}")
    if m == 1:
        return ALL_INTEGERS
    return ResidueSet(modulus=m, residues=tuple(r for r in range(m) if math.gcd(r, m) == 1))


def squares_mod(m: int, units_only: bool = False) -> ResidueSet:
    """{k^2 mod m}, over all k or only over units"""
    base = units_mod(m).residues if units_only else range(m)
    return ResidueSet.of(m, (k * k for k in base))


def crt_merge(a: ResidueSet, b: ResidueSet) -> ResidueSet:
    """Intersection of two residue sets, expressed modulo lcm(a.modulus, b.modulus)"""
    modulus = math.lcm(a.modulus, b.modulus)
    g = math.gcd(a.modulus, b.modulus)
    merged = set()
    for ra, rb in product(a.residues, b.residues):
        if (ra - rb) % g:
            continue
        solution = solve_congruence((ra, a.modulus), (rb, b.modulus))
        if solution is not None:
            merged.add(int(solution[0]) % modulus)
    return ResidueSet(modulus=modulus, residues=tuple(sorted(merged)))


def lift(a: ResidueSet, modulus: int) -> ResidueSet:
    """Re-expresses `a` modulo a multiple of its modulus"""
    if modulus % a.modulus:
        raise InvalidInputError(f"{modulus} is not a multiple of {a.modulus}")
    step = a.modulus
    return ResidueSet.of(
        modulus, (r + step * k for r in a.residues for k in range(modulus // step))
    )


def residue_union(a: ResidueSet, b: ResidueSet) -> ResidueSet:
    """Union of two residue sets, expressed modulo the lcm"""
    modulus = math.lcm(a.modulus, b.modulus)
    return ResidueSet.of(modulus, lift(a, modulus).residues + lift(b, modulus).residues)


def residue_negate(a: ResidueSet) -> ResidueSet:
    """{-d : d in a}"""
    return ResidueSet.of(a.modulus, (-r for r in a.residues))


def residue_product(a: ResidueSet, b: ResidueSet) -> ResidueSet:
    """{x * y} for x in a, y in b, over a common modulus"""
    if a.modulus != b.modulus:
        raise InvalidInputError("Residue products need a common modulus")
    return ResidueSet.of(a.modulus, (x * y for x in a.residues for y in b.residues))


def minimal_period(a: ResidueSet) -> ResidueSet:
    """The same set written at its smallest period"""
    m = a.modulus
    members = set(a.residues)
    for d in divisors_of(m):
        if d == m:
            break
        if all((r + d) % m in members for r in members):
            return ResidueSet.of(d, members)
    return a


def divisors_of(n: int) -> List[int]:
    """Positive divisors of n >= 1, ascending"""
    return [int(d) for d in divisors(n)]


def square_divisors(n: int) -> List[int]:
    """All e >= 1 with e^2 dividing n (n != 0), ascending"""
    if n == 0:
        raise InvalidInputError("0 has unboundedly many square divisors")
    choices: List[Iterable[int]] = [
        [prime**k for k in range(exponent // 2 + 1)]
        for prime, exponent in factorize(abs(n)).factors
    ]
    return sorted(math.prod(combo) for combo in product(*choices))


def is_perfect_square(n: int) -> Optional[int]:
    """Nonnegative root of n when n is a perfect square, else None"""
    if n < 0:
        return None
    root = math.isqrt(n)
    return root if root * root == n else None


def euler_phi(m: int) -> int:
    """Euler's totient from the factorization of m"""
    result = m
    for prime in factorize(m).primes:
        result -= result // prime
    return result


def minus_one_is_square_mod(p: int) -> bool:
    """Whether h^2 = -1 (mod p) is solvable: 4 does not divide p and every odd prime factor is 1 mod 4"""
    if p % 4 == 0:
        return False
    return all(prime == 2 or prime % 4 == 1 for prime in factorize(p).primes)
