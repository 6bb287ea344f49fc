"""Representability and value enumeration for integer binary quadratic forms"""

import math
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

from sympy import integer_nthroot
from sympy.solvers.diophantine.diophantine import diop_DN

from selfdeg.core.numth import factorize, is_perfect_square, square_divisors
from selfdeg.types.exceptions import InvalidInputError, UnsupportedFormError
from selfdeg.types.form_types import BinaryForm

Matrix = Tuple[Tuple[int, int], Tuple[int, int]]
Coefficients = Tuple[int, int, int]

IDENTITY: Matrix = ((1, 0), (0, 1))

LOESCHIAN_FORMS = {(1, 1, 1), (1, -1, 1)}
TWO_SQUARES_FORM = (1, 0, 1)


def is_loeschian(n: int) -> bool:
    """True iff n = m^2 + mn + n^2 for some integers m, n"""
    if n < 0:
        return False
    if n == 0:
        return True
    return all(
        exponent % 2 == 0
        for prime, exponent in factorize(n).factors
        if prime % 3 == 2
    )


def is_sum_two_squares(n: int) -> bool:
    """True iff n = m^2 + n^2 for some integers m, n"""
    if n < 0:
        return False
    if n == 0:
        return True
    return all(
        exponent % 2 == 0
        for prime, exponent in factorize(n).factors
        if prime % 4 == 3
    )


def matmul(x: Matrix, y: Matrix) -> Matrix:
    """2x2 integer matrix product"""
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )


def apply(m: Matrix, x: int, y: int) -> Tuple[int, int]:
    """The image of the column vector (x, y) under m"""
    return (m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y)


def _inverse(m: Matrix) -> Matrix:
    """Inverse of a determinant-one matrix"""
    return ((m[1][1], -m[0][1]), (-m[1][0], m[0][0]))


def _check_indefinite(f: BinaryForm) -> None:
    """Rejects every discriminant other than a positive non-square"""
    delta = f.discriminant
    if delta == 0:
        raise UnsupportedFormError(f"Form {f.coefficients} is degenerate (discriminant 0)")
    if delta < 0:
        raise UnsupportedFormError(
            f"Definite form {f.coefficients} is not one of the model forms x^2+xy+y^2, x^2+y^2"
        )
    if is_perfect_square(delta) is not None:
        raise UnsupportedFormError(
            f"Form {f.coefficients} has square discriminant {delta} and factors over Q"
        )


def fundamental_automorph(f: BinaryForm) -> Matrix:
    """Returns the generator of the proper automorphs of f, up to sign

    Parameters
    ----------
    f : BinaryForm
        A form with positive non-square discriminant

    Returns
    -------
    Matrix
        ((t - Bu)/2, -Cu; Au, (t + Bu)/2) where (t, u) is the least positive
        solution of t^2 - D u^2 = 4
    """
    _check_indefinite(f)
    A, B, C = f.coefficients
    g = math.gcd(A, B, C)
    A, B, C = A // g, B // g, C // g
    delta = B * B - 4 * A * C
    t, u = _minimal_norm_four(delta)
    return (((t - B * u) // 2, -C * u), (A * u, (t + B * u) // 2))


@lru_cache(maxsize=256)
def _minimal_norm_four(delta: int) -> Tuple[int, int]:
    """Least positive (t, u) with t^2 - delta u^2 = 4"""
    x, _ = min(
        (int(x), int(y)) for x, y in diop_DN(delta, 1) if x > 0 and y > 0
    )
    candidates: List[int] = []
    root, _ = integer_nthroot(2 * x, 3)
    candidates.extend(t for t in range(int(root), int(root) + 3) if t**3 - 3 * t == 2 * x)
    root = is_perfect_square(2 * x + 2)
    if root is not None:
        candidates.append(root)
    candidates.append(2 * x)
    for t in sorted(candidates):
        if t <= 2 or (t * t - 4) % delta:
            continue
        u = is_perfect_square((t * t - 4) // delta)
        if u:
            return t, u
    raise UnsupportedFormError(f"No solution of t^2 - {delta}u^2 = 4 found")


def _below_root(x: int, delta: int) -> bool:
    """x < sqrt(delta)"""
    return x < 0 or x * x < delta


def _above_root(x: int, delta: int) -> bool:
    """x > sqrt(delta)"""
    return x > 0 and x * x > delta


def _is_reduced(form: Coefficients, delta: int) -> bool:
    """|sqrt(D) - 2|a|| < b < sqrt(D)"""
    a, b, _ = form
    return (
        _below_root(b, delta)
        and _above_root(b + 2 * abs(a), delta)
        and _below_root(2 * abs(a) - b, delta)
    )


def _rho(form: Coefficients, delta: int) -> Tuple[Coefficients, Matrix]:
    """One reduction step, returning the new form and the transform taking the old form to it"""
    a, b, c = form
    k = 2 * abs(c)
    if c * c > delta:
        r = (-b) % k
        if r > abs(c):
            r -= k
    else:
        s0 = math.isqrt(delta)
        r = s0 - ((s0 + b) % k)
    s = (r + b) // (2 * c)
    return (c, r, a - b * s + c * s * s), ((0, -1), (1, s))


def reduce_form(form: Coefficients) -> Tuple[Coefficients, Matrix]:
    """Reduces an indefinite form, returning the reduced form and T with form∘T = reduced"""
    a, b, c = form
    delta = b * b - 4 * a * c
    transform = IDENTITY
    while not _is_reduced(form, delta):
        form, step = _rho(form, delta)
        transform = matmul(transform, step)
    return form, transform


@lru_cache(maxsize=256)
def _cycle(form: Coefficients) -> Dict[Coefficients, Matrix]:
    """Every reduced form properly equivalent to `form`, with a transform reaching it"""
    delta = form[1] * form[1] - 4 * form[0] * form[2]
    start, transform = reduce_form(form)
    cycle = {start: transform}
    current, step = _rho(start, delta)
    transform = matmul(transform, step)
    while current != start:
        cycle.setdefault(current, transform)
        current, step = _rho(current, delta)
        transform = matmul(transform, step)
    return cycle


def proper_equivalence(f: BinaryForm, g: BinaryForm) -> Optional[Matrix]:
    """Returns U of determinant 1 with f∘U = g when the forms are properly equivalent"""
    _check_indefinite(f)
    if f.discriminant != g.discriminant:
        return None
    cycle = _cycle(f.coefficients)
    g_reduced, g_transform = reduce_form(g.coefficients)
    v = cycle.get(g_reduced)
    if v is None:
        return None
    return matmul(v, _inverse(g_transform))


def primitive_representations(f: BinaryForm, m: int) -> Iterator[Tuple[int, int]]:
    """Yields one primitive solution of f(x, y) = m per orbit of proper automorphs

    f must be primitive and indefinite; m must be nonzero.
    """
    delta = f.discriminant
    modulus = 4 * abs(m)
    for s in range(2 * abs(m)):
        if (s * s - delta) % modulus:
            continue
        target = BinaryForm(A=m, B=s, C=(s * s - delta) // (4 * m))
        u = proper_equivalence(f, target)
        if u is not None:
            yield (u[0][0], u[1][0])


def representations(f: BinaryForm, n: int) -> Iterator[Tuple[int, int]]:
    """Yields solutions of f(x, y) = n covering every orbit of proper automorphs

    Non-primitive solutions are produced as e times a primitive solution of n / e^2.
    """
    _check_indefinite(f)
    if n == 0:
        yield (0, 0)
        return
    g = math.gcd(*f.coefficients)
    if n % g:
        return
    primitive = BinaryForm(A=f.A // g, B=f.B // g, C=f.C // g)
    for e in square_divisors(n // g):
        for x, y in primitive_representations(primitive, n // g // (e * e)):
            yield (e * x, e * y)


def represents(f: BinaryForm, n: int) -> bool:
    """True iff f(x, y) = n has an integer solution"""
    if f.coefficients in LOESCHIAN_FORMS:
        return is_loeschian(n)
    if f.coefficients == TWO_SQUARES_FORM:
        return is_sum_two_squares(n)
    return next(representations(f, n), None) is not None


def form_values_in(f: BinaryForm, lo: int, hi: int) -> List[int]:
    """The integers in [lo, hi] represented by f, ascending"""
    if lo > hi:
        raise InvalidInputError(f"Empty range [{lo}, {hi}]")
    return [n for n in range(lo, hi + 1) if represents(f, n)]
