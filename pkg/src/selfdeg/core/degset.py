"""Symbolic algebra of degree sets: membership, enumeration, normalization and description"""

import math
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from selfdeg.core.forms import (
    apply,
    fundamental_automorph,
    is_loeschian,
    is_sum_two_squares,
    representations,
    represents,
)
from selfdeg.core.numth import (
    crt_merge,
    divisors_of,
    is_perfect_square,
    minimal_period,
    residue_negate,
    residue_union,
)
from selfdeg.types.degree_types import (
    AllIntegers,
    DegreeSet,
    Finite,
    FormImage,
    IntersectionOf,
    Negated,
    Periodic,
    RootPredicate,
    Scaled,
    SquaresOf,
    TrivialBand,
    UnionOf,
    UnitTimesForm,
)
from selfdeg.types.exceptions import InvalidInputError, UnsupportedClassError
from selfdeg.types.form_types import SolConditions
from selfdeg.types.residue_types import ResidueSet

EMPTY = Finite(values=())

TRIVIAL_BAND_TEXT = "{0, 1} ⊆ D ⊆ {-1, 0, 1}"

ROOT_PREDICATES: Dict[RootPredicate, Callable[[int], bool]] = {
    RootPredicate.ALL: lambda root: True,
    RootPredicate.ODD: lambda root: root % 2 == 1,
    RootPredicate.LOESCHIAN_1_MOD_6: lambda root: root % 6 == 1 and is_loeschian(root),
    RootPredicate.LOESCHIAN_1_MOD_3: lambda root: root % 3 == 1 and is_loeschian(root),
    RootPredicate.TWO_SQUARES_1_MOD_4: lambda root: root % 4 == 1
    and is_sum_two_squares(root),
}

ROOT_DESCRIPTIONS: Dict[RootPredicate, str] = {
    RootPredicate.ALL: "{ l^2 : l ∈ Z }",
    RootPredicate.ODD: "{ l^2 : l odd }",
    RootPredicate.LOESCHIAN_1_MOD_6: "{ l^2 : l = m^2+mn+n^2, l ≡ 1 (mod 6) }",
    RootPredicate.LOESCHIAN_1_MOD_3: "{ l^2 : l = m^2+mn+n^2, l ≡ 1 (mod 3) }",
    RootPredicate.TWO_SQUARES_1_MOD_4: "{ l^2 : l = m^2+n^2, l ≡ 1 (mod 4) }",
}


def _kleene_or(values: Iterable[Optional[bool]]) -> Optional[bool]:
    """Three-valued disjunction, None meaning unknown"""
    result: Optional[bool] = False
    for value in values:
        if value is True:
            return True
        if value is None:
            result = None
    return result


def _kleene_and(values: Iterable[Optional[bool]]) -> Optional[bool]:
    """Three-valued conjunction, None meaning unknown"""
    result: Optional[bool] = True
    for value in values:
        if value is False:
            return False
        if value is None:
            result = None
    return result


def _orbit_admits(image: FormImage, p: int, r: int) -> bool:
    """Whether any automorph image of (p, r) satisfies the side-conditions.

    The conditions only see (p, r) mod |c|, so the walk stops once the
    residue orbit closes.
    """
    conditions: SolConditions = image.conditions  # type: ignore[assignment]
    modulus = abs(conditions.c)
    automorph = fundamental_automorph(image.form)
    start = (p % modulus, r % modulus)
    current = start
    while True:
        if conditions.admits(*current):
            return True
        x, y = apply(automorph, *current)
        current = (x % modulus, y % modulus)
        if current == start:
            return False


def _form_image_contains(image: FormImage, d: int) -> bool:
    """Membership in a form image, with or without Sol side-conditions"""
    if image.conditions is None:
        return represents(image.form, d)
    if d == 0:
        return True
    return any(
        _orbit_admits(image, p, r)
        for p, r in representations(image.form, image.conditions.c * d)
    )


def _unit_times_form_contains(s: UnitTimesForm, d: int) -> bool:
    """d = (kt + 1) v with v a value of the form"""
    if d == 0:
        return True
    for divisor in divisors_of(abs(d)):
        for u in (divisor, -divisor):
            if u % s.k == 1 and represents(s.form, d // u):
                return True
    return False


def contains(s: DegreeSet, d: int) -> Optional[bool]:
    """Exact membership of d in s; None means unknown and only arises from the trivial band"""
    if isinstance(s, AllIntegers):
        return True
    if isinstance(s, Periodic):
        return d in s.residues
    if isinstance(s, SquaresOf):
        root = is_perfect_square(d)
        return root is not None and ROOT_PREDICATES[RootPredicate(s.predicate)](root)
    if isinstance(s, FormImage):
        return _form_image_contains(s, d)
    if isinstance(s, UnitTimesForm):
        return _unit_times_form_contains(s, d)
    if isinstance(s, Finite):
        return d in s.values
    if isinstance(s, TrivialBand):
        if d in (0, 1):
            return True
        return None if d == -1 else False
    if isinstance(s, Scaled):
        if s.factor == 0:
            return d == 0
        if d % s.factor:
            return False
        return contains(s.inner, d // s.factor)
    if isinstance(s, Negated):
        return contains(s.inner, -d)
    if isinstance(s, UnionOf):
        return _kleene_or(contains(member, d) for member in s.members)
    if isinstance(s, IntersectionOf):
        return _kleene_and(contains(member, d) for member in s.members)
    raise InvalidInputError(f"Unknown degree set {s!r}")


def has_trivial_band(s: DegreeSet) -> bool:
    """True if the trivial band occurs anywhere in s"""
    if isinstance(s, TrivialBand):
        return True
    if isinstance(s, (Scaled, Negated)):
        return has_trivial_band(s.inner)
    if isinstance(s, (UnionOf, IntersectionOf)):
        return any(has_trivial_band(member) for member in s.members)
    return False


def _periodic_members(residues: ResidueSet, lo: int, hi: int) -> List[int]:
    """Members of a residue set in [lo, hi]"""
    m = residues.modulus
    base = lo - lo % m
    return sorted(
        value
        for r in residues.residues
        for value in range(base + r, hi + 1, m)
        if value >= lo
    )


def _members(s: DegreeSet, lo: int, hi: int) -> List[int]:
    """Members of s in [lo, hi], using the shape of s where it helps"""
    if lo > hi:
        return []
    if isinstance(s, AllIntegers):
        return list(range(lo, hi + 1))
    if isinstance(s, Periodic):
        return _periodic_members(s.residues, lo, hi)
    if isinstance(s, Finite):
        return sorted(v for v in set(s.values) if lo <= v <= hi)
    if isinstance(s, SquaresOf):
        if hi < 0:
            return []
        first = math.isqrt(max(lo, 0) - 1) + 1 if lo > 0 else 0
        check = ROOT_PREDICATES[RootPredicate(s.predicate)]
        return [
            root * root for root in range(first, math.isqrt(hi) + 1) if check(root)
        ]
    if isinstance(s, Negated):
        return sorted(-v for v in _members(s.inner, -hi, -lo))
    if isinstance(s, Scaled):
        c = s.factor
        if c == 0:
            return [0] if lo <= 0 <= hi else []
        low, high = (lo, hi) if c > 0 else (hi, lo)
        inner = _members(s.inner, -(-low // c), high // c)
        return sorted(c * v for v in inner)
    if isinstance(s, UnionOf):
        return sorted({v for member in s.members for v in _members(member, lo, hi)})
    if isinstance(s, IntersectionOf) and s.members:
        first, *rest = s.members
        return [
            v for v in _members(first, lo, hi) if all(contains(t, v) for t in rest)
        ]
    return [d for d in range(lo, hi + 1) if contains(s, d)]


def enumerate(s: DegreeSet, lo: int, hi: int) -> List[int]:
    """Returns exactly the members of s in [lo, hi], ascending

    Parameters
    ----------
    s : DegreeSet
        Any degree set not involving the trivial band
    lo, hi : int
        Inclusive bounds, lo <= hi

    Returns
    -------
    List[int]
        Sorted, duplicate-free members
    """
    if lo > hi:
        raise InvalidInputError(f"Empty range [{lo}, {hi}]")
    if has_trivial_band(s):
        raise UnsupportedClassError(
            "No self-map of this manifold has degree larger than 1, and whether -1 "
            "is a degree is undetermined; the set cannot be enumerated"
        )
    return _members(s, lo, hi)


def _as_residues(s: DegreeSet) -> Optional[ResidueSet]:
    """Residue form of a periodic-like set, None otherwise"""
    if isinstance(s, AllIntegers):
        return ResidueSet(modulus=1, residues=(0,))
    if isinstance(s, Periodic):
        return s.residues
    return None


def _from_residues(residues: ResidueSet) -> DegreeSet:
    """The simplest set with the given residues"""
    residues = minimal_period(residues)
    if not residues.residues:
        return EMPTY
    if residues.is_everything:
        return AllIntegers()
    return Periodic(residues=residues)


def _flatten(members: Sequence[DegreeSet], kind: type) -> List[DegreeSet]:
    """Splices nested members of the same combinator into one level"""
    flat: List[DegreeSet] = []
    for member in members:
        if isinstance(member, kind):
            flat.extend(member.members)  # type: ignore[attr-defined]
        else:
            flat.append(member)
    return flat


def _sorted_unique(members: Iterable[DegreeSet]) -> Tuple[DegreeSet, ...]:
    """Members ordered by their description, duplicates removed"""
    by_text = {describe(member): member for member in members}
    return tuple(by_text[text] for text in sorted(by_text))


def _normalize_union(members: List[DegreeSet]) -> DegreeSet:
    residues: Optional[ResidueSet] = None
    values: List[int] = []
    rest: List[DegreeSet] = []
    for member in _flatten(members, UnionOf):
        periodic = _as_residues(member)
        if periodic is not None:
            residues = periodic if residues is None else residue_union(residues, periodic)
        elif isinstance(member, Finite):
            values.extend(member.values)
        else:
            rest.append(member)
    if residues is not None:
        folded = _from_residues(residues)
        if isinstance(folded, AllIntegers):
            return folded
        if folded != EMPTY:
            rest.append(folded)
    kept = sorted(v for v in set(values) if not any(contains(t, v) is True for t in rest))
    if kept:
        rest.append(Finite(values=tuple(kept)))
    members = _sorted_unique(rest)
    if not members:
        return EMPTY
    if len(members) == 1:
        return members[0]
    return UnionOf(members=members)


def _normalize_intersection(members: List[DegreeSet]) -> DegreeSet:
    residues: Optional[ResidueSet] = None
    rest: List[DegreeSet] = []
    for member in _flatten(members, IntersectionOf):
        periodic = _as_residues(member)
        if periodic is not None:
            residues = periodic if residues is None else crt_merge(residues, periodic)
        else:
            rest.append(member)
    if residues is not None:
        folded = _from_residues(residues)
        if folded == EMPTY:
            return EMPTY
        if not isinstance(folded, AllIntegers):
            rest.append(folded)
    members = _sorted_unique(rest)
    if not members:
        return AllIntegers()
    if len(members) == 1:
        return members[0]
    return IntersectionOf(members=members)


def _normalize_negated(inner: DegreeSet) -> DegreeSet:
    if isinstance(inner, Negated):
        return inner.inner
    if isinstance(inner, AllIntegers):
        return inner
    if isinstance(inner, Periodic):
        return _from_residues(residue_negate(inner.residues))
    if isinstance(inner, Finite):
        return Finite(values=tuple(sorted(-v for v in inner.values)))
    return Negated(inner=inner)


def _normalize_scaled(factor: int, inner: DegreeSet) -> DegreeSet:
    if factor == 1:
        return inner
    if factor == -1:
        return _normalize_negated(inner)
    if factor == 0:
        return Finite(values=(0,))
    if isinstance(inner, Finite):
        return Finite(values=tuple(sorted(factor * v for v in inner.values)))
    periodic = _as_residues(inner)
    if periodic is not None:
        modulus = abs(factor) * periodic.modulus
        return _from_residues(
            ResidueSet.of(modulus, (factor * r for r in periodic.residues))
        )
    return Scaled(factor=factor, inner=inner)


def normalize(s: DegreeSet) -> DegreeSet:
    """Folds periodic parts into single residue sets; membership is unchanged"""
    if isinstance(s, Periodic):
        return _from_residues(s.residues)
    if isinstance(s, Finite):
        return Finite(values=tuple(sorted(set(s.values))))
    if isinstance(s, Negated):
        return _normalize_negated(normalize(s.inner))
    if isinstance(s, Scaled):
        return _normalize_scaled(s.factor, normalize(s.inner))
    if isinstance(s, UnionOf):
        return _normalize_union([normalize(member) for member in s.members])
    if isinstance(s, IntersectionOf):
        return _normalize_intersection([normalize(member) for member in s.members])
    return s


def intersect(s: DegreeSet, t: DegreeSet) -> DegreeSet:
    """Pointwise intersection"""
    return normalize(IntersectionOf(members=(s, t)))


def union(s: DegreeSet, t: DegreeSet) -> DegreeSet:
    """Pointwise union"""
    return normalize(UnionOf(members=(s, t)))


def negate(s: DegreeSet) -> DegreeSet:
    """{-d : d in s}"""
    return normalize(Negated(inner=s))


def scale(c: int, s: DegreeSet) -> DegreeSet:
    """{c * d : d in s}"""
    return normalize(Scaled(factor=c, inner=s))


def _format_polynomial(terms: Sequence[Tuple[int, str]]) -> str:
    """Renders sum(coefficient * monomial) as "2p^2 - pr + r^2"""
    text = ""
    for coefficient, monomial in terms:
        if coefficient == 0:
            continue
        magnitude = abs(coefficient)
        body = monomial if magnitude == 1 and monomial else f"{magnitude}{monomial}"
        if not text:
            text = f"-{body}" if coefficient < 0 else body
        else:
            text += f" - {body}" if coefficient < 0 else f" + {body}"
    return text or "0"


def _describe_form_image(s: FormImage) -> str:
    A, B, C = s.form.coefficients
    if s.conditions is None:
        return f"{{ {_format_polynomial([(A, 'x^2'), (B, 'xy'), (C, 'y^2')])} : x, y ∈ Z }}"
    a, b, c, d = s.conditions.a, s.conditions.b, s.conditions.c, s.conditions.d
    sign = 1 if c > 0 else -1
    numerator = _format_polynomial([(sign * A, "p^2"), (sign * B, "pr"), (sign * C, "r^2")])
    if abs(c) == 1:
        return f"{{ {numerator} : p, r ∈ Z }}"
    modulus = abs(c)
    first = f"{modulus} | {_format_polynomial([(b, 'r')])}"
    second = f"{modulus} | {_format_polynomial([(d - a, 'r')])}"
    third = f"{modulus} | {_format_polynomial([(d - a, 'p'), (-b, 'r')])}"
    return (
        f"{{ ({numerator})/{modulus} : p, r ∈ Z, "
        f"{first} and {second}, or {third} }}"
    )


def _parenthesize(s: DegreeSet) -> str:
    text = describe(s)
    if isinstance(s, (UnionOf, IntersectionOf)):
        return f"({text})"
    return text


def describe(s: DegreeSet) -> str:
    """Deterministic canonical text for s"""
    if isinstance(s, AllIntegers):
        return "Z"
    if isinstance(s, Periodic):
        residues = s.residues
        if not residues.residues:
            return "∅"
        if residues.is_everything:
            return "Z"
        listed = ", ".join(str(r) for r in residues.residues)
        return f"{residues.modulus}Z + {{{listed}}}"
    if isinstance(s, SquaresOf):
        return ROOT_DESCRIPTIONS[RootPredicate(s.predicate)]
    if isinstance(s, FormImage):
        return _describe_form_image(s)
    if isinstance(s, UnitTimesForm):
        A, B, C = s.form.coefficients
        value = _format_polynomial([(A, "p^2"), (B, "pq"), (C, "q^2")])
        return f"{{ ({s.k}t+1)({value}) : t, p, q ∈ Z }}"
    if isinstance(s, Finite):
        if not s.values:
            return "∅"
        return "{" + ", ".join(str(v) for v in s.values) + "}"
    if isinstance(s, TrivialBand):
        return TRIVIAL_BAND_TEXT
    if isinstance(s, Scaled):
        return f"{s.factor}·{_parenthesize(s.inner)}"
    if isinstance(s, Negated):
        return f"-{_parenthesize(s.inner)}"
    if isinstance(s, UnionOf):
        return " ∪ ".join(sorted(_parenthesize(member) for member in s.members))
    if isinstance(s, IntersectionOf):
        return " ∩ ".join(sorted(_parenthesize(member) for member in s.members))
    raise InvalidInputError(f"Unknown degree set {s!r}")
