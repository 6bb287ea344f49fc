"""Validation, canonicalization and geometric classification of manifold descriptors"""

import math
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from selfdeg.types.exceptions import InvalidInputError, ManifoldValidationError
from selfdeg.types.manifold_types import (
    I120,
    O48,
    T24,
    ConnectedSum,
    DPrime,
    DStar,
    Geometry,
    Lens,
    ManifoldDesc,
    ProductZm,
    S2xS1,
    Seifert,
    Spherical,
    SphericalGroup,
    Summand,
    TorusBundle,
    TorusSemiBundle,
    TPrime,
    Violation,
)

NIL_TRIPLES = ((2, 3, 6), (3, 3, 3), (2, 4, 4))

SEMIBUNDLE_GEOMETRY = {
    "identity": Geometry.E3,
    "antidiagonal": Geometry.E3,
    "lower_unipotent": Geometry.NIL,
    "flip_shear": Geometry.NIL,
    "upper_unipotent": Geometry.NIL,
    "sol": Geometry.SOL,
}


def order(group: SphericalGroup) -> int:
    """|pi_1| of the spherical manifold"""
    if isinstance(group, Lens):
        return group.p
    if isinstance(group, DStar):
        return 4 * group.n
    if isinstance(group, T24):
        return 24
    if isinstance(group, O48):
        return 48
    if isinstance(group, I120):
        return 120
    if isinstance(group, TPrime):
        return 8 * 3**group.q
    if isinstance(group, DPrime):
        return group.n_prime * 2**group.q
    return group.m * order(group.inner)


def semibundle_shape(a: int, b: int, c: int, d: int) -> Optional[str]:
    """Name of the canonical semi-bundle shape of (a, b; c, d), None if it has none"""
    if (a, b, c, d) == (1, 0, 0, 1):
        return "identity"
    if (a, b, c, d) == (0, 1, 1, 0):
        return "antidiagonal"
    if (a, b, d) == (1, 0, 1) and c != 0:
        return "lower_unipotent"
    if (a, b, c) == (0, 1, 1) and d != 0:
        return "flip_shear"
    if (a, c, d) == (1, 0, 1) and b != 0:
        return "upper_unipotent"
    if a * b * c * d != 0 and a * d - b * c == 1:
        return "sol"
    return None


def _validate_group(group: SphericalGroup, path: str) -> List[Violation]:
    violations = []
    if isinstance(group, Lens):
        if group.p < 1:
            violations.append(Violation(path=f"{path}.p", message=f"p = {group.p} must be ≥ 1"))
        elif math.gcd(group.p, group.q) != 1:
            violations.append(
                Violation(path=f"{path}.q", message=f"gcd({group.p}, {group.q}) ≠ 1")
            )
    elif isinstance(group, DStar):
        if group.n < 2:
            violations.append(
                Violation(
                    path=f"{path}.n",
                    message=f"n = {group.n} must be ≥ 2 (D*4 is cyclic: enter it as L(4,q))",
                )
            )
    elif isinstance(group, TPrime):
        if group.q < 1:
            violations.append(Violation(path=f"{path}.q", message=f"q = {group.q} must be ≥ 1"))
    elif isinstance(group, DPrime):
        if group.n_prime < 3 or group.n_prime % 2 == 0:
            violations.append(
                Violation(
                    path=f"{path}.n_prime",
                    message=f"n' = {group.n_prime} must be odd and ≥ 3",
                )
            )
        if group.q < 2:
            violations.append(
                Violation(
                    path=f"{path}.q",
                    message=f"q = {group.q} must be ≥ 2 (q = 1 gives a dihedral group)",
                )
            )
    elif isinstance(group, ProductZm):
        inner_violations = _validate_group(group.inner, f"{path}.inner")
        violations.extend(inner_violations)
        if group.m < 2:
            violations.append(Violation(path=f"{path}.m", message=f"m = {group.m} must be ≥ 2"))
        if isinstance(group.inner, Lens):
            violations.append(
                Violation(
                    path=f"{path}.inner",
                    message="Z(m) x Z_p is cyclic: enter it as a lens space",
                )
            )
        elif not inner_violations:
            inner_order = order(group.inner)
            if math.gcd(group.m, inner_order) != 1:
                violations.append(
                    Violation(
                        path=f"{path}.m",
                        message=f"gcd({group.m}, {inner_order}) ≠ 1",
                    )
                )
    return violations


def _validate_at(desc: ManifoldDesc, path: str) -> List[Violation]:
    def at(field: str) -> str:
        return f"{path}.{field}" if path else field

    if isinstance(desc, Spherical):
        return _validate_group(desc.group, at("group"))
    if isinstance(desc, ConnectedSum):
        violations = []
        if not desc.pieces:
            violations.append(Violation(path=at("pieces"), message="a connected sum needs a piece"))
        for i, summand in enumerate(desc.pieces):
            here = at(f"pieces[{i}]")
            if summand.multiplicity < 1:
                violations.append(
                    Violation(
                        path=f"{here}.multiplicity",
                        message=f"multiplicity {summand.multiplicity} must be ≥ 1",
                    )
                )
            if isinstance(summand.piece, ConnectedSum):
                violations.append(
                    Violation(path=f"{here}.piece", message="pieces must be prime, not sums")
                )
            else:
                violations.extend(_validate_at(summand.piece, f"{here}.piece"))
        return violations
    if isinstance(desc, TorusBundle):
        det = desc.a * desc.d - desc.b * desc.c
        if det != 1:
            return [Violation(path=path, message=f"det = {det} ≠ 1")]
        return []
    if isinstance(desc, TorusSemiBundle):
        if semibundle_shape(desc.a, desc.b, desc.c, desc.d) is None:
            return [
                Violation(
                    path=path,
                    message=(
                        f"({desc.a},{desc.b};{desc.c},{desc.d}) is not a canonical semi-bundle "
                        "gluing: expected identity, (0,1;1,0), (1,0;z,1), (0,1;1,z), "
                        "(1,z;0,1) with z ≠ 0, or abcd ≠ 0 with ad - bc = 1"
                    ),
                )
            ]
        return []
    if isinstance(desc, Seifert):
        violations = []
        if desc.genus < 0:
            violations.append(Violation(path=at("genus"), message=f"genus {desc.genus} must be ≥ 0"))
        elif not desc.orientable_base and desc.genus < 1:
            violations.append(
                Violation(path=at("genus"), message="a non-orientable base needs genus ≥ 1")
            )
        for i, slope in enumerate(desc.slopes):
            here = at(f"slopes[{i}]")
            if slope.alpha < 1:
                violations.append(
                    Violation(path=f"{here}.alpha", message=f"alpha = {slope.alpha} must be ≥ 1")
                )
            elif slope.alpha >= 2 and math.gcd(slope.beta, slope.alpha) != 1:
                violations.append(
                    Violation(
                        path=here,
                        message=f"gcd({slope.beta}, {slope.alpha}) ≠ 1",
                    )
                )
        return violations
    return []


def validate(desc: ManifoldDesc) -> List[Violation]:
    """Every broken constraint of desc; empty when desc is valid"""
    return _validate_at(desc, "")


def ensure_valid(desc: ManifoldDesc) -> ManifoldDesc:
    """Returns desc unchanged, raising ManifoldValidationError if it is invalid"""
    violations = validate(desc)
    if violations:
        raise ManifoldValidationError(violations)
    return desc


def _canonical_group(group: SphericalGroup) -> SphericalGroup:
    if isinstance(group, Lens):
        return Lens(p=group.p, q=group.q % group.p)
    if isinstance(group, ProductZm):
        return ProductZm(m=group.m, inner=_canonical_group(group.inner))
    return group


def _group_key(group: SphericalGroup) -> Tuple:
    if isinstance(group, Lens):
        return (0, group.p, group.q)
    if isinstance(group, DStar):
        return (1, group.n)
    if isinstance(group, T24):
        return (2,)
    if isinstance(group, O48):
        return (3,)
    if isinstance(group, I120):
        return (4,)
    if isinstance(group, TPrime):
        return (5, group.q)
    if isinstance(group, DPrime):
        return (6, group.n_prime, group.q)
    return (7, group.m, _group_key(group.inner))


def piece_key(piece: ManifoldDesc) -> Tuple:
    """Total order on prime pieces used to lay out connected sums"""
    if isinstance(piece, S2xS1):
        return (0,)
    if isinstance(piece, Spherical):
        if isinstance(piece.group, Lens):
            return (2, piece.group.p, piece.group.q)
        return (1, _group_key(piece.group), piece.reversed)
    if isinstance(piece, TorusBundle):
        return (3, piece.a, piece.b, piece.c, piece.d)
    if isinstance(piece, TorusSemiBundle):
        return (4, piece.a, piece.b, piece.c, piece.d)
    if isinstance(piece, Seifert):
        slopes = tuple((s.beta, s.alpha) for s in piece.slopes)
        return (5, piece.genus, not piece.orientable_base, slopes)
    return (6,)


def canonicalize(desc: ManifoldDesc) -> ManifoldDesc:
    """Reduces lens parameters, rewrites reversed lenses and sorts sums; idempotent"""
    if isinstance(desc, Spherical):
        group = _canonical_group(desc.group)
        if isinstance(group, Lens) and desc.reversed:
            return Spherical(group=Lens(p=group.p, q=(group.p - group.q) % group.p))
        return Spherical(group=group, reversed=desc.reversed)
    if isinstance(desc, ConnectedSum):
        merged: Dict[Tuple, Summand] = {}
        for summand in desc.pieces:
            piece = canonicalize(summand.piece)
            key = piece_key(piece)
            count = summand.multiplicity + (merged[key].multiplicity if key in merged else 0)
            merged[key] = Summand(piece=piece, multiplicity=count)
        pieces = tuple(merged[key] for key in sorted(merged))
        if len(pieces) == 1 and pieces[0].multiplicity == 1:
            return pieces[0].piece
        return ConnectedSum(pieces=pieces)
    return desc


def euler_number(s: Seifert) -> Fraction:
    """e = sum of beta_i / alpha_i"""
    return sum((Fraction(slope.beta, slope.alpha) for slope in s.slopes), Fraction(0))


def orbifold_chi(s: Seifert) -> Fraction:
    """Euler characteristic of the base orbifold"""
    base = 2 - 2 * s.genus if s.orientable_base else 2 - s.genus
    return Fraction(base) - sum(
        (1 - Fraction(1, slope.alpha) for slope in s.slopes if slope.alpha >= 2),
        Fraction(0),
    )


def singular_alphas(s: Seifert) -> Tuple[int, ...]:
    """Multiplicities of the exceptional fibers, ascending"""
    return tuple(sorted(slope.alpha for slope in s.slopes if slope.alpha >= 2))


def nil_triple(s: Seifert) -> Optional[Tuple[int, int, int]]:
    """The exceptional-fiber triple when s is one of the three Nil orbifold shapes"""
    alphas = singular_alphas(s)
    if s.genus == 0 and s.orientable_base and alphas in NIL_TRIPLES:
        return alphas  # type: ignore[return-value]
    return None


def essential_pieces(desc: ConnectedSum) -> List[Summand]:
    """Summands other than copies of S^3"""
    return [
        summand
        for summand in desc.pieces
        if not (isinstance(summand.piece, Spherical) and order(summand.piece.group) == 1)
    ]


def is_rp3_sum_rp3(desc: ManifoldDesc) -> bool:
    """True for L(2,1) # L(2,1), up to S^3 summands"""
    if not isinstance(desc, ConnectedSum):
        return False
    pieces = essential_pieces(desc)
    return sum(s.multiplicity for s in pieces) == 2 and all(
        isinstance(s.piece, Spherical) and s.piece.group == Lens(p=2, q=1)
        for s in pieces
    )


def _classify_seifert(s: Seifert) -> Geometry:
    chi = orbifold_chi(s)
    e = euler_number(s)
    if chi > 0 or (chi == 0 and e == 0):
        raise InvalidInputError(
            f"Seifert data with χ = {chi}, e = {e} describes an S^3, S^2xE^1 or E^3 manifold: "
            "enter it with the spherical, S2xS1, TB or TSB syntax"
        )
    if chi == 0:
        if nil_triple(s) is None:
            raise InvalidInputError(
                "This Nil Seifert manifold is a torus (semi-)bundle: use TB/TSB"
            )
        return Geometry.NIL
    return Geometry.H2xE1 if e == 0 else Geometry.PSL_OR_OTHER


def classify(desc: ManifoldDesc) -> Geometry:
    """Geometry of a validated descriptor"""
    if isinstance(desc, S2xS1):
        return Geometry.S2xE1
    if isinstance(desc, Spherical):
        return Geometry.S3
    if isinstance(desc, ConnectedSum):
        desc = canonicalize(desc)
        if not isinstance(desc, ConnectedSum):
            return classify(desc)
        if is_rp3_sum_rp3(desc):
            return Geometry.S2xE1
        pieces = essential_pieces(desc)
        if not pieces:
            return Geometry.S3
        if len(pieces) == 1 and pieces[0].multiplicity == 1:
            return classify(pieces[0].piece)
        return Geometry.NON_PRIME
    if isinstance(desc, TorusBundle):
        trace = desc.a + desc.d
        if (desc.b, desc.c) == (0, 0) and abs(desc.a) == 1 and desc.a == desc.d:
            return Geometry.E3
        if abs(trace) < 2:
            return Geometry.E3
        return Geometry.NIL if abs(trace) == 2 else Geometry.SOL
    if isinstance(desc, TorusSemiBundle):
        shape = semibundle_shape(desc.a, desc.b, desc.c, desc.d)
        if shape is None:
            raise InvalidInputError("Semi-bundle gluing is not in canonical coordinates")
        return SEMIBUNDLE_GEOMETRY[shape]
    return _classify_seifert(desc)
