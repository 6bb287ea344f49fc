"""Types describing closed oriented 3-manifolds in coordinates"""

from typing import Literal, Tuple, Union

from aenum import MultiValueEnum
from pydantic import Field
from typing_extensions import Annotated

from selfdeg.types.base_types import FrozenModel


class Geometry(str, MultiValueEnum):
    """Thurston geometry (or non-prime marker) assigned to a descriptor"""

    S3 = "S3", "S^3"
    S2xE1 = "S2xE1", "S^2xE^1"
    E3 = "E3", "E^3"
    NIL = "Nil", "NIL"
    SOL = "Sol", "SOL"
    H2xE1 = "H2xE1", "H^2xE^1"
    PSL_OR_OTHER = "PSL-or-other", "PSL"
    NON_PRIME = "NonPrime", "non-prime"


# Spherical space form groups


class Lens(FrozenModel):
    """Cyclic group Z_p, realized by L(p, q)"""

    kind: Literal["lens"] = "lens"
    p: int
    q: int


class DStar(FrozenModel):
    """Binary dihedral group D*_{4n}"""

    kind: Literal["dstar"] = "dstar"
    n: int


class T24(FrozenModel):
    """Binary tetrahedral group"""

    kind: Literal["t24"] = "t24"


class O48(FrozenModel):
    """Binary octahedral group"""

    kind: Literal["o48"] = "o48"


class I120(FrozenModel):
    """Binary icosahedral group (Poincare sphere)"""

    kind: Literal["i120"] = "i120"


class TPrime(FrozenModel):
    """T'_{8 * 3^q}"""

    kind: Literal["tprime"] = "tprime"
    q: int


class DPrime(FrozenModel):
    """D'_{n' * 2^q}"""

    kind: Literal["dprime"] = "dprime"
    n_prime: int
    q: int


class ProductZm(FrozenModel):
    """Z_m x pi_1(N) with gcd(m, |pi_1(N)|) = 1"""

    kind: Literal["product"] = "product"
    m: int
    inner: "SphericalGroup"


SphericalGroup = Annotated[
    Union[Lens, DStar, T24, O48, I120, TPrime, DPrime, ProductZm],
    Field(discriminator="kind"),
]

ProductZm.model_rebuild()


# Manifolds


class S2xS1(FrozenModel):
    """S^2 x S^1"""

    kind: Literal["s2xs1"] = "s2xs1"


class Spherical(FrozenModel):
    """The spherical manifold with the given fundamental group, optionally orientation-reversed"""

    kind: Literal["spherical"] = "spherical"
    group: SphericalGroup
    reversed: bool = False


class Summand(FrozenModel):
    """A prime piece together with its multiplicity in a connected sum"""

    piece: "ManifoldDesc"
    multiplicity: int = 1


class ConnectedSum(FrozenModel):
    """A connected sum of prime pieces"""

    kind: Literal["connected_sum"] = "connected_sum"
    pieces: Tuple[Summand, ...]


class TorusBundle(FrozenModel):
    """Mapping torus M_phi of phi = (a, b; c, d)"""

    kind: Literal["torus_bundle"] = "torus_bundle"
    a: int
    b: int
    c: int
    d: int


class TorusSemiBundle(FrozenModel):
    """Torus semi-bundle N_phi glued by phi = (a, b; c, d) in canonical coordinates"""

    kind: Literal["torus_semibundle"] = "torus_semibundle"
    a: int
    b: int
    c: int
    d: int


class Slope(FrozenModel):
    """Exceptional fiber slope beta / alpha"""

    beta: int
    alpha: int


class Seifert(FrozenModel):
    """Seifert manifold M(+-g; beta_1/alpha_1, ...)"""

    kind: Literal["seifert"] = "seifert"
    genus: int
    orientable_base: bool = True
    slopes: Tuple[Slope, ...] = ()


ManifoldDesc = Annotated[
    Union[S2xS1, Spherical, ConnectedSum, TorusBundle, TorusSemiBundle, Seifert],
    Field(discriminator="kind"),
]

Summand.model_rebuild()
ConnectedSum.model_rebuild()


class Violation(FrozenModel):
    """A broken constraint, located by a dotted path into the descriptor"""

    path: str = ""
    """e.g. "pieces[2].group.q"; empty for the root"""
    message: str
