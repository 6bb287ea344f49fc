"""Types for symbolic degree sets"""

from enum import Enum
from typing import Literal, Optional, Tuple, Union

from pydantic import Field
from typing_extensions import Annotated

from selfdeg.types.base_types import FrozenModel
from selfdeg.types.form_types import BinaryForm, SolConditions
from selfdeg.types.residue_types import ResidueSet


class RootPredicate(str, Enum):
    """Condition on the nonnegative root l of a square l^2"""

    ALL = "all"
    ODD = "odd"
    LOESCHIAN_1_MOD_6 = "loeschian_1_mod_6"
    LOESCHIAN_1_MOD_3 = "loeschian_1_mod_3"
    TWO_SQUARES_1_MOD_4 = "two_squares_1_mod_4"


class AllIntegers(FrozenModel):
    """Every integer"""

    kind: Literal["all"] = "all"


class Periodic(FrozenModel):
    """A union of residue classes"""

    kind: Literal["periodic"] = "periodic"
    residues: ResidueSet


class SquaresOf(FrozenModel):
    """{l^2 : l >= 0, predicate(l)}"""

    kind: Literal["squares"] = "squares"
    predicate: RootPredicate = RootPredicate.ALL


class FormImage(FrozenModel):
    """Values of a binary form, optionally restricted by Sol side-conditions.

    With conditions (a, b, c, d) the members are the n with
    form(p, r) = c * n for some (p, r) the conditions admit.
    """

    kind: Literal["form_image"] = "form_image"
    form: BinaryForm
    conditions: Optional[SolConditions] = None


class UnitTimesForm(FrozenModel):
    """{(k t + 1) v : t in Z, v a value of form}"""

    kind: Literal["unit_times_form"] = "unit_times_form"
    k: int = Field(ge=3)
    form: BinaryForm


class Finite(FrozenModel):
    """An explicit finite set"""

    kind: Literal["finite"] = "finite"
    values: Tuple[int, ...] = ()


class TrivialBand(FrozenModel):
    """{0, 1} is contained in D, and D is contained in {-1, 0, 1}; -1 undetermined"""

    kind: Literal["trivial_band"] = "trivial_band"


class Scaled(FrozenModel):
    """{factor * s : s in inner}"""

    kind: Literal["scaled"] = "scaled"
    factor: int
    inner: "DegreeSet"


class Negated(FrozenModel):
    """{-s : s in inner}"""

    kind: Literal["negated"] = "negated"
    inner: "DegreeSet"


class UnionOf(FrozenModel):
    """Union of the member sets"""

    kind: Literal["union"] = "union"
    members: Tuple["DegreeSet", ...]


class IntersectionOf(FrozenModel):
    """Intersection of the member sets"""

    kind: Literal["intersection"] = "intersection"
    members: Tuple["DegreeSet", ...]


DegreeSet = Annotated[
    Union[
        AllIntegers,
        Periodic,
        SquaresOf,
        FormImage,
        UnitTimesForm,
        Finite,
        TrivialBand,
        Scaled,
        Negated,
        UnionOf,
        IntersectionOf,
    ],
    Field(discriminator="kind"),
]

for _model in (Scaled, Negated, UnionOf, IntersectionOf):
    _model.model_rebuild()
