"""Types for the command-line output envelope"""

from enum import Enum
from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import Field
from typing_extensions import Annotated

from selfdeg.types.base_types import BaseModel
from selfdeg.types.dsl_types import Diagnostic
from selfdeg.types.engine_types import ReversalReport


class EnvelopeStatus(str, Enum):
    """Outcome of a command"""

    OK = "ok"
    ERROR = "error"


class SetPayload(BaseModel):
    """Canonical description of a degree set"""

    kind: Literal["set"] = "set"
    description: str


class MembersPayload(BaseModel):
    """Members of a degree set within a range"""

    kind: Literal["members"] = "members"
    lo: int
    hi: int
    members: List[int]


class MembershipPayload(BaseModel):
    """Three-valued membership; null means undetermined"""

    kind: Literal["membership"] = "membership"
    value: Optional[bool]


class GeometryPayload(BaseModel):
    """Geometry tag of a manifold"""

    kind: Literal["geometry"] = "geometry"
    geometry: str


class CanonicalPayload(BaseModel):
    """Canonical rendering of a manifold description"""

    kind: Literal["canonical"] = "canonical"
    text: str


class ReversalPayload(BaseModel):
    """Orientation-reversal predicates of a lens space"""

    kind: Literal["reversal"] = "reversal"
    report: ReversalReport


class ErrorPayload(BaseModel):
    """Failure details"""

    kind: Literal["error"] = "error"
    exit_code: int
    message: str
    diagnostics: List[Diagnostic] = []


Payload = Annotated[
    Union[
        SetPayload,
        MembersPayload,
        MembershipPayload,
        GeometryPayload,
        CanonicalPayload,
        ReversalPayload,
        ErrorPayload,
    ],
    Field(discriminator="kind"),
]


class OutputEnvelope(BaseModel):
    """Schema-stable result of one CLI command"""

    status: EnvelopeStatus = EnvelopeStatus.OK
    command: str
    query: Dict[str, Any] = {}
    """Echo of the command's arguments"""
    geometry: Optional[str] = None
    result: Payload
    notes: List[str] = []
