"""Types for the manifold description language"""

from pydantic import model_validator
from typing_extensions import Self

from selfdeg.types.base_types import FrozenModel


class SourceSpan(FrozenModel):
    """Half-open [begin, end) offsets into the parsed text"""

    begin: int
    end: int

    @model_validator(mode="after")
    def validate_order(self) -> Self:
        """begin <= end, both nonnegative"""
        if not 0 <= self.begin <= self.end:
            raise ValueError(f"Invalid span [{self.begin}, {self.end})")
        return self


class Diagnostic(FrozenModel):
    """A located, one-line parse or validation message"""

    span: SourceSpan
    message: str

    def render(self, text: str) -> str:
        """Formats the message with the offending text underlined"""
        width = max(1, self.span.end - self.span.begin)
        return (
            f"{self.span.begin}:{self.span.end}: {self.message}\n"
            f"  {text}\n"
            f"  {' ' * self.span.begin}{'^' * width}"
        )
