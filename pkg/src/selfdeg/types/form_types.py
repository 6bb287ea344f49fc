"""Types for integer binary quadratic forms"""

from typing import Tuple

from pydantic import computed_field, model_validator
from typing_extensions import Self

from selfdeg.types.base_types import FrozenModel


class BinaryForm(FrozenModel):
    """The integer binary quadratic form A x^2 + B xy + C y^2"""

    A: int
    B: int
    C: int

    @computed_field  # type: ignore[misc]
    @property
    def discriminant(self) -> int:
        """B^2 - 4AC"""
        return self.B * self.B - 4 * self.A * self.C

    @property
    def coefficients(self) -> Tuple[int, int, int]:
        """(A, B, C) as a plain tuple"""
        return (self.A, self.B, self.C)

    def __call__(self, x: int, y: int) -> int:
        """Evaluates the form at (x, y)"""
        return self.A * x * x + self.B * x * y + self.C * y * y


class SolConditions(FrozenModel):
    """Monodromy entries of a Sol torus bundle, which decide the integrality side-conditions"""

    a: int
    b: int
    c: int
    d: int

    @model_validator(mode="after")
    def validate_sol(self) -> Self:
        """Checks ad - bc = 1 and |a + d| > 2"""
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError("Sol monodromy must have determinant 1")
        if abs(self.a + self.d) <= 2:
            raise ValueError("Sol monodromy must have |trace| > 2")
        return self

    def admits(self, p: int, r: int) -> bool:
        """Whether (p, r) satisfies the side-conditions: c | br and c | (d-a)r, or c | (d-a)p - br"""
        c = abs(self.c)
        if (self.b * r) % c == 0 and ((self.d - self.a) * r) % c == 0:
            return True
        return (p * (self.d - self.a) - self.b * r) % c == 0
