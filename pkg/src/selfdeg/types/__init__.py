"""Dataclasses and Enums for selfdeg"""

from .base_types import BaseModel, FrozenModel, PathLike
from .config_types import CalculatorConfig
from .degree_types import (
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
from .dsl_types import Diagnostic, SourceSpan
from .engine_types import ReversalReport, UnitClassData
from .form_types import BinaryForm, SolConditions
from .manifold_types import (
    DPrime,
    DStar,
    I120,
    O48,
    T24,
    ConnectedSum,
    Geometry,
    Lens,
    ManifoldDesc,
    ProductZm,
    S2xS1,
    Seifert,
    Slope,
    Spherical,
    SphericalGroup,
    Summand,
    TorusBundle,
    TorusSemiBundle,
    TPrime,
    Violation,
)
from .residue_types import Factorization, ResidueSet

__all__ = [
    "BaseModel",
    "FrozenModel",
    "PathLike",
    "CalculatorConfig",
    "AllIntegers",
    "DegreeSet",
    "Finite",
    "FormImage",
    "IntersectionOf",
    "Negated",
    "Periodic",
    "RootPredicate",
    "Scaled",
    "SquaresOf",
    "TrivialBand",
    "UnionOf",
    "UnitTimesForm",
    "Diagnostic",
    "SourceSpan",
    "ReversalReport",
    "UnitClassData",
    "BinaryForm",
    "SolConditions",
    "ConnectedSum",
    "DPrime",
    "DStar",
    "Geometry",
    "I120",
    "Lens",
    "ManifoldDesc",
    "O48",
    "ProductZm",
    "S2xS1",
    "Seifert",
    "Slope",
    "Spherical",
    "SphericalGroup",
    "Summand",
    "T24",
    "TPrime",
    "TorusBundle",
    "TorusSemiBundle",
    "Violation",
    "Factorization",
    "ResidueSet",
]
