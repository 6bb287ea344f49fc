"""Base Dataclasses and Enums for selfdeg"""

from pathlib import Path
from typing import Type, TypeVar, Union

import yaml
from pydantic import BaseModel as _BaseModel

_T = TypeVar("_T")

PathLike = Union[str, Path]


class BaseModel(_BaseModel, use_enum_values=True):
    """Allows any sub-class to inherit methods allowing for programmatic description of its values.
    Can load a yaml file into a class.
    """

    @classmethod
    def from_yaml(cls: Type[_T], path: PathLike) -> _T:
        """Allows all derived data models to be loaded from yaml.
        Parameters
        ----------
        path: PathLike
            Path to a yaml file to be read.
        """
        with open(path) as fp:
            raw_data = yaml.safe_load(fp)
        return cls(**(raw_data or {}))


class FrozenModel(BaseModel, frozen=True):
    """Immutable value object; every mathematical value in selfdeg derives from this"""
