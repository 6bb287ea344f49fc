"""Types related to calculator configuration"""

import logging
from pathlib import Path
from typing import Optional

from pydantic import Field, field_validator

from selfdeg.types.base_types import BaseModel, PathLike


class CalculatorConfig(BaseModel, extra="allow"):
    """Defines the format for a selfdeg config file
    Note: the extra='allow' parameter allows for
    extra fields to be added to the config, beyond what's defined below
    """

    with_zero: bool = Field(
        default=False,
        description="Add 0 (the degree of a constant map) to every computed set",
    )
    json_output: bool = Field(
        default=False, description="Emit a JSON envelope instead of plain text"
    )
    quiet: bool = Field(default=False, description="Suppress explanatory notes")
    max_enumeration_width: int = Field(
        default=10_000_000,
        ge=1,
        description="Largest number of integers a single enumeration may scan",
    )
    log_level: int = Field(
        default=logging.WARNING, description="Logging level for selfdeg"
    )
    log_directory: Optional[PathLike] = Field(
        default=None, description="Directory for log files; no file logging if unset"
    )

    # Validators
    @field_validator("log_directory")
    @classmethod
    def validate_log_directory(cls, v: Optional[PathLike]) -> Optional[Path]:
        """Converts the log_directory to a Path object"""
        return None if v is None else Path(v)
