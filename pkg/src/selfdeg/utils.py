"""Helper functions for selfdeg internals.
Imports are intentionally kept to a minimum and tightly scoped
to avoid circular dependencies."""

import logging
from argparse import SUPPRESS, ArgumentParser, ArgumentTypeError
from pathlib import Path
from typing import Dict, Optional


def extract_version() -> str:
    """Returns the version of the installed package"""
    import importlib.metadata

    try:
        return importlib.metadata.version("selfdeg")
    except Exception:
        return "unknown"

def log_level_type(string: str) -> int:
    """Accepts a logging level name (DEBUG, INFO, ...) or its number"""
    if string.isdigit():
        return int(string)
    level = logging.getLevelName(string.upper())
    if not isinstance(level, int):
        raise ArgumentTypeError(f"Invalid log level: {string}")
    return level


FLAG_ALIASES: Dict[str, str] = {"json_output": "--json"}


def add_config_arguments(parser: ArgumentParser) -> ArgumentParser:
    """Adds one flag per CalculatorConfig field, plus --config for a YAML settings file.

    Every flag defaults to SUPPRESS, so only the flags actually given reach the
    parsed namespace and override file values.
    """
    from typing import get_type_hints

    from selfdeg.types import CalculatorConfig, PathLike

    parser.add_argument(
        "--config",
        type=Path,
        default=SUPPRESS,
        help="Path to a YAML file of calculator settings",
    )
    field_type_map = get_type_hints(CalculatorConfig)
    for name, field in CalculatorConfig.model_fields.items():
        flags = [f"--{name.replace('_', '-')}"]
        if name in FLAG_ALIASES:
            flags.insert(0, FLAG_ALIASES[name])
        field_type = field_type_map[name]
        if field_type is bool:
            parser.add_argument(
                *flags, dest=name, action="store_true", default=SUPPRESS, help=field.description
            )
            continue
        if name == "log_level":
            field_type = log_level_type
        elif field_type in (PathLike, Optional[PathLike]):
            field_type = Path
        parser.add_argument(
            *flags, dest=name, type=field_type, default=SUPPRESS, help=field.description
        )
    return parser
