# flake8: noqa
"""Exact calculator for the self-mapping degree sets of closed 3-manifolds"""

from importlib.metadata import PackageNotFoundError, version

__version__ = "unknown"
try:
    __version__ = version("selfdeg")
except PackageNotFoundError:
    pass

from selfdeg.core.dsl import parse, render
from selfdeg.engine import degrees, geometry_of, lens_reversal_report, minus_one_in

__all__ = [
    "degrees",
    "geometry_of",
    "lens_reversal_report",
    "minus_one_in",
    "parse",
    "render",
]
