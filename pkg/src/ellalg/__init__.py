"""Exact arithmetic for twisted homogeneous coordinate rings on elliptic
curves and for the divisor-layering calculus of their blowup subrings."""

from .config import Config, Fixture, builtin_names, load_fixture
from .curve import Curve, Point, Translation
from .divisors import Divisor, DivisorClass, parse_divisor
from .hilbert import DimProfile, HilbertSeries
from .layerings import Layering, make_layering, parse_layering
from .sections import SectionSpace, TCRContext

__version__ = "0.1.0"

__all__ = [
    "Config",
    "Curve",
    "DimProfile",
    "Divisor",
    "DivisorClass",
    "Fixture",
    "HilbertSeries",
    "Layering",
    "Point",
    "SectionSpace",
    "TCRContext",
    "Translation",
    "builtin_names",
    "load_fixture",
    "make_layering",
    "parse_divisor",
    "parse_layering",
]
