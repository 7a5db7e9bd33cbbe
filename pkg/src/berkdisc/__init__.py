"""Exact computations with polynomial self-maps of the p-adic open unit disc over Q(pi), pi^N = p."""

from .disc_morphism import DiscMorphism, DiscPoint
from .fiber import CountFunction, FiberData, count_at, count_function, validate_fiber
from .polygon import Domain, NewtonPolygon, from_lines, polygon_of
from .polynomial import Poly, evaluate, from_roots
from .pushforward import Multiradius, multiradius_bruteforce, multiradius_from_count
from .radiality import Status, radial_certificate
from .reduction import residual_report
from .valued_field import INF, FieldElement, FieldParams, pi_power

__version__ = "0.1.0"

__all__ = [
    "INF",
    "CountFunction",
    "DiscMorphism",
    "DiscPoint",
    "Domain",
    "FiberData",
    "FieldElement",
    "FieldParams",
    "Multiradius",
    "NewtonPolygon",
    "Poly",
    "Status",
    "count_at",
    "count_function",
    "evaluate",
    "from_lines",
    "from_roots",
    "multiradius_bruteforce",
    "multiradius_from_count",
    "pi_power",
    "polygon_of",
    "radial_certificate",
    "residual_report",
    "validate_fiber",
]
