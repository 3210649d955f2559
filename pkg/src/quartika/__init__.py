"""Exact generation, verification and search of solutions of n(x^4+y^4) = z^4+w^4."""
from .arith import (Quadruple, int_sqrt_exact, normalize_quadruple, rat_sqrt_exact,
                    scale_transform, verify)
from .elliptic import INFINITY, Point, WeierstrassCurve
from .errors import (DegenerateFamily, DegenerateStep, ExceptionalPoint,
                     NoNontrivialDirection, NotASquare, OutOfScope, QuartikaError,
                     ZeroQuartic)

__version__ = "0.1.0"

__all__ = [
    "Quadruple", "verify", "normalize_quadruple", "int_sqrt_exact", "rat_sqrt_exact",
    "scale_transform", "WeierstrassCurve", "Point", "INFINITY", "QuartikaError",
    "NotASquare", "ExceptionalPoint", "DegenerateFamily", "OutOfScope",
    "NoNontrivialDirection", "DegenerateStep", "ZeroQuartic",
]
