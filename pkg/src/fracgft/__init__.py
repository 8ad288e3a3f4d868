"""Fractional-derivative function classes on the unit disk.

Coefficient calculus for normalized negative-coefficient functions under the
Tremblay fractional operator, with a numeric oracle for every closed form.
"""

__version__ = "0.1.0"

from .bounds import distortion_function, distortion_operator, radius_convex, radius_starlike
from .classify import ClassParams, coefficient_functional, extremal, is_member, max_coefficient
from .closure import convex_combination, hadamard_with_order, segment
from .fracops import TremblayParams, tremblay
from .series import GapSeries, evaluate, evaluate_derivative, modified_convolution

__all__ = [
    "ClassParams",
    "GapSeries",
    "TremblayParams",
    "coefficient_functional",
    "convex_combination",
    "distortion_function",
    "distortion_operator",
    "evaluate",
    "evaluate_derivative",
    "extremal",
    "hadamard_with_order",
    "is_member",
    "max_coefficient",
    "modified_convolution",
    "radius_convex",
    "radius_starlike",
    "segment",
    "tremblay",
]
