"""Geometry of invertible linear operators of the plane.

Matrices are passed as ((a, b), (c, d)) and vectors as (x1, x2); any nested
sequence of numbers works. Library errors raise PlaneopError, a ValueError
subclass carrying a short ``code`` string.
"""

from ._planeop import (
    EllipseReport,
    IsometryKind,
    McEstimate,
    OrbitReport,
    PlaneopError,
    PolarForm,
    RangeMode,
    RotationRange,
    classify,
    ellipse_through,
    estimate_mean_alpha,
    estimate_mean_gamma_prime,
    gamma_max_real,
    gamma_of,
    gamma_prime_max,
    isometric_directions,
    length_ratio_bounds,
    operator_norm,
    orbit,
    polar_decompose,
    rotation_range,
    signed_angle,
)

__all__ = [
    "EllipseReport",
    "IsometryKind",
    "McEstimate",
    "OrbitReport",
    "PlaneopError",
    "PolarForm",
    "RangeMode",
    "RotationRange",
    "classify",
    "ellipse_through",
    "estimate_mean_alpha",
    "estimate_mean_gamma_prime",
    "gamma_max_real",
    "gamma_of",
    "gamma_prime_max",
    "isometric_directions",
    "length_ratio_bounds",
    "operator_norm",
    "orbit",
    "polar_decompose",
    "rotation_range",
    "signed_angle",
]
