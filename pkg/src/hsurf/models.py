"""Closed-form geometry of rotationally symmetric model spaces.

The hyperbolic space of curvature b < 0 is the model with warping
sinh(sqrt(-b) r)/sqrt(-b); general warpings are accepted as RadialFunction
values. Two-dimensional ball/sphere volumes carry their 2*pi fiber factor
explicitly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .radial import RadialFunction, derivative, integrate, second_derivative

__all__ = [
    "SingularRadiusError",
    "HyperbolicAmbient",
    "WModel",
    "omega_b",
    "omega_b_radial",
    "eta_w",
    "eta_hyperbolic",
    "eta_excess_hyperbolic",
    "radial_curvature",
    "ball_area_2d",
    "sphere_length_2d",
]


class SingularRadiusError(ValueError):
    """Quantity evaluated at the pole r = 0 where it diverges."""


@dataclass(frozen=True)
class HyperbolicAmbient:
    """Ambient hyperbolic space: constant sectional curvature b < 0, dim n >= 3."""

    b: float
    n: int = 3

    def __post_init__(self):
        if not self.b < 0.0:
            raise ValueError(f"ambient curvature must be negative, got {self.b}")
        if self.n < 3:
            raise ValueError(f"ambient dimension must be >= 3, got {self.n}")

    @property
    def kappa(self) -> float:
        return math.sqrt(-self.b)


@dataclass(frozen=True)
class WModel:
    """2-d rotationally symmetric model over [0, inf) with unit-circle fiber."""

    warping: RadialFunction
    dimension: int = 2

    def __post_init__(self):
        w0 = float(self.warping(0.0))
        if abs(w0) > 1e-9:
            raise ValueError(f"warping(0) = {w0}, expected 0")
        d0 = derivative(self.warping, 0.0, step=1e-6)
        if abs(d0 - 1.0) > 1e-5:
            raise ValueError(f"warping'(0+) = {d0}, expected 1")


def omega_b(b: float, r):
    """Warping function of hyperbolic space: sinh(sqrt(-b) r)/sqrt(-b)."""
    if b >= 0.0:
        raise ValueError("b must be negative")
    kappa = math.sqrt(-b)
    return np.sinh(kappa * np.asarray(r, dtype=float)) / kappa


def omega_b_radial(b: float) -> RadialFunction:
    """omega_b as a RadialFunction with exact derivative and antiderivative."""
    if b >= 0.0:
        raise ValueError("b must be negative")
    kappa = math.sqrt(-b)
    return RadialFunction(
        fn=lambda r: np.sinh(kappa * np.asarray(r, dtype=float)) / kappa,
        name=f"omega_b(b={b})",
        exact_derivative=lambda r: np.cosh(kappa * np.asarray(r, dtype=float)),
        # int_0^r sinh(kappa s)/kappa ds = (cosh(kappa r) - 1)/kappa^2
        exact_antiderivative=lambda r: (np.cosh(kappa * np.asarray(r, dtype=float)) - 1.0) / (kappa * kappa),
    )


def eta_w(w: RadialFunction, r: float) -> float:
    """Mean curvature w'(r)/w(r) of the geodesic r-sphere in the model."""
    if r <= 0.0:
        raise SingularRadiusError("sphere mean curvature diverges at the pole")
    wr = float(w(r))
    dw = float(w.exact_derivative(r)) if w.exact_derivative is not None else derivative(w, r)
    return dw / wr


def eta_hyperbolic(b: float, r) -> np.ndarray | float:
    """sqrt(-b) * coth(sqrt(-b) r), vectorized; r must be positive."""
    kappa = math.sqrt(-b)
    x = kappa * np.asarray(r, dtype=float)
    return kappa * np.cosh(x) / np.sinh(x)


def eta_excess_hyperbolic(b: float, r) -> np.ndarray | float:
    """eta_hyperbolic - sqrt(-b), computed without cancellation.

    coth(x) - 1 = 2/(e^{2x} - 1); the excess underflows gracefully instead of
    rounding to zero for large r, which the balance margin tests rely on.
    """
    kappa = math.sqrt(-b)
    x = kappa * np.asarray(r, dtype=float)
    return 2.0 * kappa / np.expm1(2.0 * x)


def radial_curvature(w: RadialFunction, r: float) -> float:
    """Radial sectional curvature -w''(r)/w(r) of the model."""
    if r <= 0.0:
        raise SingularRadiusError("radial curvature formula degenerates at the pole")
    wr = float(w(r))
    if w.exact_derivative is not None:
        # differentiate the exact first derivative once
        d2 = derivative(w.exact_derivative, r)
    else:
        d2 = second_derivative(w, r)
    return -d2 / wr


def ball_area_2d(w: RadialFunction, r: float, tol: float = 1e-10) -> float:
    """Area 2*pi*int_0^r w of the geodesic r-ball in the 2-d model."""
    if r < 0.0:
        raise ValueError("r must be nonnegative")
    if r == 0.0:
        return 0.0
    if w.exact_antiderivative is not None:
        return 2.0 * math.pi * float(w.exact_antiderivative(r))
    return 2.0 * math.pi * integrate(w, 0.0, r, tol=tol).value


def sphere_length_2d(w: RadialFunction, r: float) -> float:
    """Circumference 2*pi*w(r) of the geodesic r-sphere in the 2-d model."""
    if r < 0.0:
        raise ValueError("r must be nonnegative")
    return 2.0 * math.pi * float(w(r))
