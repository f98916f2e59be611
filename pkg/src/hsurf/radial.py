"""Scalar kernel for functions of a radial coordinate.

Quadrature, numerical differentiation, infimum/crossing searches on a ray,
and the elementary hyperbolic-trig inequalities that the surface checks
rely on. Everything here is pure and operates on plain floats / numpy
arrays; the rest of the package builds on these primitives.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

__all__ = [
    "NumericalDomainError",
    "RadialFunction",
    "QuadratureResult",
    "integrate",
    "derivative",
    "derivative_with_info",
    "InfimumResult",
    "infimum_on_ray",
    "first_crossing",
    "ScalarInequalityReport",
    "scalar_inequality_suite",
    "ray_grid",
]

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class NumericalDomainError(ValueError):
    """A sample of a radial function came out non-finite."""


@dataclass(frozen=True)
class RadialFunction:
    """Scalar function of the radial coordinate r >= 0.

    ``kind`` is either ``closed-form`` (fn is an analytic callable, optionally
    with exact derivative / antiderivative-from-zero callables) or
    ``sampled-grid`` (uniform strictly-increasing grid, interpolated).
    Callables must accept numpy arrays.
    """

    fn: Callable
    kind: str = "closed-form"
    name: str = ""
    exact_derivative: Callable | None = None
    exact_antiderivative: Callable | None = None
    grid_r: np.ndarray | None = None
    grid_y: np.ndarray | None = None
    grid_step: float | None = None
    interpolation: str = "linear"

    def __call__(self, r):
        return self.fn(r)

    @classmethod
    def from_samples(cls, r, y, name: str = "", interpolation: str = "linear"):
        """Build a sampled-grid function (uniform step, constant extension)."""
        r = np.asarray(r, dtype=float)
        y = np.asarray(y, dtype=float)
        if r.ndim != 1 or r.size < 2 or r.shape != y.shape:
            raise ValueError("need matching 1-d sample arrays with >= 2 points")
        steps = np.diff(r)
        if np.any(steps <= 0):
            raise ValueError("sample radii must be strictly increasing")
        step = float(steps[0])
        if not np.allclose(steps, step, rtol=1e-6, atol=1e-12):
            raise ValueError("sample radii must be uniformly spaced")
        if not np.all(np.isfinite(y)):
            raise NumericalDomainError("non-finite sample values")
        if interpolation == "linear":
            def fn(t, _r=r, _y=y):
                return np.interp(t, _r, _y)
        elif interpolation == "step":
            # piecewise constant, value of the bin containing t
            def fn(t, _r=r, _y=y):
                t = np.asarray(t, dtype=float)
                idx = np.clip(np.searchsorted(_r, t, side="right") - 1, 0, _y.size - 1)
                out = _y[idx]
                return out if out.ndim else float(out)
        else:
            raise ValueError(f"unknown interpolation {interpolation!r}")
        return cls(fn=fn, kind="sampled-grid", name=name, grid_r=r, grid_y=y,
                   grid_step=step, interpolation=interpolation)


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    est_error: float


def _eval_checked(f, x):
    y = float(f(x))
    if not math.isfinite(y):
        raise NumericalDomainError(f"non-finite value {y!r} at r={x!r}")
    return y


def integrate(f, a: float, b: float, tol: float = 1e-10,
              max_depth: int = 48) -> QuadratureResult:
    """Adaptive composite Simpson integration of f over [a, b].

    The absolute error budget ``tol`` is halved at each bisection; the
    returned estimate satisfies est_error <= tol except when max_depth is
    hit (the accumulated estimate is still reported honestly).
    """
    if not (0.0 <= a <= b):
        raise ValueError(f"need 0 <= a <= b, got [{a}, {b}]")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if a == b:
        return QuadratureResult(0.0, 0.0)

    def simpson(fa, fm, fb, h):
        return h / 6.0 * (fa + 4.0 * fm + fb)

    def recurse(lo, hi, flo, fmid, fhi, whole, budget, depth):
        mid = 0.5 * (lo + hi)
        lm = 0.5 * (lo + mid)
        rm = 0.5 * (mid + hi)
        flm = _eval_checked(f, lm)
        frm = _eval_checked(f, rm)
        left = simpson(flo, flm, fmid, mid - lo)
        right = simpson(fmid, frm, fhi, hi - mid)
        err = (left + right - whole) / 15.0
        if depth >= max_depth or abs(err) <= budget:
            return left + right + err, abs(err)
        lv, le = recurse(lo, mid, flo, flm, fmid, left, budget / 2.0, depth + 1)
        rv, re = recurse(mid, hi, fmid, frm, fhi, right, budget / 2.0, depth + 1)
        return lv + rv, le + re

    fa = _eval_checked(f, a)
    fb = _eval_checked(f, b)
    m = 0.5 * (a + b)
    fm = _eval_checked(f, m)
    value, err = recurse(a, b, fa, fm, fb, simpson(fa, fm, fb, b - a), tol, 0)
    return QuadratureResult(value, err)


def derivative_with_info(f, t: float, step: float | None = None) -> tuple[float, bool]:
    """Finite-difference df/dr at t. Returns (value, one_sided).

    Central difference, O(step^2); falls back to a one-sided second-order
    stencil when t - step would leave the domain r >= 0.
    """
    if step is None:
        step = max(1e-5, 1e-4 * abs(t))
    if step <= 0.0:
        raise ValueError("step must be positive")
    if t - step >= 0.0:
        val = (_eval_checked(f, t + step) - _eval_checked(f, t - step)) / (2.0 * step)
        return val, False
    f0 = _eval_checked(f, t)
    f1 = _eval_checked(f, t + step)
    f2 = _eval_checked(f, t + 2.0 * step)
    return (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * step), True


def derivative(f, t: float, step: float | None = None) -> float:
    return derivative_with_info(f, t, step)[0]


def second_derivative(f, t: float, step: float | None = None) -> float:
    """Central second difference, O(step^2); t - step must stay >= 0."""
    if step is None:
        step = max(1e-4, 1e-4 * abs(t))
    if t - step < 0.0:
        t = step
    f0 = _eval_checked(f, t - step)
    f1 = _eval_checked(f, t)
    f2 = _eval_checked(f, t + step)
    return (f0 - 2.0 * f1 + f2) / step / step


def ray_grid(t_min: float, t_max: float, n: int = 2048) -> np.ndarray:
    """Hybrid scan grid: geometric near t_min, uniform beyond.

    Resolves both the r -> 0+ limits and the large-r tail on the same grid.
    """
    if not (0.0 < t_min < t_max):
        raise ValueError("need 0 < t_min < t_max")
    n_geo = max(2, n // 4)
    t_switch = min(max(10.0 * t_min, 0.02 * t_max), 0.5 * t_max)
    geo = np.geomspace(t_min, t_switch, n_geo, endpoint=False)
    uni = np.linspace(t_switch, t_max, n - n_geo)
    return np.concatenate([geo, uni])


@dataclass(frozen=True)
class InfimumResult:
    t: float
    value: float
    tail_nondecreasing: bool
    grid_min: float


def infimum_on_ray(f, t_min: float, t_max: float, refine_tol: float = 1e-9,
                   n_grid: int = 2048, grid: np.ndarray | None = None) -> InfimumResult:
    """Grid scan plus golden-section refinement of min f on [t_min, t_max].

    The tail flag records whether f is non-decreasing over the last decade
    [t_max/10, t_max] of the grid; an unbounded-ray infimum is only certified
    on the scanned range, the flag is the evidence about what lies beyond.
    """
    if not (t_min > 0.0 and t_max > t_min):
        raise ValueError("need 0 < t_min < t_max")
    ts = ray_grid(t_min, t_max, n_grid) if grid is None else np.asarray(grid, dtype=float)
    vals = np.asarray(f(ts), dtype=float)
    if not np.all(np.isfinite(vals)):
        raise NumericalDomainError("non-finite values on scan grid")
    i = int(np.argmin(vals))
    grid_min = float(vals[i])
    lo = ts[max(i - 1, 0)]
    hi = ts[min(i + 1, ts.size - 1)]
    t_best, v_best = ts[i], grid_min
    while hi - lo > refine_tol:
        m1 = hi - GOLDEN * (hi - lo)
        m2 = lo + GOLDEN * (hi - lo)
        v1 = _eval_checked(f, m1)
        v2 = _eval_checked(f, m2)
        if v1 < v_best:
            t_best, v_best = m1, v1
        if v2 < v_best:
            t_best, v_best = m2, v2
        if v1 <= v2:
            hi = m2
        else:
            lo = m1
    tail = ts >= ts[-1] / 10.0
    tail_vals = vals[tail]
    tail_flag = bool(np.all(np.diff(tail_vals) >= -1e-12 * np.maximum(1.0, np.abs(tail_vals[:-1]))))
    return InfimumResult(float(t_best), float(min(v_best, grid_min)),
                         tail_flag, grid_min)


def first_crossing(g, threshold: float, t_max: float, t_min: float = 0.0,
                   n_grid: int = 2048, grid: np.ndarray | None = None,
                   refine_tol: float = 1e-10) -> float | None:
    """Smallest grid t with g(s) >= threshold for all sampled s in [t, t_max].

    The leading edge is refined by bisection between the last failing grid
    point and the first point of the certified tail. None when no grid point
    starts an all-above tail.
    """
    if t_max <= 0.0:
        raise ValueError("t_max must be positive")
    if grid is None:
        ts = np.linspace(t_min, t_max, n_grid)
    else:
        ts = np.asarray(grid, dtype=float)
    vals = np.asarray(g(ts), dtype=float)
    if not np.all(np.isfinite(vals)):
        raise NumericalDomainError("non-finite values on scan grid")
    ok = vals >= threshold
    if not ok[-1]:
        return None
    bad = np.where(~ok)[0]
    if bad.size == 0:
        return float(ts[0])
    i = int(bad[-1]) + 1
    if i >= ts.size:
        return None
    lo, hi = float(ts[i - 1]), float(ts[i])
    while hi - lo > refine_tol:
        mid = 0.5 * (lo + hi)
        if _eval_checked(g, mid) >= threshold:
            hi = mid
        else:
            lo = mid
    return hi


@dataclass(frozen=True)
class InequalityItem:
    label: str
    worst_margin: float
    worst_t: float
    holds: bool


@dataclass(frozen=True)
class ScalarInequalityReport:
    b: float
    items: list[InequalityItem] = field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return all(it.holds for it in self.items)


def scalar_inequality_suite(b: float, grid) -> ScalarInequalityReport:
    """Pointwise hyperbolic-trig inequalities used by the growth estimates.

    On each grid point t >= 0 (kappa = sqrt(-b), x = kappa*t):

      (i)   sinh(x)/cosh(x)^2 <= 2*exp(-x)
      (ii)  1/cosh(x)         <= 2*exp(-x)
      (iii) kappa*(cosh(x)-1)/sinh(x) <= kappa*coth(x)   [t = 0 excluded:
            the left side tends to 0 while the right side diverges]

    Margins are rhs - lhs; all three are analytic facts, so a negative
    margin is an implementation bug, not a geometry result.
    """
    if b >= 0.0:
        raise ValueError("b must be negative")
    ts = np.asarray(grid, dtype=float)
    if ts.size == 0 or np.any(ts < 0.0):
        raise ValueError("grid must be nonempty with t >= 0")
    kappa = math.sqrt(-b)
    x = kappa * ts
    items = []

    def add(label, margin, mask=None):
        m = np.asarray(margin, dtype=float)
        sel = np.ones(m.shape, dtype=bool) if mask is None else mask
        if not np.all(np.isfinite(m[sel])):
            raise NumericalDomainError(f"non-finite margin in {label}")
        if not np.any(sel):
            items.append(InequalityItem(label, math.inf, math.nan, True))
            return
        j_rel = int(np.argmin(m[sel]))
        j = np.where(sel)[0][j_rel]
        items.append(InequalityItem(label, float(m[j]), float(ts[j]), bool(m[j] >= 0.0)))

    two_exp = 2.0 * np.exp(-x)
    add("sinh_over_cosh_sq", two_exp - np.sinh(x) / np.cosh(x) ** 2)
    add("inv_cosh", two_exp - 1.0 / np.cosh(x))
    pos = x > 0.0
    with np.errstate(divide="ignore", invalid="ignore"):
        lhs = kappa * (np.cosh(x) - 1.0) / np.sinh(x)
        rhs = kappa * np.cosh(x) / np.sinh(x)
    add("sphere_mean_curvature_dominates", np.where(pos, rhs - lhs, np.inf), mask=pos)
    return ScalarInequalityReport(b=b, items=items)
