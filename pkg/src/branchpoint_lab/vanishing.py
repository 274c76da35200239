"""L2 mass curves and log-log slope diagnostics for boundary vanishing.

The squared density of a candidate function is integrated over half-disks
B_R in log space, giving logMass down to values like -10^4 that a direct
double-precision integral would flatten to zero.  Infinite-order vanishing
at a boundary point shows up as the slope of logMass against log R growing
without bound as the window of radii moves inward; the companion doubling
ratio log2(mass(2r)/mass(r))/2 grows likewise, while at interior points of
a nonvanishing function both settle at the area exponent 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ._quad import QuadConfig, log_disk_integral, refined_breakpoints
from .cantor import CantorSet
from .errors import ValidationError
from .frequency import MinimizerSpec, _theta_limit
from .series import SeriesParams, decay_exponent_many

__all__ = [
    "MassCurve",
    "MassTarget",
    "RealPartTarget",
    "MinimizerTarget",
    "ConstantTarget",
    "default_ladder",
    "mass_curve",
    "vanishing_order_slope",
    "sliding_window_slopes",
    "doubling_ratio",
]


class MassTarget:
    """A nonnegative density |u|^2 presented through its logarithm."""

    domain: str = "plane"

    def log_density(self, zs: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def decay_rate(self, rho: float) -> float:
        """Hint: |d/dr log density| near the domain boundary at radius rho."""
        return 0.0


@dataclass(frozen=True)
class RealPartTarget(MassTarget):
    """u = Re(exp(-F)) for the shifted power sum F over a boundary set.

    The density (Re u)^2 = exp(-2 Re F) cos^2(Im F) is smooth on the open
    half-plane and dies to all orders on the boundary set.
    """

    params: SeriesParams
    cs: CantorSet
    far_tol: float | None = 3e-4
    domain: str = field(default="half_plane", init=False)

    def log_density(self, zs: np.ndarray) -> np.ndarray:
        F, _, _ = decay_exponent_many(
            self.params, self.cs, zs, far_tol=self.far_tol
        )
        with np.errstate(divide="ignore", invalid="ignore"):
            out = -2.0 * F.real + 2.0 * np.log(np.abs(np.cos(F.imag)))
        return np.where(np.isnan(out), -np.inf, out)

    def decay_rate(self, rho: float) -> float:
        al = self.params.max_exponent()
        return 2.0 * (math.pi**2 / 6.0) * al * rho ** (-al)


@dataclass(frozen=True)
class MinimizerTarget(MassTarget):
    """|u|^2 = Q |h|^(2/Q) for a Q-valued minimizer built from h."""

    spec: MinimizerSpec

    @property
    def domain(self) -> str:  # type: ignore[override]
        return self.spec.domain

    def log_density(self, zs: np.ndarray) -> np.ndarray:
        la, _ = self.spec.h.log_h(zs)
        out = math.log(self.spec.Q) + (2.0 / self.spec.Q) * la
        if self.spec.h.vanishes_at_boundary:
            out = np.where(np.isfinite(out), out, -np.inf)
        return out

    def decay_rate(self, rho: float) -> float:
        return (2.0 / self.spec.Q) * self.spec.h.decay_rate(rho)


@dataclass(frozen=True)
class ConstantTarget(MassTarget):
    """u identically constant; mass over B_R is pi R^2 c^2."""

    value: float
    domain: str = "plane"

    def log_density(self, zs: np.ndarray) -> np.ndarray:
        if self.value == 0.0:
            return np.full(np.asarray(zs).shape, -np.inf)
        return np.full(np.asarray(zs).shape, 2.0 * math.log(abs(self.value)))


@dataclass(frozen=True)
class MassCurve:
    """log of the L2 mass over B_R at a descending ladder of radii."""

    center: complex
    radii: tuple[float, ...]
    log_mass: tuple[float, ...]
    quadrature_errors: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.radii) != len(self.log_mass):
            raise ValidationError("radii and log_mass lengths differ")
        if len(self.radii) < 2:
            raise ValidationError("a mass curve needs at least two radii")
        r = np.asarray(self.radii)
        if not (np.all(r > 0) and np.all(np.diff(r) < 0)):
            raise ValidationError("radii must be positive and strictly descending")
        if not np.all(np.isfinite(self.log_mass)):
            raise ValidationError("log_mass must be finite (log-space evaluation)")


def default_ladder(rungs: int = 12, largest: float = 0.2) -> list[float]:
    """Geometric radius ladder, ratio 1/sqrt(2), descending."""
    if rungs < 2 or largest <= 0:
        raise ValidationError(f"invalid ladder ({rungs} rungs, largest {largest})")
    return [largest * 2.0 ** (-0.5 * k) for k in range(rungs)]


def log_mass(
    target: MassTarget,
    center: complex,
    r: float,
    config: QuadConfig | None = None,
) -> tuple[float, float]:
    """log of the integral of the squared density over B_r (clipped to the
    domain), plus a log-error estimate."""
    cfg = config or QuadConfig()
    if r <= 0:
        raise ValidationError(f"radius must be positive, got {r}")
    center = complex(center)
    rate_out = target.decay_rate(r) / r
    r_edges = refined_breakpoints(
        0.0,
        r,
        geo_a=True,
        rate_b=rate_out,
        min_frac=cfg.min_frac,
    )

    def theta_edges(rho: float) -> np.ndarray:
        thm = _theta_limit(center, rho, target.domain)
        rate = target.decay_rate(rho)
        clipped = thm < math.pi
        return refined_breakpoints(
            -thm,
            thm,
            rate_a=rate if clipped else 0.0,
            rate_b=rate if clipped else 0.0,
            min_frac=cfg.min_frac,
        )

    return log_disk_integral(target.log_density, center, r_edges, theta_edges, cfg)


def mass_curve(
    target: MassTarget,
    center: complex,
    radii: Sequence[float] | None = None,
    config: QuadConfig | None = None,
) -> MassCurve:
    """Evaluate the L2 mass at every rung of a descending radius ladder."""
    rs = default_ladder() if radii is None else [float(r) for r in radii]
    lm = []
    errs = []
    for r in rs:
        v, e = log_mass(target, center, r, config)
        lm.append(v)
        errs.append(e)
    return MassCurve(complex(center), tuple(rs), tuple(lm), tuple(errs))


def vanishing_order_slope(curve: MassCurve, window: Sequence[int]) -> float:
    """Least-squares slope of logMass against log R over the given indices.

    A function vanishing to order k at the center gives slope about 2k + 2;
    infinite-order vanishing pushes the slope past every fixed bound as the
    window moves to smaller radii.
    """
    idx = list(window)
    if len(idx) < 2:
        raise ValidationError(f"slope window needs >= 2 points, got {len(idx)}")
    logR = np.log([curve.radii[i] for i in idx])
    logM = np.array([curve.log_mass[i] for i in idx])
    if np.ptp(logR) == 0.0:
        raise ValidationError("degenerate slope window: equal radii")
    return float(np.polyfit(logR, logM, 1)[0])


def sliding_window_slopes(curve: MassCurve, width: int = 3) -> list[float]:
    """Slopes over consecutive windows [i, i+width), largest radii first."""
    if width < 2 or width > len(curve.radii):
        raise ValidationError(f"invalid window width {width}")
    return [
        vanishing_order_slope(curve, range(i, i + width))
        for i in range(len(curve.radii) - width + 1)
    ]


def doubling_ratio(curve: MassCurve, rtol: float = 1e-9) -> list[float]:
    """Empirical doubling exponents log2(mass(2r)/mass(r))/2 over every
    (2r, r) pair present in the ladder, largest r first."""
    out = []
    radii = np.asarray(curve.radii)
    for i, r2 in enumerate(curve.radii):
        j = np.nonzero(np.abs(radii - 0.5 * r2) <= rtol * r2)[0]
        if j.size:
            out.append(
                (curve.log_mass[i] - curve.log_mass[int(j[0])]) / (2.0 * math.log(2.0))
            )
    if not out:
        raise ValidationError("ladder contains no (2r, r) pairs")
    return out
