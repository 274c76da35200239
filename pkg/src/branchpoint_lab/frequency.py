"""Almgren frequency functions for Q-valued roots of holomorphic functions.

The Q-valued minimizer u(z) = sum of the Q-th roots of h(z) has closed-form
energy and mass densities: |Du|^2 = (2/Q)|h|^(2/Q - 2)|h'|^2 and
|u|^2 = Q|h|^(2/Q).  Both are integrated in log space (via the shared panel
quadrature) so the frequency ratio I = D/H stays computable even when D and
H individually underflow near the boundary set.
"""

from __future__ import annotations

import cmath
import math
import warnings
from abc import ABC, abstractmethod
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from ._quad import QuadConfig, log_disk_integral, log_line_integral, refined_breakpoints
from .cantor import CantorSet
from .errors import DegenerateMassError, ValidationError
from .series import (
    SeriesParams,
    cosine_product_logderiv_many,
    decay_exponent_many,
    log_cosine_product_many,
    product_zero,
)
from .cantor import IntervalIndex

_TANH_QUARTER_PI = math.tanh(math.pi / 4.0)


# ---------------------------------------------------------------------------
# Q-valued roots
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QValue:
    """Unordered multiset of the Q values of a multivalued point evaluation."""

    values: tuple[complex, ...]

    @property
    def q(self) -> int:
        return len(self.values)


def q_roots(w: complex, Q: int) -> QValue:
    """All Q-th roots of w: the principal root times the Q-th roots of unity."""
    if Q < 2:
        raise ValidationError(f"Q must be >= 2, got {Q}")
    w = complex(w)
    if w == 0:
        return QValue((0j,) * Q)
    v0 = abs(w) ** (1.0 / Q) * cmath.exp(1j * cmath.phase(w) / Q)
    xi = cmath.exp(2j * math.pi / Q)
    return QValue(tuple(v0 * xi**l for l in range(Q)))


# ---------------------------------------------------------------------------
# base holomorphic functions h
# ---------------------------------------------------------------------------


class BaseFunction(ABC):
    """A holomorphic h whose Q-th roots define the minimizer.

    Log-magnitude/argument evaluation keeps densities meaningful when |h|
    underflows.  `decay_rate(rho)` bounds |d log|h| / dtheta| at distance
    rho from the function's singular corner; it seeds boundary-layer panels
    and may be zero for smooth cases.
    """

    domain: str = "plane"
    vanishes_at_boundary = False

    @abstractmethod
    def log_h(self, zs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """(log|h|, arg h) on an array; log|h| = -inf marks an exact zero."""

    @abstractmethod
    def log_hprime(self, zs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """(log|h'|, arg h') on an array."""

    def zeros_in_disk(self, center: complex, r: float) -> list[complex]:
        return []

    def decay_rate(self, rho: float) -> float:
        return 0.0

    def log_energy_density(self, Q: int, zs: np.ndarray) -> np.ndarray:
        """log of |Du|^2 = (2/Q)|h|^(2/Q-2)|h'|^2.

        For boundary-vanishing h the indeterminate -inf/-inf combinations
        arise only where the density truly collapses, so they sanitize to
        -inf; algebraic zeros keep their +inf (integrable) marker.
        """
        la_h, _ = self.log_h(zs)
        la_p, _ = self.log_hprime(zs)
        with np.errstate(invalid="ignore"):
            out = math.log(2.0 / Q) + (2.0 / Q - 2.0) * la_h + 2.0 * la_p
        if self.vanishes_at_boundary:
            out = np.where(np.isfinite(out), out, -np.inf)
        else:
            out = np.where(np.isnan(out), np.inf, out)
        return out


def _log_abs(vals: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore"):
        return np.log(np.abs(vals))


@dataclass(frozen=True)
class Monomial(BaseFunction):
    """h(z) = z**P, the canonical branch point of order P/Q."""

    P: int

    def __post_init__(self) -> None:
        if self.P < 1:
            raise ValidationError(f"monomial power must be >= 1, got {self.P}")

    def log_h(self, zs):
        zs = np.asarray(zs, dtype=complex)
        return self.P * _log_abs(zs), self.P * np.angle(zs)

    def log_hprime(self, zs):
        zs = np.asarray(zs, dtype=complex)
        if self.P == 1:
            return np.zeros(zs.shape), np.zeros(zs.shape)
        return (
            math.log(self.P) + (self.P - 1) * _log_abs(zs),
            (self.P - 1) * np.angle(zs),
        )

    def zeros_in_disk(self, center, r):
        return [0j] if abs(center) < r else []


@dataclass(frozen=True)
class Polynomial(BaseFunction):
    """h given by ascending coefficients: h(z) = c0 + c1 z + c2 z^2 + ..."""

    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) < 1 or self.coeffs[-1] == 0:
            raise ValidationError("need a nonzero leading coefficient")

    def _val(self, zs):
        return np.polynomial.polynomial.polyval(np.asarray(zs, dtype=complex), self.coeffs)

    def log_h(self, zs):
        v = self._val(zs)
        return _log_abs(v), np.angle(v)

    def log_hprime(self, zs):
        der = np.polynomial.polynomial.polyder(self.coeffs)
        v = np.polynomial.polynomial.polyval(np.asarray(zs, dtype=complex), der)
        return _log_abs(v), np.angle(v)

    def zeros_in_disk(self, center, r):
        if len(self.coeffs) == 1:
            return []
        roots = np.polynomial.polynomial.polyroots(self.coeffs)
        return [complex(z) for z in roots if abs(z - center) < r]


def _logpolar(zs: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    zs = np.asarray(zs, dtype=complex)
    with np.errstate(divide="ignore"):
        lr = np.log(np.abs(zs))
    return lr, np.angle(zs)


@dataclass(frozen=True)
class SmoothBlock(BaseFunction):
    """h(z) = exp(-z**(-alpha)): the single-corner block dying to all orders at 0."""

    alpha: float
    domain: str = "half_plane"
    vanishes_at_boundary = True

    def __post_init__(self) -> None:
        if not (0.0 < self.alpha < 1.0):
            raise ValidationError(f"alpha must lie in (0, 1), got {self.alpha}")

    def _w(self, zs):
        """z**(-alpha) as (Re, Im) without complex transcendentals."""
        lr, th = _logpolar(zs)
        mag = np.exp(-self.alpha * lr)
        return mag * np.cos(self.alpha * th), -mag * np.sin(self.alpha * th)

    def log_h(self, zs):
        wr, wi = self._w(zs)
        return -wr, -wi

    def log_hprime(self, zs):
        # h' = alpha * z**(-alpha-1) * h
        lr, th = _logpolar(zs)
        wr, wi = self._w(zs)
        return (
            math.log(self.alpha) - (self.alpha + 1.0) * lr - wr,
            -(self.alpha + 1.0) * th - wi,
        )

    def decay_rate(self, rho):
        return self.alpha * rho ** (-self.alpha)


def oscillation_zeros(window: tuple[float, float]) -> list[float]:
    """Zeros exp((2k+1)*pi/2) of cos(log z) on the positive axis in `window`."""
    lo, hi = window
    if not (0.0 < lo < hi):
        raise ValidationError(f"window must satisfy 0 < lo < hi, got {window}")
    k_lo = math.ceil((2.0 * math.log(lo) / math.pi - 1.0) / 2.0)
    k_hi = math.floor((2.0 * math.log(hi) / math.pi - 1.0) / 2.0)
    return [math.exp((2 * k + 1) * math.pi / 2.0) for k in range(k_lo, k_hi + 1)]


@dataclass(frozen=True)
class OscillatingPower(BaseFunction):
    """h(z) = (cos(log z) * exp(-z**(-alpha)))**P."""

    alpha: float
    P: int = 1
    domain: str = "half_plane"
    vanishes_at_boundary = True

    def __post_init__(self) -> None:
        if not (0.0 < self.alpha < 1.0):
            raise ValidationError(f"alpha must lie in (0, 1), got {self.alpha}")
        if self.P < 1:
            raise ValidationError(f"power must be >= 1, got {self.P}")

    def _parts(self, zs):
        zs = np.asarray(zs, dtype=complex)
        lr, th = _logpolar(zs)
        mag = np.exp(-self.alpha * lr)
        la_a = -mag * np.cos(self.alpha * th)
        arg_a = mag * np.sin(self.alpha * th)
        cr = np.cos(lr) * np.cosh(th)
        ci = -np.sin(lr) * np.sinh(th)
        with np.errstate(divide="ignore"):
            la_c = 0.5 * np.log(cr * cr + ci * ci)
        arg_c = np.arctan2(ci, cr)
        return lr, th, la_a, arg_a, la_c, arg_c

    def log_h(self, zs):
        _, _, la_a, arg_a, la_c, arg_c = self._parts(zs)
        return self.P * (la_a + la_c), self.P * (arg_a + arg_c)

    def log_hprime(self, zs):
        # b' = a * (alpha z^(-alpha-1) cos(log z) - sin(log z)/z); h' = P b^(P-1) b'
        zs = np.asarray(zs, dtype=complex)
        lr, th, la_a, arg_a, la_c, arg_c = self._parts(zs)
        L = lr + 1j * th
        with np.errstate(over="ignore", invalid="ignore"):
            p = self.alpha * np.exp(-(self.alpha + 1.0) * L) * np.cos(L) - np.sin(L) * np.exp(-L)
        la_b = la_a + la_c
        arg_b = arg_a + arg_c
        return (
            math.log(self.P) + (self.P - 1) * la_b + la_a + _log_abs(p),
            (self.P - 1) * arg_b + arg_a + np.angle(p),
        )

    def zeros_in_disk(self, center, r):
        lo = max(abs(center) - r, 1e-14)
        hi = abs(center) + r
        if hi <= lo:
            return []
        return [
            complex(x)
            for x in oscillation_zeros((lo, hi))
            if abs(x - center) < r
        ]

    def decay_rate(self, rho):
        return self.P * (self.alpha * rho ** (-self.alpha) + 2.0)


@dataclass(frozen=True)
class SeriesFactor(BaseFunction):
    """h = the decay factor exp(-F) built over a Cantor boundary set."""

    params: SeriesParams
    cs: CantorSet
    far_tol: float | None = 3e-4
    domain: str = "half_plane"
    vanishes_at_boundary = True

    def _F(self, zs, with_deriv=False):
        return decay_exponent_many(
            self.params, self.cs, zs, with_deriv=with_deriv, far_tol=self.far_tol
        )

    def log_h(self, zs):
        F, _, _ = self._F(zs)
        la = -F.real
        la = np.where(np.isnan(la), -np.inf, la)
        return la, -F.imag

    def log_hprime(self, zs):
        # h' = -F' h
        F, Fp, _ = self._F(zs, with_deriv=True)
        with np.errstate(invalid="ignore"):
            la = _log_abs(Fp) - F.real
            arg = np.angle(-Fp) - F.imag
        return np.where(np.isnan(la), -np.inf, la), arg

    def log_energy_density(self, Q, zs):
        # (2/Q)|F'|^2 |h|^(2/Q): one series pass instead of two
        F, Fp, _ = self._F(zs, with_deriv=True)
        with np.errstate(invalid="ignore"):
            out = math.log(2.0 / Q) + 2.0 * _log_abs(Fp) - (2.0 / Q) * F.real
        return np.where(np.isfinite(out), out, -np.inf)

    def decay_rate(self, rho):
        am = self.params.max_exponent()
        return (math.pi**2 / 6.0) * am * rho ** (-am)


@dataclass(frozen=True)
class SeriesProduct(BaseFunction):
    """h = the branched product: cosine product times the decay factor."""

    params: SeriesParams
    cs: CantorSet
    far_tol: float | None = 3e-4
    domain: str = "half_plane"
    vanishes_at_boundary = True

    def log_h(self, zs):
        F, _, _ = decay_exponent_many(
            self.params, self.cs, zs, far_tol=self.far_tol
        )
        la_g, arg_g, zero = log_cosine_product_many(self.params, self.cs, zs)
        with np.errstate(invalid="ignore"):
            la = la_g - F.real
        la = np.where(zero, -np.inf, np.where(np.isnan(la), -np.inf, la))
        return la, arg_g - F.imag

    def log_hprime(self, zs):
        # h'/h = (G'/G - F')
        F, Fp, _ = decay_exponent_many(
            self.params, self.cs, zs, with_deriv=True, far_tol=self.far_tol
        )
        la_g, arg_g, zero = log_cosine_product_many(self.params, self.cs, zs)
        ratio = cosine_product_logderiv_many(self.params, self.cs, zs) - Fp
        with np.errstate(invalid="ignore"):
            la = la_g - F.real + _log_abs(ratio)
        la = np.where(np.isnan(la), -np.inf, la)
        return la, arg_g - F.imag + np.angle(ratio)

    def zeros_in_disk(self, center, r):
        out = []
        floor = 1e-12 * r
        for k in range(1, self.params.max_gen + 1):
            b = self.params.coeff(k)
            m = 1
            while True:
                rho = math.exp(-(m * math.pi - math.pi / 2.0) / b)
                if rho < floor:
                    break
                for pos in range(1, 2**k + 1):
                    z = complex(
                        rho, -self.cs.left_endpoint(IntervalIndex(k, pos))
                    )
                    if abs(z - center) < r:
                        out.append(z)
                m += 1
        return out

    def decay_rate(self, rho):
        am = self.params.max_exponent()
        return (math.pi**2 / 6.0) * (am * rho ** (-am) + 2.0)


@dataclass(frozen=True)
class Scaled(BaseFunction):
    """c * h for a nonzero constant c (covariance checks)."""

    base: BaseFunction
    factor: complex

    def __post_init__(self) -> None:
        if self.factor == 0:
            raise ValidationError("scaling factor must be nonzero")
        object.__setattr__(self, "domain", self.base.domain)
        object.__setattr__(self, "vanishes_at_boundary", self.base.vanishes_at_boundary)

    def log_h(self, zs):
        la, ar = self.base.log_h(zs)
        return la + math.log(abs(self.factor)), ar + cmath.phase(self.factor)

    def log_hprime(self, zs):
        la, ar = self.base.log_hprime(zs)
        return la + math.log(abs(self.factor)), ar + cmath.phase(self.factor)

    def log_energy_density(self, Q, zs):
        return self.base.log_energy_density(Q, zs) + (2.0 / Q) * math.log(abs(self.factor))

    def zeros_in_disk(self, center, r):
        return self.base.zeros_in_disk(center, r)

    def decay_rate(self, rho):
        return self.base.decay_rate(rho)


# ---------------------------------------------------------------------------
# minimizer spec and quadrature assembly
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MinimizerSpec:
    """The Q-valued minimizer u(z) = sum of Q-th roots of h(z)."""

    h: BaseFunction
    Q: int
    domain: str | None = None

    def __post_init__(self) -> None:
        if self.Q < 2:
            raise ValidationError(f"Q must be >= 2, got {self.Q}")
        if self.domain is None:
            object.__setattr__(self, "domain", self.h.domain)
        if self.domain not in ("plane", "half_plane"):
            raise ValidationError(f"unknown domain {self.domain!r}")
        if isinstance(self.h, OscillatingPower) and math.gcd(self.h.P, self.Q) != 1:
            raise ValidationError(
                f"P = {self.h.P} and Q = {self.Q} must be coprime for a pure branch point"
            )


@dataclass(frozen=True)
class FrequencySample:
    """D, H, I at one (center, radius), with log-scale duplicates of D and H."""

    center: complex
    radius: float
    D: float
    H: float
    I: float
    quadrature_error: float
    log_D: float = field(default=math.nan)
    log_H: float = field(default=math.nan)


def energy_integrand(spec: MinimizerSpec, z: complex) -> float:
    """|Du|^2 density at one point; +inf marks an algebraic zero of h."""
    val = spec.h.log_energy_density(spec.Q, np.array([z], dtype=complex))[0]
    return math.exp(val) if val < 700.0 else math.inf


def phi_indicator(spec: MinimizerSpec, center: complex, z: complex) -> float:
    """rho * Re(h'/h * e^(i theta)): the radial log-derivative of |h| times rho."""
    dz = complex(z) - complex(center)
    rho, theta = abs(dz), cmath.phase(dz)
    la_h, ar_h = spec.h.log_h(np.array([z], dtype=complex))
    la_p, ar_p = spec.h.log_hprime(np.array([z], dtype=complex))
    if la_h[0] == -math.inf:
        return math.inf
    ratio = math.exp(la_p[0] - la_h[0])
    return rho * ratio * math.cos(ar_p[0] - ar_h[0] + theta)


def _theta_limit(center: complex, rho: float, domain: str) -> float:
    if domain == "plane":
        return math.pi
    x = complex(center).real
    if x < 0:
        raise ValidationError(f"half-plane center must have Re >= 0, got {center}")
    if rho <= x:
        return math.pi
    return math.acos(max(-1.0, -x / rho))


def _theta_edges(
    spec: MinimizerSpec,
    center: complex,
    rho: float,
    cfg: QuadConfig,
    rate_factor: float,
    zero_polar: Sequence[tuple[float, float]],
) -> np.ndarray:
    thm = _theta_limit(center, rho, spec.domain)
    rate = rate_factor * spec.h.decay_rate(rho)
    clipped = thm < math.pi
    # a zero ring only needs deep angular resolution at nearby radii
    targets = []
    for rz, az in zero_polar:
        if -thm < az < thm:
            w0 = max(cfg.min_frac * 2.0 * thm, 0.3 * abs(rho - rz) / max(rho, 1e-300))
            targets.append((az, w0))
    return refined_breakpoints(
        -thm,
        thm,
        rate_a=rate if clipped else 0.0,
        rate_b=rate if clipped else 0.0,
        targets=targets,
        min_frac=cfg.min_frac,
    )


def _zero_geometry(
    spec: MinimizerSpec, center: complex, r: float, cfg: QuadConfig
) -> list[tuple[float, float]]:
    """(radius, angle) of the interior zeros of h that can matter.

    For boundary-vanishing h the zeros accumulate at the singular corner
    under an envelope like exp(-c rho^-alpha); zeros whose envelope sits
    cfg.drop + 60 e-folds below the largest probed magnitude cannot move
    any digit of the integrals and are dropped.
    """
    center = complex(center)
    zeros = [
        z0 for z0 in spec.h.zeros_in_disk(center, r) if abs(z0 - center) > 0
    ]
    if not zeros:
        return []
    keep = zeros
    if spec.h.vanishes_at_boundary:
        thm = _theta_limit(center, r, spec.domain)
        ring = center + r * np.exp(1j * np.linspace(-0.98 * thm, 0.98 * thm, 9))
        probes = np.array([z0 * 1.001 + center * (-0.001) for z0 in zeros])
        la_ring, _ = spec.h.log_h(ring)
        la_z, _ = spec.h.log_h(probes)
        ref = float(np.max(la_ring[np.isfinite(la_ring)], initial=-math.inf))
        cut = ref - (cfg.drop + 60.0) * spec.Q / 2.0
        keep = [z0 for z0, la in zip(zeros, la_z) if la >= cut]
    return [(abs(z0 - center), cmath.phase(z0 - center)) for z0 in keep]


def log_boundary_mass(
    spec: MinimizerSpec,
    center: complex,
    r: float,
    config: QuadConfig | None = None,
) -> tuple[float, float]:
    """log of H = (1/r) * integral of Q|h|^(2/Q) over the arc, plus log-error."""
    cfg = config or QuadConfig()
    if r <= 0:
        raise ValidationError(f"radius must be positive, got {r}")
    center = complex(center)
    zero_polar = _zero_geometry(spec, center, 1.001 * r, cfg)
    edges = _theta_edges(spec, center, r, cfg, 2.0 / spec.Q, zero_polar)

    def L(thetas: np.ndarray) -> np.ndarray:
        zs = center + r * np.exp(1j * thetas)
        la, _ = spec.h.log_h(zs)
        return math.log(spec.Q) + (2.0 / spec.Q) * la

    return log_line_integral(L, edges, cfg)


def boundary_mass(
    spec: MinimizerSpec,
    center: complex,
    r: float,
    config: QuadConfig | None = None,
) -> tuple[float, float]:
    """H with an absolute error estimate (underflows to 0 when tiny)."""
    lh, le = log_boundary_mass(spec, center, r, config)
    H = math.exp(lh) if lh > -745.0 else 0.0
    return H, H * math.expm1(le) if le < 1.0 else H


def log_dirichlet_energy(
    spec: MinimizerSpec,
    center: complex,
    r: float,
    config: QuadConfig | None = None,
    *,
    r_inner: float = 0.0,
) -> tuple[float, float]:
    """log of D = integral of the energy density over the (annular) disk."""
    cfg = config or QuadConfig(rel_tol=1e-6)
    if not (0.0 <= r_inner < r):
        raise ValidationError(f"need 0 <= r_inner < r, got {r_inner}, {r}")
    center = complex(center)
    zero_polar = _zero_geometry(spec, center, r, cfg)
    in_range = [(x, 1e-7 * x) for x, _ in zero_polar if r_inner < x < r]
    rate_out = (2.0 / spec.Q + 2.0) * spec.h.decay_rate(r) / r
    r_edges = refined_breakpoints(
        r_inner,
        r,
        geo_a=(r_inner == 0.0),
        rate_b=rate_out if spec.h.decay_rate(r) > 0 else 0.0,
        targets=in_range,
        min_frac=cfg.min_frac,
    )
    for x, _ in in_range:
        # every interior zero must carry its own refinement cluster; a zero
        # merely near a coarse panel edge would poison the Gauss nodes
        if not np.any(np.abs(r_edges - x) == 0.0):
            warnings.warn(
                f"interior zero at radius {x:.6g} is not a panel edge"
            )

    def theta_edges(rho: float) -> np.ndarray:
        return _theta_edges(spec, center, rho, cfg, 2.0 / spec.Q + 2.0, zero_polar)

    def L(zs: np.ndarray) -> np.ndarray:
        return spec.h.log_energy_density(spec.Q, zs)

    return log_disk_integral(
        L, center, r_edges, theta_edges, cfg, inner_targets=[x for x, _ in in_range]
    )


def dirichlet_energy(
    spec: MinimizerSpec,
    center: complex,
    r: float,
    config: QuadConfig | None = None,
    *,
    r_inner: float = 0.0,
) -> tuple[float, float]:
    """D with an absolute error estimate (underflows to 0 when tiny)."""
    ld, le = log_dirichlet_energy(spec, center, r, config, r_inner=r_inner)
    D = math.exp(ld) if ld > -745.0 else 0.0
    return D, D * math.expm1(le) if le < 1.0 else D


def frequency(
    spec: MinimizerSpec,
    center: complex,
    r: float,
    config: QuadConfig | None = None,
    *,
    log_scale: bool = False,
) -> FrequencySample:
    """Assemble the frequency I = D/H at one radius.

    The ratio is always formed in log space, which is exactly the rescaling
    of both integrals by the common underflow scale; `log_scale` merely
    permits H to underflow a double without raising.
    """
    arc_cfg = config or QuadConfig()
    disk_cfg = config or QuadConfig(rel_tol=1e-6)
    log_H, err_H = log_boundary_mass(spec, center, r, arc_cfg)
    if log_H == -math.inf:
        raise DegenerateMassError(f"u vanishes identically on the arc r = {r}")
    if not log_scale and log_H < math.log(1e-300):
        raise DegenerateMassError(
            f"H underflows (log H = {log_H:.4g}); pass log_scale=True to use "
            f"the rescaled ratio"
        )
    log_D, err_D = log_dirichlet_energy(spec, center, r, disk_cfg)
    I = math.exp(log_D - log_H) if log_D > -math.inf else 0.0
    D = math.exp(log_D) if log_D > -745.0 else 0.0
    H = math.exp(log_H) if log_H > -745.0 else 0.0
    err = I * math.expm1(min(err_D + err_H, 1.0))
    return FrequencySample(complex(center), r, D, H, I, err, log_D, log_H)


def frequency_curve(
    spec: MinimizerSpec,
    center: complex,
    radii: Sequence[float],
    config: QuadConfig | None = None,
    *,
    log_scale: bool = False,
) -> list[FrequencySample]:
    """I(r) over an ascending radius ladder."""
    radii = list(radii)
    if any(b <= a for a, b in zip(radii, radii[1:])):
        raise ValidationError("radii must be strictly ascending")
    return [frequency(spec, center, r, config, log_scale=log_scale) for r in radii]


# ---------------------------------------------------------------------------
# reference bounds for the boundary blow-up tests
# ---------------------------------------------------------------------------


def smooth_block_frequency_bound(alpha: float, Q: int, R: float) -> float:
    """Lower bound (alpha/Q) R^(-alpha) cos(alpha pi/2) for h = exp(-z^-alpha)."""
    return (alpha / Q) * R ** (-alpha) * math.cos(alpha * math.pi / 2.0)


def oscillating_power_frequency_bound(alpha: float, P: int, Q: int, R: float) -> float:
    """Lower bound (P/Q)(alpha R^(-alpha) cos(alpha pi/2) - 1/tanh(pi/4))."""
    return (P / Q) * (
        alpha * R ** (-alpha) * math.cos(alpha * math.pi / 2.0) - 1.0 / _TANH_QUARTER_PI
    )


def gap_centered_radii(s: float, n: int) -> float:
    """R_n = (1/3)(2^(1+1/s) - 1) 2^(-n/s): radii whose spheres stay inside a
    construction gap when centered at a mirrored left endpoint."""
    if not (0.0 < s < 1.0):
        raise ValidationError(f"s must lie in (0, 1), got {s}")
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    return (2.0 ** (1.0 + 1.0 / s) - 1.0) / 3.0 * 2.0 ** (-n / s)
