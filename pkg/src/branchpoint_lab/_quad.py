"""Log-space panel quadrature for integrands spanning thousands of e-folds.

Integrals of exp(L) are assembled with Gauss-Legendre panels and logsumexp,
so masses like exp(-10^4) keep their logarithm even though the integrand
underflows every double.  Panels are seeded geometrically toward integrable
singularities and exponential boundary layers (with an optional decay-rate
hint), then the whole mesh is halved until two successive estimates agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.special import logsumexp, roots_legendre

from .errors import ConvergenceError, ValidationError


@dataclass(frozen=True)
class QuadConfig:
    """Knobs for the log-space quadrature.

    rel_tol bounds the change of the log-integral under mesh halving (which
    approximates the relative error of the integral); drop is the log gap
    below the running total at which inner radial panels are declared
    negligible.
    """

    rel_tol: float = 1e-8
    order: int = 12
    max_refine: int = 8
    min_frac: float = 1e-8
    drop: float = 45.0
    max_nodes: int = 2**16

    def __post_init__(self) -> None:
        if self.rel_tol <= 0 or self.order < 2 or self.max_refine < 1:
            raise ValidationError("invalid quadrature configuration")


_GL_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gl(order: int) -> tuple[np.ndarray, np.ndarray]:
    if order not in _GL_CACHE:
        _GL_CACHE[order] = roots_legendre(order)
    return _GL_CACHE[order]


def _end_offsets(span: float, geo: bool, rate: float, min_frac: float) -> list[float]:
    """Geometric edge offsets from one refined end, largest below span/2."""
    offs: set[float] = set()
    if geo:
        w = min_frac * span
        while w < 0.5 * span:
            offs.add(w)
            w *= 2.0
    if rate > 0.0:
        # boundary layer exp(rate * x): keep the per-panel log variation ~8
        w = 8.0 / rate
        while w < 0.5 * span:
            offs.add(w)
            w *= 2.0
    return sorted(offs)


def refined_breakpoints(
    a: float,
    b: float,
    *,
    geo_a: bool = False,
    geo_b: bool = False,
    rate_a: float = 0.0,
    rate_b: float = 0.0,
    targets: Sequence[float | tuple[float, float]] = (),
    min_frac: float = 1e-8,
) -> np.ndarray:
    """Panel edges on [a, b], geometrically clustered toward marked ends and
    interior targets (integrable singularities get an edge exactly on them).

    A target may carry its own smallest cluster width as (position, width);
    bare floats use min_frac times the span.
    """
    if not b > a:
        raise ValidationError(f"empty interval [{a}, {b}]")
    span = b - a
    edges = {a, b, 0.5 * (a + b)}
    for off in _end_offsets(span, geo_a, rate_a, min_frac):
        edges.add(a + off)
    for off in _end_offsets(span, geo_b, rate_b, min_frac):
        edges.add(b - off)
    for tgt in targets:
        t, w0 = tgt if isinstance(tgt, tuple) else (tgt, min_frac * span)
        if not (a < t < b):
            continue
        edges.add(t)
        w = max(w0, 1e-15 * span)
        while w < 0.5 * span:
            if t - w > a:
                edges.add(t - w)
            if t + w < b:
                edges.add(t + w)
            w *= 2.0
    out = np.array(sorted(edges))
    # merge edges indistinguishable at double precision
    keep = np.concatenate(([True], np.diff(out) > 1e-15 * span))
    return out[keep]


def halve_edges(edges: np.ndarray) -> np.ndarray:
    mids = 0.5 * (edges[:-1] + edges[1:])
    return np.sort(np.concatenate([edges, mids]))


def panel_nodes(
    edges: np.ndarray, order: int
) -> tuple[np.ndarray, np.ndarray]:
    """All Gauss-Legendre nodes and log-weights for a set of panels."""
    x, w = _gl(order)
    lo = edges[:-1]
    hi = edges[1:]
    hw = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    nodes = (mid[:, None] + hw[:, None] * x[None, :]).ravel()
    logw = (np.log(hw)[:, None] + np.log(w)[None, :]).ravel()
    return nodes, logw


def log_line_integral(
    L_fn: Callable[[np.ndarray], np.ndarray],
    edges: np.ndarray,
    cfg: QuadConfig,
) -> tuple[float, float]:
    """Adaptive log-space integral of exp(L) over a 1-d panel mesh.

    Returns (log of the integral, log-error estimate from the last halving).
    """
    prev = None
    for _ in range(cfg.max_refine + 1):
        if (edges.size - 1) * cfg.order > cfg.max_nodes:
            raise ConvergenceError(
                f"line quadrature exceeded {cfg.max_nodes} nodes without "
                f"meeting rel_tol {cfg.rel_tol}"
            )
        nodes, logw = panel_nodes(edges, cfg.order)
        with np.errstate(invalid="ignore"):
            cur = float(logsumexp(L_fn(nodes) + logw))
        if prev is not None:
            if cur == -math.inf and prev == -math.inf:
                return cur, 0.0
            err = abs(cur - prev)
            if err <= cfg.rel_tol:
                return cur, err
        prev = cur
        edges = halve_edges(edges)
    raise ConvergenceError(
        f"line quadrature did not converge within {cfg.max_refine} refinements"
    )


def _disk_level(
    L_fn: Callable[[np.ndarray], np.ndarray],
    center: complex,
    r_edges: np.ndarray,
    theta_edges_fn: Callable[[float], np.ndarray],
    cfg: QuadConfig,
    level: int,
    inner_targets: Sequence[float],
) -> float:
    """One mesh level of the polar integral, outermost radial panel first,
    with early exit once inner panels are provably negligible."""
    total = -math.inf
    quiet = 0
    for i in range(r_edges.size - 2, -1, -1):
        lo, hi = r_edges[i], r_edges[i + 1]
        rho, logw_r = panel_nodes(np.array([lo, hi]), cfg.order)
        zs = []
        logw = []
        for j, rj in enumerate(rho):
            th_edges = theta_edges_fn(float(rj))
            for _ in range(level):
                th_edges = halve_edges(th_edges)
            th, logw_t = panel_nodes(th_edges, cfg.order)
            zs.append(center + rj * np.exp(1j * th))
            logw.append(logw_t + logw_r[j] + math.log(rj))
        with np.errstate(invalid="ignore"):
            vals = L_fn(np.concatenate(zs)) + np.concatenate(logw)
        contrib = float(logsumexp(vals))
        total = float(np.logaddexp(total, contrib))
        if contrib < total - cfg.drop:
            quiet += 1
            if quiet >= 3 and not any(t < lo for t in inner_targets):
                break
        else:
            quiet = 0
    return total


def log_disk_integral(
    L_fn: Callable[[np.ndarray], np.ndarray],
    center: complex,
    r_edges: np.ndarray,
    theta_edges_fn: Callable[[float], np.ndarray],
    cfg: QuadConfig,
    *,
    inner_targets: Sequence[float] = (),
) -> tuple[float, float]:
    """Adaptive polar integral of exp(L) dA over panels around `center`.

    `theta_edges_fn` supplies the angular mesh at each radius (domain clips
    and singularity targets are baked in there); `inner_targets` lists radii
    of interior singularities that must never be skipped by early exit.
    Returns (log integral, log-error estimate).
    """
    prev = None
    edges = r_edges
    for level in range(cfg.max_refine + 1):
        cur = _disk_level(L_fn, center, edges, theta_edges_fn, cfg, level, inner_targets)
        if prev is not None:
            if cur == -math.inf and prev == -math.inf:
                return cur, 0.0
            err = abs(cur - prev)
            if err <= cfg.rel_tol:
                return cur, err
        prev = cur
        edges = halve_edges(edges)
    raise ConvergenceError(
        f"disk quadrature did not converge within {cfg.max_refine} refinements"
    )
