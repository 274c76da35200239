"""Certified evaluation of the boundary-adapted series and products.

Two holomorphic objects are built over the interval family of a
:class:`~branchpoint_lab.cantor.CantorSet`: an absolutely convergent shifted
power sum (the "decay exponent") and an infinite cosine product.  From them
come the decay factor exp(-sum) and the branched product, whose zeros
accumulate at every mirrored boundary-set point.

Values are carried in log-magnitude form (:class:`LogComplex`) because the
decay factor underflows double precision catastrophically near the boundary
set.  Points extremely close to a boundary anchor are represented in
log-polar coordinates (:class:`AnchoredPoint`) so even offsets like
exp(-1e5) stay meaningful.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy.special import polygamma

from .cantor import CantorSet, IntervalIndex, interval_length
from .errors import ConvergenceError, SingularPointError, ValidationError
from .logcomplex import LogComplex

_Z_CHUNK = 512
_Y_CHUNK = 2048

# h(pi/4) = -ln(cos(pi/4)) / (pi/4), the constant in the cosine-log estimate
_COS_LOG_CONST = -math.log(math.cos(math.pi / 4.0)) / (math.pi / 4.0)


@dataclass(frozen=True)
class SeriesParams:
    """Coefficient rules for the shifted sums and products.

    Per generation k the sum/product coefficient is 2^-k / k^2 (so the
    generation-weighted series sum_k 2^k coeff(k) = pi^2/6 is finite) and
    the power-law exponent is a fixed `alpha` for s < 1, or
    1 - k^(-1/3)/2 in the borderline case s = 1.
    """

    s: float
    alpha: float | None = None
    max_gen: int = 18

    def __post_init__(self) -> None:
        if not (0.0 < self.s <= 1.0):
            raise ValidationError(f"s must lie in (0, 1], got {self.s}")
        if self.max_gen < 1:
            raise ValidationError(f"max_gen must be >= 1, got {self.max_gen}")
        if self.s < 1.0:
            alpha = self.alpha if self.alpha is not None else (1.0 + self.s) / 2.0
            if not (self.s < alpha < 1.0):
                raise ValidationError(
                    f"alpha must lie in ({self.s}, 1), got {alpha}"
                )
            object.__setattr__(self, "alpha", alpha)

    def coeff(self, k: int) -> float:
        return 2.0 ** (-k) / k**2

    def exponent(self, k: int) -> float:
        if self.s == 1.0:
            return 1.0 - 0.5 * k ** (-1.0 / 3.0)
        return self.alpha

    def max_exponent(self) -> float:
        return 1.0 if self.s == 1.0 else self.alpha

    def coeff_tail(self, k: int) -> float:
        """sum_{j > k} 2^j coeff(j) = sum_{j > k} 1/j^2, via the trigamma function."""
        return float(polygamma(1, k + 1))


@dataclass(frozen=True)
class TruncatedValue:
    """A value plus a certified bound on its truncation error.

    For the plain-complex decay exponent the bound is absolute; for
    log-magnitude results it bounds the error of the accumulated log
    (equivalently, the relative error of the value).
    """

    value: complex | LogComplex
    tail_bound: float


@dataclass(frozen=True)
class AnchoredPoint:
    """z = -i*y + exp(log_r + i*theta): log-polar offset from a boundary anchor.

    `y` must be a stored left endpoint so anchor matching can use exact
    float equality (endpoints are copied bit-for-bit between generations).
    """

    y: float
    log_r: float
    theta: float = 0.0

    def to_complex(self) -> complex:
        if self.log_r < math.log(2.2250738585072014e-308):
            off = 0j
        else:
            off = cmath.rect(math.exp(self.log_r), self.theta)
        return complex(off.real, off.imag - self.y)


@dataclass(frozen=True)
class ProductZero(AnchoredPoint):
    """A constructed zero of the branched product: the cosine factor of
    interval `idx` vanishes identically at this point."""

    idx: IntervalIndex = IntervalIndex(1, 1)
    m: int = 1


def _require_depth(params: SeriesParams, cs: CantorSet) -> None:
    if cs.depth < params.max_gen:
        raise ValidationError(
            f"CantorSet depth {cs.depth} < truncation generation {params.max_gen}"
        )


# ---------------------------------------------------------------------------
# vectorized kernels (real-transcendental formulations; complex ufuncs are
# an order of magnitude slower on some BLAS-less hosts)
# ---------------------------------------------------------------------------


def _logpolar_blocks(zs: np.ndarray, ys: np.ndarray):
    """Yield (log|w|, arg(w)) blocks for w = z + i*y over a y-chunk."""
    zr = zs.real
    zi = zs.imag
    wr2 = zr * zr
    for j in range(0, ys.size, _Y_CHUNK):
        yc = ys[j : j + _Y_CHUNK]
        wi = zi[:, None] + yc[None, :]
        with np.errstate(divide="ignore"):
            lr = 0.5 * np.log(wr2[:, None] + wi * wi)
        th = np.arctan2(wi, zr[:, None])
        yield lr, th


def _power_sum(zs: np.ndarray, ys: np.ndarray, alpha: float) -> np.ndarray:
    """sum over y of (z + i*y)**(-alpha), principal branch."""
    out = np.zeros(zs.size, dtype=complex)
    for lr, th in _logpolar_blocks(zs, ys):
        with np.errstate(over="ignore"):
            mag = np.exp(-alpha * lr)
        ang = -alpha * th
        out += (mag * np.cos(ang)).sum(axis=1) + 1j * (mag * np.sin(ang)).sum(axis=1)
    return out


def _power_sum_pair(
    zs: np.ndarray, ys: np.ndarray, alpha: float
) -> tuple[np.ndarray, np.ndarray]:
    """Power sums for exponents alpha and alpha + 1 sharing the log-polar pass."""
    out0 = np.zeros(zs.size, dtype=complex)
    out1 = np.zeros(zs.size, dtype=complex)
    for lr, th in _logpolar_blocks(zs, ys):
        with np.errstate(over="ignore"):
            mag = np.exp(-alpha * lr)
        ang = -alpha * th
        out0 += (mag * np.cos(ang)).sum(axis=1) + 1j * (mag * np.sin(ang)).sum(axis=1)
        with np.errstate(over="ignore"):
            mag1 = mag * np.exp(-lr)
        ang1 = ang - th
        out1 += (mag1 * np.cos(ang1)).sum(axis=1) + 1j * (
            mag1 * np.sin(ang1)
        ).sum(axis=1)
    return out0, out1


def _log_cos_sum(
    zs: np.ndarray, ys: np.ndarray, b: float
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Accumulate log|cos(b*L)| and arg(cos(b*L)) for L = log(z + i*y).

    Returns (log-magnitude sum, argument sum, exact-zero mask).
    """
    log_abs = np.zeros(zs.size)
    arg = np.zeros(zs.size)
    zero = np.zeros(zs.size, dtype=bool)
    for lr, th in _logpolar_blocks(zs, ys):
        x = b * lr
        y = b * th
        cr = np.cos(x) * np.cosh(y)
        ci = -np.sin(x) * np.sinh(y)
        m2 = cr * cr + ci * ci
        zero |= (m2 == 0.0).any(axis=1)
        with np.errstate(divide="ignore"):
            log_abs += (0.5 * np.log(m2)).sum(axis=1)
        arg += np.arctan2(ci, cr).sum(axis=1)
    return log_abs, arg, zero


def _chunked(zs: np.ndarray) -> Iterable[slice]:
    for i in range(0, zs.size, _Z_CHUNK):
        yield slice(i, min(i + _Z_CHUNK, zs.size))


def _direct_sum(
    params: SeriesParams,
    cs: CantorSet,
    zs: np.ndarray,
    k_max: int,
    with_deriv: bool,
) -> tuple[np.ndarray, np.ndarray | None]:
    F = np.zeros(zs.size, dtype=complex)
    Fp = np.zeros(zs.size, dtype=complex) if with_deriv else None
    for sl in _chunked(zs):
        zc = zs[sl]
        for k in range(1, k_max + 1):
            ys = cs.left_endpoints(k)
            a_k = params.coeff(k)
            al = params.exponent(k)
            if with_deriv:
                p0, p1 = _power_sum_pair(zc, ys, al)
                F[sl] += a_k * p0
                Fp[sl] += -al * a_k * p1
            else:
                F[sl] += a_k * _power_sum(zc, ys, al)
    return F, Fp


def _subtree_weights(params: SeriesParams) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Per-root-generation aggregation weights.

    A subtree rooted at a generation-j interval holds, for every k >= j,
    2^(k-j) generation-k endpoints at offsets with mean mu(j, k) above the
    root's left endpoint.  For constant exponent the whole subtree collapses
    to C0[j] * w^-a - i*a*C1[j] * w^(-a-1); A0[j] = C0[j] weights the
    curvature error.  (Generation 0 carries no term of its own.)
    """
    K = params.max_gen
    # M[k] = sum_{i<=k} (len(i-1) - len(i)) / 2, so mu(j,k) = M[k] - M[j]
    M = np.zeros(K + 1)
    for i in range(1, K + 1):
        M[i] = M[i - 1] + 0.5 * (
            interval_length(i - 1, params.s) - interval_length(i, params.s)
        )
    C0 = np.zeros(K + 1)
    C1 = np.zeros(K + 1)
    for j in range(K + 1):
        for k in range(max(j, 1), K + 1):
            w = params.coeff(k) * 2.0 ** (k - j)
            C0[j] += w
            C1[j] += w * (M[k] - M[j])
    return C0, C1, M


def _pair_powers(wr, wi, alpha, orders):
    """w^(-alpha - o) for o in orders, sharing one log-polar pass."""
    with np.errstate(divide="ignore"):
        lr = 0.5 * np.log(wr * wr + wi * wi)
    th = np.arctan2(wi, wr)
    out = []
    for o in orders:
        a = alpha + o
        with np.errstate(over="ignore"):
            mag = np.exp(-a * lr)
        out.append(mag * np.cos(a * th) - 1j * mag * np.sin(a * th))
    return out


def decay_exponent_many(
    params: SeriesParams,
    cs: CantorSet,
    zs: np.ndarray,
    *,
    with_deriv: bool = False,
    far_tol: float | None = 3e-4,
) -> tuple[np.ndarray, np.ndarray | None, np.ndarray]:
    """Truncated shifted power sum (and optionally its z-derivative) on an array.

    Returns (values, derivs or None, per-point aggregation error bounds).
    A tree walk over the interval family sums a generation term directly
    only while its interval is closer than length/far_tol; subtrees seen
    from farther away collapse to a two-term cluster expansion with
    relative error O(far_tol^2), certified per point.  Work per point is
    O(max_gen / sqrt(far_tol)) instead of 2^max_gen, and the stored depth
    only limits how deep the walk can descend: beyond it subtrees are
    aggregated regardless, with the (then larger) error bound reported.
    """
    zs = np.ascontiguousarray(np.asarray(zs, dtype=complex).ravel())
    K = params.max_gen
    F = np.zeros(zs.size, dtype=complex)
    Fp = np.zeros(zs.size, dtype=complex) if with_deriv else None
    ferr = np.zeros(zs.size)
    if zs.size == 0:
        return F, Fp, ferr

    if far_tol is None:
        _require_depth(params, cs)
        Fd, Fpd = _direct_sum(params, cs, zs, K, with_deriv)
        return Fd, Fpd, ferr

    C0, C1, M = _subtree_weights(params)
    varying = params.s == 1.0
    zr = zs.real
    zi = zs.imag

    def accumulate(idx, vals, out):
        out += np.bincount(idx, weights=vals.real, minlength=zs.size) + 1j * np.bincount(
            idx, weights=vals.imag, minlength=zs.size
        )

    # open pairs: (z index, subtree root left endpoint), starting at the root
    idx = np.arange(zs.size)
    roots = np.zeros(zs.size)
    for j in range(K + 1):
        if idx.size == 0:
            break
        len_j = interval_length(j, params.s)
        wr = zr[idx]
        wi = zi[idx] + roots
        t = -zi[idx]
        gap = np.maximum(np.maximum(roots - t, t - (roots + len_j)), 0.0)
        dist = np.where(wr >= 0.0, np.hypot(wr, gap), gap)
        far = len_j <= far_tol * dist
        if j == K or j == cs.depth:
            far = np.ones(idx.size, dtype=bool) if j < K else far
        if j == K:
            # leaves: every remaining generation-K term is summed exactly
            al = params.exponent(K)
            (p0, p1) = _pair_powers(wr, wi, al, (0.0, 1.0))
            a_k = params.coeff(K)
            accumulate(idx, a_k * p0, F)
            if with_deriv:
                accumulate(idx, -al * a_k * p1, Fp)
            break
        if far.any():
            fi = idx[far]
            if not varying:
                al = params.alpha
                p0, p1, p2 = _pair_powers(wr[far], wi[far], al, (0.0, 1.0, 2.0))
                accumulate(fi, C0[j] * p0 - 1j * al * C1[j] * p1, F)
                if with_deriv:
                    accumulate(fi, -al * (C0[j] * p1 - 1j * (al + 1.0) * C1[j] * p2), Fp)
                am = al
            else:
                am = 0.0
                for k in range(max(j, 1), K + 1):
                    al = params.exponent(k)
                    am = max(am, al)
                    w = params.coeff(k) * 2.0 ** (k - j)
                    mu = M[k] - M[j]
                    p0, p1, p2 = _pair_powers(wr[far], wi[far], al, (0.0, 1.0, 2.0))
                    accumulate(fi, w * (p0 - 1j * al * mu * p1), F)
                    if with_deriv:
                        accumulate(fi, -al * w * (p1 - 1j * (al + 1.0) * mu * p2), Fp)
            # curvature remainder per subtree:
            # |(w+it)^-a - w^-a + i a t w^(-a-1)| <= a(a+1)/2 t^2 |w|^(-a-2)
            scale = np.maximum(1.0, 1.0 / np.maximum(dist[far], 1e-300)) ** (am + 2.0)
            np.add.at(
                ferr, fi, 0.5 * am * (am + 1.0) * len_j**2 * scale * C0[j]
            )
        near = ~far
        if not near.any():
            break
        ni = idx[near]
        if j >= 1:
            al = params.exponent(j)
            p0, p1 = _pair_powers(wr[near], wi[near], al, (0.0, 1.0))
            a_k = params.coeff(j)
            accumulate(ni, a_k * p0, F)
            if with_deriv:
                accumulate(ni, -al * a_k * p1, Fp)
        shift = len_j - interval_length(j + 1, params.s)
        idx = np.concatenate([ni, ni])
        roots = np.concatenate([roots[near], roots[near] + shift])
    return F, Fp, ferr


def log_cosine_product_many(
    params: SeriesParams,
    cs: CantorSet,
    zs: np.ndarray,
    *,
    gens: Sequence[int] | None = None,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Accumulated (log-magnitude, argument, exact-zero mask) of the cosine
    product truncated at `params.max_gen` (or restricted to `gens`)."""
    _require_depth(params, cs)
    zs = np.ascontiguousarray(np.asarray(zs, dtype=complex).ravel())
    gens = range(1, params.max_gen + 1) if gens is None else gens
    log_abs = np.zeros(zs.size)
    arg = np.zeros(zs.size)
    zero = np.zeros(zs.size, dtype=bool)
    for sl in _chunked(zs):
        for k in gens:
            la, ar, zm = _log_cos_sum(zs[sl], cs.left_endpoints(k), params.coeff(k))
            log_abs[sl] += la
            arg[sl] += ar
            zero[sl] |= zm
    return log_abs, arg, zero


def cosine_product_logderiv_many(
    params: SeriesParams, cs: CantorSet, zs: np.ndarray
) -> np.ndarray:
    """Logarithmic derivative of the cosine product: sum of
    -b_k tan(b_k log(w)) / w over all shifts w = z + i*y."""
    _require_depth(params, cs)
    zs = np.ascontiguousarray(np.asarray(zs, dtype=complex).ravel())
    out = np.zeros(zs.size, dtype=complex)
    for sl in _chunked(zs):
        zc = zs[sl]
        for k in range(1, params.max_gen + 1):
            b = params.coeff(k)
            ys = cs.left_endpoints(k)
            for j in range(0, ys.size, _Y_CHUNK):
                w = zc[:, None] + 1j * ys[None, j : j + _Y_CHUNK]
                with np.errstate(divide="ignore", invalid="ignore"):
                    out[sl] += (-b * np.tan(b * np.log(w)) / w).sum(axis=1)
    return out


# ---------------------------------------------------------------------------
# scalar evaluation, including log-polar anchored points
# ---------------------------------------------------------------------------


def _anchored_logpolar(z: AnchoredPoint, ys: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(log|w|, arg(w)) for w = z + i*y at an anchored point.

    Anchor-matched entries use the stored log-polar offset exactly; the
    rest go through the saturated complex offset, whose underflow error is
    negligible against the endpoint separation.
    """
    matched = ys == z.y
    lr = np.empty(ys.size)
    th = np.empty(ys.size)
    lr[matched] = z.log_r
    th[matched] = z.theta
    rest = ~matched
    if rest.any():
        off = z.to_complex() + 1j * z.y  # the pure radial offset
        w = off + 1j * (ys[rest] - z.y)
        with np.errstate(divide="ignore"):
            lr[rest] = np.log(np.abs(w))
        th[rest] = np.angle(w)
    return lr, th


def _dist_lower(cs: CantorSet, z: complex | AnchoredPoint) -> float:
    if isinstance(z, AnchoredPoint):
        zc = z.to_complex()
        if zc.real == 0.0 and -zc.imag == z.y:
            return 0.0  # offset underflowed entirely
        return cs.dist_to_boundary_rays(zc)[0]
    return cs.dist_to_boundary_rays(complex(z))[0]


def decay_exponent(
    params: SeriesParams,
    cs: CantorSet,
    z: complex | AnchoredPoint,
    *,
    far_tol: float | None = 3e-4,
) -> TruncatedValue:
    """Truncated shifted power sum at one point, with a certified tail bound.

    The bound combines the generation tail max(1, 1/d) * sum_{k>K} 2^k coeff
    with the far-field aggregation remainder (zero when aggregation is off
    or inactive).
    """
    if isinstance(z, AnchoredPoint):
        _require_depth(params, cs)
        total = 0j
        for k in range(1, params.max_gen + 1):
            lr, th = _anchored_logpolar(z, cs.left_endpoints(k))
            al = params.exponent(k)
            with np.errstate(over="ignore", invalid="ignore"):
                mag = np.exp(-al * lr)
                ang = -al * th
                total += params.coeff(k) * complex(
                    (mag * np.cos(ang)).sum(), (mag * np.sin(ang)).sum()
                )
        d = math.exp(z.log_r) if z.log_r > -745.0 else 0.0
        tail = math.inf if d == 0.0 else max(1.0, 1.0 / d) * params.coeff_tail(params.max_gen)
        return TruncatedValue(total, tail)

    z = complex(z)
    d = _dist_lower(cs, z)
    if d == 0.0:
        raise SingularPointError(
            f"certified distance to the boundary set vanishes at depth {cs.depth}: z = {z}"
        )
    vals, _, far_err = decay_exponent_many(
        params, cs, np.array([z]), far_tol=far_tol
    )
    tail = max(1.0, 1.0 / d) * params.coeff_tail(params.max_gen) + float(far_err[0])
    return TruncatedValue(complex(vals[0]), tail)


def _cosine_log_tail(params: SeriesParams, d: float) -> float:
    """Tail bound on the accumulated log of the cosine product."""
    if d == 0.0:
        return math.inf
    ln_d = min(math.log(d), 0.0)
    return (math.pi - ln_d * (_COS_LOG_CONST + 1.0)) * params.coeff_tail(params.max_gen)


def cosine_product(
    params: SeriesParams,
    cs: CantorSet,
    z: complex | AnchoredPoint,
    *,
    gens: Sequence[int] | None = None,
) -> TruncatedValue:
    """Truncated cosine product as a LogComplex, tail bound on its log.

    With a `gens` restriction the reported tail still covers only the
    generations beyond max_gen (the omitted ones are deliberate).
    """
    _require_depth(params, cs)
    gen_list = range(1, params.max_gen + 1) if gens is None else gens
    if isinstance(z, AnchoredPoint):
        log_abs = 0.0
        arg = 0.0
        for k in gen_list:
            lr, th = _anchored_logpolar(z, cs.left_endpoints(k))
            b = params.coeff(k)
            cr = np.cos(b * lr) * np.cosh(b * th)
            ci = -np.sin(b * lr) * np.sinh(b * th)
            if isinstance(z, ProductZero) and k == z.idx.gen:
                cr = cr.copy()
                ci = ci.copy()
                cr[z.idx.pos - 1] = 0.0
                ci[z.idx.pos - 1] = 0.0
            m2 = cr * cr + ci * ci
            if (m2 == 0.0).any():
                return TruncatedValue(LogComplex.zero(), 0.0)
            log_abs += float((0.5 * np.log(m2)).sum())
            arg += float(np.arctan2(ci, cr).sum())
        return TruncatedValue(
            LogComplex(log_abs, arg), _cosine_log_tail(params, _dist_lower(cs, z))
        )

    z = complex(z)
    d = _dist_lower(cs, z)
    if d == 0.0:
        raise SingularPointError(
            f"certified distance to the boundary set vanishes at depth {cs.depth}: z = {z}"
        )
    la, ar, zero = log_cosine_product_many(params, cs, np.array([z]), gens=gens)
    if zero[0]:
        return TruncatedValue(LogComplex.zero(), 0.0)
    return TruncatedValue(LogComplex(float(la[0]), float(ar[0])), _cosine_log_tail(params, d))


def decay_factor(
    params: SeriesParams, cs: CantorSet, z: complex | AnchoredPoint
) -> TruncatedValue:
    """exp(-decay_exponent) as a LogComplex.

    First-order tail propagation: the bound on |delta(exponent)| doubles as
    a relative-error bound on the factor, valid while it is small; beyond
    0.1 the bound is reported as infinite.
    """
    F = decay_exponent(params, cs, z)
    re = F.value.real
    if math.isinf(re) and re > 0:
        return TruncatedValue(LogComplex.zero(), 0.0)
    tail = F.tail_bound if F.tail_bound <= 0.1 else math.inf
    return TruncatedValue(LogComplex(-re, -F.value.imag), tail)


def branched_product(
    params: SeriesParams, cs: CantorSet, z: complex | AnchoredPoint
) -> TruncatedValue:
    """Cosine product times the decay factor; exact zeros short-circuit."""
    G = cosine_product(params, cs, z)
    if G.value.is_zero:
        return TruncatedValue(LogComplex.zero(), 0.0)
    f = decay_factor(params, cs, z)
    return TruncatedValue(G.value.mul(f.value), G.tail_bound + f.tail_bound)


def product_zero(
    params: SeriesParams, cs: CantorSet, idx: IntervalIndex, m: int
) -> ProductZero:
    """The m-th constructed zero attached to interval `idx`:
    z = -i*y + exp(-(m*pi - pi/2) / coeff(gen))."""
    if idx.gen < 1 or idx.gen > params.max_gen:
        raise ValidationError(f"generation {idx.gen} outside [1, {params.max_gen}]")
    if m < 1:
        raise ValidationError(f"m must be >= 1, got {m}")
    b = params.coeff(idx.gen)
    return ProductZero(
        y=cs.left_endpoint(idx),
        log_r=-(m * math.pi - math.pi / 2.0) / b,
        theta=0.0,
        idx=idx,
        m=m,
    )


def cosine_factor(
    params: SeriesParams, cs: CantorSet, idx: IntervalIndex, z: complex | AnchoredPoint
) -> complex:
    """The single product factor cos(coeff(gen) * log(z + i*y_idx))."""
    b = params.coeff(idx.gen)
    y = cs.left_endpoint(idx)
    if isinstance(z, AnchoredPoint) and z.y == y:
        L = complex(z.log_r, z.theta)
    else:
        zc = z.to_complex() if isinstance(z, AnchoredPoint) else complex(z)
        L = cmath.log(zc + 1j * y)
    return cmath.cos(b * L)


# ---------------------------------------------------------------------------
# contour derivatives
# ---------------------------------------------------------------------------


def cauchy_derivatives(
    fn: Callable[[complex], complex],
    z: complex,
    radius: float,
    orders: Sequence[int],
    *,
    rel_tol: float = 1e-9,
    max_nodes: int = 2**14,
    start_nodes: int = 16,
) -> dict[int, tuple[complex, float]]:
    """Derivatives of a holomorphic function by trapezoidal contour sums.

    All requested orders share each ring of samples.  The node count
    doubles until every order's two latest estimates agree to `rel_tol`
    relative (or 1e-300 absolute); the final inter-refinement difference is
    the error estimate.
    """
    if radius <= 0.0:
        raise ValidationError(f"contour radius must be positive, got {radius}")
    orders = list(orders)
    prev: dict[int, complex] = {}
    n = start_nodes
    while True:
        theta = 2.0 * math.pi * np.arange(n) / n
        ring = z + radius * np.exp(1j * theta)
        vals = np.array([fn(complex(w)) for w in ring])
        est = {
            m: math.factorial(m)
            / (n * radius**m)
            * complex((vals * np.exp(-1j * m * theta)).sum())
            for m in orders
        }
        if prev:
            errs = {m: abs(est[m] - prev[m]) for m in orders}
            if all(
                errs[m] <= rel_tol * max(abs(est[m]), 1e-300) for m in orders
            ):
                return {m: (est[m], errs[m]) for m in orders}
        prev = est
        n *= 2
        if n > max_nodes:
            raise ConvergenceError(
                f"contour derivative did not converge within {max_nodes} nodes at z = {z}"
            )


_EVALUATORS = ("decay_factor", "branched_product", "decay_exponent",
               "decay_block", "oscillating_block")


def function_evaluator(
    params: SeriesParams, cs: CantorSet, name: str, *, alpha: float | None = None
) -> Callable[[complex], complex]:
    """Plain-complex evaluator for one of the named holomorphic functions.

    `alpha` applies to the two single-shift blocks only and defaults to the
    series exponent (which is invalid for the blocks when s = 1; pass it
    explicitly there).
    """
    from . import logcomplex as lc

    if alpha is None:
        alpha = params.max_exponent()
    if name == "decay_exponent":
        return lambda z: decay_exponent(params, cs, z).value
    if name == "decay_factor":
        return lambda z: decay_factor(params, cs, z).value.to_complex()
    if name == "branched_product":
        return lambda z: branched_product(params, cs, z).value.to_complex()
    if name == "decay_block":
        return lambda z: lc.decay_block(z, alpha).to_complex()
    if name == "oscillating_block":
        return lambda z: lc.oscillating_block(z, alpha).to_complex()
    raise ValidationError(f"unknown evaluator {name!r}; expected one of {_EVALUATORS}")


def derivative(
    params: SeriesParams,
    cs: CantorSet,
    name: str,
    z: complex,
    m: int,
    radius: float | None = None,
    alpha: float | None = None,
    **kwargs,
) -> tuple[complex, float]:
    """m-th derivative of a named function at z via a certified-radius contour."""
    z = complex(z)
    if name in ("decay_block", "oscillating_block"):
        d = abs(z) if z.real >= 0.0 else abs(z.imag)
    else:
        d = _dist_lower(cs, z)
    if d == 0.0:
        raise SingularPointError(f"no admissible contour radius at z = {z}")
    if radius is None:
        radius = d / 2.0
        if z.real > 0.0:
            radius = min(radius, z.real / 2.0)
    elif radius >= d:
        raise ValidationError(f"radius {radius} reaches the singular set (dist >= {d})")
    fn = function_evaluator(params, cs, name, alpha=alpha)
    out = cauchy_derivatives(fn, z, radius, [m], **kwargs)
    return out[m]


@dataclass(frozen=True)
class DecayRow:
    """One probe of the boundary-approach table."""

    z: complex
    d_lower: float
    exponent_real: float
    gauge: float  # Re(exponent) + m * log(d): diverges iff decay beats d^-m
    abs_decay_deriv: float
    abs_branched_deriv: float


def boundary_decay_check(
    params: SeriesParams,
    cs: CantorSet,
    m: int,
    probes: Sequence[complex],
) -> list[DecayRow]:
    """Tabulate the m-th derivative magnitudes along a boundary approach."""
    rows = []
    for z in probes:
        z = complex(z)
        d = _dist_lower(cs, z)
        if d == 0.0:
            raise SingularPointError(f"probe {z} touches the boundary set")
        re_F = decay_exponent(params, cs, z).value.real
        df, _ = derivative(params, cs, "decay_factor", z, m)
        dg, _ = derivative(params, cs, "branched_product", z, m)
        rows.append(
            DecayRow(z, d, re_F, re_F + m * math.log(d), abs(df), abs(dg))
        )
    return rows
