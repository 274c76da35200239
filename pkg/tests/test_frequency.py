import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from branchpoint_lab import (
    DegenerateMassError,
    MinimizerSpec,
    Monomial,
    Polynomial,
    QuadConfig,
    Scaled,
    SmoothBlock,
    ValidationError,
    boundary_mass,
    dirichlet_energy,
    frequency,
    frequency_curve,
    q_roots,
)
from branchpoint_lab.frequency import OscillatingPower, phi_indicator


complexes = st.complex_numbers(
    min_magnitude=1e-6, max_magnitude=1e6, allow_nan=False, allow_infinity=False
)


@given(w=complexes, Q=st.integers(min_value=2, max_value=5))
@settings(max_examples=40, deadline=None)
def test_q_roots_identity(w, Q):
    roots = q_roots(w, Q).values
    assert len(roots) == Q
    for v in roots:
        assert v**Q == pytest.approx(w, rel=1e-9)
    # all roots distinct
    assert len({round(v.real, 9) + 1j * round(v.imag, 9) for v in roots}) == Q


def test_q_roots_zero_and_validation():
    assert q_roots(0j, 3).values == (0j, 0j, 0j)
    with pytest.raises(ValidationError):
        q_roots(1.0, 1)


def test_monomial_closed_forms():
    # D = 2 pi P r^(2P/Q), H = 2 pi Q r^(2P/Q), I = P/Q
    for P, Q, r in [(1, 2, 0.3), (2, 3, 0.7)]:
        spec = MinimizerSpec(h=Monomial(P=P), Q=Q)
        D = dirichlet_energy(spec, 0j, r)[0]
        H = boundary_mass(spec, 0j, r)[0]
        assert D == pytest.approx(2.0 * math.pi * P * r ** (2.0 * P / Q), rel=1e-9)
        assert H == pytest.approx(2.0 * math.pi * Q * r ** (2.0 * P / Q), rel=1e-9)


def test_scaling_covariance():
    # replacing h by c*h scales D and H by |c|^(2/Q) and leaves I alone
    base = Polynomial(coeffs=(1.0, 0.4))  # zero at -2.5, outside every disk used
    spec = MinimizerSpec(h=base, Q=2)
    scaled = MinimizerSpec(h=Scaled(base=base, factor=3 - 4j), Q=2)
    r = 0.4
    factor = 5.0 ** (2.0 / 2)
    D0, H0 = dirichlet_energy(spec, 0j, r)[0], boundary_mass(spec, 0j, r)[0]
    D1, H1 = dirichlet_energy(scaled, 0j, r)[0], boundary_mass(scaled, 0j, r)[0]
    assert D1 == pytest.approx(factor * D0, rel=1e-8)
    assert H1 == pytest.approx(factor * H0, rel=1e-8)
    f0 = frequency(spec, 0j, r)
    f1 = frequency(scaled, 0j, r)
    assert f1.I == pytest.approx(f0.I, rel=1e-8)


def test_energy_additivity_disk_annulus():
    spec = MinimizerSpec(h=Polynomial(coeffs=(0.1, 1.0)), Q=2)
    whole = dirichlet_energy(spec, 0.05j, 0.6)[0]
    inner = dirichlet_energy(spec, 0.05j, 0.25)[0]
    annulus = dirichlet_energy(spec, 0.05j, 0.6, r_inner=0.25)[0]
    assert inner + annulus == pytest.approx(whole, rel=1e-7)


def test_radial_log_derivative_identity():
    # d/dr log|h| along the ray equals Re(h'/h e^{i theta}); phi = r * that
    spec = MinimizerSpec(h=Polynomial(coeffs=(0.2, 0.0, 1.0)), Q=2)
    rng = np.random.default_rng(5)
    for _ in range(50):
        rho = rng.uniform(0.05, 0.8)
        th = rng.uniform(-math.pi, math.pi)
        z = rho * cmath.exp(1j * th)
        h = 0.2 + z**2
        if abs(h) < 1e-3:
            continue
        eps = 1e-7 * rho
        hp = 0.2 + ((rho + eps) * cmath.exp(1j * th)) ** 2
        hm = 0.2 + ((rho - eps) * cmath.exp(1j * th)) ** 2
        fd = (math.log(abs(hp)) - math.log(abs(hm))) / (2.0 * eps)
        got = phi_indicator(spec, 0j, z) / rho
        assert got == pytest.approx(fd, rel=1e-5, abs=1e-5)


def test_monomial_frequency_all_radii():
    spec = MinimizerSpec(h=Monomial(P=3), Q=2)
    for fs in frequency_curve(spec, 0j, [0.1, 0.4, 0.9]):
        assert fs.I == pytest.approx(1.5, rel=1e-9)


def test_interior_center_monomial():
    # away from the zero, a nonvanishing h has small frequency at small r
    spec = MinimizerSpec(h=Monomial(P=1), Q=2)
    fs = frequency(spec, 1.0 + 0j, 0.05)
    assert fs.I < 0.01


def test_degenerate_mass_raises_and_log_scale_path():
    spec = MinimizerSpec(h=SmoothBlock(alpha=0.5), Q=2)
    center, r = 0j, 1e-6
    with pytest.raises(DegenerateMassError):
        frequency(spec, center, r)
    fs = frequency(spec, center, r, log_scale=True)
    assert math.isfinite(fs.I) and fs.I > 0.0
    assert fs.log_H < math.log(1e-300)


def test_oscillating_power_needs_coprime():
    with pytest.raises(ValidationError):
        MinimizerSpec(h=OscillatingPower(alpha=0.5, P=2), Q=2)


def test_frequency_curve_requires_ascending():
    spec = MinimizerSpec(h=Monomial(P=1), Q=2)
    with pytest.raises(ValidationError):
        frequency_curve(spec, 0j, [0.5, 0.25])


def test_half_plane_center_validation():
    spec = MinimizerSpec(h=SmoothBlock(alpha=0.5), Q=2)
    with pytest.raises(ValidationError):
        boundary_mass(spec, -0.5 + 0j, 0.1)
