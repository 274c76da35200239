import cmath
import math

import pytest
from hypothesis import given, settings, strategies as st

from branchpoint_lab import (
    BranchCutError,
    LogComplex,
    complex_pow,
    decay_block,
    lc_mul,
    oscillating_block,
    principal_log,
)
from branchpoint_lab.logcomplex import LOG_TINY

finite = st.floats(
    min_value=-50.0, max_value=50.0, allow_nan=False, allow_infinity=False
)


def lc(log_mag, arg):
    return LogComplex(log_mag, arg)


def test_round_trip_moderate():
    for w in [1 + 2j, -3 + 0.5j, 0.001 - 7j, 2j]:
        back = LogComplex.from_complex(w).to_complex()
        assert back == pytest.approx(w, rel=1e-14)


def test_zero_encoding():
    z = LogComplex.zero()
    assert z.is_zero
    assert z.abs() == 0.0
    assert z.to_complex() == 0j
    assert LogComplex.from_complex(0j).is_zero
    assert lc_mul(z, lc(3.0, 1.0)).is_zero


def test_deep_underflow_preserved_in_log():
    tiny = lc(-1e6, 0.3)
    assert tiny.to_complex() == 0j  # saturates as a double
    assert tiny.log_mag == -1e6  # but the log survives
    prod = tiny.mul(lc(-2e6, 0.1))
    assert prod.log_mag == -3e6


@given(a=finite, b=finite, c=finite, d=finite, e=finite, f=finite)
@settings(max_examples=50, deadline=None)
def test_mul_associative_and_commutative(a, b, c, d, e, f):
    x, y, z = lc(a, b), lc(c, d), lc(e, f)
    left = x.mul(y).mul(z)
    right = x.mul(y.mul(z))
    assert left.log_mag == pytest.approx(right.log_mag, rel=1e-12, abs=1e-12)
    assert left.arg == pytest.approx(right.arg, rel=1e-12, abs=1e-12)
    assert x.mul(y) == y.mul(x)


@given(arg=st.floats(min_value=-1e6, max_value=1e6, allow_nan=False))
@settings(max_examples=60, deadline=None)
def test_reduced_arg_range(arg):
    r = lc(0.0, arg).reduced_arg()
    assert -math.pi < r <= math.pi
    # reduction preserves the value modulo 2 pi
    assert math.remainder(r - arg, 2.0 * math.pi) == pytest.approx(0.0, abs=1e-6)


def test_unreduced_argument_accumulates():
    x = lc(0.0, 3.0)
    acc = x
    for _ in range(9):
        acc = acc.mul(x)
    assert acc.arg == pytest.approx(30.0)


def test_principal_log_and_cut():
    assert principal_log(1j) == pytest.approx(cmath.log(1j))
    for z in [-1.0 + 0j, -2.5 + 0j, 0j]:
        with pytest.raises(BranchCutError):
            principal_log(z)


def test_complex_pow_matches_cmath():
    for z in [2 + 1j, 0.01 + 0j, 1j, 0.5 - 0.5j]:
        for a in [-0.75, -0.5, 0.3, 2.0]:
            assert complex_pow(z, a) == pytest.approx(
                cmath.exp(a * cmath.log(z)), rel=1e-14
            )


def test_decay_block_matches_direct():
    for z in [0.5 + 0.2j, 1.5 - 1j, 0.3j, 2 + 0j]:
        for alpha in [0.3, 0.5, 0.9]:
            got = decay_block(z, alpha)
            want = cmath.exp(-cmath.exp(-alpha * cmath.log(z)))
            assert got.to_complex() == pytest.approx(want, rel=1e-13)


def test_decay_block_underflow_regime():
    got = decay_block(1e-12 + 0j, 0.5)
    assert got.log_mag == pytest.approx(-1e6)
    assert got.to_complex() == 0j


def test_decay_block_validation():
    for alpha in [0.0, 1.0, -0.5, 2.0]:
        with pytest.raises(BranchCutError):
            decay_block(1 + 0j, alpha)


def test_oscillating_block_matches_direct():
    for z in [0.5 + 0.2j, 1.5 - 1j, 0.7 + 0j]:
        got = oscillating_block(z, 0.5)
        want = cmath.cos(cmath.log(z)) * cmath.exp(-z**-0.5)
        assert got.to_complex() == pytest.approx(want, rel=1e-12)


def test_oscillating_block_exact_zero():
    # cos(log z) = 0 exactly when the floating cosine returns 0.0
    z = math.exp(math.pi / 2.0)
    if math.cos(math.log(z)) == 0.0:
        assert oscillating_block(z + 0j, 0.5).is_zero


def test_log_tiny_boundary():
    assert lc(LOG_TINY + 1.0, 0.0).to_complex() != 0j
    assert lc(LOG_TINY - 800.0, 0.0).to_complex() == 0j
