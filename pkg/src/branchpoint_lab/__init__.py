"""Cantor boundary sets, holomorphic decay factors, and Almgren frequency
diagnostics for Q-valued Dirichlet minimizers."""

from .cantor import CantorSet, IntervalIndex, interval_length, log2_interval_length
from .errors import (
    BranchCutError,
    ConvergenceError,
    DegenerateMassError,
    SingularPointError,
    ValidationError,
)
from .logcomplex import (
    LogComplex,
    complex_pow,
    decay_block,
    lc_abs,
    lc_mul,
    lc_to_complex,
    oscillating_block,
    principal_log,
)
from ._quad import QuadConfig
from .series import (
    AnchoredPoint,
    ProductZero,
    SeriesParams,
    TruncatedValue,
    boundary_decay_check,
    branched_product,
    cauchy_derivatives,
    cosine_factor,
    cosine_product,
    decay_exponent,
    decay_exponent_many,
    decay_factor,
    derivative,
    function_evaluator,
    product_zero,
)
from .frequency import (
    FrequencySample,
    MinimizerSpec,
    Monomial,
    OscillatingPower,
    Polynomial,
    Scaled,
    SeriesFactor,
    SeriesProduct,
    SmoothBlock,
    boundary_mass,
    dirichlet_energy,
    frequency,
    frequency_curve,
    gap_centered_radii,
    oscillating_power_frequency_bound,
    q_roots,
    smooth_block_frequency_bound,
)
from .vanishing import (
    ConstantTarget,
    MassCurve,
    MinimizerTarget,
    RealPartTarget,
    default_ladder,
    doubling_ratio,
    mass_curve,
    sliding_window_slopes,
    vanishing_order_slope,
)

__version__ = "0.1.0"
