"""Periodic-subspace transform toolkit for narrowband interference removal.

Decomposes finite blocks into the periodic subspaces indexed by the divisors
of the block length, suppresses interference by zeroing the coefficients of
the matching subspaces, and ships a second-order IIR notch baseline plus an
error-comparison harness.
"""

from .io import Signal, add_sinusoid, read_csv, read_wfdb_212, synth_ecg, write_csv
from .metrics import SuppressionReport, block_error, compare_grid, total_error
from .notch import BiquadCoeffs, design_notch, filter_block, filter_blocked
from .ramanujan import (
    CirculantDm,
    RamanujanSequence,
    ShiftBasis,
    circulant,
    divisors,
    euler_totient,
    ramanujan_sum,
    shift_basis,
    verify_factorization,
)
from .suppress import (
    SuppressionConfig,
    WindowMask,
    make_mask,
    run,
    suppress_block,
)
from .transform import (
    CoefficientVector,
    FrequencyBinding,
    TransformPlan,
    build_plan,
    energy_spectrum,
    forward,
    inverse,
    project,
    space_for_frequency,
)

__all__ = [
    "BiquadCoeffs",
    "CirculantDm",
    "CoefficientVector",
    "FrequencyBinding",
    "RamanujanSequence",
    "ShiftBasis",
    "Signal",
    "SuppressionConfig",
    "SuppressionReport",
    "TransformPlan",
    "WindowMask",
    "add_sinusoid",
    "block_error",
    "build_plan",
    "circulant",
    "compare_grid",
    "design_notch",
    "divisors",
    "energy_spectrum",
    "euler_totient",
    "filter_block",
    "filter_blocked",
    "forward",
    "inverse",
    "make_mask",
    "project",
    "ramanujan_sum",
    "read_csv",
    "read_wfdb_212",
    "run",
    "shift_basis",
    "space_for_frequency",
    "suppress_block",
    "synth_ecg",
    "total_error",
    "verify_factorization",
    "write_csv",
]
