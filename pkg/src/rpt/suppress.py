"""Narrowband suppression: zero the coefficients of interference-bearing
periodic subspaces block by block and reconstruct."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .io import Signal
from .transform import (
    CoefficientVector,
    FrequencyNotRepresentable,
    TransformPlan,
    build_plan,
    forward,
    inverse,
    space_for_frequency,
)


class ConfigurationError(ValueError):
    """Invalid suppression configuration (e.g. frequency/block-size mismatch)."""


@dataclass(frozen=True)
class WindowMask:
    """0/1 gains over coefficient indices; zeros annihilate target subspaces."""

    plan_n: int
    gains: np.ndarray
    zeroed_spaces: frozenset[int]

    def __post_init__(self):
        self.gains.setflags(write=False)


@dataclass(frozen=True)
class SuppressionConfig:
    """Block size and the interference frequencies to remove.

    The final partial block is zero-padded, processed, and trimmed.
    """

    block_size: int
    interference_freqs: tuple[float, ...]
    fs: float

    def target_spaces(self) -> frozenset[int]:
        """Periodic subspaces owning each interference frequency."""
        try:
            return frozenset(
                space_for_frequency(f, self.fs, self.block_size).space
                for f in self.interference_freqs
            )
        except FrequencyNotRepresentable as exc:
            raise ConfigurationError(
                f"{exc}; admissible block sizes are {admissible_hint(exc.f0, self.fs)}"
            ) from exc


def admissible_hint(f0: float, fs: float, count: int = 5) -> list[int]:
    """Smallest block sizes at which f0 falls on an integer bin."""
    sizes = []
    for n in range(1, 100000):
        raw = f0 * n / fs
        if abs(raw - round(raw)) < 1e-9 and round(raw) >= 1:
            sizes.append(n)
            if len(sizes) == count:
                break
    return sizes


def make_mask(plan: TransformPlan, targets: set[int] | frozenset[int]) -> WindowMask:
    """Mask with zeros on the coefficient ranges of the target subspaces."""
    gains = np.ones(plan.n)
    for m in targets:
        if m not in plan.layout:
            raise ValueError(f"{m} is not a divisor of block length {plan.n}")
        rng = plan.layout[m]
        gains[rng.start : rng.stop] = 0.0
    return WindowMask(plan_n=plan.n, gains=gains, zeroed_spaces=frozenset(targets))


def suppress_block(plan: TransformPlan, mask: WindowMask, x: np.ndarray) -> np.ndarray:
    """Transform, zero masked coefficients, reconstruct.

    Equivalent to subtracting the projections onto the zeroed subspaces.
    """
    if mask.plan_n != plan.n:
        raise ValueError(f"mask for n={mask.plan_n} used with plan n={plan.n}")
    beta = forward(plan, x)
    masked = CoefficientVector(plan_n=plan.n, values=beta.values * mask.gains)
    return inverse(plan, masked)


def run(signal: Signal, config: SuppressionConfig) -> Signal:
    """Suppress interference over the whole signal in non-overlapping blocks."""
    if len(signal) == 0:
        raise ValueError("empty signal")
    if signal.fs != config.fs:
        raise ConfigurationError(
            f"signal fs={signal.fs} differs from configured fs={config.fs}"
        )
    n = config.block_size
    targets = config.target_spaces()
    plan = build_plan(n)
    mask = make_mask(plan, targets)

    total = len(signal)
    n_blocks = -(-total // n)
    padded = np.zeros(n_blocks * n)
    padded[:total] = signal.samples
    blocks = padded.reshape(n_blocks, n)
    # vectorized masked transform across all blocks at once
    betas = blocks @ plan.analysis.T
    betas *= mask.gains
    cleaned = betas @ plan.basis.T
    return Signal(samples=cleaned.reshape(-1)[:total].copy(), fs=signal.fs)
