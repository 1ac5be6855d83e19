"""Block transform over periodic subspaces: plan construction, analysis,
synthesis, projections, and per-period energy spectra.

The transform matrix concatenates the shift bases of every divisor of the
block length. Analysis is done per subspace with precomputed Gram inverses,
which equals the dense matrix inverse because distinct subspaces are
mutually orthogonal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .ramanujan import divisors, euler_totient, shift_basis

GRAM_TOL = 1e-9


@dataclass(frozen=True)
class TransformPlan:
    """All per-N precomputation, immutable and shareable across workers."""

    n: int
    divisors: tuple[int, ...]
    layout: dict[int, range]  # divisor -> coefficient index range
    basis: np.ndarray  # int64, n x n, columns grouped by ascending divisor
    norm_scales: np.ndarray  # Euclidean norm of each column
    gram_inverses: dict[int, np.ndarray]  # divisor -> (R^T R)^-1
    analysis: np.ndarray  # n x n, rows grouped like layout; equals basis^-1

    def __post_init__(self):
        for a in (self.basis, self.norm_scales, self.analysis):
            a.setflags(write=False)


@dataclass(frozen=True)
class CoefficientVector:
    """Coefficients of one block, labeled by the owning plan's layout."""

    plan_n: int
    values: np.ndarray

    def __post_init__(self):
        if len(self.values) != self.plan_n:
            raise ValueError(
                f"coefficient length {len(self.values)} != plan length {self.plan_n}"
            )


@dataclass(frozen=True)
class FrequencyBinding:
    """A sinusoid frequency resolved to its DFT bin and periodic subspace."""

    f0: float
    fs: float
    n: int
    bin: int
    space: int


class FrequencyNotRepresentable(ValueError):
    """f0 does not fall on an integer bin for the given block length."""

    def __init__(self, f0: float, fs: float, n: int):
        self.f0, self.fs, self.n = f0, fs, n
        super().__init__(
            f"{f0} Hz at fs={fs} Hz is not an integer bin for block length {n}; "
            f"choose a block length making f0*n/fs integral"
        )


def build_plan(n: int) -> TransformPlan:
    """Precompute basis, layout, column norms, and per-space Gram inverses."""
    if n < 1:
        raise ValueError(f"block length must be positive, got {n}")
    divs = divisors(n)
    layout: dict[int, range] = {}
    blocks = []
    gram_inverses: dict[int, np.ndarray] = {}
    analysis_rows = []
    start = 0
    for m in divs:
        cols = shift_basis(m, n).columns
        phi = cols.shape[1]
        layout[m] = range(start, start + phi)
        start += phi
        blocks.append(cols)
        gram = (cols.T @ cols).astype(float)
        sv = np.linalg.svd(gram, compute_uv=False)
        if sv[-1] <= GRAM_TOL * sv[0]:
            raise ArithmeticError(f"singular Gram matrix for period {m} at n={n}")
        gram_inv = np.linalg.inv(gram)
        gram_inverses[m] = gram_inv
        analysis_rows.append(gram_inv @ cols.T)
    basis = np.hstack(blocks)
    return TransformPlan(
        n=n,
        divisors=tuple(divs),
        layout=layout,
        basis=basis,
        norm_scales=np.linalg.norm(basis.astype(float), axis=0),
        gram_inverses=gram_inverses,
        analysis=np.vstack(analysis_rows),
    )


def forward(plan: TransformPlan, x: np.ndarray) -> CoefficientVector:
    """Analysis: coefficients beta with x = basis @ beta.

    Computed per subspace as (R^T R)^-1 R^T x; identical to the dense inverse
    action by mutual orthogonality of the subspaces.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (plan.n,):
        raise ValueError(f"expected length-{plan.n} vector, got shape {x.shape}")
    return CoefficientVector(plan_n=plan.n, values=plan.analysis @ x)


def inverse(plan: TransformPlan, beta: CoefficientVector) -> np.ndarray:
    """Synthesis: basis @ beta."""
    if beta.plan_n != plan.n:
        raise ValueError(f"coefficients for n={beta.plan_n} used with plan n={plan.n}")
    return plan.basis @ beta.values


def project(plan: TransformPlan, x: np.ndarray, m: int) -> np.ndarray:
    """Orthogonal projection of x onto the period-m subspace."""
    if m not in plan.layout:
        raise ValueError(f"{m} is not a divisor of block length {plan.n}")
    x = np.asarray(x, dtype=float)
    if x.shape != (plan.n,):
        raise ValueError(f"expected length-{plan.n} vector, got shape {x.shape}")
    rng = plan.layout[m]
    cols = plan.basis[:, rng.start : rng.stop]
    return cols @ (plan.gram_inverses[m] @ (cols.T @ x))


def energy_spectrum(plan: TransformPlan, x: np.ndarray) -> dict[int, float]:
    """Squared norm of the projection onto each divisor's subspace.

    Values sum to ||x||^2 (orthogonal decomposition).
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (plan.n,):
        raise ValueError(f"expected length-{plan.n} vector, got shape {x.shape}")
    beta = forward(plan, x).values
    out: dict[int, float] = {}
    for m, rng in plan.layout.items():
        cols = plan.basis[:, rng.start : rng.stop]
        xm = cols @ beta[rng.start : rng.stop]
        out[m] = float(xm @ xm)
    return out


def space_for_frequency(f0: float, fs: float, n: int) -> FrequencyBinding:
    """Map a sinusoid frequency to its periodic subspace within a block.

    The frequency must land on an integer bin k0 = f0*n/fs; the owning
    subspace has period n / gcd(k0, n).
    """
    if fs <= 0:
        raise ValueError(f"sampling rate must be positive, got {fs}")
    if f0 < 0 or (f0 != 0 and f0 >= fs / 2):
        raise ValueError(f"frequency {f0} Hz outside [0, fs/2) for fs={fs}")
    if f0 == 0:
        return FrequencyBinding(f0=f0, fs=fs, n=n, bin=0, space=1)
    raw = f0 * n / fs
    k0 = round(raw)
    if abs(raw - k0) >= 1e-9 or k0 == 0:
        raise FrequencyNotRepresentable(f0, fs, n)
    return FrequencyBinding(f0=f0, fs=fs, n=n, bin=k0, space=n // math.gcd(k0, n))
