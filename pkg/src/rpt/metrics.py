"""Per-block squared Euclidean error, total error, and the comparison grid
between subspace suppression and the notch baseline."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .io import Signal
from .notch import design_notch, filter_blocked
from .suppress import SuppressionConfig, run


@dataclass(frozen=True)
class SuppressionReport:
    """Errors of one method at one block size over a whole record."""

    block_size: int
    method: str  # "rpt" | "notch"
    per_block_errors: np.ndarray
    total: float

    def __post_init__(self):
        self.per_block_errors.setflags(write=False)


def block_error(clean_block: np.ndarray, recon_block: np.ndarray) -> float:
    """Sum of squared sample differences."""
    clean_block = np.asarray(clean_block, dtype=float)
    recon_block = np.asarray(recon_block, dtype=float)
    if clean_block.shape != recon_block.shape:
        raise ValueError(
            f"block length mismatch: {clean_block.shape} vs {recon_block.shape}"
        )
    d = clean_block - recon_block
    return float(d @ d)


def total_error(per_block: np.ndarray) -> float:
    """Arithmetic sum of per-block errors."""
    per_block = np.asarray(per_block, dtype=float)
    if per_block.size and per_block.min() < 0:
        raise ValueError("per-block errors must be nonnegative")
    return float(per_block.sum())


def _per_block(clean: np.ndarray, recon: np.ndarray, block_size: int) -> np.ndarray:
    d = (clean - recon).reshape(-1, block_size)
    return np.einsum("ij,ij->i", d, d)


def compare_grid(
    clean: Signal,
    contaminated: Signal,
    block_sizes: list[int],
    f0: float,
    q: float,
) -> list[SuppressionReport]:
    """Run both suppression methods at each block size and score against clean.

    The final partial block is zero-padded on both the reconstruction and the
    clean reference before scoring.
    """
    if len(clean) != len(contaminated) or clean.fs != contaminated.fs:
        raise ValueError("clean and contaminated signals must match in length and fs")
    reports = []
    for n in block_sizes:
        n_blocks = -(-len(clean) // n)
        padded_len = n_blocks * n
        clean_p = np.zeros(padded_len)
        clean_p[: len(clean)] = clean.samples
        dirty_p = np.zeros(padded_len)
        dirty_p[: len(contaminated)] = contaminated.samples
        dirty_sig = Signal(samples=dirty_p, fs=contaminated.fs)

        cfg = SuppressionConfig(block_size=n, interference_freqs=(f0,), fs=clean.fs)
        rpt_out = run(dirty_sig, cfg).samples
        notch_out = filter_blocked(design_notch(f0, clean.fs, q), dirty_p, n)

        for method, recon in (("rpt", rpt_out), ("notch", notch_out)):
            errors = _per_block(clean_p, recon, n)
            reports.append(
                SuppressionReport(
                    block_size=n,
                    method=method,
                    per_block_errors=errors,
                    total=total_error(errors),
                )
            )
    return reports


def write_report_csv(reports: list[SuppressionReport], path: str | Path) -> None:
    """Summary CSV: one row per (block size, method)."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["block_size", "method", "total_error", "num_blocks"])
        for r in reports:
            w.writerow(
                [r.block_size, r.method, f"{r.total:.17g}", len(r.per_block_errors)]
            )


def write_block_errors_csv(report: SuppressionReport, path: str | Path) -> None:
    """Per-block CSV: block index and its error."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["block_index", "e_i"])
        for i, e in enumerate(report.per_block_errors):
            w.writerow([i, f"{e:.17g}"])
