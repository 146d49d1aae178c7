"""Membership predicates for the absolute classes, each returning the
boolean together with the scalar witness it compared.

All threshold comparisons are inclusive with a small guard band, so exact
boundary states classify as members.
"""

from __future__ import annotations

from dataclasses import dataclass, field
import math

import numpy as np

from .bloch import BlochBipartite, BlochTripartite, pair_tensors
from .entropy import _check_alpha, trace_power_real, von_neumann
from .errors import DimensionMismatch, SumMismatch
from .linalg import eigvals_hermitian, trace_power
from .states import DensityMatrix
from .tolerances import CLASS_MARGIN


def _local_dim(rho: DensityMatrix) -> int:
    if len(rho.dims) != 2 or rho.dims[0] != rho.dims[1]:
        raise DimensionMismatch(f"expected equal bipartite dims, got {rho.dims}")
    return rho.dims[0]


def is_afef(rho: DensityMatrix) -> tuple[bool, float]:
    """Absolute fully-entangled-fraction class: lambda_max <= 1/d."""
    d = _local_dim(rho)
    lam_max = float(eigvals_hermitian(rho.matrix)[0])
    return lam_max <= 1.0 / d + CLASS_MARGIN, lam_max


def is_acvenn(rho: DensityMatrix) -> tuple[bool, float]:
    """Absolute nonnegative conditional von Neumann entropy: S >= log2 d."""
    d = _local_dim(rho)
    s = von_neumann(rho)
    return s >= math.log2(d) - CLASS_MARGIN, s


def is_acrenn(rho: DensityMatrix, alpha: float) -> tuple[bool, float]:
    """Absolute nonnegative conditional Renyi entropy, order alpha.

    Witness is Tr(rho^alpha); membership means witness >= d^(1-alpha) for
    alpha < 1 and witness <= d^(1-alpha) for alpha > 1.
    """
    _check_alpha(alpha)
    d = _local_dim(rho)
    witness = trace_power_real(rho, alpha)
    bound = d ** (1.0 - alpha)
    if alpha < 1:
        return witness >= bound - CLASS_MARGIN, witness
    return witness <= bound + CLASS_MARGIN, witness


def is_acre2nn(rho: DensityMatrix) -> tuple[bool, float]:
    """Order-2 case reduces to purity: Tr(rho^2) <= 1/d."""
    d = _local_dim(rho)
    purity = trace_power(rho, 2)
    return purity <= 1.0 / d + CLASS_MARGIN, purity


def acre2nn_bloch(bb: BlochBipartite) -> tuple[bool, float]:
    """Purity criterion restated on Bloch data:
    ||T||^2 <= (d^2 (d - 1) - 2d (||a||^2 + ||b||^2)) / 4."""
    d = bb.d
    na = float(np.dot(bb.a, bb.a))
    nb = float(np.dot(bb.b, bb.b))
    witness = float(np.sum(bb.t * bb.t))
    bound = (d * d * (d - 1) - 2 * d * (na + nb)) / 4.0
    return witness <= bound + CLASS_MARGIN, witness


def marginal_acre2nn(bt: BlochTripartite, pair: str) -> tuple[bool, float]:
    """Same criterion for a two-party marginal of a tripartite state:
    ||T_xy||^2 <= (4(d - 1) - 2 m d) / d^2 with m = ||T_x||^2 + ||T_y||^2."""
    tx, ty, txy = pair_tensors(bt, pair)
    d = bt.d
    m = float(np.dot(tx, tx)) + float(np.dot(ty, ty))
    witness = float(np.sum(txy * txy))
    bound = (4.0 * (d - 1) - 2.0 * m * d) / (d * d)
    return witness <= bound + CLASS_MARGIN, witness


def majorizes(r, s) -> bool:
    """True when r majorizes s: equal totals and every prefix sum of the
    non-increasing rearrangement of r dominates that of s."""
    r = np.asarray(r, dtype=float)
    s = np.asarray(s, dtype=float)
    if r.shape != s.shape or r.ndim != 1:
        raise DimensionMismatch(f"vectors must share one shape, got {r.shape} and {s.shape}")
    if abs(float(np.sum(r) - np.sum(s))) > 1e-10:
        raise SumMismatch(f"totals differ: {np.sum(r):.12g} vs {np.sum(s):.12g}")
    rd = np.sort(r)[::-1]
    sd = np.sort(s)[::-1]
    prefix = np.cumsum(rd) - np.cumsum(sd)
    return bool(np.all(prefix >= -1e-12))


@dataclass
class ClassificationReport:
    """All membership verdicts for one state, with their witnesses."""

    afef: bool
    lambda_max: float
    acvenn: bool
    entropy_bits: float
    acre2nn: bool
    purity: float
    acrenn: dict = field(default_factory=dict)  # alpha -> (bool, Tr rho^alpha)
    thresholds: dict = field(default_factory=dict)


def classification_report(rho: DensityMatrix, alphas=(0.5, 2.0)) -> ClassificationReport:
    d = _local_dim(rho)
    afef, lam = is_afef(rho)
    acv, s = is_acvenn(rho)
    ac2, pur = is_acre2nn(rho)
    report = ClassificationReport(
        afef=afef,
        lambda_max=lam,
        acvenn=acv,
        entropy_bits=s,
        acre2nn=ac2,
        purity=pur,
        thresholds={
            "lambda_max": 1.0 / d,
            "entropy_bits": math.log2(d),
            "purity": 1.0 / d,
        },
    )
    for alpha in alphas:
        report.acrenn[alpha] = is_acrenn(rho, alpha)
        report.thresholds[f"trace_power[{alpha:g}]"] = d ** (1.0 - alpha)
    return report
