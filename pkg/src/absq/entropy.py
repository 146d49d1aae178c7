"""Entropy functionals: von Neumann, Renyi, their conditional versions, and
truncated trace-power series estimators.

All values are returned in bits (log base 2) except series_estimate_flat,
which reproduces a reference surrogate and is returned raw; see its
docstring.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import AlphaOutOfDomain, DimensionMismatch
from .linalg import eigvals_hermitian
from .states import DensityMatrix
from .tolerances import EIG_CLAMP_FLOOR


def _clamped_eigenvalues(rho: DensityMatrix) -> np.ndarray:
    """Spectrum with tiny negative roundoff mapped to exact zero.

    Anything below the clamp floor is a PSD failure upstream and is
    rejected here rather than silently fixed.
    """
    eigs = eigvals_hermitian(rho.matrix)
    if eigs[-1] < EIG_CLAMP_FLOOR:
        raise ValueError(f"eigenvalue {eigs[-1]:.3e} below the PSD clamp floor")
    return np.where(eigs < 0, 0.0, eigs)


def von_neumann(rho: DensityMatrix) -> float:
    """S(rho) = -sum(lambda log2 lambda), with 0 log 0 = 0."""
    eigs = _clamped_eigenvalues(rho)
    pos = eigs[eigs > 0]
    return float(-np.sum(pos * np.log2(pos)))


def _marginal_b(rho: DensityMatrix) -> DensityMatrix:
    if len(rho.dims) != 2:
        raise DimensionMismatch(f"conditional entropy needs bipartite dims, got {rho.dims}")
    return rho.marginal([1])


def conditional_von_neumann(rho: DensityMatrix) -> float:
    """S(A|B) = S(rho_AB) - S(rho_B)."""
    return von_neumann(rho) - von_neumann(_marginal_b(rho))


def _check_alpha(alpha: float) -> None:
    if alpha <= 0 or alpha == 1:
        raise AlphaOutOfDomain(
            f"alpha={alpha} outside (0,1)|(1,inf); use von_neumann for the alpha->1 limit"
        )


def trace_power_real(rho: DensityMatrix, alpha: float) -> float:
    """Tr(rho^alpha) for real alpha > 0, from the spectrum."""
    eigs = _clamped_eigenvalues(rho)
    pos = eigs[eigs > 0]
    return float(np.sum(pos ** alpha))


def renyi(rho: DensityMatrix, alpha: float) -> float:
    """Renyi entropy of order alpha: log2(Tr rho^alpha) / (1 - alpha)."""
    _check_alpha(alpha)
    return math.log2(trace_power_real(rho, alpha)) / (1.0 - alpha)


def conditional_renyi(rho: DensityMatrix, alpha: float) -> float:
    """S_alpha(A|B) = S_alpha(rho_AB) - S_alpha(rho_B)."""
    _check_alpha(alpha)
    return renyi(rho, alpha) - renyi(_marginal_b(rho), alpha)


def series_estimate(rho: DensityMatrix, terms: int = 10) -> float:
    """Truncated trace-power series for the von Neumann entropy, in bits.

    The k-th term is g(k)/k with g(k) = sum_m (-1)^m C(k, m) Tr(rho^{m+1}),
    which telescopes to g(k) = sum_i lambda_i (1 - lambda_i)^k; the factored
    form is used so large-k binomials cannot cancel catastrophically.  The
    raw sum converges to S in nats and is divided by ln 2, keeping the
    result comparable against log2(d) thresholds.
    """
    if terms < 1:
        raise ValueError(f"terms must be >= 1, got {terms}")
    eigs = _clamped_eigenvalues(rho)
    total = 0.0
    for k in range(1, terms + 1):
        total += float(np.sum(eigs * (1.0 - eigs) ** k)) / k
    return total / math.log(2.0)


def series_estimate_flat(rho: DensityMatrix, terms: int = 10) -> float:
    """Entropy-series surrogate with uniform interior coefficients.

    Every interior trace power in the k-th bracket carries coefficient k
    instead of the binomial C(k, m):

        g(k) = 1 - k R_2 + k R_3 - ... -(+) k R_k + (-1)^k R_{k+1}

    with R_n = Tr(rho^n), summed as sum_k g(k)/k and returned raw.  This is
    not a consistent entropy (it does not vanish on pure states) but it is
    the exact formula behind the reference qudit boundary table that the
    CLI reproduces, where it is compared directly against log2(d).
    """
    if terms < 1:
        raise ValueError(f"terms must be >= 1, got {terms}")
    eigs = _clamped_eigenvalues(rho)
    r = [float(np.sum(eigs ** n)) for n in range(1, terms + 2)]  # r[n-1] = R_n
    total = 0.0
    for k in range(1, terms + 1):
        g = 1.0 + (-1.0) ** k * r[k]
        for m in range(1, k):
            g += (-1.0) ** m * k * r[m]
        total += g / k
    return total
