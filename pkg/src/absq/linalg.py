"""Dense complex linear algebra for operators up to a few dozen dimensions.

Everything downstream (states, channels, entropies, classification) runs on
the routines in this module.  The eigensolver is a cyclic Jacobi iteration
with complex plane rotations: for the <= 64x64 Hermitian matrices handled
here robustness and determinism matter more than speed.
"""

from __future__ import annotations

from dataclasses import dataclass
import math
import string

import numpy as np

from .errors import DimensionMismatch, NotHermitian
from .tolerances import HERMITICITY_TOL, JACOBI_OFFDIAG_TOL

_MAX_SWEEPS = 100


@dataclass(frozen=True)
class Spectrum:
    """Full eigensystem of a Hermitian matrix.

    eigenvalues are real and sorted non-increasing (ties keep their
    pre-sort diagonal order); column k of eigenvectors pairs with
    eigenvalues[k].
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _require_square(m: np.ndarray) -> int:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    return m.shape[0]


def _check_hermitian(m: np.ndarray) -> None:
    asym = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
    if asym > HERMITICITY_TOL:
        raise NotHermitian(f"max |M - M^dagger| = {asym:.3e} exceeds {HERMITICITY_TOL}")


def _jacobi_rotate(a: np.ndarray, v: np.ndarray | None, p: int, q: int) -> None:
    # One two-sided rotation A <- J^dagger A J zeroing A[p, q].  With
    # A[p,q] = r e^{i phi} the rotation is J[p,p] = J[q,q] = c,
    # J[p,q] = s e^{i phi}, J[q,p] = -s e^{-i phi}, tan(2 theta) = 2r / (A[q,q] - A[p,p]).
    apq = a[p, q]
    r = abs(apq)
    phase = apq / r
    app = a[p, p].real
    aqq = a[q, q].real
    if app == aqq:
        t = 1.0
    else:
        tau = (aqq - app) / (2.0 * r)
        t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c
    s_ph = s * phase
    s_ph_conj = s * phase.conjugate()

    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - s_ph_conj * col_q
    a[:, q] = s_ph * col_p + c * col_q
    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - s_ph * row_q
    a[q, :] = s_ph_conj * row_p + c * row_q
    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real

    if v is not None:
        v_p = v[:, p].copy()
        v_q = v[:, q].copy()
        v[:, p] = c * v_p - s_ph_conj * v_q
        v[:, q] = s_ph * v_p + c * v_q


def _offdiag_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def _jacobi(m: np.ndarray, want_vectors: bool) -> tuple[np.ndarray, np.ndarray | None]:
    n = m.shape[0]
    a = np.array((m + m.conj().T) / 2.0, dtype=complex)
    v = np.eye(n, dtype=complex) if want_vectors else None
    if n == 1:
        return np.array([a[0, 0].real]), v
    target = JACOBI_OFFDIAG_TOL * max(1.0, float(np.linalg.norm(a)))
    # elements below skip never push the off-diagonal norm back above target
    skip = target / (2.0 * n)
    for _ in range(_MAX_SWEEPS):
        if _offdiag_norm(a) <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > skip:
                    _jacobi_rotate(a, v, p, q)
    else:  # pragma: no cover - cyclic Jacobi converges long before this
        raise RuntimeError("Jacobi iteration failed to converge")
    return np.diag(a).real.copy(), v


def eig_hermitian(m: np.ndarray) -> Spectrum:
    """Full spectral decomposition of a Hermitian matrix.

    Cyclic Jacobi sweeps run until the off-diagonal Frobenius norm falls
    below the configured threshold, so the result is deterministic for a
    given input.  Raises NotHermitian when max |M - M^dagger| exceeds the
    Hermiticity tolerance.
    """
    m = np.asarray(m, dtype=complex)
    _require_square(m)
    _check_hermitian(m)
    values, vectors = _jacobi(m, want_vectors=True)
    order = np.argsort(-values, kind="stable")
    return Spectrum(values[order], vectors[:, order])


def eigvals_hermitian(m: np.ndarray) -> np.ndarray:
    """Eigenvalues only, sorted non-increasing; cheaper than eig_hermitian."""
    m = np.asarray(m, dtype=complex)
    _require_square(m)
    _check_hermitian(m)
    values, _ = _jacobi(m, want_vectors=False)
    return np.sort(values)[::-1]


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with the left factor on the slower index."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def partial_trace(m: np.ndarray, dims: list[int] | tuple[int, ...], keep) -> np.ndarray:
    """Trace out every subsystem not listed in keep.

    dims lists the subsystem dimensions of the square matrix m (their
    product must equal its side); keep is a nonempty collection of
    subsystem indices, and the result acts on those subsystems in their
    original order.
    """
    m = np.asarray(m, dtype=complex)
    n = _require_square(m)
    dims = list(dims)
    if int(np.prod(dims)) != n:
        raise DimensionMismatch(f"prod(dims)={int(np.prod(dims))} != matrix dim {n}")
    keep = sorted(set(keep))
    if not keep or keep[0] < 0 or keep[-1] >= len(dims):
        raise DimensionMismatch(f"keep={keep} invalid for {len(dims)} subsystems")
    k = len(dims)
    letters = string.ascii_lowercase
    row = list(letters[:k])
    col = list(letters[k : 2 * k])
    for i in range(k):
        if i not in keep:
            col[i] = row[i]
    out = "".join(row[i] for i in keep) + "".join(col[i] for i in keep)
    reduced = np.einsum(f"{''.join(row)}{''.join(col)}->{out}", m.reshape(dims + dims))
    d_keep = int(np.prod([dims[i] for i in keep]))
    return reduced.reshape(d_keep, d_keep)


def trace_power(rho, n: int) -> float:
    """Tr(rho^n) evaluated as sum(lambda_i^n) over the spectrum."""
    if n < 1 or int(n) != n:
        raise ValueError(f"power must be a positive integer, got {n}")
    eigs = np.clip(_state_eigenvalues(rho), 0.0, None)
    return float(np.sum(eigs ** int(n)))


def _state_eigenvalues(rho) -> np.ndarray:
    # accepts a DensityMatrix or a raw Hermitian matrix
    m = getattr(rho, "matrix", rho)
    return eigvals_hermitian(m)


def haar_unitary(dim: int, seed) -> np.ndarray:
    """Haar-distributed unitary: QR of a complex Gaussian matrix with the
    R diagonal phase-corrected.  Deterministic for a given seed; seed may
    be an int or a numpy Generator (caller-owned state)."""
    if dim < 1:
        raise DimensionMismatch(f"dim must be >= 1, got {dim}")
    rng = np.random.default_rng(seed)
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    diag = np.diag(r).copy()
    diag[diag == 0] = 1.0
    return q * (diag / np.abs(diag))
