"""Validated density matrices and factories for every named state used here.

Basis ordering is big-endian throughout: |abc> sits at index 4a + 2b + c for
qubits and the analogous radix-d rule for qudits.
"""

from __future__ import annotations

from dataclasses import dataclass
import math
import warnings

import numpy as np

from .errors import DimensionMismatch, NotHermitian, NotNormalized, OutOfRange
from .linalg import eigvals_hermitian, kron, partial_trace
from .tolerances import HERMITICITY_TOL, PSD_FLOOR, TRACE_TOL


@dataclass(frozen=True)
class DensityMatrix:
    """A quantum state: Hermitian, unit-trace, positive-semidefinite matrix
    together with its subsystem dimensions (e.g. (2, 2) for two qubits)."""

    matrix: np.ndarray
    dims: tuple[int, ...]

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionMismatch(f"density matrix must be square, got {m.shape}")
        if int(np.prod(self.dims)) != m.shape[0]:
            raise DimensionMismatch(
                f"prod(dims)={int(np.prod(self.dims))} != matrix dim {m.shape[0]}"
            )
        asym = float(np.max(np.abs(m - m.conj().T)))
        if asym > HERMITICITY_TOL:
            raise NotHermitian(f"max |M - M^dagger| = {asym:.3e}")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"trace = {tr:.12g}, expected 1")
        lo = float(eigvals_hermitian(m)[-1])
        if lo < PSD_FLOOR:
            raise ValueError(f"negative eigenvalue {lo:.3e} below PSD floor")

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def marginal(self, keep) -> "DensityMatrix":
        """Reduced state on the kept subsystems."""
        keep = sorted(set(keep))
        reduced = partial_trace(self.matrix, list(self.dims), keep)
        return DensityMatrix(reduced, tuple(self.dims[i] for i in keep))


def _projector(vec: np.ndarray) -> np.ndarray:
    return np.outer(vec, vec.conj())


def pure_schmidt(theta: float) -> DensityMatrix:
    """Two-qubit pure state cos(theta)|00> + sin(theta)|11>.

    theta at 0 or pi/2 is accepted but yields a product state, which is
    flagged with a warning.
    """
    if theta < 0 or theta > math.pi / 2:
        raise OutOfRange(f"theta={theta} outside [0, pi/2]")
    if theta in (0.0, math.pi / 2):
        warnings.warn("theta at an endpoint gives a product (unentangled) state")
    vec = np.zeros(4, dtype=complex)
    vec[0] = math.cos(theta)
    vec[3] = math.sin(theta)
    return DensityMatrix(_projector(vec), (2, 2))


def depolarized_schmidt(theta: float, p: float) -> DensityMatrix:
    """Globally depolarized pure Schmidt state, parameterized by the
    surviving state weight: p |psi(theta)><psi(theta)| + (1 - p) I/4.

    Its eigenvalues are (1 + 3p)/4 and (1 - p)/4 (three-fold), independent
    of theta.
    """
    from .channels import global_depolarize

    if p < 0 or p > 1:
        raise OutOfRange(f"p={p} outside [0, 1]")
    return global_depolarize(pure_schmidt(theta), 1.0 - p)


def acin_two_param(lam: float, theta: float) -> DensityMatrix:
    """Two-parameter 4x4 mixed family: corner weights (1-lam)/2 and a
    rank-one central block of trace lam."""
    if not 0 < lam < 1:
        raise OutOfRange(f"lambda={lam} outside (0, 1)")
    if not 0 < theta < math.pi / 2:
        raise OutOfRange(f"theta={theta} outside (0, pi/2)")
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = m[3, 3] = (1.0 - lam) / 2.0
    m[1, 1] = lam * math.sin(theta) ** 2
    m[2, 2] = lam * math.cos(theta) ** 2
    m[1, 2] = m[2, 1] = lam * math.sin(theta) * math.cos(theta)
    return DensityMatrix(m, (2, 2))


def max_entangled(d: int) -> np.ndarray:
    """Ket of the maximally entangled state sum_i |ii> / sqrt(d)."""
    vec = np.zeros(d * d, dtype=complex)
    for i in range(d):
        vec[i * d + i] = 1.0
    return vec / math.sqrt(d)


def isotropic(d: int, beta: float) -> DensityMatrix:
    """Isotropic two-qudit state beta |psi+><psi+| + (1 - beta) I / d^2.

    Eigenvalues: (1 + beta (d^2 - 1)) / d^2 once and (1 - beta) / d^2 with
    multiplicity d^2 - 1.
    """
    if d < 2:
        raise OutOfRange(f"d={d} must be >= 2")
    lo = -1.0 / (d * d - 1)
    if beta < lo - 1e-12 or beta > 1 + 1e-12:
        raise OutOfRange(f"beta={beta} outside [{lo}, 1]")
    m = beta * _projector(max_entangled(d)) + (1.0 - beta) * np.eye(d * d) / (d * d)
    return DensityMatrix(m, (d, d))


def acin_tripartite(x, theta: float) -> DensityMatrix:
    """Three-qubit pure state
    x0|000> + x1 e^{i theta}|100> + x2|101> + x3|110> + x4|111>.

    The amplitudes must already be normalized; sum(x_i^2) is checked, not
    silently fixed.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (5,):
        raise DimensionMismatch(f"expected 5 amplitudes, got shape {x.shape}")
    if theta < 0 or theta > math.pi:
        raise OutOfRange(f"theta={theta} outside [0, pi]")
    norm2 = float(np.sum(x * x))
    if abs(norm2 - 1.0) > 1e-10:
        raise NotNormalized(f"sum(x_i^2) = {norm2:.12g}, expected 1")
    vec = np.zeros(8, dtype=complex)
    vec[0] = x[0]
    vec[4] = x[1] * np.exp(1j * theta)
    vec[5] = x[2]
    vec[6] = x[3]
    vec[7] = x[4]
    return DensityMatrix(_projector(vec), (2, 2, 2))


def ghz_w_mix(p: float) -> DensityMatrix:
    """Mixture p |GHZ><GHZ| + (1 - p) |W><W| on three qubits."""
    if p < 0 or p > 1:
        raise OutOfRange(f"p={p} outside [0, 1]")
    ghz = np.zeros(8, dtype=complex)
    ghz[0] = ghz[7] = 1.0 / math.sqrt(2)
    w = np.zeros(8, dtype=complex)
    w[1] = w[2] = w[4] = 1.0 / math.sqrt(3)
    m = p * _projector(ghz) + (1.0 - p) * _projector(w)
    return DensityMatrix(m, (2, 2, 2))


# Bell convention: indices 0..3 are psi+, psi-, phi+, phi- with
# psi+- = (|00> +- |11>)/sqrt(2) and phi+- = (|01> +- |10>)/sqrt(2).
_BELL_VECTORS = (
    (1, 0, 0, 1),
    (1, 0, 0, -1),
    (0, 1, 1, 0),
    (0, 1, -1, 0),
)


def bell_state(index: int) -> DensityMatrix:
    """Projector onto one of the four Bell states (see module convention)."""
    if index not in (0, 1, 2, 3):
        raise OutOfRange(f"Bell index must be 0..3, got {index}")
    vec = np.array(_BELL_VECTORS[index], dtype=complex) / math.sqrt(2)
    return DensityMatrix(_projector(vec), (2, 2))


def random_density(dims, seed) -> DensityMatrix:
    """Full-rank random state: G G^dagger / Tr(G G^dagger) with complex
    Gaussian G.  Used by tests and sampling checks."""
    rng = np.random.default_rng(seed)
    n = int(np.prod(list(dims)))
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    m = g @ g.conj().T
    return DensityMatrix(m / np.trace(m).real, tuple(dims))


def random_product_state(da: int, db: int, seed) -> DensityMatrix:
    """rho_A (x) rho_B with independent random factors."""
    rng = np.random.default_rng(seed)
    a = random_density((da,), rng)
    b = random_density((db,), rng)
    return DensityMatrix(kron(a.matrix, b.matrix), (da, db))
