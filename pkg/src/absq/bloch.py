"""Bloch-Fano decompositions over the generalized Gell-Mann basis.

Basis ordering is fixed as symmetric pairs, antisymmetric pairs, then
diagonal matrices; correlation norms are ordering-invariant so all the
criteria built on them are unaffected by this choice.
"""

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np

from .errors import DimensionMismatch, OutOfRange
from .linalg import kron
from .states import DensityMatrix


@dataclass(frozen=True)
class GellMannBasis:
    """d^2 - 1 traceless Hermitian matrices with Tr(s_m s_n) = 2 delta_mn."""

    d: int
    matrices: tuple


@dataclass(frozen=True)
class BlochBipartite:
    """Local Bloch vectors a, b and correlation matrix t of a d x d state."""

    d: int
    a: np.ndarray
    b: np.ndarray
    t: np.ndarray


@dataclass(frozen=True)
class BlochTripartite:
    """One-, two- and three-body correlation tensors of a d x d x d state.

    All entries are raw operator traces; the dimension-dependent prefactors
    live in the reconstruction formula.
    """

    d: int
    t1: np.ndarray
    t2: np.ndarray
    t3: np.ndarray
    t12: np.ndarray
    t13: np.ndarray
    t23: np.ndarray
    t123: np.ndarray


def gell_mann_basis(d: int) -> GellMannBasis:
    """Generalized Gell-Mann matrices for local dimension d.

    For d = 2 this is exactly (sigma_x, sigma_y, sigma_z).
    """
    if d < 2:
        raise OutOfRange(f"d={d} must be >= 2")
    mats = []
    for j in range(d):
        for k in range(j + 1, d):
            m = np.zeros((d, d), dtype=complex)
            m[j, k] = m[k, j] = 1.0
            mats.append(m)
    for j in range(d):
        for k in range(j + 1, d):
            m = np.zeros((d, d), dtype=complex)
            m[j, k] = -1j
            m[k, j] = 1j
            mats.append(m)
    for l in range(1, d):
        m = np.zeros((d, d), dtype=complex)
        scale = math.sqrt(2.0 / (l * (l + 1)))
        for i in range(l):
            m[i, i] = scale
        m[l, l] = -l * scale
        mats.append(m)
    return GellMannBasis(d, tuple(mats))


def _basis_array(d: int) -> np.ndarray:
    return np.stack(gell_mann_basis(d).matrices)


def decompose_bipartite(rho: DensityMatrix) -> BlochBipartite:
    """Coefficients a_m, b_n, t_mn of the identity/Gell-Mann expansion.

    Fixed by the orthogonality relation Tr(s_m s_n) = 2 delta_mn:
    a_m = (d/2) Tr(rho s_m x I), b_n likewise, t_mn = (d^2/4) Tr(rho s_m x s_n).
    """
    if len(rho.dims) != 2 or rho.dims[0] != rho.dims[1]:
        raise DimensionMismatch(f"expected equal bipartite dims, got {rho.dims}")
    d = rho.dims[0]
    basis = _basis_array(d)
    r = rho.matrix.reshape(d, d, d, d)
    a = (d / 2.0) * np.real(np.einsum("abcb,mca->m", r, basis))
    b = (d / 2.0) * np.real(np.einsum("abad,ndb->n", r, basis))
    t = (d * d / 4.0) * np.real(np.einsum("abcd,mca,ndb->mn", r, basis, basis))
    return BlochBipartite(d, a, b, t)


def reconstruct_bipartite(bb: BlochBipartite) -> np.ndarray:
    d = bb.d
    basis = gell_mann_basis(d).matrices
    eye = np.eye(d, dtype=complex)
    m = np.eye(d * d, dtype=complex)
    for am, sm in zip(bb.a, basis):
        m += am * kron(sm, eye)
    for bn, sn in zip(bb.b, basis):
        m += bn * kron(eye, sn)
    for i, sm in enumerate(basis):
        for j, sn in enumerate(basis):
            m += bb.t[i, j] * kron(sm, sn)
    return m / (d * d)


def purity_from_bloch(bb: BlochBipartite) -> float:
    """Tr(rho^2) expressed through the Bloch data:
    (d^2 + 2d ||a||^2 + 2d ||b||^2 + 4 ||t||^2) / d^4."""
    d = bb.d
    na = float(np.dot(bb.a, bb.a))
    nb = float(np.dot(bb.b, bb.b))
    nt = float(np.sum(bb.t * bb.t))
    return (d * d + 2 * d * na + 2 * d * nb + 4 * nt) / d**4


def decompose_tripartite(rho: DensityMatrix) -> BlochTripartite:
    """Raw correlation tensors t^x_i = Tr(rho s_i x I x I) and friends."""
    if len(rho.dims) != 3 or len(set(rho.dims)) != 1:
        raise DimensionMismatch(f"expected three equal dims, got {rho.dims}")
    d = rho.dims[0]
    basis = _basis_array(d)
    r = rho.matrix.reshape(d, d, d, d, d, d)
    t1 = np.real(np.einsum("abcdbc,ida->i", r, basis))
    t2 = np.real(np.einsum("abcaec,jeb->j", r, basis))
    t3 = np.real(np.einsum("abcabf,kfc->k", r, basis))
    t12 = np.real(np.einsum("abcdec,ida,jeb->ij", r, basis, basis))
    t13 = np.real(np.einsum("abcdbf,ida,kfc->ik", r, basis, basis))
    t23 = np.real(np.einsum("abcaef,jeb,kfc->jk", r, basis, basis))
    t123 = np.real(np.einsum("abcdef,ida,jeb,kfc->ijk", r, basis, basis, basis))
    return BlochTripartite(d, t1, t2, t3, t12, t13, t23, t123)


def reconstruct_tripartite(bt: BlochTripartite) -> np.ndarray:
    d = bt.d
    basis = gell_mann_basis(d).matrices
    eye = np.eye(d, dtype=complex)
    n = d**3
    m = np.eye(n, dtype=complex) / d**3
    one = 1.0 / (2 * d * d)
    for i, s in enumerate(basis):
        m += one * bt.t1[i] * kron(kron(s, eye), eye)
        m += one * bt.t2[i] * kron(kron(eye, s), eye)
        m += one * bt.t3[i] * kron(kron(eye, eye), s)
    two = 1.0 / (4 * d)
    for i, si in enumerate(basis):
        for j, sj in enumerate(basis):
            m += two * bt.t12[i, j] * kron(kron(si, sj), eye)
            m += two * bt.t13[i, j] * kron(kron(si, eye), sj)
            m += two * bt.t23[i, j] * kron(kron(eye, si), sj)
    for i, si in enumerate(basis):
        for j, sj in enumerate(basis):
            for k, sk in enumerate(basis):
                m += bt.t123[i, j, k] * kron(kron(si, sj), sk) / 8.0
    return m


MARGINAL_PAIRS = ("23", "13", "12")

_PAIR_FIELDS = {
    "23": ("t2", "t3", "t23"),
    "13": ("t1", "t3", "t13"),
    "12": ("t1", "t2", "t12"),
}


def pair_tensors(bt: BlochTripartite, pair: str):
    """The (t_x, t_y, t_xy) tensors describing one retained pair."""
    if pair not in _PAIR_FIELDS:
        raise OutOfRange(f"pair must be one of {MARGINAL_PAIRS}, got {pair!r}")
    return tuple(getattr(bt, f) for f in _PAIR_FIELDS[pair])


def marginal_purity(bt: BlochTripartite, pair: str) -> float:
    """Purity of the two-party marginal assembled from Bloch data:
    1/d^2 + (||t_x||^2 + ||t_y||^2) / (2d) + ||t_xy||^2 / 4."""
    nx, ny, nxy = pair_tensors(bt, pair)
    d = bt.d
    m = float(np.dot(nx, nx)) + float(np.dot(ny, ny))
    return 1.0 / (d * d) + m / (2 * d) + float(np.sum(nxy * nxy)) / 4.0
