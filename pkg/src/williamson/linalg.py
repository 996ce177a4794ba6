"""Dense symmetric matrix primitives.

All rank and sign decisions in the package go through :func:`zero_threshold`:
an eigenvalue ``lam`` counts as zero iff ``|lam| <= rank_tol * max(1, max|eig|)``.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import (
    NotPositiveSemidefiniteError,
    NotSymmetricError,
    NumericalError,
)

RANK_TOL = 1e-9
EIGH_RESIDUAL_TOL = 1e-10


def sym_matrix(a, even=True, tol=1e-10):
    """Return ``a`` as a float array, symmetrized.

    Parameters
    ----------
    a : array_like
        Square real matrix.
    even : bool
        Require an even dimension ``2n``.
    tol : float
        Largest accepted ``|a - a.T|_F / max(1, |a|_F)`` before symmetrizing.
    """
    a = np.array(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if even and a.shape[0] % 2:
        raise ValueError(f"expected an even dimension, got {a.shape[0]}")
    asym = np.linalg.norm(a - a.T)
    if asym > tol * max(1.0, np.linalg.norm(a)):
        raise NotSymmetricError(f"matrix is not symmetric (|A - A^T|_F = {asym:.3e})", asym)
    return (a + a.T) / 2


def half_dim(a):
    """``n`` for a ``2n x 2n`` (or ``2n x k``) matrix."""
    rows = np.shape(a)[0]
    if rows % 2:
        raise ValueError(f"expected an even number of rows, got {rows}")
    return rows // 2


class EigDecomposition(NamedTuple):
    """Ascending eigenvalues and matching orthonormal eigenvectors (columns)."""

    eigenvalues: np.ndarray
    vectors: np.ndarray


class InertiaSignature(NamedTuple):
    """Counts of negative, zero and positive eigenvalues."""

    nu: int
    xi: int
    pi: int


@dataclass(frozen=True)
class SpectralSplit:
    """``C = pos - neg`` with ``pos, neg`` psd and ``pos @ neg = 0``."""

    neg: np.ndarray
    pos: np.ndarray

    @property
    def abs(self):
        return self.pos + self.neg


def eigh(a):
    """Symmetric eigendecomposition with a residual guarantee.

    Raises
    ------
    NumericalError
        If ``|A V - V diag(w)|_F > 1e-10 max(1, |A|_F)``.
    """
    a = np.asarray(a, dtype=float)
    w, v = np.linalg.eigh(a)
    scale = max(1.0, np.linalg.norm(a))
    res = np.linalg.norm(a @ v - v * w)
    if res > EIGH_RESIDUAL_TOL * scale:
        raise NumericalError("eigendecomposition residual too large", res, EIGH_RESIDUAL_TOL * scale)
    return EigDecomposition(w, v)


def zero_threshold(eigenvalues, rank_tol=RANK_TOL):
    """Absolute cutoff below which an eigenvalue is treated as zero."""
    top = np.max(np.abs(eigenvalues)) if len(eigenvalues) else 0.0
    return rank_tol * max(1.0, top)


def sign_groups(eigenvalues, rank_tol=RANK_TOL):
    """Boolean masks ``(neg, zero, pos)`` over ``eigenvalues``."""
    w = np.asarray(eigenvalues)
    thr = zero_threshold(w, rank_tol)
    return w < -thr, np.abs(w) <= thr, w > thr


def inertia(a, rank_tol=RANK_TOL):
    if rank_tol <= 0:
        raise ValueError("rank_tol must be positive")
    w = np.linalg.eigvalsh(np.asarray(a, dtype=float))
    neg, zero, pos = sign_groups(w, rank_tol)
    return InertiaSignature(int(neg.sum()), int(zero.sum()), int(pos.sum()))


def rank(a, rank_tol=RANK_TOL):
    """Numerical rank of a symmetric matrix at the shared tolerance."""
    _, zero, _ = sign_groups(np.linalg.eigvalsh(np.asarray(a, dtype=float)), rank_tol)
    return int(len(zero) - zero.sum())


def psd_sqrt(b, rank_tol=RANK_TOL):
    """Unique psd square root of a psd matrix.

    Eigenvalues with ``|lam| <= rank_tol * s`` are set to zero so the root
    has the same numerical range as ``b``; anything more negative is
    rejected.
    """
    w, v = eigh(b)
    thr = zero_threshold(w, rank_tol)
    if len(w) and w[0] < -thr:
        raise NotPositiveSemidefiniteError(
            f"matrix is not positive semidefinite (eigenvalue {w[0]:.6g})", float(w[0])
        )
    root = np.where(w > thr, np.sqrt(np.clip(w, 0.0, None)), 0.0)
    r = (v * root) @ v.T
    return (r + r.T) / 2


def spectral_split(c, rank_tol=RANK_TOL):
    """Negative and positive parts of ``c`` from one eigendecomposition."""
    w, v = eigh(c)
    neg_mask, _, pos_mask = sign_groups(w, rank_tol)
    pos = (v[:, pos_mask] * w[pos_mask]) @ v[:, pos_mask].T
    neg = -(v[:, neg_mask] * w[neg_mask]) @ v[:, neg_mask].T
    return SpectralSplit(neg=(neg + neg.T) / 2, pos=(pos + pos.T) / 2)


def split_roots(c, rank_tol=RANK_TOL):
    """Square roots of the negative and positive parts, ``(C_-^{1/2}, C_+^{1/2})``.

    Built from the same eigendecomposition as :func:`spectral_split`, so the
    roots share its rank decisions exactly.
    """
    w, v = eigh(c)
    neg_mask, _, pos_mask = sign_groups(w, rank_tol)
    pos = (v[:, pos_mask] * np.sqrt(w[pos_mask])) @ v[:, pos_mask].T
    neg = (v[:, neg_mask] * np.sqrt(-w[neg_mask])) @ v[:, neg_mask].T
    return (neg + neg.T) / 2, (pos + pos.T) / 2


NORM_KINDS = ("operator", "frobenius", "trace")

_NORM_ALIASES = {
    "op": "operator",
    "operator": "operator",
    "fro": "frobenius",
    "frobenius": "frobenius",
    "trace": "trace",
    "nuc": "trace",
}


def norm_kind(kind):
    """Canonical name for a norm kind or one of its short aliases."""
    try:
        return _NORM_ALIASES[kind]
    except KeyError:
        raise ValueError(f"unknown norm kind {kind!r}") from None


def norm_of_singular_values(s, kind):
    """Unitarily invariant norm given the singular values ``s``."""
    s = np.abs(np.asarray(s, dtype=float))
    kind = norm_kind(kind)
    if s.size == 0:
        return 0.0
    if kind == "operator":
        return float(s.max())
    if kind == "frobenius":
        return float(np.sqrt(np.sum(s**2)))
    return float(s.sum())


def norm(x, kind="operator"):
    """Operator, Frobenius or trace norm of a real matrix."""
    x = np.asarray(x, dtype=float)
    if x.size == 0:
        return 0.0
    return norm_of_singular_values(np.linalg.svd(x, compute_uv=False), kind)
