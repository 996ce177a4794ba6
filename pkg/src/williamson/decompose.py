"""Williamson-type decompositions ``M^T A M = D ⊕ D`` with ``M`` symplectic.

Three constructions are provided and are expected to agree on ``D``:

* :func:`williamson_pd` for positive definite ``A``;
* :func:`williamson_eigsps` for matrices in EigSpSm, built from the square
  roots of the negative and positive parts of ``A``;
* :func:`williamson_via_subspaces` for any ``A`` with a verified subspace
  certificate, reducing to :func:`williamson_pd` on each definite piece.

``D`` is always returned in ascending order, with the columns of ``M``
permuted to match (the same permutation on the ``u`` and ``v`` halves, which
keeps ``M`` symplectic).
"""

from dataclasses import dataclass

import numpy as np

from .classify import CHECK_TOL, check_eigsps_membership, verify_certificate
from .errors import MembershipError, NotPositiveDefiniteError, NotSkewSymmetricError, NumericalError
from .linalg import RANK_TOL, eigh, psd_sqrt, sign_groups, split_roots, sym_matrix, zero_threshold
from .symplectic import (
    SYMP_TOL,
    Subspace,
    apply_j,
    as_subspace,
    gram,
    standard_form,
    symplectic_gram_schmidt,
)

CANONICAL_TOL = 1e-8
VERIFY_TOL = 1e-7


@dataclass(frozen=True)
class SymplecticSpectrum:
    """Symplectic eigenvalues in ascending order; may be negative or zero."""

    values: np.ndarray

    def __post_init__(self):
        v = np.sort(np.asarray(self.values, dtype=float))
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.values, dtype=dtype)


@dataclass(frozen=True)
class WilliamsonDecomposition:
    """Symplectic ``m`` and ascending ``d`` with ``m^T A m = diag(d) ⊕ diag(d)``."""

    m: np.ndarray
    d: np.ndarray

    @property
    def n(self):
        return len(self.d)

    def diagonal(self):
        """``diag(d) ⊕ diag(d)``."""
        return np.diag(np.concatenate([self.d, self.d]))

    def residual(self, a):
        """``|M^T A M - D ⊕ D|_F``."""
        return float(np.linalg.norm(self.m.T @ np.asarray(a, dtype=float) @ self.m - self.diagonal()))

    def symplectic_residual(self):
        """``|M^T J M - J|_F``."""
        return float(np.linalg.norm(gram(self.m) - standard_form(self.n)))

    @property
    def cond(self):
        """2-norm condition number of ``m``; reported, never bounded."""
        return float(np.linalg.cond(self.m))

    @property
    def spectrum(self):
        return SymplecticSpectrum(self.d)


@dataclass(frozen=True)
class SkewCanonicalForm:
    """Orthogonal ``u`` with ``u^T K u = 0_z ⊕ [[0, b1], [-b1, 0]] ⊕ ...``.

    The zero block comes first; block ``i`` occupies columns
    ``zero_dim + 2i`` and ``zero_dim + 2i + 1``.
    """

    u: np.ndarray
    betas: np.ndarray
    zero_dim: int

    @property
    def block_index(self):
        return [self.zero_dim + 2 * i for i in range(len(self.betas))]

    def canonical(self):
        return _block_matrix(self.zero_dim, self.betas)


@dataclass(frozen=True)
class SimultaneousSkewForm:
    """One orthogonal ``u`` bringing two skew matrices to block form.

    Each 2x2 block slot belongs to exactly one input: ``owner[i]`` is ``-1``
    for the first (``kneg``) and ``+1`` for the second (``kpos``).
    """

    u: np.ndarray
    betas: np.ndarray
    owner: np.ndarray
    zero_dim: int

    @property
    def neg_betas(self):
        return self.betas[self.owner < 0]

    @property
    def pos_betas(self):
        return self.betas[self.owner > 0]

    def canonical(self, side):
        """Block form of the ``side`` input (``-1`` or ``+1``)."""
        return _block_matrix(self.zero_dim, np.where(self.owner == side, self.betas, 0.0))

    def slots(self, side):
        """``(first_column, beta)`` for every block owned by ``side``."""
        return [(self.zero_dim + 2 * i, b) for i, b in enumerate(self.betas) if self.owner[i] == side]


def _block_matrix(zero_dim, betas):
    dim = zero_dim + 2 * len(betas)
    t = np.zeros((dim, dim))
    for i, b in enumerate(betas):
        p = zero_dim + 2 * i
        t[p, p + 1] = b
        t[p + 1, p] = -b
    return t


def _orthonormalize(b):
    """Closest matrix with orthonormal columns (symmetric orthonormalization)."""
    if b.shape[1] == 0:
        return b
    w, v = np.linalg.eigh(b.T @ b)
    return b @ (v / np.sqrt(w)) @ v.T


def _complete(b, dim):
    """``[Z | b]`` with ``Z`` an orthonormal basis of ``ran(b)^⊥``."""
    if b.shape[1] == 0:
        return np.eye(dim)
    q, _ = np.linalg.qr(b, mode="complete")
    return np.hstack([q[:, b.shape[1]:], b])


def _skew_blocks(k, rank_tol):
    """Block column pairs and ``β`` values of a skew matrix.

    Uses the Hermitian matrix ``iK``: an eigenvector ``x + iy`` for ``β > 0``
    gives ``K x = β y`` and ``K y = -β x``, with ``x ⟂ y`` and
    ``|x| = |y|`` because ``x - iy`` is the eigenvector for ``-β``.
    """
    w, z = np.linalg.eigh(1j * k)
    thr = zero_threshold(w, rank_tol)
    idx = np.nonzero(w > thr)[0]
    betas = w[idx]
    cols = []
    for i in idx:
        # phase fix: largest entry positive imaginary, so canonical input maps to itself
        zi = z[:, i]
        top = zi[np.argmax(np.abs(zi))]
        zi = zi * (1j * np.conj(top) / abs(top))
        cols += [np.sqrt(2) * zi.imag, np.sqrt(2) * zi.real]
    b = np.column_stack(cols) if cols else np.zeros((k.shape[0], 0))
    return _orthonormalize(b), betas


def _as_skew(k):
    k = np.asarray(k, dtype=float)
    if k.ndim != 2 or k.shape[0] != k.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {k.shape}")
    asym = np.linalg.norm(k + k.T)
    if asym > 1e-10 * max(1.0, np.linalg.norm(k)):
        raise NotSkewSymmetricError(f"matrix is not skew-symmetric (|K + K^T|_F = {asym:.3e})", asym)
    return (k - k.T) / 2


def _check_canonical(u, k, t, what):
    res = np.linalg.norm(u.T @ k @ u - t)
    bound = CANONICAL_TOL * max(1.0, np.linalg.norm(k))
    if res > bound:
        raise NumericalError(f"{what}: canonical form residual {res:.3e} exceeds {bound:.3e}", res, bound)


def skew_canonical(k, rank_tol=RANK_TOL):
    """Real canonical form of a skew-symmetric matrix."""
    k = _as_skew(k)
    b, betas = _skew_blocks(k, rank_tol)
    u = _complete(b, k.shape[0])
    form = SkewCanonicalForm(u, betas, k.shape[0] - b.shape[1])
    _check_canonical(u, k, form.canonical(), "skew_canonical")
    return form


def simultaneous_skew_canonical(kneg, kpos, rank_tol=RANK_TOL, tol=CANONICAL_TOL):
    """Common canonical form of two skew matrices with ``kneg @ kpos = 0``.

    Both inputs must commute and multiply to zero; their ranges are then
    orthogonal, so each is canonicalized on its own and the block columns
    are stacked into one orthogonal ``u``.

    Raises
    ------
    NumericalError
        If the product or commutator residual exceeds ``tol * scale**2``.
    """
    kneg, kpos = _as_skew(kneg), _as_skew(kpos)
    scale = max(1.0, np.linalg.norm(kneg), np.linalg.norm(kpos))
    prod = np.linalg.norm(kneg @ kpos)
    comm = np.linalg.norm(kneg @ kpos - kpos @ kneg)
    bound = tol * scale**2
    if max(prod, comm) > bound:
        raise NumericalError(
            f"inputs do not commute with zero product (residual {max(prod, comm):.3e})",
            max(prod, comm), bound,
        )
    bn, beta_n = _skew_blocks(kneg, rank_tol)
    bp, beta_p = _skew_blocks(kpos, rank_tol)
    b = _orthonormalize(np.hstack([bn, bp]))
    u = _complete(b, kneg.shape[0])
    owner = np.concatenate([-np.ones(len(beta_n), int), np.ones(len(beta_p), int)])
    form = SimultaneousSkewForm(u, np.concatenate([beta_n, beta_p]), owner, kneg.shape[0] - b.shape[1])
    _check_canonical(u, kneg, form.canonical(-1), "simultaneous_skew_canonical (first input)")
    _check_canonical(u, kpos, form.canonical(1), "simultaneous_skew_canonical (second input)")
    return form


def _assemble(pieces, n):
    """Concatenate ``(u_cols, v_cols, d)`` pieces and sort by ``d``."""
    us = np.hstack([p[0] for p in pieces]) if pieces else np.zeros((2 * n, 0))
    vs = np.hstack([p[1] for p in pieces]) if pieces else np.zeros((2 * n, 0))
    ds = np.concatenate([p[2] for p in pieces]) if pieces else np.zeros(0)
    if len(ds) != n:
        raise NumericalError(f"construction produced {len(ds)} symplectic pairs, expected {n}")
    order = np.argsort(ds, kind="stable")
    return WilliamsonDecomposition(np.hstack([us[:, order], vs[:, order]]), ds[order])


def _verify(dec, a, tol=VERIFY_TOL):
    res = dec.residual(a)
    bound = tol * max(1.0, np.linalg.norm(a))
    if res > bound:
        raise NumericalError(f"decomposition residual {res:.3e} exceeds {bound:.3e}", res, bound)
    sres = dec.symplectic_residual()
    sbound = tol * max(1.0, np.linalg.norm(dec.m, 2) ** 2)
    if sres > sbound:
        raise NumericalError(f"M is not symplectic (residual {sres:.3e})", sres, sbound)
    return dec


def _root_pieces(root, form, side, rank_tol):
    """Columns ``u_i = J R y_i / sqrt(β)``, ``v_i = -J R x_i / sqrt(β)`` per block."""
    slots = form.slots(side)
    if not slots:
        return None
    thr = rank_tol * max(1.0, np.max(form.betas))
    us, vs, ds = [], [], []
    for col, beta in slots:
        if beta <= thr:
            raise NumericalError(f"block value {beta:.3e} below rank tolerance", beta, thr)
        x, y = form.u[:, col], form.u[:, col + 1]
        us.append(apply_j(root @ y) / np.sqrt(beta))
        vs.append(-apply_j(root @ x) / np.sqrt(beta))
        ds.append(side * beta)
    return np.column_stack(us), np.column_stack(vs), np.array(ds)


def _from_roots(root_neg, root_pos, zero_basis, rank_tol, symp_tol):
    n = root_pos.shape[0] // 2
    kneg = root_neg @ apply_j(root_neg)
    kpos = root_pos @ apply_j(root_pos)
    form = simultaneous_skew_canonical(kneg, kpos, rank_tol)
    pieces = []
    if zero_basis.shape[1]:
        m0 = symplectic_gram_schmidt(Subspace(zero_basis), symp_tol=symp_tol)
        pieces.append((m0.u, m0.v, np.zeros(m0.k)))
    for side in (-1, 1):
        p = _root_pieces(root_neg if side < 0 else root_pos, form, side, rank_tol)
        if p is not None:
            pieces.append(p)
    return _assemble(pieces, n)


def williamson_pd(a, rank_tol=RANK_TOL, symp_tol=SYMP_TOL):
    """Williamson decomposition of a positive definite matrix.

    Raises
    ------
    NotPositiveDefiniteError
        Carries the smallest eigenvalue.
    """
    a = sym_matrix(a)
    w = np.linalg.eigvalsh(a)
    thr = zero_threshold(w, rank_tol)
    if w[0] <= thr:
        raise NotPositiveDefiniteError(f"matrix is not positive definite (eigenvalue {w[0]:.6g})", float(w[0]))
    root = psd_sqrt(a, rank_tol)
    dec = _from_roots(np.zeros_like(a), root, np.zeros((a.shape[0], 0)), rank_tol, symp_tol)
    return _verify(dec, a)


def _require_eigsps(a, rank_tol, symp_tol, check_tol):
    report = check_eigsps_membership(a, rank_tol, symp_tol, check_tol)
    if not report.verdict:
        raise MembershipError(report.describe(), report)
    return report


def williamson_eigsps(a, rank_tol=RANK_TOL, symp_tol=SYMP_TOL, check_tol=CHECK_TOL):
    """Explicit decomposition for EigSpSm.

    With ``K∓ = A∓^{1/2} J A∓^{1/2}`` brought to block form by one orthogonal
    matrix, every block ``[[0, β], [-β, 0]]`` on columns ``(x, y)`` gives the
    symplectic pair ``(J R y, -J R x) / sqrt(β)`` with value ``∓β``; the
    kernel contributes a symplectic basis with value 0.

    Raises
    ------
    MembershipError
        If ``a`` is not in EigSpSm; the attached report names the violation.
    """
    a = sym_matrix(a)
    _require_eigsps(a, rank_tol, symp_tol, check_tol)
    w, v = eigh(a)
    _, zero, _ = sign_groups(w, rank_tol)
    root_neg, root_pos = split_roots(a, rank_tol)
    dec = _from_roots(root_neg, root_pos, v[:, zero], rank_tol, symp_tol)
    return _verify(dec, a)


def symplectic_spectrum_eigsps(a, rank_tol=RANK_TOL, symp_tol=SYMP_TOL, check_tol=CHECK_TOL):
    """Symplectic eigenvalues of an EigSpSm matrix without building ``M``.

    Negated block values of ``A_-^{1/2} J A_-^{1/2}``, ``ξ(A)/2`` zeros, and
    block values of ``A_+^{1/2} J A_+^{1/2}``.
    """
    a = sym_matrix(a)
    report = _require_eigsps(a, rank_tol, symp_tol, check_tol)
    root_neg, root_pos = split_roots(a, rank_tol)
    beta = skew_canonical(root_neg @ apply_j(root_neg), rank_tol).betas
    delta = skew_canonical(root_pos @ apply_j(root_pos), rank_tol).betas
    values = np.concatenate([-beta, np.zeros(report.inertia.xi // 2), delta])
    n = a.shape[0] // 2
    if len(values) != n:
        raise NumericalError(f"found {len(values)} symplectic eigenvalues, expected {n}")
    return SymplecticSpectrum(values)


def williamson_via_subspaces(a, wneg, wzero, wpos, rank_tol=RANK_TOL, symp_tol=SYMP_TOL, check_tol=CHECK_TOL):
    """Decomposition from a certificate ``(W-, W0, W+)``.

    Symplectic bases ``M∓`` of ``W∓`` reduce ``∓A`` to positive definite
    ``2k x 2k`` matrices ``∓M∓^T A M∓``; their Williamson decompositions
    ``Q∓`` give the pieces ``M∓ Q∓``, and a symplectic basis of ``W0``
    supplies the zeros.
    """
    a = sym_matrix(a)
    report = verify_certificate(a, wneg, wzero, wpos, rank_tol, symp_tol, check_tol)
    if not report.verdict:
        raise MembershipError(report.describe(), report)
    dim = a.shape[0]
    wneg, wzero, wpos = (as_subspace(w, dim) for w in (wneg, wzero, wpos))
    pieces = []
    for sign, w in ((-1.0, wneg), (0.0, wzero), (1.0, wpos)):
        if w.dim == 0:
            continue
        frame = symplectic_gram_schmidt(w, symp_tol=symp_tol)
        if sign == 0.0:
            pieces.append((frame.u, frame.v, np.zeros(frame.k)))
            continue
        inner = sign * (frame.cols.T @ a @ frame.cols)
        q = williamson_pd((inner + inner.T) / 2, rank_tol, symp_tol)
        mq = frame.cols @ q.m
        pieces.append((mq[:, : frame.k], mq[:, frame.k:], sign * q.d))
    return _verify(_assemble(pieces, dim // 2), a)


def eigen_ija_check(a, d):
    """Distance between ``{d, -d}`` and the eigenvalues of ``iJA``.

    The eigenvalues of ``iJA`` are ``-Im λ`` for the eigenvalues ``λ`` of the
    real matrix ``JA``; both sets are sorted and compared entrywise.
    """
    a = np.asarray(a, dtype=float)
    d = np.asarray(d, dtype=float)
    ev = np.linalg.eigvals(apply_j(a))
    got = np.sort(-ev.imag)
    want = np.sort(np.concatenate([d, -d]))
    if len(got) != len(want):
        raise ValueError(f"expected {len(got) // 2} symplectic eigenvalues, got {len(d)}")
    return float(np.max(np.abs(got - want))) if len(got) else 0.0


def decompose(a, rank_tol=RANK_TOL, symp_tol=SYMP_TOL, check_tol=CHECK_TOL):
    """Positive definite path when it applies, EigSpSm path otherwise."""
    a = sym_matrix(a)
    w = np.linalg.eigvalsh(a)
    if w[0] > zero_threshold(w, rank_tol):
        return williamson_pd(a, rank_tol, symp_tol)
    return williamson_eigsps(a, rank_tol, symp_tol, check_tol)


__all__ = [
    "SimultaneousSkewForm",
    "SkewCanonicalForm",
    "SymplecticSpectrum",
    "WilliamsonDecomposition",
    "decompose",
    "eigen_ija_check",
    "simultaneous_skew_canonical",
    "skew_canonical",
    "symplectic_spectrum_eigsps",
    "williamson_eigsps",
    "williamson_pd",
    "williamson_via_subspaces",
]
