"""The standard symplectic structure on R^2n.

The form is ``(u, v) -> u^T J v`` with ``J = [[0, I], [-I, 0]]``.  ``J`` is
never built in the algorithms here; :func:`apply_j` and friends permute and
negate rows, which is exact in floating point.  :func:`standard_form` builds
the dense matrix for tests and one-off use.
"""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from scipy.linalg import subspace_angles

from .errors import NotSymplecticError, NumericalError
from .linalg import RANK_TOL, half_dim

SYMP_TOL = 1e-8
ANGLE_TOL = 1e-7


def standard_form(n):
    """Dense ``J_{2n}``."""
    j = np.zeros((2 * n, 2 * n))
    j[:n, n:] = np.eye(n)
    j[n:, :n] = -np.eye(n)
    return j


def apply_j(x):
    """``J @ x`` for a vector or a matrix with ``2n`` rows."""
    x = np.asarray(x, dtype=float)
    n = half_dim(x)
    return np.concatenate([x[n:], -x[:n]])


def apply_jt(x):
    """``J.T @ x``."""
    x = np.asarray(x, dtype=float)
    n = half_dim(x)
    return np.concatenate([-x[n:], x[:n]])


def right_apply_j(x):
    """``x @ J`` for a matrix with ``2n`` columns."""
    return apply_jt(np.asarray(x, dtype=float).T).T


def form(u, v):
    """Symplectic form ``u^T J v``."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != v.shape or u.ndim != 1:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    n = half_dim(u)
    return float(u[:n] @ v[n:] - u[n:] @ v[:n])


def gram(b, c=None):
    """Form matrix ``B^T J C`` between two sets of column vectors."""
    b = np.asarray(b, dtype=float)
    c = b if c is None else np.asarray(c, dtype=float)
    return b.T @ apply_j(c)


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of R^2n given by a basis with independent columns."""

    basis: np.ndarray
    rank_tol: float = field(default=RANK_TOL, repr=False)

    def __post_init__(self):
        b = np.array(self.basis, dtype=float)
        if b.ndim == 1:
            b = b[:, None]
        if b.ndim != 2:
            raise ValueError("basis must be a 2-d array")
        half_dim(b)
        if b.shape[1]:
            s = np.linalg.svd(b, compute_uv=False)
            if b.shape[1] > b.shape[0] or s[-1] <= self.rank_tol * max(1.0, s[0]):
                raise ValueError("basis columns are linearly dependent")
        b.setflags(write=False)
        object.__setattr__(self, "basis", b)

    @classmethod
    def span(cls, vectors, rank_tol=RANK_TOL):
        """Column space of ``vectors``; dependent columns are dropped."""
        v = np.asarray(vectors, dtype=float)
        if v.ndim == 1:
            v = v[:, None]
        if v.shape[1] == 0:
            return cls(np.zeros((v.shape[0], 0)), rank_tol)
        u, s, _ = np.linalg.svd(v, full_matrices=False)
        r = int(np.sum(s > rank_tol * max(1.0, s[0])))
        return cls(u[:, :r], rank_tol)

    @classmethod
    def zero(cls, ambient_dim):
        return cls(np.zeros((ambient_dim, 0)))

    @classmethod
    def full(cls, ambient_dim):
        return cls(np.eye(ambient_dim))

    @property
    def ambient_dim(self):
        return self.basis.shape[0]

    @property
    def dim(self):
        return self.basis.shape[1]

    @cached_property
    def orthonormal(self):
        """Orthonormal basis of the same subspace."""
        if self.dim == 0:
            return self.basis
        q, _ = np.linalg.qr(self.basis)
        return q

    def projector(self):
        """Euclidean orthogonal projector onto the subspace."""
        q = self.orthonormal
        return q @ q.T


def as_subspace(w, ambient_dim):
    """Coerce ``None`` (zero subspace), a basis array, or a Subspace."""
    if w is None:
        return Subspace.zero(ambient_dim)
    if isinstance(w, Subspace):
        return w
    return Subspace(np.asarray(w, dtype=float).reshape(ambient_dim, -1))


def largest_principal_angle(w, z):
    """Largest principal angle between two subspaces of equal dimension.

    Returns ``pi/2`` when the dimensions differ.
    """
    if w.dim != z.dim:
        return np.pi / 2
    if w.dim == 0:
        return 0.0
    return float(np.max(subspace_angles(w.basis, z.basis)))


def same_subspace(w, z, tol=ANGLE_TOL):
    return largest_principal_angle(w, z) <= tol


def symplectic_complement(w):
    """``{u : u^T J x = 0 for all x in W}``; has dimension ``2n - dim W``."""
    if w.dim == 0:
        return Subspace.full(w.ambient_dim)
    jb = apply_j(w.orthonormal)
    q, _ = np.linalg.qr(jb, mode="complete")
    return Subspace(q[:, w.dim:])


def symplectic_defect(w):
    """Smallest singular value of ``Q^T J Q`` for an orthonormal basis ``Q``.

    Zero exactly when ``W`` meets its symplectic complement; equals 1 for
    subspaces that are invariant under ``J``.
    """
    if w.dim == 0:
        return 1.0
    if w.dim % 2:
        return 0.0
    return float(np.linalg.svd(gram(w.orthonormal), compute_uv=False)[-1])


def is_symplectic_subspace(w, tol=SYMP_TOL):
    """True iff ``W ∩ W^{⊥s} = {0}`` at tolerance ``tol``.

    The test is on an orthonormal basis so the verdict does not depend on how
    the basis of ``w`` is scaled.  The zero subspace counts as symplectic.
    """
    if w.dim % 2:
        return False
    if w.dim == 0:
        return True
    g = gram(w.orthonormal)
    s = np.linalg.svd(g, compute_uv=False)
    return bool(s[-1] > tol * s[0])


@dataclass(frozen=True)
class SymplecticFrame:
    """A ``2n x 2k`` matrix ``M`` with ``M^T J_2n M = J_2k``.

    Columns are ordered ``u_1..u_k, v_1..v_k``.
    """

    cols: np.ndarray
    symp_tol: float = field(default=SYMP_TOL, repr=False)

    def __post_init__(self):
        m = np.array(self.cols, dtype=float)
        if m.ndim != 2 or m.shape[0] % 2 or m.shape[1] % 2:
            raise ValueError(f"frame must be 2n x 2k, got shape {m.shape}")
        m.setflags(write=False)
        object.__setattr__(self, "cols", m)
        res = self.residual
        if res > self.symp_tol:
            raise NotSymplecticError(f"frame is not symplectic (|M^T J M - J|_F = {res:.3e})", res)

    @classmethod
    def identity(cls, n):
        return cls(np.eye(2 * n))

    @classmethod
    def empty(cls, n):
        return cls(np.zeros((2 * n, 0)))

    @property
    def n(self):
        return self.cols.shape[0] // 2

    @property
    def k(self):
        return self.cols.shape[1] // 2

    @property
    def u(self):
        return self.cols[:, : self.k]

    @property
    def v(self):
        return self.cols[:, self.k:]

    @property
    def residual(self):
        if self.cols.shape[1] == 0:
            return 0.0
        return float(np.linalg.norm(gram(self.cols) - standard_form(self.cols.shape[1] // 2)))

    def subspace(self):
        return Subspace(self.cols)


def _frame_cols(m):
    return m.cols if isinstance(m, SymplecticFrame) else np.asarray(m, dtype=float)


def concat(*frames):
    """Symplectic concatenation: all ``u`` columns in order, then all ``v``."""
    mats = [_frame_cols(f) for f in frames]
    if not mats:
        raise ValueError("nothing to concatenate")
    rows = {m.shape[0] for m in mats}
    if len(rows) != 1:
        raise ValueError(f"ambient dimension mismatch: {sorted(rows)}")
    us, vs = [], []
    for m in mats:
        if m.shape[1] % 2:
            raise ValueError("frames must have an even number of columns")
        k = m.shape[1] // 2
        us.append(m[:, :k])
        vs.append(m[:, k:])
    return np.hstack(us + vs)


def s_direct_sum(*blocks):
    """Quadrant-wise direct sum of even-sized square matrices."""
    if len(blocks) == 1 and isinstance(blocks[0], (list, tuple)):
        blocks = tuple(blocks[0])
    mats = [np.asarray(b, dtype=float) for b in blocks]
    for b in mats:
        if b.ndim != 2 or b.shape[0] != b.shape[1] or b.shape[0] % 2:
            raise ValueError(f"blocks must be square with even size, got {b.shape}")
    sizes = [b.shape[0] // 2 for b in mats]
    n = sum(sizes)
    out = np.zeros((2 * n, 2 * n))
    off = 0
    for b, k in zip(mats, sizes):
        rows = np.r_[off:off + k, n + off:n + off + k]
        out[np.ix_(rows, rows)] = b
        off += k
    return out


def symplectic_gram_schmidt(w, tol=SYMP_TOL, symp_tol=SYMP_TOL):
    """Symplectic basis of a symplectic subspace.

    Each step pairs the two remaining vectors with the largest normalized
    form value ``|x^T J y| / (|x| |y|)``, rescales them to equal norm with
    ``u^T J v = 1``, and removes their symplectic component from the rest.

    Raises
    ------
    NotSymplecticError
        If the largest normalized pivot is ``<= tol`` (or ``W`` is odd).
    """
    rem = np.array(w.basis, dtype=float)
    if rem.shape[1] % 2:
        raise NotSymplecticError(f"subspace has odd dimension {rem.shape[1]}", 0.0)
    us, vs = [], []
    while rem.shape[1]:
        g = gram(rem)
        norms = np.linalg.norm(rem, axis=0)
        scaled = np.abs(np.triu(g, 1)) / np.outer(norms, norms)
        i, j = np.unravel_index(np.argmax(scaled), scaled.shape)
        if scaled[i, j] <= tol:
            raise NotSymplecticError(
                f"near-zero pivot {scaled[i, j]:.3e} in the symplectic form; subspace is not symplectic",
                float(scaled[i, j]),
            )
        gij = g[i, j]
        s = np.sqrt(norms[j] / (abs(gij) * norms[i]))
        u = rem[:, i] * s
        v = rem[:, j] / (gij * s)
        keep = [c for c in range(rem.shape[1]) if c not in (i, j)]
        x = rem[:, keep]
        ju, jv = apply_j(u), apply_j(v)
        rem = x - np.outer(u, x.T @ jv) + np.outer(v, x.T @ ju)
        us.append(u)
        vs.append(v)
    cols = np.column_stack(us + vs) if us else np.zeros((w.ambient_dim, 0))
    return SymplecticFrame(cols, symp_tol=symp_tol)


@dataclass(frozen=True)
class SymplecticProjection:
    """``P_M = J M M^T J^T``; psd with kernel ``ran(M)^{⊥s}``."""

    matrix: np.ndarray


@dataclass(frozen=True)
class SymplecticOrthogonalProjection:
    """Idempotent ``Π`` that fixes ``range`` and annihilates ``kernel``."""

    matrix: np.ndarray
    range: Subspace
    kernel: Subspace


def symplectic_projection(m):
    jm = apply_j(_frame_cols(m))
    p = jm @ jm.T
    return SymplecticProjection((p + p.T) / 2)


def symplectic_orthogonal_projection(m):
    """``Π = J^T P_M J P_M`` for the frame ``m``."""
    cols = _frame_cols(m)
    p = symplectic_projection(cols).matrix
    pi = apply_jt(p @ apply_j(p))
    rng = Subspace(cols)
    return SymplecticOrthogonalProjection(pi, rng, symplectic_complement(rng))


def projection_onto(w):
    """Symplectic orthogonal projection onto a symplectic subspace."""
    if w.dim == 0:
        return SymplecticOrthogonalProjection(
            np.zeros((w.ambient_dim, w.ambient_dim)), w, Subspace.full(w.ambient_dim)
        )
    return symplectic_orthogonal_projection(symplectic_gram_schmidt(w))


def matrix_range(a, rank_tol=RANK_TOL):
    """Column space of a general matrix at the shared rank tolerance."""
    return Subspace.span(a, rank_tol)


def transpose_projection_range(pi, tol=ANGLE_TOL):
    """Range of ``Π^T``, checked against ``J`` applied to the range of ``Π``.

    Raises
    ------
    NumericalError
        If the two subspaces differ by more than ``tol`` in principal angle.
    """
    if isinstance(pi, SymplecticOrthogonalProjection):
        mat, rng = pi.matrix, pi.range
    else:
        mat = np.asarray(pi, dtype=float)
        rng = matrix_range(mat)
    rt = matrix_range(mat.T)
    j_rng = Subspace(apply_j(rng.basis)) if rng.dim else rng
    angle = largest_principal_angle(rt, j_rng)
    if angle > tol:
        raise NumericalError("ran(Π^T) differs from J ran(Π)", angle, tol)
    return rt
