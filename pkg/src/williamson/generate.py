"""Seeded random instances with known symplectic spectra.

Every generator draws from ``numpy.random.Generator(PCG64(seed))``, so the
same arguments give bit-identical output on a given platform.  Transforming
matrices are never returned as ground truth since they are not unique; only
the spectrum and the eigenspace triple are.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .classify import EigenspaceTriple
from .decompose import SymplecticSpectrum
from .linalg import InertiaSignature
from .symplectic import Subspace, SymplecticFrame


def rng_for(seed):
    """The package's random source for ``seed``."""
    return np.random.Generator(np.random.PCG64(seed))


def _unitary(n, rng):
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def embed_unitary(w):
    """``X + iY`` -> ``[[X, Y], [-Y, X]]``, an orthosymplectic matrix."""
    x, y = w.real, w.imag
    return np.block([[x, y], [-y, x]])


def random_orthosymplectic(n, seed):
    """Haar-distributed orthosymplectic ``2n x 2n`` frame."""
    return SymplecticFrame(embed_unitary(_unitary(n, rng_for(seed))))


def random_symplectic(n, seed, squeeze=1.0):
    """Random symplectic ``2n x 2n`` matrix, generally not orthogonal.

    Product of two orthosymplectic factors around a diagonal squeeze
    ``diag(e^r, e^-r)`` with ``|r_i| <= squeeze``, followed by a symmetric
    shear ``[[I, S], [0, I]]``.
    """
    rng = rng_for(seed)
    u1 = embed_unitary(_unitary(n, rng))
    u2 = embed_unitary(_unitary(n, rng))
    r = rng.uniform(-squeeze, squeeze, n)
    s = rng.standard_normal((n, n)) * squeeze / max(1, n)
    shear = np.block([[np.eye(n), s + s.T], [np.zeros((n, n)), np.eye(n)]])
    m = u1 @ (np.concatenate([np.exp(r), np.exp(-r)])[:, None] * u2)
    return shear @ m


def random_frame(n, k, seed, squeeze=1.0):
    """Random ``2n x 2k`` symplectic frame, columns ``u_1..u_k, v_1..v_k``."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    m = random_symplectic(n, seed, squeeze)
    return SymplecticFrame(np.hstack([m[:, :k], m[:, n:n + k]]))


def random_signature(n, rng):
    """Even inertia signature summing to ``2n``, drawn uniformly."""
    a, b = np.sort(rng.integers(0, n + 1, 2))
    return InertiaSignature(int(2 * a), int(2 * (b - a)), int(2 * (n - b)))


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters for :func:`gen_eigsps`.

    ``spectrum`` prescribes the ``n`` symplectic eigenvalues; otherwise their
    magnitudes are drawn log-uniformly from ``[1, conditioning]`` with signs
    set by ``signature``.
    """

    n: int
    signature: InertiaSignature
    seed: int = 0
    spectrum: tuple = None
    conditioning: float = 10.0

    def __post_init__(self):
        sig = InertiaSignature(*(int(s) for s in self.signature))
        object.__setattr__(self, "signature", sig)
        if self.n < 1:
            raise ValueError("n must be positive")
        if any(s < 0 or s % 2 for s in sig) or sum(sig) != 2 * self.n:
            raise ValueError(f"signature {tuple(sig)} must be even and sum to {2 * self.n}")
        if self.conditioning < 1:
            raise ValueError("conditioning must be at least 1")
        if self.spectrum is not None:
            d = np.asarray(self.spectrum, dtype=float)
            if d.shape != (self.n,) or not np.all(np.isfinite(d)):
                raise ValueError(f"spectrum must have {self.n} finite entries")
            counts = (int(np.sum(d < 0)), int(np.sum(d == 0)), int(np.sum(d > 0)))
            if tuple(2 * c for c in counts) != tuple(sig):
                raise ValueError(f"spectrum signs {counts} do not match signature {tuple(sig)}")
            object.__setattr__(self, "spectrum", tuple(float(x) for x in d))


class GeneratedInstance(NamedTuple):
    a: np.ndarray
    truth: SymplecticSpectrum
    certificate: EigenspaceTriple


def _draw_spectrum(spec, rng):
    nu, xi, pi = (s // 2 for s in spec.signature)
    mags = np.exp(rng.uniform(0.0, np.log(spec.conditioning), nu + pi))
    return np.concatenate([-mags[:nu], np.zeros(xi), mags[nu:]])


def assemble_eigsps(d, u):
    """``U (diag(d) ⊕ diag(d)) U^T`` for orthosymplectic ``U``."""
    dd = np.concatenate([d, d])
    a = (u * dd) @ u.T
    return (a + a.T) / 2


def gen_eigsps(spec):
    """Random member of EigSpSm with known spectrum and eigenspaces."""
    rng = rng_for(spec.seed)
    d = np.asarray(spec.spectrum) if spec.spectrum is not None else _draw_spectrum(spec, rng)
    n = spec.n
    u = embed_unitary(_unitary(n, rng))
    dd = np.concatenate([d, d])
    triple = EigenspaceTriple(
        *(Subspace(u[:, mask]) for mask in (dd < 0, dd == 0, dd > 0))
    )
    return GeneratedInstance(assemble_eigsps(d, u), SymplecticSpectrum(d), triple)


def gen_pd(n, seed, conditioning=10.0):
    """Positive definite ``2n x 2n`` matrix with condition number at most
    ``conditioning``: ``I + (c - 1) S^T S / |S^T S|``."""
    if conditioning < 1:
        raise ValueError("conditioning must be at least 1")
    s = rng_for(seed).standard_normal((2 * n, 2 * n))
    g = s.T @ s
    a = np.eye(2 * n) + (conditioning - 1.0) * g / np.linalg.norm(g, 2)
    return (a + a.T) / 2


def gen_sppsd(n, rank2k, seed, conditioning=10.0):
    """Positive semidefinite matrix of rank ``rank2k`` with symplectic kernel."""
    if rank2k < 0 or rank2k % 2 or rank2k > 2 * n:
        raise ValueError(f"rank must be even and in [0, {2 * n}], got {rank2k}")
    spec = GeneratorSpec(n, InertiaSignature(0, 2 * n - rank2k, rank2k), seed, conditioning=conditioning)
    return gen_eigsps(spec).a


def perturb(a, eps, seed):
    """``A + eps E`` with ``E`` random symmetric and ``|E|_F = 1``."""
    a = np.asarray(a, dtype=float)
    g = rng_for(seed).standard_normal(a.shape)
    e = g + g.T
    e /= np.linalg.norm(e)
    out = a + eps * e
    return (out + out.T) / 2


__all__ = [
    "GeneratedInstance",
    "GeneratorSpec",
    "assemble_eigsps",
    "embed_unitary",
    "gen_eigsps",
    "gen_pd",
    "gen_sppsd",
    "perturb",
    "random_frame",
    "random_orthosymplectic",
    "random_signature",
    "random_symplectic",
    "rng_for",
]
