import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from williamson.errors import NotPositiveSemidefiniteError, NotSymmetricError
from williamson.linalg import (
    eigh,
    inertia,
    norm,
    psd_sqrt,
    rank,
    spectral_split,
    split_roots,
    sym_matrix,
)

from conftest import random_psd, random_sym


def test_eigh_small_cases():
    w, v = eigh(np.eye(2))
    np.testing.assert_array_equal(w, [1, 1])
    np.testing.assert_allclose(np.abs(v), np.eye(2))
    np.testing.assert_allclose(eigh(np.diag([3.0, -1.0])).eigenvalues, [-1, 3])
    np.testing.assert_allclose(eigh([[0.0, 1.0], [1.0, 0.0]]).eigenvalues, [-1, 1], atol=1e-15)


def test_eigh_random_residuals(rng):
    for _ in range(200):
        dim = int(rng.integers(2, 13))
        a = random_sym(rng, dim)
        w, v = eigh(a)
        assert np.all(np.diff(w) >= 0)
        assert np.linalg.norm(a @ v - v * w) <= 1e-10 * max(1, np.linalg.norm(a))
        assert np.linalg.norm(v.T @ v - np.eye(dim)) <= 1e-10


def test_inertia_examples():
    assert inertia(np.eye(4)) == (0, 0, 4)
    assert inertia(np.zeros((4, 4))) == (0, 4, 0)
    assert inertia(np.diag([-5.0, 7, -5, 7])) == (2, 0, 2)
    with pytest.raises(ValueError):
        inertia(np.eye(2), rank_tol=0)


def test_inertia_threshold_is_relative():
    assert inertia(np.diag([1e6, 1e-4])) == (0, 1, 1)
    assert inertia(np.diag([1.0, 1e-8])) == (0, 0, 2)


def test_psd_sqrt_examples():
    np.testing.assert_array_equal(psd_sqrt(np.eye(4)), np.eye(4))
    np.testing.assert_allclose(psd_sqrt(np.diag([4.0, 9.0])), np.diag([2.0, 3.0]))
    b = np.array([[2.0, 1.0], [1.0, 2.0]])
    w, v = np.linalg.eigh(b)
    np.testing.assert_allclose(np.sqrt(w), [1, np.sqrt(3)])
    np.testing.assert_allclose(psd_sqrt(b), v @ np.diag(np.sqrt(w)) @ v.T, atol=1e-15)


def test_psd_sqrt_random_ranks(rng):
    for dim in range(1, 9):
        for r in range(dim + 1):
            b = random_psd(rng, dim, r)
            root = psd_sqrt(b)
            assert np.linalg.norm(root @ root - b) <= 1e-9 * max(1, np.linalg.norm(b))
            assert np.linalg.eigvalsh(root).min() >= -1e-12
            assert rank(root) == rank(b) == r


def test_psd_sqrt_clips_roundoff_and_rejects_negative():
    root = psd_sqrt(np.diag([1.0, -1e-12]))
    np.testing.assert_array_equal(root, np.diag([1.0, 0.0]))
    with pytest.raises(NotPositiveSemidefiniteError) as exc:
        psd_sqrt(np.diag([1.0, -1e-3]))
    assert exc.value.eigenvalue == pytest.approx(-1e-3)


def test_spectral_split_examples():
    s = spectral_split(np.diag([-5.0, 7, -5, 7]))
    np.testing.assert_allclose(s.neg, np.diag([5.0, 0, 5, 0]))
    np.testing.assert_allclose(s.pos, np.diag([0.0, 7, 0, 7]))
    z = spectral_split(np.zeros((4, 4)))
    assert not z.neg.any() and not z.pos.any() and not z.abs.any()
    c = random_psd(np.random.default_rng(3), 4, 4)
    p = spectral_split(c)
    np.testing.assert_allclose(p.pos, c, atol=1e-13)
    np.testing.assert_allclose(p.neg, 0, atol=1e-13)


def test_spectral_split_invariants(rng):
    for _ in range(100):
        dim = int(rng.integers(2, 9))
        c = random_sym(rng, dim)
        s = spectral_split(c)
        scale = np.linalg.norm(c)
        np.testing.assert_allclose(s.pos - s.neg, c, atol=1e-12 * scale)
        assert np.linalg.norm(s.pos @ s.neg) <= 1e-9 * scale**2
        assert rank(c) == rank(s.pos) + rank(s.neg)
        np.testing.assert_allclose(s.abs, psd_sqrt(c @ c), atol=1e-10 * scale)
        rn, rp = split_roots(c)
        np.testing.assert_allclose(rn @ rn, s.neg, atol=1e-12 * scale)
        np.testing.assert_allclose(rp @ rp, s.pos, atol=1e-12 * scale)


def test_norm_examples():
    x = np.diag([3.0, -4.0])
    assert norm(x, "operator") == pytest.approx(4)
    assert norm(x, "frobenius") == pytest.approx(5)
    assert norm(x, "trace") == pytest.approx(7)
    assert norm(x, "op") == norm(x, "operator")
    with pytest.raises(ValueError):
        norm(x, "max")


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 7), st.integers(0, 2**32 - 1))
def test_norms_unitarily_invariant(dim, seed):
    rng = np.random.default_rng(seed)
    x = rng.standard_normal((dim, dim))
    q1, _ = np.linalg.qr(rng.standard_normal((dim, dim)))
    q2, _ = np.linalg.qr(rng.standard_normal((dim, dim)))
    for kind in ("operator", "frobenius", "trace"):
        assert norm(q1 @ x @ q2, kind) == pytest.approx(norm(x, kind), rel=1e-9)


def test_norm_sandwich(rng):
    for _ in range(100):
        dim = int(rng.integers(1, 7))
        x, y, z = (rng.standard_normal((dim, dim)) for _ in range(3))
        for kind in ("operator", "frobenius", "trace"):
            lhs = norm(x @ y @ z, kind)
            rhs = norm(x) * norm(y, kind) * norm(z)
            assert lhs <= rhs + 1e-9 * max(1, rhs)


def test_sym_matrix_validation():
    with pytest.raises(NotSymmetricError):
        sym_matrix([[0.0, 1.0], [0.0, 0.0]])
    with pytest.raises(ValueError):
        sym_matrix(np.eye(3))
    assert sym_matrix(np.eye(3), even=False).shape == (3, 3)
