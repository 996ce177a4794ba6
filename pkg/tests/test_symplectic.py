import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from williamson.errors import NotSymplecticError
from williamson.generate import random_frame, random_orthosymplectic, random_symplectic
from williamson.symplectic import (
    Subspace,
    SymplecticFrame,
    apply_j,
    apply_jt,
    concat,
    form,
    gram,
    is_symplectic_subspace,
    largest_principal_angle,
    projection_onto,
    right_apply_j,
    s_direct_sum,
    same_subspace,
    standard_form,
    symplectic_complement,
    symplectic_gram_schmidt,
    symplectic_orthogonal_projection,
    symplectic_projection,
    transpose_projection_range,
)

E = np.eye(4)
e1, e2, e3, e4 = E


def span(*cols):
    return Subspace(np.column_stack(cols))


def test_j_primitives_match_dense_form(rng):
    for n in range(1, 5):
        j = standard_form(n)
        x = rng.standard_normal((2 * n, 3))
        np.testing.assert_array_equal(apply_j(x), j @ x)
        np.testing.assert_array_equal(apply_jt(x), j.T @ x)
        np.testing.assert_array_equal(right_apply_j(x.T), x.T @ j)
        np.testing.assert_array_equal(j @ j, -np.eye(2 * n))


def test_form_examples(rng):
    assert form(e1, e3) == 1
    assert form(e1, e1) == 0
    u, v = rng.standard_normal((2, 6))
    assert form(u, v) == pytest.approx(-form(v, u))
    assert form(u, v) == pytest.approx(u @ standard_form(3) @ v)
    with pytest.raises(ValueError):
        form(np.ones(4), np.ones(6))


def test_complement_examples():
    assert symplectic_complement(Subspace.full(4)).dim == 0
    c = symplectic_complement(span(e1))
    assert same_subspace(c, span(e1, e2, e4))


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 5), st.data())
def test_complement_dimension_and_involution(n, data):
    d = data.draw(st.integers(0, 2 * n))
    seed = data.draw(st.integers(0, 2**32 - 1))
    w = Subspace(np.random.default_rng(seed).standard_normal((2 * n, d)))
    c = symplectic_complement(w)
    assert w.dim + c.dim == 2 * n
    assert np.linalg.norm(gram(w.basis, c.basis)) <= 1e-10 * max(1, np.linalg.norm(w.basis))
    assert largest_principal_angle(symplectic_complement(c), w) <= 1e-7


def test_is_symplectic_subspace_examples():
    assert is_symplectic_subspace(span(e1, e3))
    assert not is_symplectic_subspace(span(e1, e2))
    assert not is_symplectic_subspace(span(e1))
    assert is_symplectic_subspace(Subspace.zero(4))
    assert is_symplectic_subspace(span(1e-3 * e1, 1e3 * e3))


def test_gram_schmidt_examples():
    f = symplectic_gram_schmidt(span(e1, e3))
    np.testing.assert_allclose(f.cols, np.column_stack([e1, e3]))
    f = symplectic_gram_schmidt(Subspace(np.eye(6)))
    assert f.residual <= 1e-15
    assert same_subspace(f.subspace(), Subspace.full(6))
    f = symplectic_gram_schmidt(span(2 * e1, e3))
    assert f.residual <= 1e-15
    assert same_subspace(f.subspace(), span(e1, e3))
    assert form(f.u[:, 0], f.v[:, 0]) == pytest.approx(1)


def test_gram_schmidt_rejects_non_symplectic():
    with pytest.raises(NotSymplecticError):
        symplectic_gram_schmidt(span(e1, e2))
    with pytest.raises(NotSymplecticError):
        symplectic_gram_schmidt(span(e1, e2, e3))


def test_gram_schmidt_random_subspaces(rng):
    for seed in range(200):
        n = int(rng.integers(1, 7))
        k = int(rng.integers(1, n + 1))
        frame = random_frame(n, k, seed)
        mix = rng.standard_normal((2 * k, 2 * k))
        w = Subspace(frame.cols @ mix)
        out = symplectic_gram_schmidt(w)
        assert out.residual <= 1e-8
        assert largest_principal_angle(out.subspace(), w) <= 1e-7


def test_frame_validation():
    with pytest.raises(NotSymplecticError):
        SymplecticFrame(np.column_stack([e1, e2]))
    with pytest.raises(ValueError):
        SymplecticFrame(np.ones((3, 2)))
    assert SymplecticFrame.identity(2).residual == 0
    assert SymplecticFrame.empty(2).k == 0


def test_concat_examples():
    np.testing.assert_array_equal(concat(np.column_stack([e1, e3]), np.column_stack([e2, e4])), np.eye(4))
    m = np.column_stack([e1, e3])
    np.testing.assert_array_equal(concat(m, np.zeros((4, 0))), m)
    with pytest.raises(ValueError):
        concat(m, np.zeros((6, 2)))


def test_concat_of_orthogonal_frames_is_symplectic(rng):
    for seed in range(50):
        n = int(rng.integers(2, 7))
        s = random_symplectic(n, seed)
        k = int(rng.integers(1, n))
        a = np.hstack([s[:, :k], s[:, n:n + k]])
        b = np.hstack([s[:, k:n], s[:, n + k:]])
        c = SymplecticFrame(concat(SymplecticFrame(a), SymplecticFrame(b)), symp_tol=1e-8)
        assert c.residual <= 1e-8


def test_s_direct_sum_examples():
    j2 = standard_form(1)
    np.testing.assert_array_equal(s_direct_sum(j2), j2)
    np.testing.assert_array_equal(s_direct_sum(j2, j2), standard_form(2))
    d1, d2 = np.diag([1.0, 2.0]), np.diag([3.0])
    got = s_direct_sum([np.kron(np.eye(2), d1), np.kron(np.eye(2), d2)])
    np.testing.assert_array_equal(got, np.diag([1.0, 2, 3, 1, 2, 3]))
    with pytest.raises(ValueError):
        s_direct_sum(np.eye(3))


def test_symplectic_projection_examples():
    np.testing.assert_array_equal(symplectic_projection(np.eye(4)).matrix, np.eye(4))
    m = np.column_stack([e1, e3])
    np.testing.assert_array_equal(symplectic_projection(m).matrix, np.diag([1.0, 0, 1, 0]))
    np.testing.assert_array_equal(symplectic_orthogonal_projection(m).matrix, np.diag([1.0, 0, 1, 0]))
    np.testing.assert_array_equal(symplectic_orthogonal_projection(np.eye(4)).matrix, np.eye(4))


def test_projection_invariant_under_orthosymplectic_mixing(rng):
    for seed in range(30):
        n = int(rng.integers(1, 6))
        k = int(rng.integers(1, n + 1))
        m = random_frame(n, k, seed).cols
        u = random_orthosymplectic(k, seed + 1000).cols
        np.testing.assert_allclose(symplectic_projection(m @ u).matrix, symplectic_projection(m).matrix,
                                   atol=1e-10 * np.linalg.norm(m) ** 2)


def test_orthogonal_projection_independent_of_basis(rng):
    for seed in range(30):
        n = int(rng.integers(1, 6))
        k = int(rng.integers(1, n + 1))
        m = random_frame(n, k, seed).cols
        s = random_symplectic(k, seed + 1000, squeeze=0.7)
        p1 = symplectic_orthogonal_projection(m).matrix
        p2 = symplectic_orthogonal_projection(m @ s).matrix
        np.testing.assert_allclose(p2, p1, atol=1e-8 * (1 + np.linalg.norm(p1)))


def test_projection_laws_random_frames(rng):
    for seed in range(100):
        n = int(rng.integers(1, 7))
        k = int(rng.integers(0, n + 1))
        m = random_frame(n, k, seed).cols
        proj = symplectic_orthogonal_projection(m)
        pi = proj.matrix
        scale = 1 + np.linalg.norm(pi)
        assert np.linalg.norm(pi @ pi - pi) <= 1e-8 * scale
        assert np.linalg.norm(pi @ m - m) <= 1e-8 * max(1, np.linalg.norm(m)) * scale
        z = proj.kernel.basis
        assert np.linalg.norm(pi @ z) <= 1e-8 * max(1, np.linalg.norm(z)) * scale
        transpose_projection_range(proj)


def test_transpose_range_example():
    rt = transpose_projection_range(np.diag([1.0, 0, 1, 0]))
    assert same_subspace(rt, span(e3, e1))
    assert transpose_projection_range(np.eye(4)).dim == 4


def test_projection_characterized_by_range_and_kernel(rng):
    # any idempotent with the right range and kernel equals the constructed one
    for seed in range(30):
        n = int(rng.integers(1, 6))
        k = int(rng.integers(1, n + 1))
        m = random_frame(n, k, seed).cols
        proj = symplectic_orthogonal_projection(m)
        basis = np.hstack([m, proj.kernel.basis])
        other = basis @ np.diag([1.0] * m.shape[1] + [0.0] * proj.kernel.dim) @ np.linalg.inv(basis)
        np.testing.assert_allclose(other, proj.matrix, atol=1e-7 * (1 + np.linalg.norm(proj.matrix)))


def test_projection_onto_zero_subspace():
    p = projection_onto(Subspace.zero(4))
    assert not p.matrix.any()
    assert p.kernel.dim == 4
