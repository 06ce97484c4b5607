import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from modbounds import generators as gen
from modbounds.errors import MatrixTooLargeError, NoConvergenceError
from modbounds.linalg import canonical_sign, eig_sym, tridiagonal_ql, tridiagonalize, zero_threshold
from modbounds.spectral import normalized_adjacency


@pytest.mark.parametrize("method", ["lapack", "ql"])
class TestExamples:
    def test_swap_matrix(self, method):
        s = eig_sym(np.array([[0.0, 1.0], [1.0, 0.0]]), method=method)
        assert np.allclose(s.values, [1, -1])

    def test_c4(self, method):
        s = eig_sym(normalized_adjacency(gen.cycle(4)), method=method)
        assert np.allclose(s.values, [1, 0, 0, -1], atol=1e-12)

    def test_c6(self, method):
        s = eig_sym(normalized_adjacency(gen.cycle(6)), method=method)
        assert np.allclose(s.values, [1, 0.5, 0.5, -0.5, -0.5, -1], atol=1e-12)

    def test_one_by_one(self, method):
        s = eig_sym(np.array([[3.0]]), method=method)
        assert s.values.tolist() == [3.0] and s.vectors.tolist() == [[1.0]]

    def test_diagonal(self, method):
        s = eig_sym(np.diag([1.0, 3.0, 2.0]), method=method)
        assert s.values.tolist() == [3.0, 2.0, 1.0]


def test_sorted_and_readonly():
    s = eig_sym(np.array([[2.0, 1.0], [1.0, 2.0]]))
    assert s.values[0] >= s.values[1]
    assert not s.values.flags.writeable and not s.vectors.flags.writeable
    lam, v = s.pair(0)
    assert lam == pytest.approx(3.0) and len(s) == 2


def test_canonical_sign():
    assert canonical_sign(np.array([0.1, -0.9, 0.2])).tolist() == [-0.1, 0.9, -0.2]
    # a tie goes to the lowest index
    assert canonical_sign(np.array([-0.5, 0.5])).tolist() == [0.5, -0.5]
    assert canonical_sign(np.zeros(2)).tolist() == [0.0, 0.0]


def test_zero_threshold():
    assert zero_threshold(np.array([[0.0, -4.0], [-4.0, 0.0]])) == pytest.approx(4e-8)
    assert zero_threshold(np.zeros((2, 2))) == 1e-8


def test_tridiagonalize_reconstructs():
    rng = np.random.default_rng(0)
    X = rng.normal(size=(7, 7))
    A = X + X.T
    d, e, Q = tridiagonalize(A)
    T = np.diag(d) + np.diag(e, 1) + np.diag(e, -1)
    assert np.allclose(Q @ T @ Q.T, A, atol=1e-12)
    assert np.allclose(Q.T @ Q, np.eye(7), atol=1e-12)


def test_ql_iteration_cap():
    with pytest.raises(NoConvergenceError):
        tridiagonal_ql([1.0, 2.0, 3.0], [1.0, 1.0], max_iter=0)


def test_errors():
    with pytest.raises(MatrixTooLargeError):
        eig_sym(np.eye(5), max_order=4)
    with pytest.raises(ValueError):
        eig_sym(np.ones((2, 3)))
    with pytest.raises(ValueError):
        eig_sym(np.eye(2), method="jacobi")
    with pytest.raises(ValueError):
        eig_sym(np.array([[np.nan, 0.0], [0.0, 1.0]]))


@pytest.mark.parametrize("scale", [1e-310, 1e-200, 1e200])
def test_extreme_scales(scale):
    A = scale * np.array([[0.0, 1.0, 0.0], [1.0, 0.0, 1.0], [0.0, 1.0, 0.0]])
    for method in ("lapack", "ql"):
        s = eig_sym(A, method=method)
        assert np.allclose(s.values / scale, [np.sqrt(2), 0, -np.sqrt(2)], atol=1e-12)


def test_deterministic_signs(corpus):
    for g in list(corpus.values())[:20]:
        A = normalized_adjacency(g)
        assert np.array_equal(eig_sym(A).vectors, eig_sym(A.copy()).vectors)


symmetric = st.integers(1, 12).flatmap(
    lambda n: arrays(np.float64, (n, n), elements=st.floats(-10, 10, allow_nan=False, width=64))
).map(lambda X: (X + X.T) / 2)


@given(symmetric)
@settings(max_examples=80, deadline=None)
def test_ql_matches_lapack(A):
    a = eig_sym(A)
    b = eig_sym(A, method="ql")
    scale = max(1.0, np.abs(A).max())
    assert np.allclose(a.values, b.values, atol=1e-10 * scale)
    for s in (a, b):
        assert s.orthogonality_defect <= 1e-8
        assert s.max_residual <= 1e-10 * len(A) * scale
        assert np.all(np.diff(s.values) <= 0)
