from __future__ import annotations


import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sdhall.finfield import (
    FpMatrix,
    batch_invertible,
    enumerate_matrices,
    enumerate_subspaces,
    gaussian_binomial,
    gl_order,
    inverse_array,
    kernel_array,
    rank,
    rank_array,
    rref,
)


@st.composite
def matrices(draw, p=None):
    p = p if p is not None else draw(st.sampled_from([2, 3, 5]))
    r = draw(st.integers(1, 4))
    c = draw(st.integers(1, 4))
    a = np.array(draw(st.lists(st.integers(0, p - 1), min_size=r * c, max_size=r * c)), dtype=np.int64)
    return a.reshape(r, c), p


@given(matrices())
def test_kernel_is_annihilated_and_has_right_dimension(mp):
    a, p = mp
    k = kernel_array(a, p)
    assert k.shape[0] == a.shape[1] - rank_array(a, p)
    if k.shape[0]:
        assert not ((a @ k.T) % p).any()


@given(matrices())
def test_rref_preserves_rank(mp):
    a, p = mp
    r, rk = rref(FpMatrix.from_rows(a.tolist(), p))
    assert rk == rank(FpMatrix.from_rows(a.tolist(), p))
    assert rank_array(np.array(r.tolist(), dtype=np.int64).reshape(a.shape), p) == rk


def test_rank_example():
    m = FpMatrix.from_rows([[1, 1], [1, 1]], 2)
    assert rank(m) == 1
    assert rank(FpMatrix.identity(3, 3)) == 3


@pytest.mark.parametrize("n,p", [(1, 2), (2, 2), (2, 3), (3, 2)])
def test_gl_order_matches_brute_force(n, p):
    mats = np.array(list(enumerate_matrices(n, n, p)), dtype=np.int64).reshape(-1, n, n)
    assert int(batch_invertible(mats, p).sum()) == gl_order(n, p)


@pytest.mark.parametrize("n,k,p", [(n, k, p) for p in (2, 3) for n in range(5) for k in range(n + 1)])
def test_subspace_count_is_gaussian_binomial(n, k, p):
    assert len(enumerate_subspaces(n, k, p)) == gaussian_binomial(n, k, p)


def test_gaussian_binomial_values():
    assert gaussian_binomial(2, 1, 2) == 3
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(3, 1, 3) == 13
    assert gaussian_binomial(2, 3, 2) == 0


@settings(max_examples=40)
@given(st.sampled_from([2, 3]), st.integers(1, 3), st.data())
def test_inverse(p, n, data):
    entries = data.draw(st.lists(st.integers(0, p - 1), min_size=n * n, max_size=n * n))
    a = np.array(entries, dtype=np.int64).reshape(n, n)
    if rank_array(a, p) < n:
        return
    assert ((a @ inverse_array(a, p)) % p == np.eye(n, dtype=np.int64)).all()
