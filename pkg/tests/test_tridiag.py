"""Eigensolver tests against independent oracles.

The dense symmetric solver (numpy.linalg.eigh on the full matrix) and
closed-form spectra serve as references; they never touch the
tridiagonal code path under test.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pairbox import (
    InvalidMatrix,
    InvalidParams,
    Spectrum,
    TridiagMatrix,
    eigen_all,
    eigen_lowest,
    lowest_eigenvalues,
)

finite_floats = st.floats(
    min_value=-100.0, max_value=100.0, allow_nan=False, allow_infinity=False
)


def dense(m: TridiagMatrix) -> np.ndarray:
    full = np.diag(m.diag)
    if m.dim > 1:
        full += np.diag(m.offdiag, 1) + np.diag(m.offdiag, -1)
    return full


def test_one_by_one():
    spec = eigen_all(TridiagMatrix(diag=[3.5], offdiag=[]))
    assert spec.eigenvalues.tolist() == [3.5]
    assert spec.eigenvectors.shape == (1, 1)
    assert abs(abs(spec.eigenvectors[0, 0]) - 1.0) < 1e-15


def test_two_by_two_quadratic_oracle():
    # diag [a, b], offdiag [c]: eigenvalues from the quadratic formula
    a, b, c = 1.0, 0.0, 1.0
    half_trace = (a + b) / 2.0
    radius = math.hypot((a - b) / 2.0, c)
    expected = sorted([half_trace - radius, half_trace + radius])
    spec = eigen_all(TridiagMatrix(diag=[a, b], offdiag=[c]))
    assert np.allclose(spec.eigenvalues, expected, rtol=0, atol=1e-14)
    # golden-ratio values for this particular matrix
    assert np.allclose(
        spec.eigenvalues, [(1 - math.sqrt(5)) / 2, (1 + math.sqrt(5)) / 2], atol=1e-14
    )


def test_open_chain_closed_form():
    m_dim, t = 10, 1.0
    chain = TridiagMatrix(diag=np.zeros(m_dim), offdiag=np.full(m_dim - 1, t))
    j = np.arange(m_dim, 0, -1)
    expected = 2.0 * t * np.cos(j * np.pi / (m_dim + 1))
    got = eigen_all(chain, want_vectors=False).eigenvalues
    assert np.max(np.abs(got - expected)) <= 1e-12


def test_eigen_lowest_matches_eigen_all():
    rng = np.random.default_rng(7)
    m = TridiagMatrix(diag=rng.normal(size=17), offdiag=rng.normal(size=16))
    full = eigen_all(m)
    low = eigen_lowest(m, 17)
    assert np.max(np.abs(full.eigenvalues - low.eigenvalues)) <= 1e-12


def test_eigen_lowest_three_site_chain():
    # char poly of the 3-chain: lambda^3 - 2 lambda = 0
    spec = eigen_lowest(TridiagMatrix(diag=[0.0, 0.0, 0.0], offdiag=[1.0, 1.0]), 1)
    assert abs(spec.eigenvalues[0] + math.sqrt(2.0)) <= 1e-14


def test_eigen_lowest_decoupled_diagonal():
    spec = eigen_lowest(TridiagMatrix(diag=[5.0, 1.0, 9.0], offdiag=[0.0, 0.0]), 2)
    assert spec.eigenvalues.tolist() == [1.0, 5.0]


@pytest.mark.parametrize("seed", range(12))
def test_random_against_dense_oracle(seed):
    rng = np.random.default_rng(seed)
    m_dim = int(rng.integers(1, 51))
    scale = 10.0 ** rng.uniform(-2, 2)
    m = TridiagMatrix(
        diag=scale * rng.normal(size=m_dim),
        offdiag=scale * rng.normal(size=m_dim - 1),
    )
    reference = np.linalg.eigvalsh(dense(m))
    spec = eigen_all(m)
    tol = 1e-12 * max(1.0, m.inf_norm())
    assert np.max(np.abs(spec.eigenvalues - reference)) <= tol
    _check_vector_contracts(m, spec)


def _check_vector_contracts(m: TridiagMatrix, spec: Spectrum):
    vecs = spec.eigenvectors
    norms = np.linalg.norm(vecs, axis=1)
    assert np.max(np.abs(norms - 1.0)) <= 1e-12
    gram = vecs @ vecs.T
    off = gram - np.diag(np.diag(gram))
    assert np.max(np.abs(off)) <= 1e-10
    residuals = np.linalg.norm(
        m.matvec(vecs) - spec.eigenvalues[:, None] * vecs, axis=1
    )
    bound = 1e-10 * max(1.0, m.inf_norm())
    assert np.max(residuals) <= bound
    assert spec.residual_bound <= bound
    assert np.max(residuals) <= spec.residual_bound + 1e-300


def test_exactly_degenerate_diagonal_matrix():
    # equal diagonal entries with zero coupling: any basis works, ours must
    # still be orthonormal and deterministic
    m = TridiagMatrix(diag=[2.0, 1.0, 1.0, 4.0], offdiag=[0.0, 0.0, 0.0])
    first = eigen_all(m)
    second = eigen_all(m)
    assert np.array_equal(first.eigenvectors, second.eigenvectors)
    _check_vector_contracts(m, first)
    assert np.allclose(first.eigenvalues, [1.0, 1.0, 2.0, 4.0])


@given(
    diag=st.lists(finite_floats, min_size=1, max_size=14),
    offdiag_seed=st.lists(finite_floats, min_size=0, max_size=13),
)
@settings(max_examples=60, deadline=None)
def test_offdiag_sign_flip_invariance(diag, offdiag_seed):
    offdiag = offdiag_seed[: max(len(diag) - 1, 0)]
    while len(offdiag) < len(diag) - 1:
        offdiag.append(1.0)
    base = eigen_all(TridiagMatrix(diag=diag, offdiag=offdiag), want_vectors=False)
    flipped = eigen_all(
        TridiagMatrix(diag=diag, offdiag=[-x for x in offdiag]), want_vectors=False
    )
    scale = max(1.0, TridiagMatrix(diag=diag, offdiag=offdiag).inf_norm())
    assert np.max(np.abs(base.eigenvalues - flipped.eigenvalues)) <= 1e-12 * scale


@given(
    diag=st.lists(finite_floats, min_size=1, max_size=14),
    shift=finite_floats,
)
@settings(max_examples=60, deadline=None)
def test_diagonal_shift_equivariance(diag, shift):
    offdiag = [0.5] * (len(diag) - 1)
    base = eigen_all(TridiagMatrix(diag=diag, offdiag=offdiag), want_vectors=False)
    shifted = eigen_all(
        TridiagMatrix(diag=[d + shift for d in diag], offdiag=offdiag),
        want_vectors=False,
    )
    scale = max(1.0, TridiagMatrix(diag=diag, offdiag=offdiag).inf_norm(), abs(shift))
    assert np.max(
        np.abs(shifted.eigenvalues - (base.eigenvalues + shift))
    ) <= 1e-12 * scale


def test_determinism():
    rng = np.random.default_rng(42)
    m = TridiagMatrix(diag=rng.normal(size=30), offdiag=rng.normal(size=29))
    a, b = eigen_all(m), eigen_all(m)
    assert np.array_equal(a.eigenvalues, b.eigenvalues)
    assert np.array_equal(a.eigenvectors, b.eigenvectors)


def test_invalid_matrix_rejected():
    with pytest.raises(InvalidMatrix):
        TridiagMatrix(diag=[1.0, 2.0], offdiag=[1.0, 2.0])
    with pytest.raises(InvalidMatrix):
        TridiagMatrix(diag=[], offdiag=[])
    with pytest.raises(InvalidMatrix):
        TridiagMatrix(diag=[1.0, np.nan], offdiag=[0.0])
    with pytest.raises(InvalidMatrix):
        TridiagMatrix(diag=[1.0, np.inf], offdiag=[0.0])


def test_eigen_lowest_k_validation():
    m = TridiagMatrix(diag=[1.0, 2.0], offdiag=[0.1])
    for bad in (0, 3, -1):
        with pytest.raises(InvalidParams):
            eigen_lowest(m, bad)
    with pytest.raises(InvalidParams):
        lowest_eigenvalues(m, 0)


def test_lowest_eigenvalues_matches_eigen_lowest():
    rng = np.random.default_rng(3)
    m = TridiagMatrix(diag=rng.normal(size=25), offdiag=rng.normal(size=24))
    assert np.max(
        np.abs(lowest_eigenvalues(m, 5) - eigen_lowest(m, 5).eigenvalues)
    ) <= 1e-12
