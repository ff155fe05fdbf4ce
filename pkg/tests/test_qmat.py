import numpy as np
import pytest

from pyqglass.common import ContractViolationError
from pyqglass.qmat import (
    PAIR_CUT,
    TRIPLE_CUT,
    Cut,
    DensityMatrix,
    apply_local_unitary,
    batched_log_negativity,
    fidelity_pure,
    hermitian_eigenvalues,
    is_ppt,
    jacobi_eigenvalues,
    log_negativity,
    min_pt_eigenvalue,
    negativity,
    partial_transpose,
    trace_norm,
)

BELL = np.array([1.0, 0.0, 0.0, 1.0]) / np.sqrt(2.0)
PLUS = np.array([1.0, 1.0]) / np.sqrt(2.0)


def random_unitary(rng, n=2):
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_density(rng, dim=4, rank=None):
    rank = rank or dim
    g = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    m = g @ g.conj().T
    return DensityMatrix(m / np.trace(m))


def werner(p):
    bell = np.outer(BELL, BELL)
    return DensityMatrix(p * bell + (1.0 - p) * np.eye(4) / 4.0)


def test_hermitian_eigenvalues_examples():
    assert np.allclose(hermitian_eigenvalues(np.eye(4) / 4), [0.25] * 4, atol=1e-14)
    assert np.allclose(hermitian_eigenvalues(np.diag([0.0, 0.0, 0.0, 1.0])), [0, 0, 0, 1], atol=1e-14)
    pt = partial_transpose(DensityMatrix.from_pure(BELL), PAIR_CUT)
    assert np.allclose(hermitian_eigenvalues(pt), [-0.5, 0.5, 0.5, 0.5], atol=1e-12)


def test_hermitian_eigenvalues_rejects_non_hermitian():
    with pytest.raises(ContractViolationError):
        hermitian_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_jacobi_matches_lapack_and_reconstructs_trace():
    rng = np.random.default_rng(11)
    for dim in (2, 4, 8):
        z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        h = z + z.conj().T
        jac = jacobi_eigenvalues(h)
        assert np.allclose(jac, hermitian_eigenvalues(h), atol=1e-10)
        assert abs(jac.sum() - np.trace(h).real) <= 1e-10


def test_jacobi_converges_cleanly_on_larger_matrices(caplog):
    rng = np.random.default_rng(23)
    with np.errstate(invalid="raise", over="raise", divide="raise"), caplog.at_level("WARNING", logger="pyqglass.qmat.base"):
        for _ in range(20):
            z = rng.standard_normal((16, 16)) + 1j * rng.standard_normal((16, 16))
            h = z + z.conj().T
            assert np.allclose(jacobi_eigenvalues(h), hermitian_eigenvalues(h), atol=1e-10)
        # a vanishing pivot across a wide diagonal gap, rotated alongside a real coupling
        h = np.diag([1e6, -1e6, 3.0, 0.0]).astype(complex)
        h[0, 1] = h[1, 0] = 1e-160
        h[2, 3] = h[3, 2] = 1.0
        expected = [-1e6, (3.0 - np.sqrt(13.0)) / 2.0, (3.0 + np.sqrt(13.0)) / 2.0, 1e6]
        assert np.allclose(jacobi_eigenvalues(h), expected, rtol=0.0, atol=1e-9)
    assert not caplog.records


def test_eigen_decomposition_residual_is_small():
    rng = np.random.default_rng(5)
    rho = random_density(rng, 8)
    w, v = np.linalg.eigh(rho.entries)
    assert np.allclose(hermitian_eigenvalues(rho), w, atol=1e-12)
    assert np.max(np.abs(v @ np.diag(w) @ v.conj().T - rho.entries)) <= 1e-9


def test_partial_transpose_is_an_exact_involution():
    rng = np.random.default_rng(1)
    for rho, cut in ((random_density(rng, 4), PAIR_CUT), (random_density(rng, 8), TRIPLE_CUT)):
        twice = partial_transpose(partial_transpose(rho, cut), cut)
        assert np.array_equal(twice.entries, rho.entries)
        once = partial_transpose(rho, cut)
        assert abs(once.trace - rho.trace) <= 1e-14
        assert once.hermiticity_error() <= 1e-14


def test_partial_transpose_fixed_point_and_product_state():
    mixed = DensityMatrix.maximally_mixed(4)
    assert np.array_equal(partial_transpose(mixed, PAIR_CUT).entries, mixed.entries)

    rng = np.random.default_rng(2)
    a, b = random_density(rng, 2), random_density(rng, 2)
    product = DensityMatrix(np.kron(a.entries, b.entries))
    expected = np.kron(a.entries.T, b.entries)
    assert np.allclose(partial_transpose(product, PAIR_CUT).entries, expected, atol=1e-15)
    assert is_ppt(product)


def test_cut_validation():
    with pytest.raises(ContractViolationError):
        Cut.of([2], 2)
    with pytest.raises(ContractViolationError):
        Cut.of([0, 1], 2)
    with pytest.raises(ContractViolationError):
        partial_transpose(DensityMatrix.maximally_mixed(8), PAIR_CUT)


def test_log_negativity_examples():
    assert log_negativity(DensityMatrix.from_pure(BELL)) == pytest.approx(1.0, abs=1e-12)
    assert log_negativity(DensityMatrix.maximally_mixed(4)) == 0.0
    assert log_negativity(DensityMatrix.from_pure(np.kron(PLUS, PLUS))) == 0.0
    assert negativity(DensityMatrix.from_pure(BELL)) == pytest.approx(0.5, abs=1e-12)


def test_werner_state_threshold():
    # PT eigenvalues (1+p)/4 (x3) and (1-3p)/4
    assert min_pt_eigenvalue(werner(0.5)) == pytest.approx(-0.125, abs=1e-12)
    assert log_negativity(werner(0.5)) == pytest.approx(np.log2(1.25), abs=1e-12)
    assert is_ppt(werner(1.0 / 3.0 - 1e-6))
    assert not is_ppt(werner(0.34))
    assert not is_ppt(DensityMatrix.from_pure(BELL))


def test_triple_cut_on_ghz_state():
    ghz = np.zeros(8)
    ghz[0] = ghz[7] = 1.0 / np.sqrt(2.0)
    assert log_negativity(DensityMatrix.from_pure(ghz), TRIPLE_CUT) == pytest.approx(1.0, abs=1e-12)


def test_log_negativity_is_local_unitary_invariant():
    rng = np.random.default_rng(3)
    for _ in range(20):
        rho = random_density(rng, 4, rank=2)
        rotated = apply_local_unitary(rho, [random_unitary(rng), random_unitary(rng)])
        assert log_negativity(rotated) == pytest.approx(log_negativity(rho), abs=1e-9)


def test_log_negativity_is_conjugation_invariant():
    rng = np.random.default_rng(4)
    for _ in range(10):
        rho = random_density(rng, 4, rank=1)
        assert log_negativity(rho.conj()) == pytest.approx(log_negativity(rho), abs=1e-10)


def test_batched_log_negativity_matches_scalar_path():
    rng = np.random.default_rng(6)
    states = [random_density(rng, 4, rank=1 + i % 4) for i in range(12)]
    stack = np.stack([s.entries for s in states])
    expected = [log_negativity(s) for s in states]
    assert np.allclose(batched_log_negativity(stack), expected, atol=1e-12)


def test_trace_norm_of_density_matrix_is_one():
    rng = np.random.default_rng(7)
    assert trace_norm(random_density(rng, 4)) == pytest.approx(1.0, abs=1e-12)


def test_fidelity_pure_examples():
    psi = np.array([0.6, 0.8j])
    assert fidelity_pure(DensityMatrix.from_pure(psi), psi) == pytest.approx(1.0, abs=1e-12)
    assert fidelity_pure(DensityMatrix.maximally_mixed(2), psi) == pytest.approx(0.5, abs=1e-12)
    assert fidelity_pure(DensityMatrix.from_pure([1.0, 0.0]), PLUS) == pytest.approx(0.5, abs=1e-12)
    with pytest.raises(ContractViolationError):
        fidelity_pure(DensityMatrix.maximally_mixed(4), PLUS)
    with pytest.raises(ContractViolationError):
        fidelity_pure(DensityMatrix.maximally_mixed(2), [1.0, 1.0])


def test_density_matrix_check():
    assert DensityMatrix.maximally_mixed(4).check().dim == 4
    with pytest.raises(ContractViolationError):
        DensityMatrix(np.eye(4) / 2).check()
    with pytest.raises(ContractViolationError):
        DensityMatrix(np.diag([1.5, -0.5])).check()
    with pytest.raises(ContractViolationError):
        DensityMatrix(np.zeros((2, 3)))
