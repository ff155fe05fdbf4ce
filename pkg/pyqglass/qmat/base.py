"""
Dense complex-matrix kernel: density matrices, partial transpose, trace norm and the
entanglement measures built on them (logarithmic negativity, PPT test, pure-state fidelity).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence, Tuple

import numpy as np

from pyqglass.common import ContractViolationError

logger = logging.getLogger(__name__)

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
SOLVER_HERMITIAN_TOL = 1e-10
LN_CLAMP = 1e-10
JACOBI_OFF_TOL = 1e-13
_JACOBI_MAX_SWEEPS = 64


@dataclass(frozen=True)
class Cut:
    """Bipartition of the subsystems of a density matrix into party A and its complement."""

    party_a: frozenset
    party_b: frozenset

    def __post_init__(self):
        if not self.party_a or not self.party_b:
            raise ContractViolationError("cut parties must be non-empty", party_a=sorted(self.party_a), party_b=sorted(self.party_b))
        if self.party_a & self.party_b:
            raise ContractViolationError("cut parties must be disjoint", party_a=sorted(self.party_a), party_b=sorted(self.party_b))
        members = self.party_a | self.party_b
        if members != frozenset(range(len(members))):
            raise ContractViolationError("cut must partition subsystems 0..n-1", members=sorted(members))

    @classmethod
    def of(cls, party_a: Iterable[int], n_subsystems: int) -> "Cut":
        a = frozenset(int(i) for i in party_a)
        out_of_range = [i for i in a if i < 0 or i >= n_subsystems]
        if out_of_range:
            raise ContractViolationError(
                f"cut indices {sorted(out_of_range)} out of range for {n_subsystems} subsystems",
                n_subsystems=n_subsystems,
            )
        return cls(a, frozenset(range(n_subsystems)) - a)

    @property
    def n_subsystems(self) -> int:
        return len(self.party_a) + len(self.party_b)


PAIR_CUT = Cut.of([0], 2)
TRIPLE_CUT = Cut.of([0], 3)


@dataclass
class DensityMatrix:
    """Square complex matrix with its tensor-factor structure.

    Construction does not validate; call :meth:`check` where the density-matrix
    invariants (Hermitian, unit trace, PSD) must hold. Partially transposed matrices reuse
    this type without being positive.
    """

    entries: np.ndarray
    subsystem_dims: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        self.entries = np.asarray(self.entries, dtype=np.complex128)
        if self.entries.ndim != 2 or self.entries.shape[0] != self.entries.shape[1]:
            raise ContractViolationError("density matrix must be square", shape=self.entries.shape)
        if not self.subsystem_dims:
            n_qubits = int(round(np.log2(self.entries.shape[0])))
            self.subsystem_dims = (2,) * n_qubits
        self.subsystem_dims = tuple(int(d) for d in self.subsystem_dims)
        if int(np.prod(self.subsystem_dims)) != self.dim:
            raise ContractViolationError(
                "product of subsystem_dims must equal dim",
                dim=self.dim,
                subsystem_dims=self.subsystem_dims,
            )

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def trace(self) -> complex:
        return complex(np.trace(self.entries))

    @classmethod
    def from_pure(cls, psi: Sequence[complex], subsystem_dims: Tuple[int, ...] = ()) -> "DensityMatrix":
        vec = np.asarray(psi, dtype=np.complex128).ravel()
        return cls(np.outer(vec, vec.conj()), subsystem_dims)

    @classmethod
    def maximally_mixed(cls, dim: int) -> "DensityMatrix":
        return cls(np.eye(dim, dtype=np.complex128) / dim)

    def hermiticity_error(self) -> float:
        return float(np.max(np.abs(self.entries - self.entries.conj().T)))

    def check(self, hermitian_tol: float = HERMITIAN_TOL, trace_tol: float = TRACE_TOL, psd_tol: float = PSD_TOL) -> "DensityMatrix":
        """Raise ContractViolationError unless Hermitian, unit-trace and PSD within tolerance."""
        herm = self.hermiticity_error()
        if herm > hermitian_tol:
            raise ContractViolationError("matrix is not Hermitian", deviation=herm)
        tr = self.trace
        if abs(tr - 1.0) > trace_tol:
            raise ContractViolationError("trace is not one", trace=tr)
        lowest = hermitian_eigenvalues(self)[0]
        if lowest < -psd_tol:
            raise ContractViolationError("matrix is not positive semidefinite", min_eigenvalue=lowest)
        return self

    def conj(self) -> "DensityMatrix":
        return DensityMatrix(self.entries.conj(), self.subsystem_dims)


def _as_array(m: DensityMatrix | np.ndarray) -> np.ndarray:
    return m.entries if isinstance(m, DensityMatrix) else np.asarray(m, dtype=np.complex128)


def _require_hermitian(a: np.ndarray, tol: float) -> None:
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ContractViolationError("matrix must be square", shape=a.shape)
    deviation = float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0
    if deviation > tol:
        raise ContractViolationError("matrix is not Hermitian", deviation=deviation)


def hermitian_eigenvalues(m: DensityMatrix | np.ndarray, tol: float = SOLVER_HERMITIAN_TOL) -> np.ndarray:
    """Ascending eigenvalues of the Hermitian part of ``m`` (LAPACK ``heevd``)."""
    a = _as_array(m)
    _require_hermitian(a, tol)
    return np.linalg.eigvalsh(0.5 * (a + a.conj().T))


def jacobi_eigenvalues(m: DensityMatrix | np.ndarray, tol: float = JACOBI_OFF_TOL) -> np.ndarray:
    """Cyclic complex Jacobi diagonalisation.

    Each rotation first removes the phase of the pivot element, then applies the real
    symmetric Jacobi rotation to the pivot block. Sweeps run until the off-diagonal
    Frobenius norm is at most ``tol``.
    """
    a = _as_array(m).copy()
    _require_hermitian(a, SOLVER_HERMITIAN_TOL)
    a = 0.5 * (a + a.conj().T)
    n = a.shape[0]
    for sweep in range(_JACOBI_MAX_SWEEPS):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                beta = a[p, q]
                magnitude = abs(beta)
                if magnitude < 1e-300:
                    continue
                phase = beta / magnitude
                tau = (a[q, q].real - a[p, p].real) / (2.0 * magnitude)
                t = (1.0 if tau >= 0.0 else -1.0) / (abs(tau) + np.hypot(1.0, tau))
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                g = np.eye(n, dtype=np.complex128)
                g[p, p] = c
                g[p, q] = s
                g[q, p] = -s * phase.conjugate()
                g[q, q] = c * phase.conjugate()
                a = g.conj().T @ a @ g
    else:
        logger.warning("Jacobi iteration hit %d sweeps without reaching off-norm %.1e", _JACOBI_MAX_SWEEPS, tol)
    return np.sort(np.diag(a).real)


def partial_transpose(rho: DensityMatrix, cut: Cut) -> DensityMatrix:
    """Transpose the tensor indices of party A; exact index permutation (an involution)."""
    dims = rho.subsystem_dims
    n = len(dims)
    if cut.n_subsystems != n:
        raise ContractViolationError(
            f"cut covers {cut.n_subsystems} subsystems, matrix has {n}",
            subsystem_dims=dims,
        )
    tensor = rho.entries.reshape(dims + dims)
    axes = list(range(2 * n))
    for k in cut.party_a:
        axes[k], axes[n + k] = axes[n + k], axes[k]
    transposed = tensor.transpose(axes).reshape(rho.dim, rho.dim)
    return DensityMatrix(np.ascontiguousarray(transposed), dims)


def trace_norm(m: DensityMatrix | np.ndarray) -> float:
    return float(np.sum(np.abs(hermitian_eigenvalues(m))))


def log_negativity(rho: DensityMatrix, cut: Cut = PAIR_CUT) -> float:
    value = float(np.log2(trace_norm(partial_transpose(rho, cut))))
    if value < 0.0:
        if value < -LN_CLAMP:
            logger.debug("log negativity %.3e below clamp window; trace norm < 1", value)
        return 0.0
    return value


def negativity(rho: DensityMatrix, cut: Cut = PAIR_CUT) -> float:
    return max(0.0, (trace_norm(partial_transpose(rho, cut)) - 1.0) / 2.0)


def min_pt_eigenvalue(rho: DensityMatrix, cut: Cut = PAIR_CUT) -> float:
    return float(hermitian_eigenvalues(partial_transpose(rho, cut))[0])


def is_ppt(rho: DensityMatrix, cut: Cut = PAIR_CUT, tol: float = PSD_TOL) -> bool:
    return min_pt_eigenvalue(rho, cut) >= -tol


def fidelity_pure(rho: DensityMatrix, psi: Sequence[complex]) -> float:
    vec = np.asarray(psi, dtype=np.complex128).ravel()
    if vec.shape[0] != rho.dim:
        raise ContractViolationError("state vector and density matrix dimensions differ", vector=vec.shape[0], dim=rho.dim)
    norm = float(np.vdot(vec, vec).real)
    if abs(norm - 1.0) > 1e-12:
        raise ContractViolationError("state vector is not normalised", norm=norm)
    value = np.vdot(vec, rho.entries @ vec)
    return float(min(1.0, max(0.0, value.real)))


def apply_local_unitary(rho: DensityMatrix, unitaries: Sequence[np.ndarray]) -> DensityMatrix:
    u = reduce(np.kron, [np.asarray(x, dtype=np.complex128) for x in unitaries])
    return DensityMatrix(u @ rho.entries @ u.conj().T, rho.subsystem_dims)


def batched_partial_transpose(stack: np.ndarray, n_qubits: int, party_a: Iterable[int] = (0,)) -> np.ndarray:
    """Partial transpose of every matrix in a ``(..., 2**n, 2**n)`` stack of qubit operators."""
    lead = stack.shape[:-2]
    dim = 2 ** n_qubits
    tensor = stack.reshape(lead + (2,) * (2 * n_qubits))
    offset = len(lead)
    axes = list(range(tensor.ndim))
    for k in party_a:
        axes[offset + k], axes[offset + n_qubits + k] = axes[offset + n_qubits + k], axes[offset + k]
    return tensor.transpose(axes).reshape(lead + (dim, dim))


def batched_log_negativity(stack: np.ndarray, n_qubits: int = 2, party_a: Iterable[int] = (0,)) -> np.ndarray:
    """Logarithmic negativity of each matrix in a stack, same clamp rule as :func:`log_negativity`."""
    pt = batched_partial_transpose(np.asarray(stack, dtype=np.complex128), n_qubits, party_a)
    pt = 0.5 * (pt + np.conj(np.swapaxes(pt, -1, -2)))
    values = np.log2(np.sum(np.abs(np.linalg.eigvalsh(pt)), axis=-1))
    return np.maximum(values, 0.0)
