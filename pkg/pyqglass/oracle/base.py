"""
Brute-force state-vector evolution for Hamiltonians diagonal in the sigma^z basis.

Basis convention: site 0 is the most significant bit of the basis index, bit 0 maps to
spin +1 and bit 1 to spin -1.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence, Union

import numpy as np

from pyqglass.common import ContractViolationError, LatticeSizeError
from pyqglass.lattice import FiniteLattice, ORACLE_MAX_SITES
from pyqglass.models.hopfield import PatternSet
from pyqglass.models.lro import CollectiveModel
from pyqglass.qmat import DensityMatrix

logger = logging.getLogger(__name__)

MAX_KEEP = 4
EA_PREFACTOR = -0.25


@dataclass
class DiagonalHamiltonian:
    n_spins: int
    energy: np.ndarray
    convention: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        self.energy = np.asarray(self.energy, dtype=float)
        if self.n_spins > ORACLE_MAX_SITES:
            raise LatticeSizeError(f"{self.n_spins} spins exceed the oracle cap {ORACLE_MAX_SITES}", n_spins=self.n_spins)
        if self.energy.shape != (2 ** self.n_spins,):
            raise ContractViolationError("energy table must have 2**n_spins entries", shape=self.energy.shape)


def spin_table(n_spins: int) -> np.ndarray:
    """``(2**n, n)`` array of +-1 spins, row k is basis state k."""
    if n_spins > ORACLE_MAX_SITES:
        raise LatticeSizeError(f"{n_spins} spins exceed the oracle cap {ORACLE_MAX_SITES}", n_spins=n_spins)
    index = np.arange(2 ** n_spins, dtype=np.int64)[:, None]
    shifts = np.arange(n_spins - 1, -1, -1, dtype=np.int64)[None, :]
    bits = (index >> shifts) & 1
    return (1 - 2 * bits).astype(np.int8)


def build_hamiltonian(
    source: Union[FiniteLattice, CollectiveModel, PatternSet],
    include_self_terms: bool = True,
) -> DiagonalHamiltonian:
    """Energy table by direct summation.

    - FiniteLattice: ``-1/4 sum_<ij> J_ij s_i s_j``
    - CollectiveModel: ``S^2 / N``
    - PatternSet: ``(1/N) sum_mu w_mu (sum_i xi_mu^i s_i)^2`` with ``w_mu = 1/lambda_mu^2``

    ``include_self_terms=False`` drops the ``i = j`` terms of the two long-range models,
    which shifts every energy by the same constant.
    """
    if isinstance(source, FiniteLattice):
        spins = spin_table(source.n_sites).astype(float)
        energy = np.zeros(spins.shape[0])
        for i, j, coupling in source.edges:
            energy += EA_PREFACTOR * coupling * spins[:, i] * spins[:, j]
        convention = {"model": "edwards_anderson", "prefactor": EA_PREFACTOR, "sum": "nearest-neighbour bonds"}
        return DiagonalHamiltonian(source.n_sites, energy, convention)

    if isinstance(source, CollectiveModel):
        n = source.n_spins
        total = spin_table(n).astype(float).sum(axis=1)
        energy = total ** 2 / n
        if not include_self_terms:
            energy = energy - 1.0
        convention = {"model": "ordered_long_range", "prefactor": "1/N", "self_terms": include_self_terms}
        return DiagonalHamiltonian(n, energy, convention)

    if isinstance(source, PatternSet):
        n = source.n_spins
        spins = spin_table(n).astype(float)
        overlaps = spins @ source.xi.T.astype(float)
        energy = (overlaps ** 2) @ source.weights / n
        if not include_self_terms:
            energy = energy - float(np.sum(source.weights))
        convention = {
            "model": "hopfield",
            "prefactor": "1/N",
            "self_terms": include_self_terms,
            "weights": "1/lambda_mu^2",
        }
        return DiagonalHamiltonian(n, energy, convention)

    raise TypeError(f"Unsupported Hamiltonian source: {type(source).__name__}")


def evolve_plus_state(h: DiagonalHamiltonian, t: float) -> np.ndarray:
    """``exp(-i H t)`` applied to the all-``|+>`` product state."""
    return np.exp(-1j * t * h.energy) / np.sqrt(2.0 ** h.n_spins)


def reduced_state(psi: np.ndarray, keep: Sequence[int]) -> DensityMatrix:
    """Exact partial trace of ``|psi><psi|`` onto the ordered sites ``keep``."""
    psi = np.asarray(psi, dtype=np.complex128).ravel()
    n = int(round(np.log2(psi.shape[0])))
    if 2 ** n != psi.shape[0]:
        raise ContractViolationError("state vector length is not a power of two", length=psi.shape[0])
    keep = [int(k) for k in keep]
    if len(keep) > MAX_KEEP:
        raise LatticeSizeError(f"can keep at most {MAX_KEEP} sites, got {len(keep)}", keep=keep)
    if len(set(keep)) != len(keep) or any(k < 0 or k >= n for k in keep):
        raise ContractViolationError("keep must be distinct site indices", keep=keep, n_spins=n)
    traced = [s for s in range(n) if s not in keep]
    tensor = psi.reshape((2,) * n).transpose(keep + traced).reshape(2 ** len(keep), -1)
    return DensityMatrix(tensor @ tensor.conj().T)


def oracle_state(h: DiagonalHamiltonian, t: float, keep: Sequence[int], psi: Optional[np.ndarray] = None) -> DensityMatrix:
    return reduced_state(evolve_plus_state(h, t) if psi is None else psi, keep)
