"""
Measurement-based Hadamard gate driven by a disordered Ising coupling.

Qubit 1 carries the input ``a|0> + b|1>``, qubit 2 starts in ``|+>``. The pair evolves under
``exp(+i theta s1 s2)`` with ``theta = J12 t* / 4``, qubit 1 is measured along
``measurement_axis``, qubit 2 receives the phase ``diag(e^{-i theta0}, e^{+i theta0})``
followed by the Pauli correction of the outcome. With ``theta = theta0 = pi/4``, axis ``-y``
and ``{+1: I, -1: X}`` qubit 2 ends in ``H(a|0> + b|1>)`` for every input.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from functools import partial
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from pyqglass.common import ContractViolationError, DomainError
from pyqglass.lattice import CouplingDistribution
from pyqglass.qmat import DensityMatrix, fidelity_pure
from pyqglass.sampling import sample_moments

logger = logging.getLogger(__name__)

CLASSICAL_FIDELITY = 2.0 / 3.0
HOLD_SPAN = 0.2
HOLD_POINTS = 21


def classical_benchmark() -> float:
    """Best measure-and-prepare fidelity for an unknown qubit."""
    return CLASSICAL_FIDELITY


_PAULI = {
    "I": np.eye(2, dtype=np.complex128),
    "X": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "Z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}
_SPIN_PRODUCT = np.array([1.0, -1.0, -1.0, 1.0])
_PLUS = np.array([1.0, 1.0], dtype=np.complex128) / np.sqrt(2.0)


@dataclass(frozen=True)
class InputQubit:
    a: complex
    b: complex

    def __post_init__(self):
        norm = abs(self.a) ** 2 + abs(self.b) ** 2
        if abs(norm - 1.0) > 1e-12:
            raise ContractViolationError("input qubit must be normalised", norm=norm)

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.a, self.b], dtype=np.complex128)

    def hadamard_target(self) -> np.ndarray:
        return np.array([self.a + self.b, self.a - self.b], dtype=np.complex128) / np.sqrt(2.0)


def pauli_inputs() -> List[InputQubit]:
    """The six eigenstates of X, Y and Z."""
    s = 1.0 / np.sqrt(2.0)
    return [
        InputQubit(1.0, 0.0),
        InputQubit(0.0, 1.0),
        InputQubit(s, s),
        InputQubit(s, -s),
        InputQubit(s, 1j * s),
        InputQubit(s, -1j * s),
    ]


@dataclass(frozen=True)
class GateProtocol:
    hold_time: float
    measurement_axis: Tuple[float, float, float] = (0.0, -1.0, 0.0)
    phase_correction: float = np.pi / 4.0
    correction_rule: Dict[int, str] = field(default_factory=lambda: {1: "I", -1: "X"})

    def __post_init__(self):
        if self.hold_time <= 0:
            raise ContractViolationError("hold time must be positive", hold_time=self.hold_time)
        if abs(np.linalg.norm(self.measurement_axis) - 1.0) > 1e-12:
            raise ContractViolationError("measurement axis must be a unit vector", axis=self.measurement_axis)
        if set(self.correction_rule) != {1, -1} or not set(self.correction_rule.values()) <= set(_PAULI):
            raise ContractViolationError("correction rule maps outcomes +-1 to Pauli labels", rule=self.correction_rule)

    def measurement_basis(self) -> Dict[int, np.ndarray]:
        """Outcome -> projector ket on qubit 1."""
        x, y, z = self.measurement_axis
        polar = np.arccos(np.clip(z, -1.0, 1.0))
        azimuth = np.arctan2(y, x)
        up = np.array([np.cos(polar / 2), np.exp(1j * azimuth) * np.sin(polar / 2)])
        down = np.array([-np.exp(-1j * azimuth) * np.sin(polar / 2), np.cos(polar / 2)])
        return {1: up, -1: down}

    def correction(self, outcome: int) -> np.ndarray:
        phase = np.diag([np.exp(-1j * self.phase_correction), np.exp(1j * self.phase_correction)])
        return _PAULI[self.correction_rule[outcome]] @ phase

    def mirrored(self) -> "GateProtocol":
        """Protocol for the coupling ``-J``: phases and the axis azimuth change sign."""
        x, y, z = self.measurement_axis
        return replace(self, measurement_axis=(x, -y, z), phase_correction=-self.phase_correction)


def default_protocol(dist: CouplingDistribution) -> GateProtocol:
    """Hold time ``pi / |J|`` (``pi / sigma`` when ``J = 0``), mirrored for ``J < 0``."""
    scale = abs(dist.mean) if dist.mean != 0 else np.sqrt(dist.variance)
    if scale == 0:
        raise DomainError("coupling distribution is identically zero; no hold time exists")
    protocol = GateProtocol(hold_time=np.pi / scale)
    return protocol.mirrored() if dist.mean < 0 else protocol


@dataclass
class GateBranch:
    outcome: int
    probability: float
    state: Optional[DensityMatrix]
    fidelity: float


def _branch_amplitudes(inputs: np.ndarray, j12: np.ndarray, protocol: GateProtocol) -> Dict[int, np.ndarray]:
    """Unnormalised corrected qubit-2 states, shape ``(..., 2)`` per outcome."""
    theta = np.asarray(j12, dtype=float)[..., None] * protocol.hold_time / 4.0
    joint = np.kron(inputs, _PLUS) if inputs.ndim == 1 else np.einsum("...i,j->...ij", inputs, _PLUS).reshape(inputs.shape[:-1] + (4,))
    evolved = (joint * np.exp(1j * theta * _SPIN_PRODUCT)).reshape(theta.shape[:-1] + (2, 2))
    out = {}
    for outcome, ket in protocol.measurement_basis().items():
        qubit2 = np.einsum("i,...ij->...j", ket.conj(), evolved)
        out[outcome] = qubit2 @ protocol.correction(outcome).T
    return out


def gate_branches(qubit: InputQubit, j12: float, protocol: GateProtocol) -> List[GateBranch]:
    target = qubit.hadamard_target()
    branches = []
    for outcome, amp in _branch_amplitudes(qubit.vector, np.asarray(j12), protocol).items():
        probability = float(np.vdot(amp, amp).real)
        if probability <= 1e-15:
            branches.append(GateBranch(outcome, 0.0, None, 0.0))
            continue
        state = DensityMatrix(np.outer(amp, amp.conj()) / probability)
        branches.append(GateBranch(outcome, probability, state, fidelity_pure(state, target)))
    return branches


def run_gate_once(
    qubit: InputQubit, j12: float, protocol: GateProtocol, rng: np.random.Generator
) -> Tuple[int, DensityMatrix, float]:
    """Sample a measurement outcome; return it with the corrected output state and its fidelity."""
    branches = [b for b in gate_branches(qubit, j12, protocol) if b.state is not None]
    weights = np.array([b.probability for b in branches])
    chosen = branches[int(rng.choice(len(branches), p=weights / weights.sum()))]
    return chosen.outcome, chosen.state, chosen.fidelity


def outcome_averaged_fidelity(qubit: InputQubit, j12: float, protocol: GateProtocol) -> float:
    return float(sum(b.probability * b.fidelity for b in gate_branches(qubit, j12, protocol)))


def _input_matrix(inputs: Optional[Sequence[InputQubit]]) -> Tuple[np.ndarray, np.ndarray]:
    inputs = list(inputs) if inputs is not None else pauli_inputs()
    return (
        np.array([q.vector for q in inputs]),
        np.array([q.hadamard_target() for q in inputs]),
    )


def ensemble_fidelity(j12: np.ndarray, protocol: GateProtocol, inputs: Optional[Sequence[InputQubit]] = None) -> np.ndarray:
    """Input- and outcome-averaged fidelity for each coupling in ``j12``."""
    vectors, targets = _input_matrix(inputs)
    j12 = np.asarray(j12, dtype=float)
    stacked = np.broadcast_to(vectors, j12.shape + vectors.shape)
    couplings = np.broadcast_to(j12[..., None], j12.shape + (vectors.shape[0],))
    total = np.zeros(couplings.shape)
    for amp in _branch_amplitudes(stacked, couplings, protocol).values():
        total += np.abs(np.sum(targets.conj() * amp, axis=-1)) ** 2
    return total.mean(axis=-1)


def _fidelity_block(rng: np.random.Generator, count: int, dist: CouplingDistribution, protocol: GateProtocol,
                    inputs: Optional[Tuple[InputQubit, ...]]) -> np.ndarray:
    return ensemble_fidelity(dist.sample(rng, count), protocol, inputs)


def quenched_gate_fidelity(
    dist: CouplingDistribution,
    protocol: GateProtocol,
    n_samples: int,
    master_seed: int,
    inputs: Optional[Sequence[InputQubit]] = None,
    workers: Optional[int] = None,
) -> Tuple[float, float]:
    """Mean and standard deviation of the gate fidelity over coupling realisations."""
    inputs = None if inputs is None else tuple(inputs)
    moments = sample_moments(
        partial(_fidelity_block, dist=dist, protocol=protocol, inputs=inputs), n_samples, master_seed, workers
    )
    mean, std = float(moments.mean), float(moments.std)
    logger.info("gate J=%g var=%g t*=%.4g: F=%.4f +- %.4f", dist.mean, dist.variance, protocol.hold_time, mean, std)
    if mean <= CLASSICAL_FIDELITY:
        logger.info("mean fidelity %.4f does not exceed the classical %.4f", mean, CLASSICAL_FIDELITY)
    return mean, std


@dataclass
class HoldTimeScan:
    best: GateProtocol
    hold_times: np.ndarray
    mean_fidelity: np.ndarray
    std_fidelity: np.ndarray


def optimize_hold_time(
    dist: CouplingDistribution,
    protocol: GateProtocol,
    n_samples: int,
    master_seed: int,
    span: float = HOLD_SPAN,
    points: int = HOLD_POINTS,
    workers: Optional[int] = None,
) -> HoldTimeScan:
    """Grid search of the hold time over ``t* (1 +- span)`` with common random couplings."""
    hold_times = protocol.hold_time * np.linspace(1.0 - span, 1.0 + span, points)
    stats = np.array(
        [quenched_gate_fidelity(dist, replace(protocol, hold_time=float(t)), n_samples, master_seed, workers=workers)
         for t in hold_times]
    )
    best = replace(protocol, hold_time=float(hold_times[int(np.argmax(stats[:, 0]))]))
    return HoldTimeScan(best, hold_times, stats[:, 0], stats[:, 1])


def dephased_limit_fidelity(protocol: GateProtocol, inputs: Optional[Sequence[InputQubit]] = None, points: int = 64) -> float:
    """Fidelity with the interaction phase uniformly random, the infinite-variance limit.

    The fidelity is a trigonometric polynomial of low degree in the phase, so an equispaced
    grid over one period averages it exactly.
    """
    thetas = 2.0 * np.pi * np.arange(points) / points
    return float(ensemble_fidelity(4.0 * thetas / protocol.hold_time, protocol, inputs).mean())
