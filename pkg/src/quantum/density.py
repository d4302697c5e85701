from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .states import BipartiteState, PureState
from .validation import NORM_TOL, StateValidationError, frozen, require_finite


log = logging.getLogger(__name__)


class Subsystem(str, Enum):
    S = "S"
    A = "A"


@dataclass(frozen=True, slots=True)
class DensityOperator:
    """
    Эрмитов оператор плотности с единичным следом.

    Attributes:
        matrix: Матрица dim x dim.
    """

    matrix: np.ndarray

    def __post_init__(self) -> None:
        matrix = np.asarray(self.matrix, dtype=np.complex128)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise StateValidationError(f"Оператор плотности должен быть квадратным, получено {matrix.shape}")
        require_finite(matrix, context="DensityOperator")
        if np.max(np.abs(matrix - matrix.conj().T)) > NORM_TOL:
            raise StateValidationError("Оператор плотности не эрмитов")
        trace = complex(np.trace(matrix))
        if abs(trace - 1.0) > NORM_TOL:
            raise StateValidationError(f"След оператора плотности {trace:.12g} != 1")
        if np.min(np.linalg.eigvalsh(matrix)) < -NORM_TOL:
            raise StateValidationError("Оператор плотности имеет отрицательные собственные значения")
        object.__setattr__(self, "matrix", frozen(matrix))

    @classmethod
    def from_pure(cls, state: PureState) -> "DensityOperator":
        return cls(np.outer(state.amplitudes, state.amplitudes.conj()))

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[0])

    def eigenvalues(self) -> np.ndarray:
        """Собственные значения по убыванию."""
        return np.sort(np.linalg.eigvalsh(self.matrix))[::-1]

    def diagonal(self) -> np.ndarray:
        return np.real(np.diag(self.matrix)).copy()


def partial_trace(psi: BipartiteState, subsystem: Subsystem | str = Subsystem.S) -> DensityOperator:
    """
    Редуцированный оператор сохраняемой подсистемы.

    Subsystem.S: ρ_S[j, j'] = Σ_k amps[j, k]·conj(amps[j', k]), для Subsystem.A сумма берётся по первому индексу.
    """

    subsystem = Subsystem(subsystem)
    amps = psi.amps
    if subsystem is Subsystem.S:
        rho = amps @ amps.conj().T
    else:
        rho = amps.T @ amps.conj()
    return DensityOperator(rho)


def reduced_states(psi: BipartiteState) -> tuple[DensityOperator, DensityOperator]:
    return partial_trace(psi, Subsystem.S), partial_trace(psi, Subsystem.A)


def purity(rho: DensityOperator) -> float:
    """Tr(ρ²), лежит в [1/dim, 1]."""
    return float(np.real(np.trace(rho.matrix @ rho.matrix)))


def coherence(rho: DensityOperator) -> float:
    """Модуль внедиагональных элементов (для dim = 2 это |ρ₁₂|)."""
    off_diagonal = rho.matrix - np.diag(np.diag(rho.matrix))
    return float(np.max(np.abs(off_diagonal))) if rho.dim > 1 else 0.0


def is_superposition(rho: DensityOperator, tol: float = NORM_TOL) -> bool:
    """
    Истина, если в базисе путей есть когерентность между модами.

    Смесь с нулевыми внедиагональными элементами суперпозицией не считается.
    """

    return coherence(rho) > tol


def entanglement_entropy(psi: BipartiteState) -> float:
    """Энтропия фон Неймана редуцированного состояния S в битах."""
    eigenvalues = partial_trace(psi, Subsystem.S).eigenvalues()
    eigenvalues = eigenvalues[eigenvalues > NORM_TOL]
    entropy = float(-np.sum(eigenvalues * np.log2(eigenvalues)))
    log.debug("Энтропия запутанности: %.12g", entropy)
    return max(entropy, 0.0)
