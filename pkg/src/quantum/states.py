from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .validation import (
    StateValidationError,
    frozen,
    renormalize,
    require_distinct_labels,
    require_unitary,
)


SYSTEM_LABELS = ("s1", "s2")
APPARATUS_LABELS = ("a1", "a2")
COMPOSITE_LABELS = ("b1", "b2")


@dataclass(frozen=True, slots=True)
class PureState:
    """
    Нормированный чистый вектор состояния над помеченными модами.

    Attributes:
        amplitudes: Комплексные амплитуды в порядке меток базиса.
        labels: Метки базиса (например, ("s1", "s2") или ("D1", "D2")).
    """

    amplitudes: np.ndarray
    labels: tuple[str, ...] = SYSTEM_LABELS

    def __post_init__(self) -> None:
        amplitudes = renormalize(np.ravel(self.amplitudes), context=f"PureState{self.labels}")
        labels = tuple(self.labels)
        require_distinct_labels(labels, amplitudes.size)
        object.__setattr__(self, "amplitudes", frozen(amplitudes))
        object.__setattr__(self, "labels", labels)

    @classmethod
    def basis(cls, label: str, labels: Sequence[str] = SYSTEM_LABELS) -> "PureState":
        labels = tuple(labels)
        if label not in labels:
            raise StateValidationError(f"Метка {label!r} отсутствует в базисе {labels}")
        amplitudes = np.zeros(len(labels), dtype=np.complex128)
        amplitudes[labels.index(label)] = 1.0
        return cls(amplitudes, labels)

    @property
    def dim(self) -> int:
        return int(self.amplitudes.size)

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def probability(self, label: str) -> float:
        return float(self.probabilities()[self.labels.index(label)])

    def evolve(self, unitary: np.ndarray, labels: Sequence[str] | None = None) -> "PureState":
        unitary = require_unitary(unitary, context="PureState.evolve")
        return PureState(unitary @ self.amplitudes, tuple(labels) if labels else self.labels)


@dataclass(frozen=True, slots=True)
class BipartiteState:
    """
    Чистое состояние пары S⊗A: элемент amps[j, k] есть амплитуда |s_j⟩|a_k⟩.

    Индекс 0: сплошной путь или детектор 1; индекс 1: пунктирный путь или детектор 2.
    """

    amps: np.ndarray
    labels_s: tuple[str, str] = field(default=SYSTEM_LABELS)
    labels_a: tuple[str, str] = field(default=APPARATUS_LABELS)

    def __post_init__(self) -> None:
        amps = np.asarray(self.amps, dtype=np.complex128)
        if amps.shape != (2, 2):
            raise StateValidationError(f"Матрица амплитуд должна быть 2x2, получено {amps.shape}")
        amps = renormalize(amps, context="BipartiteState")
        object.__setattr__(self, "amps", frozen(amps))

    @classmethod
    def from_vector(cls, vector: Sequence[complex]) -> "BipartiteState":
        """Вектор в порядке s1a1, s1a2, s2a1, s2a2."""
        return cls(np.reshape(np.asarray(vector, dtype=np.complex128), (2, 2)))

    def as_vector(self) -> np.ndarray:
        return self.amps.reshape(4).copy()

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amps) ** 2

    def with_labels(self, labels_s: Sequence[str], labels_a: Sequence[str]) -> "BipartiteState":
        return BipartiteState(self.amps, tuple(labels_s), tuple(labels_a))


def make_superposition(
    c1: complex,
    c2: complex,
    labels: Sequence[str] = SYSTEM_LABELS,
) -> PureState:
    """Суперпозиция c1|s1⟩ + c2|s2⟩ одной системы."""
    return PureState(np.array([c1, c2], dtype=np.complex128), tuple(labels))


def make_measurement_state(c1: complex, c2: complex) -> BipartiteState:
    """
    Измерительное состояние c1|s1⟩|a1⟩ + c2|s2⟩|a2⟩.

    Те же допуски нормировки, что у make_superposition.
    """

    coefficients = renormalize(np.array([c1, c2], dtype=np.complex128), context="measurement state")
    return BipartiteState(np.diag(coefficients))


def composite_relabelling(c1: complex, c2: complex) -> PureState:
    """
    Переписывает измерительное состояние как суперпозицию c1|b1⟩ + c2|b2⟩ одной составной системы B = SA.

    Такое представление не запутано и теряет нелокальную структуру пары.
    """

    return make_superposition(c1, c2, labels=COMPOSITE_LABELS)


def tensor_product(s: PureState, a: PureState) -> BipartiteState:
    if s.dim != 2 or a.dim != 2:
        raise StateValidationError(f"Ожидались двумерные состояния, получено {s.dim} и {a.dim}")
    return BipartiteState(np.outer(s.amplitudes, a.amplitudes), s.labels, a.labels)


def apply_local_unitaries(psi: BipartiteState, u_s: np.ndarray, u_a: np.ndarray) -> BipartiteState:
    """Локальная эволюция (U_S ⊗ U_A)|ψ⟩ в матричной форме U_S · amps · U_Aᵀ."""
    u_s = require_unitary(u_s, context="U_S")
    u_a = require_unitary(u_a, context="U_A")
    return BipartiteState(u_s @ psi.amps @ u_a.T, psi.labels_s, psi.labels_a)
