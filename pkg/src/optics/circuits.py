from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable

import numpy as np

from src.quantum.validation import NORM_TOL, ValidationError, require_unitary

from .elements import ElementKind, OpticalElement


@dataclass(frozen=True, slots=True)
class StationCircuit:
    """Упорядоченная цепочка элементов, действующая на две моды пути одного фотона."""

    elements: tuple[OpticalElement, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))

    @classmethod
    def of(cls, elements: Iterable[OpticalElement]) -> "StationCircuit":
        return cls(tuple(elements))

    def phase_shifters(self) -> list[OpticalElement]:
        return [el for el in self.elements if el.kind is ElementKind.PHASE_SHIFTER]

    def with_phases(self, phase: float) -> "StationCircuit":
        """Копия схемы, где все фазовращатели выставлены в заданную фазу."""
        return StationCircuit(
            tuple(
                replace(el, phase=phase) if el.kind is ElementKind.PHASE_SHIFTER else el
                for el in self.elements
            )
        )

    def with_phase_origin(self, offset: float) -> "StationCircuit":
        """
        Откалиброванное представление: начало отсчёта первого фазовращателя сдвинуто на offset.

        Сама схема и матрицы элементов не меняются, возвращается новая схема с фазой φ − offset.
        """

        for index, element in enumerate(self.elements):
            if element.kind is ElementKind.PHASE_SHIFTER:
                shifted = replace(element, phase=element.phase - offset)  # type: ignore[operator]
                return StationCircuit(self.elements[:index] + (shifted,) + self.elements[index + 1 :])
        raise ValidationError("В схеме нет фазовращателя, начало отсчёта фазы сдвинуть нельзя")


def station_unitary(circuit: StationCircuit) -> np.ndarray:
    """
    Унитарная матрица станции: элементы применяются по порядку, т.е. U = U_n ··· U_2 · U_1.
    """

    unitary = np.eye(2, dtype=np.complex128)
    for element in circuit.elements:
        unitary = element.unitary() @ unitary
    return require_unitary(unitary, context="station_unitary", tol=NORM_TOL)
