from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from src.quantum.validation import ValidationError


class ElementKind(str, Enum):
    BEAM_SPLITTER = "BeamSplitter"
    PHASE_SHIFTER = "PhaseShifter"
    MIRROR = "Mirror"


class Arm(str, Enum):
    SOLID = "solid"
    DASHED = "dashed"


_BEAM_SPLITTER = np.array([[1.0, 1.0j], [1.0j, 1.0]], dtype=np.complex128) / math.sqrt(2.0)
_BEAM_SPLITTER.setflags(write=False)


def beam_splitter_unitary() -> np.ndarray:
    """Симметричный делитель 50/50: (1/√2)·[[1, i], [i, 1]]."""
    return _BEAM_SPLITTER.copy()


def phase_shifter_unitary(phase: float, arm: Arm | str = Arm.SOLID) -> np.ndarray:
    """diag(e^{iφ}, 1) на сплошном плече, diag(1, e^{iφ}) на пунктирном."""
    if not math.isfinite(phase):
        raise ValidationError(f"Фаза должна быть конечной: {phase}")
    factor = np.exp(1j * phase)
    if Arm(arm) is Arm.SOLID:
        return np.diag([factor, 1.0]).astype(np.complex128)
    return np.diag([1.0, factor]).astype(np.complex128)


@dataclass(frozen=True, slots=True)
class OpticalElement:
    """
    Элемент оптической схемы одной станции.

    Attributes:
        kind: Тип элемента.
        phase: Фаза в радианах (только для фазовращателя).
        arm: Плечо, на котором стоит фазовращатель.
    """

    kind: ElementKind
    phase: float | None = None
    arm: Arm | None = None

    def __post_init__(self) -> None:
        kind = ElementKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind is ElementKind.PHASE_SHIFTER:
            if self.phase is None or not math.isfinite(self.phase):
                raise ValidationError(f"Фазовращатель требует конечную фазу, получено {self.phase}")
            if self.arm is None:
                raise ValidationError("Для фазовращателя нужно указать плечо")
            object.__setattr__(self, "phase", float(self.phase))
            object.__setattr__(self, "arm", Arm(self.arm))
        elif self.phase is not None or self.arm is not None:
            raise ValidationError(f"Фаза и плечо задаются только для фазовращателя, не для {kind.value}")

    @classmethod
    def beam_splitter(cls) -> "OpticalElement":
        return cls(ElementKind.BEAM_SPLITTER)

    @classmethod
    def phase_shifter(cls, phase: float, arm: Arm | str = Arm.SOLID) -> "OpticalElement":
        return cls(ElementKind.PHASE_SHIFTER, phase=phase, arm=Arm(arm))

    @classmethod
    def mirror(cls) -> "OpticalElement":
        return cls(ElementKind.MIRROR)

    def unitary(self) -> np.ndarray:
        if self.kind is ElementKind.BEAM_SPLITTER:
            return beam_splitter_unitary()
        if self.kind is ElementKind.PHASE_SHIFTER:
            return phase_shifter_unitary(self.phase, self.arm)  # type: ignore[arg-type]
        # зеркало даёт общую фазу обоим плечам
        return np.eye(2, dtype=np.complex128)
