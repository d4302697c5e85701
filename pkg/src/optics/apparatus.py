from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from src.quantum import BipartiteState, PureState, ValidationError, apply_local_unitaries, make_measurement_state

from .circuits import StationCircuit, station_unitary


DETECTOR_LABELS_S = ("S1", "S2")
DETECTOR_LABELS_A = ("A1", "A2")
PATH_LABELS = ("path1", "path2")
MZ_DETECTOR_LABELS = ("D1", "D2")


def require_offset(offset_w: float) -> None:
    if not (math.isfinite(offset_w) and -math.pi < offset_w <= math.pi):
        raise ValidationError(f"Смещение w должно лежать в (−π, π], получено {offset_w}")


def default_source() -> BipartiteState:
    """Измерительное состояние с c1 = c2 = 1/√2."""
    return make_measurement_state(1 / math.sqrt(2.0), 1 / math.sqrt(2.0))


@dataclass(frozen=True, slots=True)
class Apparatus:
    """
    Двухстанционная установка: источник пары и оптика станций S и A.

    Attributes:
        source: Состояние пары на выходе источника.
        station_s: Оптика станции S.
        station_a: Оптика станции A.
        offset_w: Фазовое смещение установки w в (−π, π]; 0 для неоткалиброванной установки.
    """

    source: BipartiteState = field(default_factory=default_source)
    station_s: StationCircuit = field(default_factory=StationCircuit)
    station_a: StationCircuit = field(default_factory=StationCircuit)
    offset_w: float = 0.0

    def __post_init__(self) -> None:
        require_offset(self.offset_w)

    def at_zero_phase(self) -> "Apparatus":
        return replace(
            self,
            station_s=self.station_s.with_phases(0.0),
            station_a=self.station_a.with_phases(0.0),
            offset_w=0.0,
        )


@dataclass(frozen=True, slots=True)
class MachZehnder:
    """Однофотонный интерферометр: входное состояние, схема и калибровочное смещение."""

    input_state: PureState
    circuit: StationCircuit
    offset_w: float = 0.0

    def __post_init__(self) -> None:
        require_offset(self.offset_w)


def station_unitaries(app: Apparatus, calibrated: bool = True) -> tuple[np.ndarray, np.ndarray]:
    """
    Унитарные матрицы станций S и A.

    В откалиброванном представлении смещение w вычитается из фазы станции S.
    """

    circuit_s = app.station_s.with_phase_origin(app.offset_w) if calibrated and app.offset_w else app.station_s
    return station_unitary(circuit_s), station_unitary(app.station_a)


def propagate(app: Apparatus, calibrated: bool = True) -> BipartiteState:
    """Состояние пары после оптики, помеченное детекторами (S1, S2) x (A1, A2)."""
    u_s, u_a = station_unitaries(app, calibrated=calibrated)
    return apply_local_unitaries(app.source, u_s, u_a).with_labels(DETECTOR_LABELS_S, DETECTOR_LABELS_A)


def mz_output(mz: MachZehnder, calibrated: bool = True) -> PureState:
    """Состояние фотона на детекторах D1, D2."""
    circuit = mz.circuit.with_phase_origin(mz.offset_w) if calibrated and mz.offset_w else mz.circuit
    return mz.input_state.evolve(station_unitary(circuit), labels=MZ_DETECTOR_LABELS)
