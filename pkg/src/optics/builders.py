from __future__ import annotations

import logging
import math
from functools import lru_cache

from src.quantum import PureState, make_superposition, tensor_product
from src.quantum.validation import ValidationError

from .apparatus import PATH_LABELS, Apparatus, MachZehnder, default_source
from .calibration import calibrate_mz_offset, calibrate_offset
from .circuits import StationCircuit
from .elements import Arm, OpticalElement


log = logging.getLogger(__name__)


def _require_finite(*phases: float) -> None:
    for phase in phases:
        if not math.isfinite(phase):
            raise ValidationError(f"Фаза должна быть конечной: {phase}")


def rto_stations(phi_s: float, phi_a: float) -> tuple[StationCircuit, StationCircuit]:
    """
    Оптика станций: фазовращатель S на сплошном плече, фазовращатель A на пунктирном, затем делитель.

    Фазовращатели стоят на плечах с разными метками, поэтому статистика зависит от φ_S − φ_A.
    """

    station_s = StationCircuit.of(
        [OpticalElement.phase_shifter(phi_s, Arm.SOLID), OpticalElement.mirror(), OpticalElement.beam_splitter()]
    )
    station_a = StationCircuit.of(
        [OpticalElement.phase_shifter(phi_a, Arm.DASHED), OpticalElement.mirror(), OpticalElement.beam_splitter()]
    )
    return station_s, station_a


@lru_cache(maxsize=1)
def rto_offset() -> float:
    """Смещение w стандартной установки; зависит только от соглашений, поэтому кэшируется."""
    station_s, station_a = rto_stations(0.0, 0.0)
    offset = calibrate_offset(Apparatus(default_source(), station_s, station_a))
    log.info("Калибровка установки: w = %.12g рад", offset)
    return offset


def build_rto(phi_s: float, phi_a: float) -> Apparatus:
    """Установка с запутанной парой в измерительном состоянии c1 = c2 = 1/√2."""
    _require_finite(phi_s, phi_a)
    station_s, station_a = rto_stations(phi_s, phi_a)
    return Apparatus(default_source(), station_s, station_a, offset_w=rto_offset())


def build_product_rto(phi_s: float, phi_a: float) -> Apparatus:
    """
    Контрольная установка без запутанности: каждый фотон в независимой суперпозиции путей.

    Калибровка не выполняется (offset_w = 0), каждая станция интерферирует по своей фазе.
    """

    _require_finite(phi_s, phi_a)
    half = 1 / math.sqrt(2.0)
    source = tensor_product(make_superposition(half, half), make_superposition(half, half, labels=("a1", "a2")))
    station_s, station_a = rto_stations(phi_s, phi_a)
    return Apparatus(source, station_s, station_a, offset_w=0.0)


def mz_circuit(phi: float) -> StationCircuit:
    return StationCircuit.of(
        [
            OpticalElement.beam_splitter(),
            OpticalElement.mirror(),
            OpticalElement.phase_shifter(phi, Arm.SOLID),
            OpticalElement.beam_splitter(),
        ]
    )


@lru_cache(maxsize=1)
def mz_offset() -> float:
    offset = calibrate_mz_offset(MachZehnder(PureState.basis("path1", PATH_LABELS), mz_circuit(0.0)))
    log.info("Калибровка интерферометра: w = %.12g рад", offset)
    return offset


def build_mz(phi: float) -> MachZehnder:
    """Однофотонный интерферометр с входом |path1⟩, откалиброванный так, что P(D1) = 1 при φ = 0."""
    _require_finite(phi)
    return MachZehnder(PureState.basis("path1", PATH_LABELS), mz_circuit(phi), offset_w=mz_offset())
