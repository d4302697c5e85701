"""
Оптические элементы и сборка установок: однофотонный интерферометр и двухстанционная схема
с запутанной парой, включая калибровку смещения w.
"""

from .apparatus import Apparatus, MachZehnder, mz_output, propagate, station_unitaries
from .builders import build_mz, build_product_rto, build_rto, rto_offset, rto_stations
from .calibration import CalibrationError, calibrate_mz_offset, calibrate_offset, wrap_phase
from .circuits import StationCircuit, station_unitary
from .elements import Arm, ElementKind, OpticalElement, beam_splitter_unitary, phase_shifter_unitary

__all__ = [
    "Apparatus",
    "Arm",
    "CalibrationError",
    "ElementKind",
    "MachZehnder",
    "OpticalElement",
    "StationCircuit",
    "beam_splitter_unitary",
    "build_mz",
    "build_product_rto",
    "build_rto",
    "calibrate_mz_offset",
    "calibrate_offset",
    "mz_output",
    "phase_shifter_unitary",
    "propagate",
    "rto_offset",
    "rto_stations",
    "station_unitaries",
    "station_unitary",
]
