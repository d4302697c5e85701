from __future__ import annotations

import logging
import math
from dataclasses import replace

import numpy as np

from src.quantum.validation import ValidationError

from .apparatus import Apparatus, MachZehnder, mz_output, propagate


log = logging.getLogger(__name__)

FORM_TOL = 1e-9
PROBE_PHASE = math.pi / 2


class CalibrationError(ValidationError):
    pass


def wrap_phase(phase: float) -> float:
    """Приводит фазу к интервалу (−π, π]."""
    wrapped = math.remainder(phase, 2.0 * math.pi)
    if wrapped <= -math.pi + 1e-12:
        wrapped = math.pi
    return float(wrapped)


def _joint(app: Apparatus) -> np.ndarray:
    return propagate(app, calibrated=False).probabilities()


def calibrate_offset(app: Apparatus) -> float:
    """
    Находит смещение w из P(S1 & A1) = 1/4·[1 + cos(Δ + w)].

    Фазы станций обнуляются, cos w берётся из нулевой точки, sin w из пробной точки
    с фазой π/2 на станции S. Если распределение в нулевой точке не имеет вида
    1/4·[1 ± cos w], схема считается неисправной.
    """

    zero = app.at_zero_phase()
    p = _joint(zero)
    p11, p12, p21, p22 = p[0, 0], p[0, 1], p[1, 0], p[1, 1]
    if abs(p11 - p22) > FORM_TOL or abs(p12 - p21) > FORM_TOL or abs(p11 + p12 - 0.5) > FORM_TOL:
        raise CalibrationError(
            "Распределение при нулевых фазах не имеет вида 1/4·[1 ± cos w]: "
            f"({p11:.6f}, {p12:.6f}, {p21:.6f}, {p22:.6f})"
        )
    cos_w = 4.0 * p11 - 1.0

    probe = replace(zero, station_s=zero.station_s.with_phase_origin(-PROBE_PHASE))
    sin_w = 1.0 - 4.0 * float(_joint(probe)[0, 0])

    offset = wrap_phase(math.atan2(sin_w, cos_w))
    log.debug("Смещение установки: cos w=%.12g, sin w=%.12g, w=%.12g", cos_w, sin_w, offset)
    return offset


def calibrate_mz_offset(mz: MachZehnder) -> float:
    """Смещение однофотонного интерферометра из P(D1) = 1/2·[1 + cos(φ + w)]."""
    zero = MachZehnder(mz.input_state, mz.circuit.with_phases(0.0))
    cos_w = 2.0 * mz_output(zero, calibrated=False).probability("D1") - 1.0
    probe = MachZehnder(mz.input_state, mz.circuit.with_phases(PROBE_PHASE))
    sin_w = 1.0 - 2.0 * mz_output(probe, calibrated=False).probability("D1")
    if abs(cos_w * cos_w + sin_w * sin_w - 1.0) > FORM_TOL:
        raise CalibrationError(f"Интерферометр не даёт полной видности: cos w={cos_w:.6f}, sin w={sin_w:.6f}")
    return wrap_phase(math.atan2(sin_w, cos_w))
