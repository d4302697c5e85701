from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from src.optics import Apparatus, MachZehnder, mz_output, propagate
from src.quantum.validation import NORM_TOL, ValidationError


@dataclass(frozen=True, slots=True)
class JointDistribution:
    """
    Вероятности совпадений p_jk = P(Sj & Ak).
    """

    p11: float
    p12: float
    p21: float
    p22: float

    def __post_init__(self) -> None:
        values = self.as_array()
        if not np.all(np.isfinite(values)):
            raise ValidationError(f"Нечисловые вероятности: {values}")
        if np.any(values < -NORM_TOL) or np.any(values > 1.0 + NORM_TOL):
            raise ValidationError(f"Вероятности вне [0, 1]: {values}")
        if abs(float(values.sum()) - 1.0) > NORM_TOL:
            raise ValidationError(f"Сумма вероятностей {values.sum():.15g} != 1")

    @classmethod
    def from_matrix(cls, matrix: np.ndarray) -> "JointDistribution":
        m = np.asarray(matrix, dtype=float)
        return cls(float(m[0, 0]), float(m[0, 1]), float(m[1, 0]), float(m[1, 1]))

    def as_array(self) -> np.ndarray:
        """Фиксированный порядок (p11, p12, p21, p22)."""
        return np.array([self.p11, self.p12, self.p21, self.p22], dtype=float)


@dataclass(frozen=True, slots=True)
class MarginalDistribution:
    pS1: float
    pS2: float
    pA1: float
    pA2: float

    def max_deviation(self, target: float = 0.5) -> float:
        return max(abs(value - target) for value in (self.pS1, self.pS2, self.pA1, self.pA2))


def joint_probabilities(app: Apparatus, calibrated: bool = True) -> JointDistribution:
    """Правило Борна для состояния пары после оптики станций."""
    return JointDistribution.from_matrix(propagate(app, calibrated=calibrated).probabilities())


def p_same(d: JointDistribution) -> float:
    return d.p11 + d.p22


def p_diff(d: JointDistribution) -> float:
    return d.p12 + d.p21


def degree_of_correlation(d: JointDistribution) -> float:
    """C = P(same) − P(diff)."""
    return p_same(d) - p_diff(d)


def p_same_split(d: JointDistribution) -> float:
    """Доля исходов 11 среди совпадающих; NaN, если совпадений нет."""
    same = p_same(d)
    return d.p11 / same if same > NORM_TOL else math.nan


def p_diff_split(d: JointDistribution) -> float:
    """Доля исходов 12 среди несовпадающих; NaN, если несовпадений нет."""
    diff = p_diff(d)
    return d.p12 / diff if diff > NORM_TOL else math.nan


def marginals(d: JointDistribution) -> MarginalDistribution:
    return MarginalDistribution(
        pS1=d.p11 + d.p12,
        pS2=d.p21 + d.p22,
        pA1=d.p11 + d.p21,
        pA2=d.p12 + d.p22,
    )


def single_photon_probs(mz: MachZehnder, calibrated: bool = True) -> tuple[float, float]:
    """(P(D1), P(D2)) однофотонного интерферометра."""
    output = mz_output(mz, calibrated=calibrated)
    return output.probability("D1"), output.probability("D2")
