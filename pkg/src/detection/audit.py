from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from src.optics import build_rto, propagate
from src.quantum import reduced_states
from src.quantum.validation import NORM_TOL, require_non_empty

from .distributions import JointDistribution, marginals, joint_probabilities


log = logging.getLogger(__name__)

Setting = tuple[float, float]


@dataclass(frozen=True, slots=True)
class AuditRow:
    phi_s: float
    phi_a: float
    p_s1: float
    p_a1: float
    max_deviation: float


@dataclass(slots=True)
class NoSignalingReport:
    """
    Итог проверки независимости локальных маргиналов от удалённой фазы.

    Attributes:
        rows: Построчные результаты в порядке сетки.
        max_deviation: Наибольшее отклонение маргиналов (и редуцированных операторов) от 1/2.
        worst_setting: Настройка с наибольшим отклонением.
        tolerance: Допуск, с которым сравнивается max_deviation.
    """

    rows: list[AuditRow] = field(default_factory=list)
    max_deviation: float = 0.0
    worst_setting: Setting | None = None
    tolerance: float = NORM_TOL

    @property
    def passed(self) -> bool:
        return self.max_deviation < self.tolerance

    @property
    def offending_setting(self) -> Setting | None:
        return None if self.passed else self.worst_setting

    def summary(self) -> dict[str, object]:
        return {
            "points": len(self.rows),
            "max_deviation": self.max_deviation,
            "worst_setting": list(self.worst_setting) if self.worst_setting else None,
            "passed": self.passed,
            "tolerance": self.tolerance,
        }


def audit_distributions(
    items: Iterable[tuple[Setting, JointDistribution]],
    extra_deviations: Sequence[float] | None = None,
    tolerance: float = NORM_TOL,
) -> NoSignalingReport:
    """
    Собирает отчёт по готовым распределениям.

    extra_deviations: дополнительные отклонения для тех же точек (например, редуцированных операторов).
    """

    report = NoSignalingReport(tolerance=tolerance)
    for index, ((phi_s, phi_a), distribution) in enumerate(items):
        m = marginals(distribution)
        deviation = m.max_deviation()
        if extra_deviations is not None:
            deviation = max(deviation, float(extra_deviations[index]))
        report.rows.append(AuditRow(phi_s, phi_a, m.pS1, m.pA1, deviation))
        if report.worst_setting is None or deviation > report.max_deviation:
            report.max_deviation = deviation
            report.worst_setting = (phi_s, phi_a)
    return report


def reduced_state_audit(phi_s: float, phi_a: float) -> float:
    """Максимальное отклонение редуцированных операторов обеих станций от I/2 после оптики."""
    rho_s, rho_a = reduced_states(propagate(build_rto(phi_s, phi_a)))
    half_identity = 0.5 * np.eye(2)
    return float(max(np.max(np.abs(rho_s.matrix - half_identity)), np.max(np.abs(rho_a.matrix - half_identity))))


def no_signaling_audit(phi_grid: Iterable[Setting], tolerance: float = NORM_TOL) -> NoSignalingReport:
    """
    Проверяет, что маргиналы и редуцированные операторы обеих станций равны 1/2 (I/2) в каждой точке сетки.

    Нарушение возвращается в отчёте, исключение не выбрасывается.
    """

    grid = [(float(s), float(a)) for s, a in require_non_empty(phi_grid, context="сетка фаз")]
    items = [((s, a), joint_probabilities(build_rto(s, a))) for s, a in grid]
    reduced = [reduced_state_audit(s, a) for s, a in grid]
    report = audit_distributions(items, extra_deviations=reduced, tolerance=tolerance)
    if report.passed:
        log.info("Проверка no-signaling пройдена: %s точек, max отклонение %.3e", len(grid), report.max_deviation)
    else:
        log.warning(
            "Проверка no-signaling не пройдена: отклонение %.3e в точке %s",
            report.max_deviation,
            report.worst_setting,
        )
    return report


def phase_grid(steps: int, start: float = 0.0, stop: float = 2 * np.pi) -> list[Setting]:
    """Декартова сетка steps x steps на [start, stop)."""
    values = np.linspace(start, stop, steps, endpoint=False)
    return [(float(s), float(a)) for s in values for a in values]
