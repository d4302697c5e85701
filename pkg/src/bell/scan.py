from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np
from scipy.optimize import brentq

from src.quantum.validation import require_non_empty

from .chsh import CLASSICAL_BOUND, ChshSettings, chsh_statistic, is_violation


log = logging.getLogger(__name__)

ENDPOINT_DIGITS = 3
BOUNDARY_TOL = 1e-9


@dataclass(frozen=True, slots=True)
class ScanRow:
    theta: float
    s_value: float
    violated: bool


@dataclass(slots=True)
class ViolationScan:
    """
    Результат сканирования семейства a = 0, a' = 2θ, b = θ, b' = −θ.

    Attributes:
        rows: S(θ) в порядке сетки.
        intervals: Интервалы θ с |S| > 2, концы округлены до 1e-3.
    """

    rows: list[ScanRow] = field(default_factory=list)
    intervals: list[tuple[float, float]] = field(default_factory=list)

    @property
    def max_abs_s(self) -> float:
        return max((abs(row.s_value) for row in self.rows), default=0.0)

    def summary(self) -> dict[str, object]:
        return {
            "points": len(self.rows),
            "max_abs_s": self.max_abs_s,
            "violating_intervals": [list(interval) for interval in self.intervals],
        }


def family_s(theta: float) -> float:
    return chsh_statistic(ChshSettings.family(theta)).s_value


def _excess(theta: float) -> float:
    return abs(family_s(theta)) - CLASSICAL_BOUND


def _crossing(inside: float, outside: float) -> float:
    """Граница области нарушения между точкой inside (|S| > 2) и точкой outside."""
    if abs(_excess(outside)) <= BOUNDARY_TOL:
        return outside
    lo, hi = sorted((inside, outside))
    return float(brentq(_excess, lo, hi, xtol=1e-9))


def violating_intervals(rows: list[ScanRow]) -> list[tuple[float, float]]:
    intervals: list[tuple[float, float]] = []
    start: float | None = None
    for index, row in enumerate(rows):
        previous = rows[index - 1] if index else None
        if row.violated and start is None:
            start = row.theta if previous is None else _crossing(row.theta, previous.theta)
        elif not row.violated and start is not None and previous is not None:
            end = _crossing(previous.theta, row.theta)
            intervals.append((round(start, ENDPOINT_DIGITS), round(end, ENDPOINT_DIGITS)))
            start = None
    if start is not None:
        intervals.append((round(start, ENDPOINT_DIGITS), round(rows[-1].theta, ENDPOINT_DIGITS)))
    return intervals


def _scan_point(theta: float) -> ScanRow:
    s_value = family_s(theta)
    return ScanRow(theta=float(theta), s_value=s_value, violated=is_violation(s_value))


def violation_scan(thetas: Iterable[float], n_jobs: int = 1) -> ViolationScan:
    """S(θ) = 3cos θ − cos 3θ через конвейер и интервалы нарушения |S| > 2."""
    grid = [float(theta) for theta in require_non_empty(thetas, context="сетка θ")]
    if n_jobs == 1:
        rows = [_scan_point(theta) for theta in grid]
    else:
        with ProcessPoolExecutor(max_workers=n_jobs) as executor:
            rows = list(executor.map(_scan_point, grid))
    scan = ViolationScan(rows=rows, intervals=violating_intervals(rows))
    log.info("Сканирование CHSH: %s точек, max |S| = %.12g, интервалы %s", len(rows), scan.max_abs_s, scan.intervals)
    return scan


def theta_grid(steps: int, start: float = -math.pi / 2, stop: float = math.pi / 2) -> list[float]:
    return [float(theta) for theta in np.linspace(start, stop, int(steps))]
