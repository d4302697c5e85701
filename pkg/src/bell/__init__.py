"""
Статистика CHSH по полному конвейеру симуляции, поиск максимума и сканирование области нарушения.
"""

from .chsh import (
    CLASSICAL_BOUND,
    TSIRELSON_BOUND,
    ChshResult,
    ChshSettings,
    chsh_statistic,
    correlation_at,
    is_violation,
    maximize_chsh,
)
from .scan import ScanRow, ViolationScan, family_s, theta_grid, violating_intervals, violation_scan

__all__ = [
    "CLASSICAL_BOUND",
    "TSIRELSON_BOUND",
    "ChshResult",
    "ChshSettings",
    "ScanRow",
    "ViolationScan",
    "chsh_statistic",
    "correlation_at",
    "family_s",
    "is_violation",
    "maximize_chsh",
    "theta_grid",
    "violating_intervals",
    "violation_scan",
]
