from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np


NORM_TOL = 1e-12
RENORM_TOL = 1e-9
UNITARY_TOL = 1e-10
RANK_TOL = 1e-10


class ValidationError(Exception):
    pass


class StateValidationError(ValidationError):
    pass


class UnitaryValidationError(ValidationError):
    pass


def require_finite(values: np.ndarray, context: str) -> None:
    if not np.all(np.isfinite(values)):
        raise StateValidationError(f"Нечисловые амплитуды (NaN/Inf): {context}")


def require_distinct_labels(labels: Sequence[str], dim: int) -> None:
    if len(labels) != dim:
        raise StateValidationError(f"Ожидалось {dim} меток базиса, получено {len(labels)}")
    if len(set(labels)) != len(labels):
        raise StateValidationError(f"Метки базиса повторяются: {list(labels)}")


def renormalize(amplitudes: np.ndarray, context: str) -> np.ndarray:
    """
    Возвращает нормированную копию амплитуд.

    Отклонение нормы не более RENORM_TOL исправляется молча, большее считается ошибкой.
    """

    amplitudes = np.asarray(amplitudes, dtype=np.complex128)
    require_finite(amplitudes, context)
    norm_sq = float(np.sum(np.abs(amplitudes) ** 2))
    if abs(norm_sq - 1.0) > RENORM_TOL:
        raise StateValidationError(
            f"Сумма квадратов модулей {norm_sq:.12g} отличается от 1 более чем на {RENORM_TOL}: {context}"
        )
    return amplitudes / np.sqrt(norm_sq)


def require_unitary(matrix: np.ndarray, context: str, tol: float = UNITARY_TOL) -> np.ndarray:
    matrix = np.asarray(matrix, dtype=np.complex128)
    if matrix.shape != (2, 2):
        raise UnitaryValidationError(f"Ожидалась матрица 2x2, получено {matrix.shape}: {context}")
    require_finite(matrix, context)
    deviation = float(np.max(np.abs(matrix.conj().T @ matrix - np.eye(2))))
    if deviation > tol:
        raise UnitaryValidationError(f"Матрица не унитарна (отклонение {deviation:.3e}): {context}")
    return matrix


def require_non_empty(items: Iterable[object], context: str) -> list[object]:
    items = list(items)
    if not items:
        raise ValidationError(f"Пустой набор: {context}")
    return items


def frozen(array: np.ndarray) -> np.ndarray:
    """Копия массива только для чтения."""
    result = np.array(array, dtype=np.complex128, copy=True)
    result.setflags(write=False)
    return result
