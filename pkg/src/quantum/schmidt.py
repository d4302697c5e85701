from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .density import Subsystem, partial_trace, purity
from .states import BipartiteState
from .validation import RANK_TOL


@dataclass(frozen=True, slots=True)
class SchmidtDecomposition:
    """
    Коэффициенты Шмидта по убыванию и ранг.

    Второй коэффициент входит в ранг, когда линейная энтропия 2·c1²·c2² превышает RANK_TOL;
    тот же порог задаёт смешанность редуцированного состояния (чистота < 1 − RANK_TOL).
    """

    coefficients: tuple[float, ...]
    rank: int


def schmidt(psi: BipartiteState) -> SchmidtDecomposition:
    """
    Разложение Шмидта через замкнутую формулу для сингулярных чисел матрицы 2x2.

    Собственные значения A·A† равны (t ± sqrt(t² − 4|det A|²))/2, где t = Tr(A·A†).
    Меньшее берётся как |det A|²/λ₊, чтобы не терять точность для почти факторизуемых состояний.
    """

    amps = psi.amps
    trace = float(np.sum(np.abs(amps) ** 2))
    det_sq = float(abs(amps[0, 0] * amps[1, 1] - amps[0, 1] * amps[1, 0]) ** 2)
    discriminant = max(trace * trace - 4.0 * det_sq, 0.0)
    lambda_max = 0.5 * (trace + np.sqrt(discriminant))
    lambda_min = det_sq / lambda_max if lambda_max > 0.0 else 0.0
    coefficients = (float(np.sqrt(lambda_max)), float(np.sqrt(max(lambda_min, 0.0))))
    rank = 2 if linear_entropy(lambda_max, lambda_min) > RANK_TOL else 1
    return SchmidtDecomposition(coefficients=coefficients, rank=rank)


def linear_entropy(lambda_max: float, lambda_min: float) -> float:
    """1 − Tr ρ² для редуцированного состояния с собственными значениями lambda_max, lambda_min."""
    return 2.0 * lambda_max * max(lambda_min, 0.0)


def is_entangled(psi: BipartiteState) -> bool:
    return schmidt(psi).rank == 2


def is_mixed_reduction(psi: BipartiteState, tol: float = RANK_TOL) -> bool:
    """Редуцированное состояние S смешано (чистота < 1 − tol)."""
    return purity(partial_trace(psi, Subsystem.S)) < 1.0 - tol
