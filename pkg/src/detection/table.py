from __future__ import annotations

import math
from dataclasses import dataclass

from src.optics import build_mz, build_rto

from .distributions import joint_probabilities, p_diff, p_diff_split, p_same, p_same_split, single_photon_probs


TABLE_PHASES = (0.0, math.pi / 4, math.pi / 2, 3 * math.pi / 4, math.pi)

# Опубликованные значения P(D1) и P(same) по строкам таблицы.
REFERENCE_VALUES = {0: 1.00, 1: 0.71, 2: 0.50, 3: 0.29, 4: 0.00}
REFERENCE_TOL = 0.005

SAME_ANNOTATION = "randomly 11 or 22"
DIFF_ANNOTATION = "randomly 12 or 21"


@dataclass(frozen=True, slots=True)
class Table1Row:
    """
    Строка сравнения однофотонной суперпозиции и запутанной пары при одной фазе.

    same_split_11 и diff_split_12: доли 11 среди «same» и 12 среди «diff» (NaN, если категории нет).
    """

    phase: float
    p_d1: float
    p_d2: float
    p_same: float
    p_diff: float
    same_split_11: float
    diff_split_12: float
    same_annotation: str | None
    diff_annotation: str | None
    discrepancy_note: str | None


def _discrepancy_note(index: int, phase: float, computed: float) -> str | None:
    reference = REFERENCE_VALUES[index]
    if abs(reference - computed) <= REFERENCE_TOL:
        return None
    return (
        f"reference value {reference:.0%} at phase {phase:.12g} differs from "
        f"(1 + cos phase)/2 = {computed:.2%}"
    )


def table1() -> list[Table1Row]:
    """
    Таблица однофотонных вероятностей (P(D1), P(D2)) и вероятностей (same, diff) пары.

    Значения вычисляются через унитарную эволюцию; строки, где опубликованные значения
    не следуют из P = (1 + cos φ)/2, помечаются discrepancy_note.
    """

    rows = []
    for index, phase in enumerate(TABLE_PHASES):
        p_d1, p_d2 = single_photon_probs(build_mz(phase))
        distribution = joint_probabilities(build_rto(phase, 0.0))
        same, diff = p_same(distribution), p_diff(distribution)
        rows.append(
            Table1Row(
                phase=phase,
                p_d1=p_d1,
                p_d2=p_d2,
                p_same=same,
                p_diff=diff,
                same_split_11=p_same_split(distribution),
                diff_split_12=p_diff_split(distribution),
                same_annotation=SAME_ANNOTATION if same > 1e-12 else None,
                diff_annotation=DIFF_ANNOTATION if diff > 1e-12 else None,
                discrepancy_note=_discrepancy_note(index, phase, same),
            )
        )
    return rows
