from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from src.optics import build_mz, build_rto
from src.quantum.validation import ValidationError

from .distributions import JointDistribution, degree_of_correlation, joint_probabilities, single_photon_probs
from .sampling import estimate_correlation, sample_trials


log = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class SweepRow:
    """Точка развёртки по Δ = φ_S − φ_A."""

    delta_phase: float
    c_analytic: float
    c_sampled: float
    std_err: float
    distribution: JointDistribution
    seed: int


@dataclass(frozen=True, slots=True)
class SinglePhotonRow:
    phase: float
    p_d1: float
    p_d2: float


def _grid(start: float, stop: float, steps: int) -> np.ndarray:
    if steps < 2:
        raise ValidationError(f"Число шагов развёртки должно быть >= 2, получено {steps}")
    return np.linspace(start, stop, int(steps))


def _sweep_point(args: tuple[float, int, int]) -> SweepRow:
    """Одна точка развёртки; выполняется в отдельном процессе при n_jobs > 1."""
    delta, trials, seed = args
    distribution = joint_probabilities(build_rto(float(delta), 0.0))
    estimate = estimate_correlation(sample_trials(distribution, trials, seed))
    return SweepRow(
        delta_phase=float(delta),
        c_analytic=degree_of_correlation(distribution),
        c_sampled=estimate.c_hat,
        std_err=estimate.std_err,
        distribution=distribution,
        seed=seed,
    )


def correlation_sweep(
    delta_min: float,
    delta_max: float,
    steps: int,
    trials: int = 100_000,
    base_seed: int = 42,
    n_jobs: int = 1,
) -> list[SweepRow]:
    """
    Развёртка степени корреляции по равномерной сетке Δ.

    Точка i сэмплируется с seed = base_seed + i, результаты собираются в порядке шагов,
    поэтому последовательный и параллельный режимы дают одинаковый результат.
    """

    deltas = _grid(delta_min, delta_max, steps)
    tasks = [(float(delta), int(trials), int(base_seed) + index) for index, delta in enumerate(deltas)]
    log.info("Развёртка корреляции: %s точек, %s испытаний на точку (n_jobs=%s)", len(tasks), trials, n_jobs)

    if n_jobs == 1:
        rows = [_sweep_point(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=n_jobs) as executor:
            rows = list(executor.map(_sweep_point, tasks))

    log.info("Развёртка завершена")
    return rows


def single_photon_sweep(phi_min: float, phi_max: float, steps: int) -> list[SinglePhotonRow]:
    rows = []
    for phi in _grid(phi_min, phi_max, steps):
        p_d1, p_d2 = single_photon_probs(build_mz(float(phi)))
        rows.append(SinglePhotonRow(phase=float(phi), p_d1=p_d1, p_d2=p_d2))
    return rows
