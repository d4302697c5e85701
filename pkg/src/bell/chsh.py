from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from src.detection import degree_of_correlation, estimate_correlation, joint_probabilities, sample_trials
from src.optics import build_rto
from src.quantum.validation import ValidationError


log = logging.getLogger(__name__)

CLASSICAL_BOUND = 2.0
TSIRELSON_BOUND = 2.0 * math.sqrt(2.0)
# Допуск на округление при сравнении |S| с классической границей.
BOUND_TOL = 1e-12
MAX_GRID_STEP = math.pi / 8


@dataclass(frozen=True, slots=True)
class ChshSettings:
    """Фазы станции S (a, a') и станции A (b, b') в радианах."""

    a: float
    a_prime: float
    b: float
    b_prime: float

    def __post_init__(self) -> None:
        for name in ("a", "a_prime", "b", "b_prime"):
            if not math.isfinite(getattr(self, name)):
                raise ValidationError(f"Настройка {name} должна быть конечной")

    @classmethod
    def canonical(cls) -> "ChshSettings":
        return cls(a=0.0, a_prime=math.pi / 2, b=math.pi / 4, b_prime=-math.pi / 4)

    @classmethod
    def family(cls, theta: float) -> "ChshSettings":
        """Однопараметрическое семейство a = 0, a' = 2θ, b = θ, b' = −θ."""
        return cls(a=0.0, a_prime=2.0 * theta, b=theta, b_prime=-theta)

    def pairs(self) -> list[tuple[float, float]]:
        """Пары (φ_S, φ_A) в порядке (a,b), (a,b'), (a',b), (a',b')."""
        return [(self.a, self.b), (self.a, self.b_prime), (self.a_prime, self.b), (self.a_prime, self.b_prime)]


@dataclass(frozen=True, slots=True)
class ChshResult:
    """
    Четыре корреляции и S = E(a,b) + E(a,b') + E(a',b) − E(a',b').

    std_err заполняется только в режиме сэмплирования.
    """

    e_ab: float
    e_ab_prime: float
    e_a_prime_b: float
    e_a_prime_b_prime: float
    s_value: float
    violated: bool
    std_err: float | None = None


def correlation_at(phi_s: float, phi_a: float) -> float:
    """Степень корреляции через полный конвейер: установка, унитарная эволюция, правило Борна."""
    return degree_of_correlation(joint_probabilities(build_rto(phi_s, phi_a)))


def is_violation(s_value: float) -> bool:
    return abs(s_value) > CLASSICAL_BOUND + BOUND_TOL


def _combine(e: list[float], std_err: float | None = None) -> ChshResult:
    s_value = e[0] + e[1] + e[2] - e[3]
    return ChshResult(
        e_ab=e[0],
        e_ab_prime=e[1],
        e_a_prime_b=e[2],
        e_a_prime_b_prime=e[3],
        s_value=s_value,
        violated=is_violation(s_value),
        std_err=std_err,
    )


def chsh_statistic(
    settings: ChshSettings,
    sampled: bool = False,
    trials: int = 100_000,
    seed: int = 42,
) -> ChshResult:
    """
    Статистика CHSH для четырёх настроек.

    По умолчанию корреляции аналитические; при sampled=True каждая из четырёх оценивается
    по trials испытаниям с seed + номер слагаемого.
    """

    if not sampled:
        return _combine([correlation_at(s, a) for s, a in settings.pairs()])

    estimates = [
        estimate_correlation(sample_trials(joint_probabilities(build_rto(s, a)), trials, seed + index))
        for index, (s, a) in enumerate(settings.pairs())
    ]
    std_err = math.sqrt(sum(est.std_err**2 for est in estimates))
    return _combine([est.c_hat for est in estimates], std_err=std_err)


def _correlation_row(args: tuple[float, list[float]]) -> list[float]:
    phi_s, phases_a = args
    return [correlation_at(phi_s, phi_a) for phi_a in phases_a]


def _correlation_table(grid: np.ndarray, n_jobs: int) -> np.ndarray:
    """T[i, j] = E(grid[i], grid[j]) через полный конвейер."""
    phases = [float(x) for x in grid]
    tasks = [(phi_s, phases) for phi_s in phases]
    if n_jobs == 1:
        rows = [_correlation_row(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=n_jobs) as executor:
            rows = list(executor.map(_correlation_row, tasks))
    return np.asarray(rows, dtype=float)


def maximize_chsh(grid_step: float = math.pi / 64, n_jobs: int = 1) -> tuple[ChshSettings, float]:
    """
    Поиск максимума |S| при a = 0 (статистика зависит только от разностей фаз).

    Сначала полный перебор по сетке a', b, b' с шагом grid_step на [−π, π), затем
    покоординатное уточнение золотым сечением.
    """

    if not 0.0 < grid_step <= MAX_GRID_STEP + 1e-15:
        raise ValidationError(f"Шаг сетки должен лежать в (0, π/8], получено {grid_step}")

    grid = np.arange(-math.pi, math.pi - 1e-12, grid_step)
    table = _correlation_table(grid, n_jobs)
    zero_index = int(np.argmin(np.abs(grid)))
    if abs(grid[zero_index]) < 1e-12:
        e_zero = table[zero_index]
    else:
        e_zero = np.array([correlation_at(0.0, float(b)) for b in grid])

    # S[i, j, k] для a' = grid[i], b = grid[j], b' = grid[k]
    s_grid = e_zero[None, :, None] + e_zero[None, None, :] + table[:, :, None] - table[:, None, :]
    i, j, k = np.unravel_index(int(np.argmax(np.abs(s_grid))), s_grid.shape)
    best = [float(grid[i]), float(grid[j]), float(grid[k])]
    best_value = abs(float(s_grid[i, j, k]))
    log.debug("Сетка %s точек на ось, лучший |S| = %.12g при %s", grid.size, best_value, best)

    def objective(point: list[float]) -> float:
        return -abs(chsh_statistic(ChshSettings(0.0, *point)).s_value)

    for _ in range(3):
        for axis in range(3):
            def along_axis(x: float, axis: int = axis) -> float:
                point = list(best)
                point[axis] = x
                return objective(point)

            result = minimize_scalar(
                along_axis,
                bracket=(best[axis] - grid_step, best[axis] + grid_step),
                method="golden",
                options={"xtol": 1e-10},
            )
            if -float(result.fun) > best_value:
                best[axis] = float(result.x)
                best_value = -float(result.fun)

    settings = ChshSettings(0.0, *best)
    log.info("Максимум CHSH: |S| = %.12g при %s", best_value, settings)
    return settings, best_value
