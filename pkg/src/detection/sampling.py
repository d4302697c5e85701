from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from src.quantum.validation import ValidationError

from .distributions import JointDistribution


log = logging.getLogger(__name__)

GENERATOR_NAME = "PCG64"
MAX_SEED = 2**64


class SamplingError(ValidationError):
    pass


@dataclass(frozen=True, slots=True)
class TrialCounts:
    n11: int
    n12: int
    n21: int
    n22: int
    seed: int
    total: int

    def __post_init__(self) -> None:
        if min(self.n11, self.n12, self.n21, self.n22) < 0:
            raise SamplingError("Отрицательные счёты совпадений")
        if self.n11 + self.n12 + self.n21 + self.n22 != self.total:
            raise SamplingError(f"Сумма счётов не равна total={self.total}")


@dataclass(frozen=True, slots=True)
class CorrelationEstimate:
    c_hat: float
    std_err: float
    total: int


def make_generator(seed: int) -> np.random.Generator:
    """Генератор numpy PCG64: один и тот же seed даёт одинаковый поток на всех платформах."""
    if not 0 <= int(seed) < MAX_SEED:
        raise SamplingError(f"seed должен лежать в [0, 2**64), получено {seed}")
    return np.random.Generator(np.random.PCG64(int(seed)))


def sample_trials(d: JointDistribution, n: int, seed: int) -> TrialCounts:
    """
    n независимых категориальных испытаний по (p11, p12, p21, p22).

    Категория выбирается обращением накопленной вероятности: u ~ U[0, 1), индекс равен первой
    ячейке с cdf > u.
    """

    if n < 1:
        raise SamplingError(f"Число испытаний должно быть >= 1, получено {n}")
    rng = make_generator(seed)
    cdf = np.cumsum(np.clip(d.as_array(), 0.0, None))
    cdf = cdf / cdf[-1]
    cdf[-1] = 1.0
    draws = rng.random(int(n))
    outcomes = np.minimum(np.searchsorted(cdf, draws, side="right"), 3)
    counts = np.bincount(outcomes, minlength=4)
    log.debug("Выборка %s испытаний (seed=%s): %s", n, seed, counts.tolist())
    return TrialCounts(
        n11=int(counts[0]),
        n12=int(counts[1]),
        n21=int(counts[2]),
        n22=int(counts[3]),
        seed=int(seed),
        total=int(n),
    )


def estimate_correlation(t: TrialCounts) -> CorrelationEstimate:
    """Оценка C по счётам совпадений и её биномиальная стандартная ошибка."""
    if t.total < 1:
        raise SamplingError("Нет испытаний для оценки корреляции")
    c_hat = (t.n11 + t.n22 - t.n12 - t.n21) / t.total
    std_err = math.sqrt(max(1.0 - c_hat * c_hat, 0.0) / t.total)
    return CorrelationEstimate(c_hat=float(c_hat), std_err=std_err, total=t.total)
