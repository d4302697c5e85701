from __future__ import annotations

import math
import os
from dataclasses import asdict, dataclass
from enum import Enum
from pathlib import Path

from src.quantum.validation import ValidationError


SEED_ENV = "BIPHOTON_SEED"
DEFAULT_SEED = 42
SCHEMA_VERSION = 1


class ConfigValidationError(ValidationError):
    pass


class Command(str, Enum):
    RTO_SWEEP = "rto-sweep"
    MZ_SWEEP = "mz-sweep"
    SAMPLE = "sample"
    CHSH = "chsh"
    TABLE1 = "table1"
    MARGINALS = "marginals"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


def resolve_seed(flag: int | None) -> int:
    """Seed из флага --seed, иначе из BIPHOTON_SEED, иначе 42. Читается только командами с сэмплированием."""
    if flag is not None:
        return flag
    raw = os.environ.get(SEED_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError as exc:
        raise ConfigValidationError(f"{SEED_ENV} должна быть целым числом, получено {raw!r}") from exc


@dataclass(slots=True)
class SimulationDefaults:
    """
    Значения по умолчанию для команд.

    Attributes:
        trials: Число испытаний на точку.
        steps: Число точек развёртки.
        audit_steps: Число точек сетки no-signaling по каждой оси.
        theta_steps: Число точек сканирования CHSH.
        grid_step: Шаг сетки поиска максимума CHSH.
    """

    trials: int = 100_000
    steps: int = 25
    audit_steps: int = 21
    theta_steps: int = 181
    grid_step: float = math.pi / 64


@dataclass(slots=True)
class RunConfig:
    """
    Проверенный запрос на запуск команды.

    Фазы хранятся в радианах; флаг degrees только описывает, как их ввёл пользователь.
    """

    command: Command
    format: OutputFormat = OutputFormat.CSV
    output: Path | None = None
    steps: int = 25
    trials: int = 100_000
    seed: int = DEFAULT_SEED
    jobs: int = 1
    degrees: bool = False
    phi_s: float = 0.0
    phi_a: float = 0.0
    range_min: float = 0.0
    range_max: float = 2 * math.pi
    canonical: bool = False
    maximize: bool = False
    sampled: bool = False
    theta_steps: int = 181
    grid_step: float = math.pi / 64
    settings: tuple[float, float, float, float] = (0.0, math.pi / 2, math.pi / 4, -math.pi / 4)

    def validate(self) -> "RunConfig":
        self.command = Command(self.command)
        self.format = OutputFormat(self.format)
        if self.steps < 2:
            raise ConfigValidationError(f"--steps должно быть >= 2, получено {self.steps}")
        if self.trials < 1:
            raise ConfigValidationError(f"--trials должно быть >= 1, получено {self.trials}")
        if not 0 <= self.seed < 2**64:
            raise ConfigValidationError(f"--seed должен лежать в [0, 2**64), получено {self.seed}")
        if self.jobs < 1:
            raise ConfigValidationError(f"--jobs должно быть >= 1, получено {self.jobs}")
        if self.theta_steps < 2:
            raise ConfigValidationError(f"--theta-steps должно быть >= 2, получено {self.theta_steps}")
        if not 0.0 < self.grid_step <= math.pi / 8 + 1e-15:
            raise ConfigValidationError(f"--grid-step должен лежать в (0, π/8], получено {self.grid_step}")
        values = (self.phi_s, self.phi_a, self.range_min, self.range_max, *self.settings)
        if not all(math.isfinite(value) for value in values):
            raise ConfigValidationError("Фазы должны быть конечными числами")
        return self

    def echo(self) -> dict[str, object]:
        """Параметры для метаданных JSON (без пути вывода)."""
        payload = asdict(self)
        payload.pop("output")
        payload["command"] = self.command.value
        payload["format"] = self.format.value
        payload["settings"] = list(self.settings)
        return payload
