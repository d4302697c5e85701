from __future__ import annotations

import logging
import math
import sys
from pathlib import Path
from typing import Optional

import typer
from dotenv import load_dotenv

from src.quantum.validation import ValidationError
from src.utils.encoding import setup_console_streams

from .config import Command, OutputFormat, RunConfig, SimulationDefaults, resolve_seed
from .runner import run


EXIT_USAGE = 2
EXIT_VALIDATION = 3
EXIT_IO = 4

app = typer.Typer(help="Симуляция одно- и двухфотонной интерферометрии с запутанными парами", no_args_is_help=True)

FORMAT_OPTION = typer.Option(OutputFormat.CSV, "--format", help="Формат вывода: csv или json")
OUTPUT_OPTION = typer.Option(None, "--output", "-o", help="Файл результата (по умолчанию stdout)")
SEED_OPTION = typer.Option(None, "--seed", help="Базовый seed генератора PCG64 (иначе BIPHOTON_SEED, иначе 42)")
TRIALS_OPTION = typer.Option(None, "--trials", help="Число испытаний на точку")
DEGREES_OPTION = typer.Option(False, "--degrees", help="Фазы заданы в градусах")
JOBS_OPTION = typer.Option(1, "--jobs", help="Число параллельных процессов")


def _angle(value: float, degrees: bool) -> float:
    return math.radians(value) if degrees else value


def _angle_or(value: Optional[float], default: float, degrees: bool) -> float:
    """Значения по умолчанию всегда в радианах."""
    return default if value is None else _angle(value, degrees)


def _execute(config: RunConfig) -> None:
    try:
        code = run(config)
    except ValidationError as exc:
        typer.echo(f"Ошибка валидации: {exc}", err=True)
        raise typer.Exit(code=EXIT_VALIDATION) from exc
    except OSError as exc:
        typer.echo(f"Ошибка ввода-вывода: {exc}", err=True)
        raise typer.Exit(code=EXIT_IO) from exc
    raise typer.Exit(code=code)


def _seed(flag: Optional[int]) -> int:
    try:
        return resolve_seed(flag)
    except ValidationError as exc:
        typer.echo(f"Ошибка валидации: {exc}", err=True)
        raise typer.Exit(code=EXIT_VALIDATION) from exc


@app.callback()
def main_callback(verbose: bool = typer.Option(False, "--verbose", "-v", help="Подробное логирование")) -> None:
    load_dotenv()
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(message)s",
        stream=sys.stderr,
    )


@app.command("rto-sweep")
def rto_sweep(
    delta_min: float = typer.Option(0.0, help="Начало развёртки Δ = φ_S − φ_A"),
    delta_max: Optional[float] = typer.Option(None, help="Конец развёртки Δ (по умолчанию 2π)"),
    steps: Optional[int] = typer.Option(None, help="Число точек развёртки"),
    trials: Optional[int] = TRIALS_OPTION,
    seed: Optional[int] = SEED_OPTION,
    jobs: int = JOBS_OPTION,
    degrees: bool = DEGREES_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """Развёртка степени корреляции пары по Δ: аналитика и Монте-Карло."""
    defaults = SimulationDefaults()
    _execute(
        RunConfig(
            command=Command.RTO_SWEEP,
            format=fmt,
            output=output,
            steps=steps if steps is not None else defaults.steps,
            trials=trials if trials is not None else defaults.trials,
            seed=_seed(seed),
            jobs=jobs,
            degrees=degrees,
            range_min=_angle(delta_min, degrees),
            range_max=_angle(delta_max, degrees) if delta_max is not None else 2 * math.pi,
        )
    )


@app.command("mz-sweep")
def mz_sweep(
    phi_min: float = typer.Option(0.0, help="Начало развёртки фазы φ"),
    phi_max: Optional[float] = typer.Option(None, help="Конец развёртки φ (по умолчанию 2π)"),
    steps: Optional[int] = typer.Option(None, help="Число точек развёртки"),
    degrees: bool = DEGREES_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """Вероятности детекторов D1, D2 однофотонного интерферометра."""
    defaults = SimulationDefaults()
    _execute(
        RunConfig(
            command=Command.MZ_SWEEP,
            format=fmt,
            output=output,
            steps=steps if steps is not None else defaults.steps,
            degrees=degrees,
            range_min=_angle(phi_min, degrees),
            range_max=_angle(phi_max, degrees) if phi_max is not None else 2 * math.pi,
        )
    )


@app.command()
def sample(
    phi_s: float = typer.Option(0.0, "--phi-s", help="Фаза станции S"),
    phi_a: float = typer.Option(0.0, "--phi-a", help="Фаза станции A"),
    trials: Optional[int] = TRIALS_OPTION,
    seed: Optional[int] = SEED_OPTION,
    degrees: bool = DEGREES_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """Счёты совпадений для одной настройки фаз и оценка корреляции."""
    defaults = SimulationDefaults()
    _execute(
        RunConfig(
            command=Command.SAMPLE,
            format=fmt,
            output=output,
            trials=trials if trials is not None else defaults.trials,
            seed=_seed(seed),
            degrees=degrees,
            phi_s=_angle(phi_s, degrees),
            phi_a=_angle(phi_a, degrees),
        )
    )


@app.command()
def chsh(
    canonical: bool = typer.Option(False, "--canonical", help="Сканировать семейство a=0, a'=2θ, b=θ, b'=−θ"),
    theta_steps: Optional[int] = typer.Option(None, help="Число точек сетки θ"),
    theta_min: Optional[float] = typer.Option(None, help="Начало сетки θ (по умолчанию −π/2)"),
    theta_max: Optional[float] = typer.Option(None, help="Конец сетки θ (по умолчанию π/2)"),
    maximize: bool = typer.Option(False, "--maximize", help="Искать максимум |S| по сетке"),
    grid_step: Optional[float] = typer.Option(None, help="Шаг сетки поиска максимума (по умолчанию π/64)"),
    a: Optional[float] = typer.Option(None, "--a", help="Настройка a станции S (по умолчанию 0)"),
    a_prime: Optional[float] = typer.Option(None, "--a-prime", help="Настройка a' станции S (по умолчанию π/2)"),
    b: Optional[float] = typer.Option(None, "--b", help="Настройка b станции A (по умолчанию π/4)"),
    b_prime: Optional[float] = typer.Option(None, "--b-prime", help="Настройка b' станции A (по умолчанию −π/4)"),
    sampled: bool = typer.Option(False, "--sampled", help="Оценивать корреляции сэмплированием"),
    trials: Optional[int] = TRIALS_OPTION,
    seed: Optional[int] = SEED_OPTION,
    jobs: int = JOBS_OPTION,
    degrees: bool = DEGREES_OPTION,
    fmt: OutputFormat = FORMAT_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """Статистика CHSH: одна настройка, сканирование семейства или поиск максимума."""
    defaults = SimulationDefaults()
    if canonical and maximize:
        typer.echo("--canonical и --maximize взаимоисключающие", err=True)
        raise typer.Exit(code=EXIT_USAGE)
    _execute(
        RunConfig(
            command=Command.CHSH,
            format=fmt,
            output=output,
            trials=trials if trials is not None else defaults.trials,
            seed=_seed(seed),
            jobs=jobs,
            degrees=degrees,
            range_min=_angle_or(theta_min, -math.pi / 2, degrees),
            range_max=_angle_or(theta_max, math.pi / 2, degrees),
            canonical=canonical,
            maximize=maximize,
            sampled=sampled,
            theta_steps=theta_steps if theta_steps is not None else defaults.theta_steps,
            grid_step=_angle(grid_step, degrees) if grid_step is not None else defaults.grid_step,
            settings=(
                _angle_or(a, 0.0, degrees),
                _angle_or(a_prime, math.pi / 2, degrees),
                _angle_or(b, math.pi / 4, degrees),
                _angle_or(b_prime, -math.pi / 4, degrees),
            ),
        )
    )


@app.command()
def table1(
    fmt: OutputFormat = FORMAT_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """Таблица: однофотонная суперпозиция против запутанной пары при φ ∈ {0, π/4, π/2, 3π/4, π}."""
    _execute(RunConfig(command=Command.TABLE1, format=fmt, output=output))


@app.command()
def marginals(
    steps: Optional[int] = typer.Option(None, help="Число точек сетки по каждой фазе на [0, 2π)"),
    fmt: OutputFormat = FORMAT_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
):
    """Проверка no-signaling: локальные маргиналы на сетке фаз."""
    defaults = SimulationDefaults()
    _execute(
        RunConfig(
            command=Command.MARGINALS,
            format=fmt,
            output=output,
            steps=steps if steps is not None else defaults.audit_steps,
        )
    )


def main() -> None:
    # UTF-8 и LF для потоков консоли
    setup_console_streams()
    app()


if __name__ == "__main__":
    main()
