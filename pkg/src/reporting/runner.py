from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Mapping

from src.bell import ChshSettings, chsh_statistic, maximize_chsh, theta_grid, violation_scan
from src.detection import (
    GENERATOR_NAME,
    correlation_sweep,
    estimate_correlation,
    joint_probabilities,
    no_signaling_audit,
    phase_grid,
    sample_trials,
    single_photon_sweep,
    table1,
)
from src.optics import build_rto

from .config import Command, RunConfig
from .writers import render, write_output


log = logging.getLogger(__name__)

RTO_SWEEP_COLUMNS = ("delta_phase", "c_analytic", "c_sampled", "std_err", "p11", "p12", "p21", "p22")
MZ_SWEEP_COLUMNS = ("phase", "p_d1", "p_d2")
SAMPLE_COLUMNS = ("phi_s", "phi_a", "trials", "seed", "n11", "n12", "n21", "n22", "c_hat", "std_err")
CHSH_SCAN_COLUMNS = ("theta", "s_value", "violated")
CHSH_SETTINGS_COLUMNS = (
    "a",
    "a_prime",
    "b",
    "b_prime",
    "e_ab",
    "e_ab_prime",
    "e_a_prime_b",
    "e_a_prime_b_prime",
    "s_value",
    "violated",
    "std_err",
)
CHSH_MAXIMIZE_COLUMNS = ("a", "a_prime", "b", "b_prime", "s_value")
TABLE1_COLUMNS = (
    "phase",
    "p_d1",
    "p_d2",
    "p_same",
    "p_diff",
    "same_split_11",
    "diff_split_12",
    "discrepancy_note",
)
MARGINALS_COLUMNS = ("phi_s", "phi_a", "p_s1", "p_a1", "max_deviation")


@dataclass(slots=True)
class CommandResult:
    """Табличный результат команды до сериализации."""

    columns: tuple[str, ...]
    records: list[dict[str, object]]
    json_records: list[dict[str, object]] | None = None
    summary: Mapping[str, object] | None = None
    metadata: dict[str, object] = field(default_factory=dict)


def _rto_sweep(config: RunConfig) -> CommandResult:
    rows = correlation_sweep(
        config.range_min, config.range_max, config.steps, config.trials, config.seed, n_jobs=config.jobs
    )
    records = [
        {
            "delta_phase": row.delta_phase,
            "c_analytic": row.c_analytic,
            "c_sampled": row.c_sampled,
            "std_err": row.std_err,
            "p11": row.distribution.p11,
            "p12": row.distribution.p12,
            "p21": row.distribution.p21,
            "p22": row.distribution.p22,
        }
        for row in rows
    ]
    return CommandResult(RTO_SWEEP_COLUMNS, records, metadata={"generator": GENERATOR_NAME, "seed_schedule": "seed + step_index"})


def _mz_sweep(config: RunConfig) -> CommandResult:
    rows = single_photon_sweep(config.range_min, config.range_max, config.steps)
    return CommandResult(MZ_SWEEP_COLUMNS, [{"phase": r.phase, "p_d1": r.p_d1, "p_d2": r.p_d2} for r in rows])


def _sample(config: RunConfig) -> CommandResult:
    counts = sample_trials(joint_probabilities(build_rto(config.phi_s, config.phi_a)), config.trials, config.seed)
    estimate = estimate_correlation(counts)
    record = {
        "phi_s": config.phi_s,
        "phi_a": config.phi_a,
        "trials": counts.total,
        "seed": counts.seed,
        "n11": counts.n11,
        "n12": counts.n12,
        "n21": counts.n21,
        "n22": counts.n22,
        "c_hat": estimate.c_hat,
        "std_err": estimate.std_err,
    }
    return CommandResult(SAMPLE_COLUMNS, [record], metadata={"generator": GENERATOR_NAME})


def _chsh(config: RunConfig) -> CommandResult:
    if config.canonical:
        scan = violation_scan(theta_grid(config.theta_steps, config.range_min, config.range_max), n_jobs=config.jobs)
        records = [{"theta": r.theta, "s_value": r.s_value, "violated": r.violated} for r in scan.rows]
        return CommandResult(CHSH_SCAN_COLUMNS, records, summary=scan.summary())

    if config.maximize:
        settings, s_value = maximize_chsh(config.grid_step, n_jobs=config.jobs)
        record = {
            "a": settings.a,
            "a_prime": settings.a_prime,
            "b": settings.b,
            "b_prime": settings.b_prime,
            "s_value": s_value,
        }
        return CommandResult(CHSH_MAXIMIZE_COLUMNS, [record])

    settings = ChshSettings(*config.settings)
    result = chsh_statistic(settings, sampled=config.sampled, trials=config.trials, seed=config.seed)
    record = {
        "a": settings.a,
        "a_prime": settings.a_prime,
        "b": settings.b,
        "b_prime": settings.b_prime,
        "e_ab": result.e_ab,
        "e_ab_prime": result.e_ab_prime,
        "e_a_prime_b": result.e_a_prime_b,
        "e_a_prime_b_prime": result.e_a_prime_b_prime,
        "s_value": result.s_value,
        "violated": bool(result.violated),
        "std_err": result.std_err if result.std_err is not None else math.nan,
    }
    return CommandResult(CHSH_SETTINGS_COLUMNS, [record])


def _table1(config: RunConfig) -> CommandResult:
    rows = table1()
    records = [
        {
            "phase": r.phase,
            "p_d1": r.p_d1,
            "p_d2": r.p_d2,
            "p_same": r.p_same,
            "p_diff": r.p_diff,
            "same_split_11": r.same_split_11,
            "diff_split_12": r.diff_split_12,
            "discrepancy_note": r.discrepancy_note,
        }
        for r in rows
    ]
    json_records = [
        {
            "phase": r.phase,
            "single_photon": {"p_d1": r.p_d1, "p_d2": r.p_d2},
            "entangled": {
                "p_same": r.p_same,
                "p_diff": r.p_diff,
                "same_split_11": r.same_split_11,
                "diff_split_12": r.diff_split_12,
                "same_annotation": r.same_annotation,
                "diff_annotation": r.diff_annotation,
            },
            "discrepancy_note": r.discrepancy_note,
        }
        for r in rows
    ]
    return CommandResult(TABLE1_COLUMNS, records, json_records=json_records)


def _marginals(config: RunConfig) -> CommandResult:
    report = no_signaling_audit(phase_grid(config.steps))
    records = [
        {"phi_s": r.phi_s, "phi_a": r.phi_a, "p_s1": r.p_s1, "p_a1": r.p_a1, "max_deviation": r.max_deviation}
        for r in report.rows
    ]
    return CommandResult(MARGINALS_COLUMNS, records, summary=report.summary())


HANDLERS: dict[Command, Callable[[RunConfig], CommandResult]] = {
    Command.RTO_SWEEP: _rto_sweep,
    Command.MZ_SWEEP: _mz_sweep,
    Command.SAMPLE: _sample,
    Command.CHSH: _chsh,
    Command.TABLE1: _table1,
    Command.MARGINALS: _marginals,
}


def execute(config: RunConfig) -> str:
    """Выполняет команду и возвращает сериализованный артефакт; физика целиком в библиотечных модулях."""
    config.validate()
    result = HANDLERS[config.command](config)
    echo = {**config.echo(), **result.metadata}
    return render(
        config.format,
        config.command.value,
        echo,
        result.columns,
        result.records,
        json_records=result.json_records,
        summary=result.summary,
    )


def run(config: RunConfig) -> int:
    """
    Выполняет команду и пишет ровно один артефакт. Ошибки валидации и ввода-вывода
    поднимаются наружу, коды выхода назначает CLI.
    """

    text = execute(config)
    path = write_output(text, config.output)
    if path is not None:
        log.info("Результат %s сохранён в %s", config.command.value, path)
    return 0
