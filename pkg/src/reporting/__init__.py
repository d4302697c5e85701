"""
Командная строка: развёртки, сэмплирование, проверки и CHSH с детерминированным выводом CSV/JSON.
"""

from .config import Command, ConfigValidationError, OutputFormat, RunConfig, SimulationDefaults, resolve_seed
from .runner import CommandResult, execute, run
from .writers import render_csv, render_json

__all__ = [
    "Command",
    "CommandResult",
    "ConfigValidationError",
    "OutputFormat",
    "RunConfig",
    "SimulationDefaults",
    "execute",
    "render_csv",
    "render_json",
    "resolve_seed",
    "run",
]
