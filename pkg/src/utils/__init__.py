"""Утилиты проекта biphoton-interferometry."""

from .encoding import setup_console_streams

__all__ = ["setup_console_streams"]
