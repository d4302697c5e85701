"""Настройка потоков консоли: UTF-8 и окончания строк LF."""
from __future__ import annotations

import io
import os
import sys


def _reconfigure(stream: object, newline: str | None) -> object:
    if hasattr(stream, "reconfigure"):
        try:
            stream.reconfigure(encoding="utf-8", errors="replace", newline=newline)  # type: ignore[attr-defined]
            return stream
        except (AttributeError, ValueError, io.UnsupportedOperation):
            pass
    if hasattr(stream, "buffer"):
        try:
            return io.TextIOWrapper(
                stream.buffer,  # type: ignore[attr-defined]
                encoding="utf-8",
                errors="replace",
                newline=newline,
                line_buffering=True,
            )
        except (AttributeError, ValueError):
            pass
    return stream


def setup_console_streams() -> None:
    """
    Переводит stdout и stderr в UTF-8.

    На stdout дополнительно отключается трансляция '\\n' в '\\r\\n' (Windows), чтобы CSV
    и JSON в stdout совпадали байт в байт с файлами.
    """

    sys.stdout = _reconfigure(sys.stdout, newline="\n")  # type: ignore[assignment]
    sys.stderr = _reconfigure(sys.stderr, newline=None)  # type: ignore[assignment]
    os.environ.setdefault("PYTHONIOENCODING", "utf-8")
