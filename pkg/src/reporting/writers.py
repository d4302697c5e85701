from __future__ import annotations

import json
import math
import sys
from pathlib import Path
from typing import Mapping, Sequence

import pandas as pd

from .config import SCHEMA_VERSION, OutputFormat


FLOAT_FORMAT = "%.12g"


def _round(value: object) -> object:
    """12 значащих цифр для чисел; NaN превращается в null."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return None if math.isnan(value) else float(FLOAT_FORMAT % value)
    if isinstance(value, Mapping):
        return {key: _round(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round(item) for item in value]
    return value


def render_csv(columns: Sequence[str], records: Sequence[Mapping[str, object]]) -> str:
    """CSV с заголовком, разделитель ',', точка как десятичный разделитель, окончания строк LF."""
    rows = [{column: record.get(column) for column in columns} for record in records]
    frame = pd.DataFrame.from_records(rows, columns=list(columns))
    for column in frame.columns:
        if frame[column].dtype == bool:
            frame[column] = frame[column].map({True: "true", False: "false"})
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n", na_rep="")


def render_json(
    command: str,
    config: Mapping[str, object],
    records: Sequence[Mapping[str, object]],
    summary: Mapping[str, object] | None = None,
) -> str:
    payload: dict[str, object] = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "config": _round(dict(config)),
        "data": [_round(dict(record)) for record in records],
    }
    if summary is not None:
        payload["summary"] = _round(dict(summary))
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"


def render(
    fmt: OutputFormat,
    command: str,
    config: Mapping[str, object],
    columns: Sequence[str],
    records: Sequence[Mapping[str, object]],
    json_records: Sequence[Mapping[str, object]] | None = None,
    summary: Mapping[str, object] | None = None,
) -> str:
    if OutputFormat(fmt) is OutputFormat.CSV:
        return render_csv(columns, records)
    return render_json(command, config, json_records if json_records is not None else records, summary)


def write_output(text: str, output: Path | None) -> Path | None:
    """Записывает ровно один артефакт: в файл или в stdout."""
    if output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return None
    output.parent.mkdir(parents=True, exist_ok=True)
    with output.open("w", encoding="utf-8", newline="") as fp:
        fp.write(text)
    return output
