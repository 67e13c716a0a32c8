"""CSV / JSON rendering of reports, sweeps and trajectories."""

from __future__ import annotations

import csv
import enum
import io
import json
from typing import Iterable, Sequence

from pydantic import BaseModel

from app.schemas.bifurcation import SweepPoint

# Column definitions: (header_name, field_name)
SWEEP_COLUMNS = [
    ("param", "param"),
    ("value", "value"),
    ("feasible", "feasible"),
    ("max_re_lambda", "max_re_lambda"),
    ("a1", "a1"),
    ("a3", "a3"),
    ("hurwitz_margin", "hurwitz_margin"),
    ("f1_stable", "f1_stable"),
]


def format_float(value: float) -> str:
    """17 significant digits, locale independent."""
    return format(value, ".17g")


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, enum.Enum):
        return str(value.value)
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def _render(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buffer.getvalue()


def sweep_csv(points: list[SweepPoint]) -> str:
    """Sweep table with header param,value,feasible,max_re_lambda,a1,a3,hurwitz_margin,f1_stable."""
    header = [name for name, _field in SWEEP_COLUMNS]
    rows = ([getattr(pt, field) for _name, field in SWEEP_COLUMNS] for pt in points)
    return _render(header, rows)


def trajectory_csv(header: Sequence[str], rows: Iterable[Sequence[float]]) -> str:
    return _render(header, rows)


def report_json(data: BaseModel | list[BaseModel]) -> str:
    """Pretty JSON; floats keep their shortest round-trip representation."""
    if isinstance(data, list):
        payload = [item.model_dump(mode="json") for item in data]
    else:
        payload = data.model_dump(mode="json")
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"
