"""Local filesystem input / output."""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Optional

import structlog

from app.errors import ConfigError

logger = structlog.get_logger(__name__)


def read_json(path: Path) -> dict:
    """Load a JSON object (raises ConfigError if unreadable)."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise ConfigError(f"Config not found: {path}") from exc
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"Unreadable config {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"Config {path} must hold a JSON object")
    return data


# ---------------------------------------------------------------------------
# File operations
# ---------------------------------------------------------------------------

def write_text(path: Optional[Path], text: str) -> Optional[Path]:
    """Write ``text`` to ``path``, or to stdout when no path is given."""
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return None
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"Cannot write {path}: {exc}") from exc
    logger.info("output_written", path=str(path), bytes=len(text.encode("utf-8")))
    return path


def verdict_path(trajectory_path: Path) -> Path:
    """``<stem>.verdict.json`` next to a trajectory file."""
    trajectory_path = Path(trajectory_path)
    return trajectory_path.with_name(f"{trajectory_path.stem}.verdict.json")
