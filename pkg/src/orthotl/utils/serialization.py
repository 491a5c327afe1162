"""JSON and CSV output for the CLI. Scalars are written with their own JSON encoding, or as strings in CSV."""

from __future__ import annotations

import io
import json
from pathlib import Path
from typing import Any, Iterable, Mapping

import pandas as pd

from orthotl.utils.log import get_logger

logger = get_logger(__name__)


def to_json_text(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=False)


def to_csv_text(records: Iterable[Mapping[str, Any]]) -> str:
    df = pd.DataFrame([{k: _cell(v) for k, v in r.items()} for r in records])
    buf = io.StringIO()
    df.to_csv(buf, index=False)
    return buf.getvalue()


def _cell(value: Any) -> Any:
    if isinstance(value, (int, float, bool)) or value is None:
        return value
    if isinstance(value, (list, tuple)):
        return " ".join(str(x) for x in value)
    return str(value)


def write_output(text: str, out: str | Path | None) -> None:
    """Write to ``out`` or to stdout."""
    if out is None:
        print(text, end="" if text.endswith("\n") else "\n")
        return
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
    logger.info("wrote %s", path)
