"""Deterministic report emission: report.json, profile CSVs, certificates.

Every numeric value is serialized through the fixed format %.12e, which
makes reports byte-identical across runs for identical configuration and
seed (and keeps non-finite sentinels like -inf representable in strict
JSON).  Files are assembled fully in memory and written in one pass, so
a failing run never leaves partial output.
"""

from __future__ import annotations

import json
import numbers
import os
from pathlib import Path

import numpy as np

__all__ = [
    "OutputError",
    "fmt_float",
    "jsonable",
    "REPORT_SCHEMA",
    "emit_report",
]


class OutputError(RuntimeError):
    """The output directory cannot be created or written."""


def fmt_float(x: float) -> str:
    return f"{float(x):.12e}"


def jsonable(obj):
    """Recursively convert a result tree to JSON-safe values.

    Floats (including numpy scalars) become %.12e strings; arrays become
    lists; dict keys are stringified.
    """
    if obj is None or isinstance(obj, (bool, str, int)):
        return obj
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, numbers.Integral):
        return int(obj)
    if isinstance(obj, numbers.Real):
        return fmt_float(obj)
    if isinstance(obj, np.ndarray):
        return [jsonable(v) for v in obj.tolist()]
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj)!r}")


_SCI_NUMBER = {"type": "string", "pattern": r"^-?(inf|nan|\d\.\d{12}e[+-]\d{2,3})$"}

REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["experiment", "config", "checks", "summary", "pass"],
    "properties": {
        "experiment": {"type": "string"},
        "config": {"type": "object"},
        "checks": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["name", "claim", "passed", "failed"],
                "properties": {
                    "name": {"type": "string"},
                    "claim": {"type": "string"},
                    "passed": {"type": "integer", "minimum": 0},
                    "failed": {"type": "integer", "minimum": 0},
                },
            },
        },
        "summary": {"type": "object"},
        "pass": {"type": "boolean"},
    },
}

CERTIFICATE_FIELDS = ("check", "seed", "lhs", "rhs", "margin", "pass")


def _certificate_line(record: dict) -> str:
    missing = [k for k in CERTIFICATE_FIELDS if k not in record]
    if missing:
        raise ValueError(f"certificate record missing fields: {missing}")
    ordered = {k: jsonable(record[k]) for k in CERTIFICATE_FIELDS}
    return json.dumps(ordered, sort_keys=True)


def emit_report(result, out_dir) -> list[Path]:
    """Write report.json, certificates.jsonl, and per-profile CSV files.

    `result` is an ExperimentResult; raises ValueError on empty results
    and OutputError when the directory cannot be written.  Output is
    byte-deterministic for identical results.
    """
    if not result.checks:
        raise ValueError("refusing to emit an empty report")
    report = {
        "experiment": result.experiment,
        "config": jsonable(result.config),
        "checks": [
            {
                "name": c.name,
                "claim": c.claim,
                "passed": int(c.passed_count),
                "failed": int(c.failed_count),
            }
            for c in result.checks
        ],
        "summary": jsonable(result.summary),
        "pass": bool(result.passed),
    }
    files: dict[str, str] = {
        "report.json": json.dumps(report, sort_keys=True, indent=2) + "\n",
        "certificates.jsonl": "".join(
            _certificate_line(cert.to_record()) + "\n" for cert in result.certificates
        ),
    }
    for name, profile in result.profiles:
        files[f"profile_{name}.csv"] = profile.csv_text()
    for name, text in getattr(result, "tables", {}).items():
        files[f"{name}.csv"] = text

    out = Path(out_dir)
    try:
        os.makedirs(out, exist_ok=True)
        probe = out / ".write-probe"
        probe.write_text("")
        probe.unlink()
    except OSError as exc:
        raise OutputError(f"cannot write to {out}: {exc}") from exc
    written = []
    for name, text in files.items():
        path = out / name
        path.write_text(text, encoding="ascii")
        written.append(path)
    return written
