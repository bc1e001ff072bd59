"""Report documents and their JSON / CSV / text renderings.

Every rendering is a pure function of the document. JSON output is
canonical: sorted keys, floats rounded to 12 significant digits, so equal
inputs always give byte-identical text.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List

from .errors import UsageError

SCHEMA_VERSION = 1
FORMATS = ("json", "csv", "table")

# column order for the tabular payload of each command
ROW_COLUMNS = {
    "bv": ["outcome", "probability"],
    "equivalence": ["k", "equal"],
    "scan": ["assignment", "family_classical", "classical_members", "complexity"],
    "table": ["input", "output"],
}


@dataclass
class ReportDocument:
    command: str
    params: Dict[str, Any]
    results: Dict[str, Any]
    stats: Dict[str, Any] = field(default_factory=dict)
    warnings: List[str] = field(default_factory=list)
    schema_version: int = SCHEMA_VERSION

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "params": self.params,
            "results": self.results,
            "stats": self.stats,
            "warnings": list(self.warnings),
        }

    @classmethod
    def from_dict(cls, obj: Dict[str, Any]) -> "ReportDocument":
        return cls(
            command=obj["command"],
            params=obj["params"],
            results=obj["results"],
            stats=obj.get("stats", {}),
            warnings=obj.get("warnings", []),
            schema_version=obj.get("schema_version", SCHEMA_VERSION),
        )


def _canonical(value):
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite float {value!r} cannot be rendered")
        rounded = float(f"{value:.12g}")
        return 0.0 if rounded == 0 else rounded
    if isinstance(value, dict):
        return {str(k): _canonical(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_canonical(v) for v in value]
    if hasattr(value, "item"):  # numpy scalars
        return _canonical(value.item())
    raise TypeError(f"cannot render value of type {type(value).__name__}")


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def render_json(doc: ReportDocument) -> str:
    return json.dumps(_canonical(doc.to_dict()), sort_keys=True, indent=2) + "\n"


def render_csv(doc: ReportDocument) -> str:
    columns = ROW_COLUMNS.get(doc.command)
    if columns is None or "rows" not in doc.results:
        raise UsageError(f"csv output is not available for '{doc.command}' (non-tabular result)")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in doc.results["rows"]:
        writer.writerow([_cell(_canonical(row.get(c))) for c in columns])
    return buf.getvalue()


def _witness_lines(node: dict, indent: str = "") -> List[str]:
    if "leaf" in node:
        return [f"{indent}=> k = {node['leaf']}"]
    lines = [f"{indent}query {node['query']}"]
    for answer, child in node["branches"].items():
        lines.append(f"{indent}  answer {answer}:")
        lines.extend(_witness_lines(child, indent + "    "))
    return lines


def render_table(doc: ReportDocument) -> str:
    lines = [f"oracle-lens {doc.command}"]
    for key in sorted(doc.params):
        lines.append(f"  {key}: {_cell(_canonical(doc.params[key]))}")
    lines.append("")
    scalars = {k: v for k, v in doc.results.items()
               if k not in ("rows", "witness") and not isinstance(v, (dict, list))}
    for key in sorted(scalars):
        lines.append(f"{key}: {_cell(_canonical(scalars[key]))}")
    for key in sorted(k for k, v in doc.results.items() if k != "rows" and isinstance(v, (dict, list))
                      and k != "witness"):
        lines.append(f"{key}: {json.dumps(_canonical(doc.results[key]), sort_keys=True)}")
    rows = doc.results.get("rows")
    columns = ROW_COLUMNS.get(doc.command)
    if rows is not None and columns:
        cells = [columns] + [[_cell(_canonical(r.get(c))) for c in columns] for r in rows]
        widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
        lines.append("")
        for j, row in enumerate(cells):
            lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
            if j == 0:
                lines.append("  ".join("-" * w for w in widths))
    if doc.results.get("witness"):
        lines.append("")
        lines.append("witness:")
        lines.extend(_witness_lines(doc.results["witness"], "  "))
    if doc.stats:
        lines.append("")
        for key in sorted(doc.stats):
            lines.append(f"[{key}: {_cell(_canonical(doc.stats[key]))}]")
    for w in doc.warnings:
        lines.append(f"warning: {w}")
    text = "\n".join(ln for i, ln in enumerate(lines) if ln or (i and lines[i - 1]))
    return text.rstrip("\n") + "\n"


def render(doc: ReportDocument, fmt: str = "json") -> str:
    if fmt == "json":
        return render_json(doc)
    if fmt == "csv":
        return render_csv(doc)
    if fmt == "table":
        return render_table(doc)
    raise UsageError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
