"""Render command results as JSON, CSV or plain text."""

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from .exact_core import Interval, decimal_display, format_rational
from .models import Certificate


def to_jsonable(value: Any) -> Any:
    """Convert rationals, intervals and model objects to JSON-ready values."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    raise TypeError(f"Cannot serialise {type(value).__name__}")


def _cell(value: Any) -> str:
    value = to_jsonable(value)
    if isinstance(value, list):
        return ",".join(str(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True)
    return str(value)


@dataclass
class Report:
    """Result of one command.

    ``rows`` and ``header`` feed the CSV form; ``certificate`` decides the
    exit status.
    """

    payload: Dict[str, Any] = field(default_factory=dict)
    header: Optional[List[str]] = None
    rows: Optional[List[Sequence[Any]]] = None
    certificate: Optional[Certificate] = None

    @property
    def verified(self) -> bool:
        return self.certificate is None or self.certificate.verified

    def document(self, decimals: Optional[int] = None) -> Dict[str, Any]:
        doc = dict(self.payload)
        if self.certificate is not None:
            doc.update(self.certificate.to_dict())
        if self.rows is not None and self.header is not None and "rows" not in doc:
            doc["rows"] = [dict(zip(self.header, row)) for row in self.rows]
        if decimals is not None:
            display = _display_section(doc, decimals)
            if display:
                doc["display"] = display
        return to_jsonable(doc)


def _display_section(doc: Dict[str, Any], decimals: int) -> Dict[str, str]:
    out: Dict[str, str] = {}
    for key, value in doc.items():
        if isinstance(value, Fraction):
            out[key] = decimal_display(value, decimals)
        elif isinstance(value, Interval):
            out[key] = (
                f"[{decimal_display(value.lo, decimals)}, {decimal_display(value.hi, decimals)}]"
            )
    return out


def render(report: Report, fmt: str = "json", decimals: Optional[int] = None) -> str:
    if fmt == "json":
        return json.dumps(report.document(decimals), indent=2, sort_keys=True)
    if fmt == "csv":
        return _render_csv(report)
    if fmt == "text":
        return _render_text(report, decimals)
    raise ValueError(f"Unknown output format {fmt!r}")


def _render_csv(report: Report) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if report.rows is not None and report.header is not None:
        writer.writerow(report.header)
        writer.writerows([_cell(c) for c in row] for row in report.rows)
    elif report.certificate is not None:
        writer.writerow(["label", "value"])
        for w in report.certificate.witnesses:
            writer.writerow([w.label, _cell(w.value)])
    else:
        writer.writerow(["key", "value"])
        for key, value in report.payload.items():
            writer.writerow([key, _cell(value)])
    return buffer.getvalue().rstrip("\n")


def _render_text(report: Report, decimals: Optional[int]) -> str:
    lines: List[str] = []
    cert = report.certificate
    if cert is not None:
        mark = "✓" if cert.verified else "✗"
        lines.append(f"{mark} {cert.name}: {'verified' if cert.verified else 'FAILED'}")
        for w in cert.witnesses:
            lines.append(f"  {w.label}: {_cell(w.value)}")
        if cert.notes:
            lines.append(f"  note: {cert.notes}")
    for key, value in report.payload.items():
        line = f"{key}: {_cell(value)}"
        if decimals is not None and isinstance(value, Fraction):
            line += f"  (~{decimal_display(value, decimals)})"
        lines.append(line)
    if report.rows is not None and report.header is not None:
        lines.append("  ".join(report.header))
        lines.extend("  ".join(_cell(c) for c in row) for row in report.rows)
    return "\n".join(lines)
