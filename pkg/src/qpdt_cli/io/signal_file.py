"""CSV and JSON signal files.

CSV is the interchange format: a ``v,re,im`` header and one sample per line,
floats printed with ``repr`` so they read back exactly. JSON adds metadata:

    {"meta": {"mu": 0.5, "domain": [-4.0, 4.0]}, "samples": [[v, re, im], ...]}
"""

import csv
import io
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, Field, ValidationError

from qpdt_cli.core.exceptions import SignalFileError
from qpdt_cli.core.models import SampledSignal

SignalFormat = Literal["csv", "json"]

CSV_HEADER = ["v", "re", "im"]


class SignalMeta(BaseModel):
    mu: float = Field(ge=-0.5)
    domain: tuple[float, float]


class SignalDocument(BaseModel):
    """JSON representation of a SampledSignal."""

    meta: SignalMeta
    samples: list[tuple[float, float, float]] = Field(min_length=1)


def infer_format(path: Path) -> SignalFormat:
    """Format from the file suffix; anything but .json is CSV."""
    return "json" if path.suffix.lower() == ".json" else "csv"


def format_csv(signal: SampledSignal) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for v, value in zip(signal.grid, signal.values):
        writer.writerow([repr(float(v)), repr(float(value.real)), repr(float(value.imag))])
    return buffer.getvalue()


def format_json(signal: SampledSignal) -> str:
    document = SignalDocument(
        meta=SignalMeta(mu=signal.mu, domain=signal.domain),
        samples=[(float(v), float(z.real), float(z.imag)) for v, z in zip(signal.grid, signal.values)],
    )
    return document.model_dump_json(indent=2)


def write_signal(signal: SampledSignal, path: Path | str, fmt: SignalFormat | None = None) -> Path:
    """Write ``signal`` to ``path``; the format defaults to the suffix.

    Raises:
        SignalFileError: If the file cannot be written
    """
    path = Path(path)
    fmt = fmt or infer_format(path)
    text = format_json(signal) if fmt == "json" else format_csv(signal)
    try:
        path.write_text(text)
    except OSError as e:
        raise SignalFileError(f"Cannot write signal file {path}", details={"reason": str(e)}) from e
    return path


def _parse_csv(text: str, mu: float, path: Path) -> SampledSignal:
    rows = [row for row in csv.reader(io.StringIO(text)) if row]
    if not rows or [cell.strip() for cell in rows[0]] != CSV_HEADER:
        raise SignalFileError(f"{path}: expected header 'v,re,im'")
    grid, values = [], []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != 3:
            raise SignalFileError(f"{path}: expected 3 columns", details={"line": lineno})
        try:
            v, re, im = (float(cell) for cell in row)
        except ValueError as e:
            raise SignalFileError(f"{path}: non-numeric value", details={"line": lineno}) from e
        grid.append(v)
        values.append(complex(re, im))
    return _to_signal(grid, values, mu, path)


def _parse_json(text: str, path: Path) -> SampledSignal:
    try:
        document = SignalDocument.model_validate_json(text)
    except ValidationError as e:
        raise SignalFileError(
            f"{path}: not a signal document", details={"errors": e.error_count()}
        ) from e
    grid = [s[0] for s in document.samples]
    values = [complex(s[1], s[2]) for s in document.samples]
    return _to_signal(grid, values, document.meta.mu, path)


def _to_signal(grid: list[float], values: list[complex], mu: float, path: Path) -> SampledSignal:
    try:
        return SampledSignal(grid=grid, values=values, mu=mu)
    except ValidationError as e:
        raise SignalFileError(
            f"{path}: samples do not form a signal",
            details={"reason": e.errors()[0]["msg"]},
        ) from e


def read_signal(path: Path | str, mu: float = 0.0, fmt: SignalFormat | None = None) -> SampledSignal:
    """Read a signal file.

    CSV carries no metadata, so the signal is tagged with ``mu``; JSON files
    use their own ``meta.mu``.

    Raises:
        SignalFileError: If the file is missing or malformed, or the grid is
            not strictly increasing
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise SignalFileError(f"Cannot read signal file {path}", details={"reason": str(e)}) from e
    fmt = fmt or infer_format(path)
    if fmt == "json":
        return _parse_json(text, path)
    return _parse_csv(text, mu, path)
