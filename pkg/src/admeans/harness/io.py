"""Matrix file I/O.

JSON layout (UTF-8)::

    {"rows": n, "cols": n, "data": [[re, im], ...]}   # row-major

CSV layout: ``n*n`` lines of ``re,im`` in row-major order; ``n`` is inferred.
"""

from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path

import numpy as np


class MatrixFileError(ValueError):
    pass


def to_matrix_dict(M) -> dict:
    M = np.asarray(M, dtype=np.complex128)
    if M.ndim != 2:
        raise MatrixFileError(f"expected a 2-d matrix, got shape {M.shape}")
    return {
        "rows": int(M.shape[0]),
        "cols": int(M.shape[1]),
        "data": [[float(z.real), float(z.imag)] for z in M.ravel()],
    }


def from_matrix_dict(obj: dict) -> np.ndarray:
    try:
        rows, cols, data = int(obj["rows"]), int(obj["cols"]), obj["data"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MatrixFileError(f"malformed matrix object: {exc}") from exc
    if rows != cols or rows < 1:
        raise MatrixFileError(f"matrix must be square and non-empty, got {rows}x{cols}")
    if len(data) != rows * cols:
        raise MatrixFileError(f"expected {rows * cols} entries, got {len(data)}")
    try:
        values = np.array([complex(float(re), float(im)) for re, im in data])
    except (TypeError, ValueError) as exc:
        raise MatrixFileError(f"bad entry: {exc}") from exc
    if not np.all(np.isfinite(values)):
        raise MatrixFileError("non-finite entry")
    return values.reshape(rows, cols)


def dumps_json(M) -> str:
    return json.dumps(to_matrix_dict(M))


def loads_json(text: str) -> np.ndarray:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFileError(f"invalid JSON: {exc}") from exc
    return from_matrix_dict(obj)


def dumps_csv(M) -> str:
    M = np.asarray(M, dtype=np.complex128)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise MatrixFileError("CSV format holds square matrices only")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for z in M.ravel():
        writer.writerow([repr(float(z.real)), repr(float(z.imag))])
    return buf.getvalue()


def loads_csv(text: str) -> np.ndarray:
    rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
    n = math.isqrt(len(rows))
    if n < 1 or n * n != len(rows):
        raise MatrixFileError(f"CSV must have a perfect-square number of lines, got {len(rows)}")
    data = []
    for r in rows:
        if len(r) != 2:
            raise MatrixFileError(f"expected 're,im' per line, got {r!r}")
        data.append(r)
    return from_matrix_dict({"rows": n, "cols": n, "data": data})


def read_matrix(path) -> np.ndarray:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".csv":
        return loads_csv(text)
    return loads_json(text)


def write_matrix(path, M) -> None:
    path = Path(path)
    text = dumps_csv(M) if path.suffix.lower() == ".csv" else dumps_json(M) + "\n"
    path.write_text(text, encoding="utf-8")
