"""Reading and writing matrix files.

Two formats are accepted on input.

JSON (written by :func:`write_matrix`)::

    {"n": 2,
     "entries": [[[0.0, 0.0], [1.0, 0.0]],
                 [[0.0, 0.0], [0.0, 0.0]]],
     "metadata": {"name": "J"}}

``entries[i][j]`` is the ``[re, im]`` pair of ``A[i, j]``. Floats are
written with ``repr`` so a write/read round trip is bit-exact.

Plain text: one matrix row per line holding ``n`` pairs ``re<TAB>im``
(any whitespace separates the numbers). Blank lines and ``#`` comments are
ignored.
"""
from __future__ import annotations

import io
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import InvalidMatrixError

SCHEMA = "numrange.matrix/1"


class MatrixParseError(InvalidMatrixError):
    def __init__(self, msg, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + msg)
        self.line = line


@dataclass
class MatrixFile:
    matrix: np.ndarray
    metadata: dict = field(default_factory=dict)

    @property
    def n(self):
        return self.matrix.shape[0]


def _check_entries(M: np.ndarray, line_of=None):
    bad = np.argwhere(~np.isfinite(M))
    if bad.size:
        i, j = (int(t) for t in bad[0])
        raise MatrixParseError(f"non-finite entry at ({i}, {j})",
                               line_of(i) if line_of else None)


def _line_of_row(text: str, row: int):
    # best effort: rows of "entries" are usually written one per line
    lines = text.splitlines()
    starts = [k + 1 for k, ln in enumerate(lines) if ln.lstrip().startswith("[[")]
    return starts[row] if row < len(starts) else None


def parse_json(text: str) -> MatrixFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixParseError(exc.msg + f" (column {exc.colno})", exc.lineno)
    if not isinstance(doc, dict) or "entries" not in doc:
        raise MatrixParseError("JSON matrix file needs an 'entries' field", 1)
    rows = doc["entries"]
    if not isinstance(rows, list) or not rows:
        raise MatrixParseError("'entries' must be a non-empty list of rows", 1)
    n = doc.get("n", len(rows))
    if n != len(rows):
        raise MatrixParseError(f"'n' is {n} but there are {len(rows)} rows", 1)
    M = np.empty((n, n), dtype=complex)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            got = len(row) if isinstance(row, list) else type(row).__name__
            raise MatrixParseError(f"row {i} must hold {n} entries, got {got} (non-square?)",
                                   _line_of_row(text, i))
        for j, pair in enumerate(row):
            if (not isinstance(pair, list) or len(pair) != 2
                    or not all(isinstance(t, (int, float)) and not isinstance(t, bool)
                               for t in pair)):
                raise MatrixParseError(f"entry ({i}, {j}) must be a [re, im] pair of numbers",
                                       _line_of_row(text, i))
            M[i, j] = complex(float(pair[0]), float(pair[1]))
    _check_entries(M, lambda i: _line_of_row(text, i))
    meta = doc.get("metadata") or {}
    if not isinstance(meta, dict):
        raise MatrixParseError("'metadata' must be an object", None)
    return MatrixFile(M, meta)


def parse_text(text: str) -> MatrixFile:
    rows, lines = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            vals = [float(t) for t in body.split()]
        except ValueError as exc:
            raise MatrixParseError(str(exc), lineno)
        if len(vals) % 2:
            raise MatrixParseError("odd number of values: expected re/im pairs", lineno)
        rows.append(vals)
        lines.append(lineno)
    if not rows:
        raise MatrixParseError("no matrix rows found", None)
    n = len(rows)
    for vals, lineno in zip(rows, lines):
        if len(vals) != 2 * n:
            raise MatrixParseError(
                f"row has {len(vals) // 2} entries but the matrix has {n} rows (non-square?)",
                lineno)
    arr = np.array(rows, dtype=float)
    M = arr[:, 0::2] + 1j * arr[:, 1::2]
    _check_entries(M, lambda i: lines[i])
    return MatrixFile(M, {})


def parse_matrix_text(text: str) -> MatrixFile:
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def read_matrix(source) -> MatrixFile:
    """Read a matrix from a path, ``"-"`` (stdin) or an open text stream."""
    if hasattr(source, "read"):
        text = source.read()
    elif str(source) == "-":
        text = sys.stdin.read()
    else:
        path = Path(source)
        if not path.exists():
            raise MatrixParseError(f"no such file: {path}")
        text = path.read_text()
    return parse_matrix_text(text)


def parse_matrix(source) -> np.ndarray:
    """Path or inline text to a complex matrix."""
    if isinstance(source, str) and ("\n" in source or source.lstrip().startswith("{")):
        return parse_matrix_text(source).matrix
    return read_matrix(source).matrix


def _num(x: float):
    x = float(x)
    if not math.isfinite(x):
        raise InvalidMatrixError("cannot write non-finite entries")
    return x


def dumps_matrix(A, metadata: dict | None = None) -> str:
    M = np.asarray(A, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise InvalidMatrixError("only square matrices can be written")
    out = io.StringIO()
    out.write("{\n")
    out.write(f'  "schema": "{SCHEMA}",\n')
    out.write(f'  "n": {M.shape[0]},\n')
    out.write('  "entries": [\n')
    for i, row in enumerate(M):
        cells = ", ".join(json.dumps([_num(z.real), _num(z.imag)]) for z in row)
        sep = "," if i < M.shape[0] - 1 else ""
        out.write(f"    [{cells}]{sep}\n")
    out.write("  ],\n")
    out.write('  "metadata": ' + json.dumps(metadata or {}, sort_keys=True) + "\n")
    out.write("}\n")
    return out.getvalue()


def write_matrix(dest, A, metadata: dict | None = None):
    text = dumps_matrix(A, metadata)
    if dest is None or str(dest) == "-":
        sys.stdout.write(text)
    else:
        Path(dest).write_text(text)
    return text
