"""Plain-text matrix files.

Format: the first non-comment line holds ``rows cols``; each of the next
``rows`` non-comment lines holds ``cols`` whitespace-separated reals.  Lines
whose first non-blank character is ``#`` are ignored, as are blank lines.
Values are written with 17 significant digits so a write/read round trip is
exact.
"""

import math
from pathlib import Path

import numpy as np

from .errors import MatrixFormatError


def _parse_float(tok, line, col):
    try:
        x = float(tok)
    except ValueError:
        raise MatrixFormatError(f"not a number: {tok!r}", line, col) from None
    if not math.isfinite(x):
        raise MatrixFormatError(f"non-finite entry {tok!r}", line, col)
    return x


def _tokens(text):
    """``(token, column)`` pairs, columns 1-based."""
    out = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        j = i
        while j < len(text) and not text[j].isspace():
            j += 1
        out.append((text[i:j], i + 1))
        i = j
    return out


def parse_matrix(text):
    """Parse the text format into a float array."""
    rows = None
    data = []
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        toks = _tokens(raw)
        if rows is None:
            if len(toks) != 2:
                raise MatrixFormatError("header must be 'rows cols'", lineno, toks[0][1])
            dims = []
            for tok, col in toks:
                if not tok.isdigit():
                    raise MatrixFormatError(f"bad dimension {tok!r}", lineno, col)
                dims.append(int(tok))
            rows, cols = dims
            continue
        if len(data) == rows:
            raise MatrixFormatError(f"more than {rows} rows", lineno, toks[0][1])
        if len(toks) != cols:
            col = toks[cols][1] if len(toks) > cols else len(raw.rstrip()) + 1
            raise MatrixFormatError(f"expected {cols} values, found {len(toks)}", lineno, col)
        data.append([_parse_float(tok, lineno, col) for tok, col in toks])
    if rows is None:
        raise MatrixFormatError("missing header", lineno + 1, 1)
    if len(data) != rows:
        raise MatrixFormatError(f"expected {rows} rows, found {len(data)}", lineno + 1, 1)
    return np.array(data, dtype=float).reshape(rows, cols)


def read_matrix(path):
    return parse_matrix(Path(path).read_text(encoding="utf-8"))


def read_symmetric(path):
    """Read a square matrix and symmetrize it.

    Returns
    -------
    a : ndarray
        ``(M + M^T) / 2``.
    asymmetry : float
        ``max |M_ij - M_ji|`` before symmetrizing.
    """
    m = read_matrix(path)
    if m.shape[0] != m.shape[1]:
        raise MatrixFormatError(f"expected a square matrix, got {m.shape[0]}x{m.shape[1]}", 1, 1)
    asym = float(np.max(np.abs(m - m.T))) if m.size else 0.0
    return (m + m.T) / 2, asym


def format_matrix(m):
    m = np.atleast_2d(np.asarray(m, dtype=float))
    lines = [f"{m.shape[0]} {m.shape[1]}"]
    lines += [" ".join(f"{x:.17g}" for x in row) for row in m]
    return "\n".join(lines) + "\n"


def write_matrix(path, m):
    Path(path).write_text(format_matrix(m), encoding="utf-8")


__all__ = ["format_matrix", "parse_matrix", "read_matrix", "read_symmetric", "write_matrix"]
