"""Text serialization for dense complex matrices.

Format
------
* Header line: ``n <rows> <cols>``.
* Then ``rows`` data lines, each with ``cols`` whitespace-separated
  ``re,im`` tokens (decimal floats).
* Lines whose first non-blank character is ``#`` are comments; blank
  lines are ignored.

Entries are emitted with 17 significant digits, so emit/parse round trips
are exact in binary64.
"""

from __future__ import annotations

import math
import os
import re
from typing import IO, Any

from .errors import ParseError, RaggedRowError
from .matrix import ComplexDenseMatrix, as_complex_array

__all__ = ["parse_matrix_file", "parse_matrix_text", "emit_matrix_file", "matrix_to_text"]

_HEADER_RE = re.compile(r"^\s*n\s+(\d+)\s+(\d+)\s*$")
_TOKEN_RE = re.compile(r"\S+")
_ENTRY_RE = re.compile(
    r"^([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?),"
    r"([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)$"
)


def _significant_lines(text: str):
    """Yield (line_number, line) pairs skipping blanks and comment lines."""
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.lstrip()
        if not stripped or stripped.startswith("#"):
            continue
        yield number, line


def parse_matrix_text(text: str) -> ComplexDenseMatrix:
    """Parse matrix file content from a string.

    Raises
    ------
    ParseError
        With 1-based line (and column, where applicable) on any malformed
        header, token, or trailing content.
    RaggedRowError
        If a data line has the wrong number of entries (a
        :class:`~growthcert.errors.ParseError` that is also a
        :class:`~growthcert.errors.DimensionMismatch`).
    """
    lines = _significant_lines(text)
    try:
        header_no, header = next(lines)
    except StopIteration:
        raise ParseError("empty input: expected a header line 'n <rows> <cols>'") from None
    match = _HEADER_RE.match(header)
    if match is None:
        raise ParseError(
            f"malformed header {header.strip()!r}: expected 'n <rows> <cols>'",
            line=header_no,
            column=1,
        )
    rows, cols = int(match.group(1)), int(match.group(2))
    if rows < 1 or cols < 1:
        raise ParseError(
            f"header declares an empty {rows}x{cols} matrix", line=header_no, column=1
        )

    entries: list[list[complex]] = []
    for _ in range(rows):
        try:
            line_no, line = next(lines)
        except StopIteration:
            raise ParseError(
                f"unexpected end of input: got {len(entries)} of {rows} data rows"
            ) from None
        row: list[complex] = []
        tokens = list(_TOKEN_RE.finditer(line))
        for token in tokens:
            if len(row) == cols:
                raise RaggedRowError(
                    f"row {len(entries) + 1} has more than {cols} entries",
                    line=line_no,
                    column=token.start() + 1,
                )
            entry = _ENTRY_RE.match(token.group())
            if entry is None:
                raise ParseError(
                    f"malformed entry {token.group()!r}: expected 're,im'",
                    line=line_no,
                    column=token.start() + 1,
                )
            real, imag = float(entry.group(1)), float(entry.group(2))
            if not (math.isfinite(real) and math.isfinite(imag)):
                raise ParseError(
                    f"non-finite entry {token.group()!r}",
                    line=line_no,
                    column=token.start() + 1,
                )
            row.append(complex(real, imag))
        if len(row) != cols:
            raise RaggedRowError(
                f"row {len(entries) + 1} has {len(row)} entries, expected {cols}",
                line=line_no,
                column=len(line) + 1,
            )
        entries.append(row)

    for line_no, line in lines:
        raise ParseError(
            f"unexpected content after the last data row: {line.strip()!r}",
            line=line_no,
            column=1,
        )
    return ComplexDenseMatrix(entries)


def parse_matrix_file(source: str | os.PathLike | IO[str]) -> ComplexDenseMatrix:
    """Parse a matrix from a file path or a readable text stream."""
    if hasattr(source, "read"):
        return parse_matrix_text(source.read())
    with open(source, "r", encoding="utf-8") as handle:
        return parse_matrix_text(handle.read())


def matrix_to_text(matrix: Any, comment: str | None = None) -> str:
    """Serialize a matrix to the text format, 17 significant digits.

    ``comment``, if given, is emitted as leading ``#`` lines (one per
    newline-separated piece).
    """
    a = as_complex_array(matrix)
    rows, cols = a.shape
    out: list[str] = []
    if comment:
        out.extend(f"# {piece}".rstrip() for piece in comment.splitlines())
    out.append(f"n {rows} {cols}")
    for i in range(rows):
        out.append(
            " ".join(f"{a[i, j].real:.17g},{a[i, j].imag:.17g}" for j in range(cols))
        )
    return "\n".join(out) + "\n"


def emit_matrix_file(
    matrix: Any,
    destination: str | os.PathLike | IO[str] | None = None,
    comment: str | None = None,
) -> str:
    """Serialize a matrix and optionally write it to a path or text stream.

    Returns the serialized text either way.
    """
    text = matrix_to_text(matrix, comment=comment)
    if destination is not None:
        if hasattr(destination, "write"):
            destination.write(text)
        else:
            with open(destination, "w", encoding="utf-8") as handle:
                handle.write(text)
    return text
