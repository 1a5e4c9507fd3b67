"""Text format for tridiagonal and bidiagonal matrices.

Four lines: a kind tag ("tri" or "bidiag"), the dimension m, the m diagonal
entries, and the m-1 off/sub-diagonal entries. Numbers are written with
shortest-round-trip decimal formatting (up to 17 significant digits), so a
dump/parse cycle reproduces the matrix bit for bit.
"""

from __future__ import annotations

from .core import LowerBidiagonal, SymTridiagonal
from .errors import FormatError

KIND_TRIDIAGONAL = "tri"
KIND_BIDIAGONAL = "bidiag"


def format_float(x: float) -> str:
    """Shortest decimal string that round-trips the double exactly."""
    return repr(float(x))


def format_matrix(mat: SymTridiagonal | LowerBidiagonal) -> str:
    if isinstance(mat, SymTridiagonal):
        kind, band = KIND_TRIDIAGONAL, mat.offdiag
    elif isinstance(mat, LowerBidiagonal):
        kind, band = KIND_BIDIAGONAL, mat.sub
    else:
        raise TypeError(f"cannot format {type(mat).__name__}")
    return "\n".join(
        [
            kind,
            str(mat.m),
            " ".join(format_float(v) for v in mat.diag),
            " ".join(format_float(v) for v in band),
        ]
    ) + "\n"


def _parse_floats(line: str, count: int, what: str):
    parts = line.split()
    if len(parts) != count:
        raise FormatError(f"expected {count} {what} entries, got {len(parts)}")
    try:
        return [float(p) for p in parts]
    except ValueError as exc:
        raise FormatError(f"bad {what} entry: {exc}") from None


def parse_matrix(text: str) -> SymTridiagonal | LowerBidiagonal:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if len(lines) != 4:
        raise FormatError(f"expected 4 nonempty lines, got {len(lines)}")
    kind = lines[0]
    if kind not in (KIND_TRIDIAGONAL, KIND_BIDIAGONAL):
        raise FormatError(f"unknown matrix kind {kind!r}")
    try:
        m = int(lines[1])
    except ValueError:
        raise FormatError(f"bad dimension line {lines[1]!r}") from None
    if m < 2:
        raise FormatError(f"dimension must be >= 2, got {m}")
    diag = _parse_floats(lines[2], m, "diagonal")
    band = _parse_floats(lines[3], m - 1, "band")
    try:
        if kind == KIND_TRIDIAGONAL:
            return SymTridiagonal(diag, band)
        return LowerBidiagonal(diag, band)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def load_matrix(path) -> SymTridiagonal | LowerBidiagonal:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def save_matrix(mat: SymTridiagonal | LowerBidiagonal, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_matrix(mat))
