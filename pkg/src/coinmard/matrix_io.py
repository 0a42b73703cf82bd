"""Matrix file formats.

Text ".had": first line the decimal order n, then n lines of exactly n
characters from {+, -}; no trailing whitespace.  Packed binary: 8-byte
little-endian order, then n rows of ceil(n/8) bytes, LSB-first bit order
within each byte.  '-' corresponds to a set bit (entry -1).
"""

from typing import Sequence, Tuple

from .errors import FormatError
from .hadamard import HadamardMatrix


def to_text(n: int, rows: Sequence[int]) -> str:
    lines = [str(n)]
    for r in rows:
        lines.append("".join("-" if (r >> j) & 1 else "+" for j in range(n)))
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Tuple[int, list]:
    """Parse a .had file into (n, rows); raises FormatError with line number."""
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty file", line=1)
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise FormatError(f"bad order line: {lines[0]!r}", line=1)
    if n < 1:
        raise FormatError(f"order must be positive, got {n}", line=1)
    if len(lines) != n + 1:
        raise FormatError(f"expected {n} rows, found {len(lines) - 1}", line=len(lines))
    rows = []
    for i, line in enumerate(lines[1:], start=2):
        if len(line) != n:
            raise FormatError(f"ragged row: {len(line)} chars, expected {n}", line=i)
        row = 0
        for j, c in enumerate(line):
            if c == "-":
                row |= 1 << j
            elif c != "+":
                raise FormatError(f"bad character {c!r}", line=i)
        rows.append(row)
    return n, rows


def to_packed(n: int, rows: Sequence[int]) -> bytes:
    width = (n + 7) // 8
    return n.to_bytes(8, "little") + b"".join(r.to_bytes(width, "little") for r in rows)


def from_packed(data: bytes) -> Tuple[int, list]:
    if len(data) < 8:
        raise FormatError("truncated header")
    n = int.from_bytes(data[:8], "little")
    if n < 1:
        raise FormatError(f"order must be positive, got {n}")
    width = (n + 7) // 8
    if len(data) != 8 + n * width:
        raise FormatError(f"expected {8 + n * width} bytes, found {len(data)}")
    rows = []
    for i in range(n):
        chunk = data[8 + i * width : 8 + (i + 1) * width]
        row = int.from_bytes(chunk, "little")
        if row >> n:
            raise FormatError(f"row {i} has padding bits set")
        rows.append(row)
    return n, rows


def write_text(path, matrix: HadamardMatrix):
    with open(path, "w") as f:
        f.write(to_text(matrix.n, matrix.rows))


def read_text(path) -> Tuple[int, list]:
    with open(path) as f:
        return from_text(f.read())


def write_packed(path, matrix: HadamardMatrix):
    with open(path, "wb") as f:
        f.write(to_packed(matrix.n, matrix.rows))


def read_packed(path) -> Tuple[int, list]:
    with open(path, "rb") as f:
        return from_packed(f.read())


def load_verified(path) -> HadamardMatrix:
    """Read a text matrix file and verify it (raises VerificationError if bad)."""
    n, rows = read_text(path)
    return HadamardMatrix(n, tuple(rows))
