"""Bit-packed binary matrices and GF(2) bit-vector helpers.

Every matrix row is stored as one Python int, with bit j of ``data[i]``
holding entry (i, j).  A row XOR is then a single arbitrary-precision
integer XOR (word-wise under the hood) and weights come from
``int.bit_count``.  Bit vectors follow the same convention throughout the
package: a plain int plus an explicit length, bit k = component k.

The shared text format for matrices is a header line ``m n nnz`` followed
by ``nnz`` lines ``i j`` giving the 0-indexed coordinates of 1-bits in
row-major order.  Bit vectors serialize as ``0``/``1`` strings, character
k = bit k.
"""

from __future__ import annotations

import io
import os
from typing import Iterable, Iterator


def bits_to_int(bits: Iterable[int]) -> int:
    """Pack an iterable of 0/1 values into an int (element k -> bit k)."""
    value = 0
    for k, b in enumerate(bits):
        if b:
            value |= 1 << k
    return value


def int_to_bits(value: int, length: int) -> list[int]:
    """Unpack the low *length* bits of an int into a list of 0/1 ints."""
    return [(value >> k) & 1 for k in range(length)]


def bit_indices(value: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while value:
        lsb = value & -value
        yield lsb.bit_length() - 1
        value ^= lsb


def parse_bits(s: str) -> tuple[int, int]:
    """Parse a ``0``/``1`` string into (packed value, length).

    Raises:
        ValueError: if the string contains anything but 0 and 1.
    """
    value = 0
    for k, ch in enumerate(s):
        if ch == "1":
            value |= 1 << k
        elif ch != "0":
            raise ValueError(f"invalid bit character {ch!r} at position {k}")
    return value, len(s)


def format_bits(value: int, length: int) -> str:
    """Format the low *length* bits of an int as a ``0``/``1`` string."""
    return "".join("1" if (value >> k) & 1 else "0" for k in range(length))


class BitMatrix:
    """Dense binary matrix over GF(2) with bit-packed rows.

    Attributes:
        rows: number of rows.
        cols: number of columns.
        data: list of ints, one per row; bit j of data[i] is entry (i, j).

    Bits at positions >= cols are never set; the constructor enforces this.
    Zero-dimension matrices are valid.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: list[int] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if data is None:
            data = [0] * rows
        if len(data) != rows:
            raise ValueError(f"expected {rows} packed rows, got {len(data)}")
        for i, row in enumerate(data):
            if row >> cols:
                raise ValueError(f"row {i} has bits beyond column {cols - 1}")
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: int | None = None) -> BitMatrix:
        """Build from an iterable of 0/1 row iterables (e.g. lists of ints)."""
        packed = []
        width = 0
        for row in rows:
            bits = list(row)
            width = max(width, len(bits))
            packed.append(bits_to_int(bits))
        if cols is None:
            cols = width
        return cls(len(packed), cols, packed)

    def get(self, i: int, j: int) -> int:
        return (self.data[i] >> j) & 1

    def set(self, i: int, j: int, value: int) -> None:
        if value:
            self.data[i] |= 1 << j
        else:
            self.data[i] &= ~(1 << j)

    def copy(self) -> BitMatrix:
        return BitMatrix(self.rows, self.cols, list(self.data))

    def to_rows(self) -> list[list[int]]:
        return [int_to_bits(r, self.cols) for r in self.data]

    def row_weight(self, i: int) -> int:
        return self.data[i].bit_count()

    def col_weight(self, j: int) -> int:
        mask = 1 << j
        return sum(1 for r in self.data if r & mask)

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.data)

    def mul_vec(self, v: int) -> int:
        """Matrix-vector product over GF(2); *v* packs a length-cols vector."""
        if v >> self.cols:
            raise ValueError("vector has bits beyond the matrix width")
        out = 0
        for i, row in enumerate(self.data):
            if (row & v).bit_count() & 1:
                out |= 1 << i
        return out

    def mul_transpose(self, other: BitMatrix) -> BitMatrix:
        """Return self @ other^T over GF(2) (shape self.rows x other.rows)."""
        if self.cols != other.cols:
            raise ValueError("column counts differ")
        out = []
        for a in self.data:
            bits = 0
            for j, b in enumerate(other.data):
                if (a & b).bit_count() & 1:
                    bits |= 1 << j
            out.append(bits)
        return BitMatrix(self.rows, other.rows, out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"


def write_matrix_text(m: BitMatrix, path: str | os.PathLike | io.TextIOBase) -> None:
    """Write a matrix in the shared coordinate text format."""
    coords = [(i, j) for i in range(m.rows) for j in bit_indices(m.data[i])]
    lines = [f"{m.rows} {m.cols} {len(coords)}"]
    lines.extend(f"{i} {j}" for i, j in coords)
    text = "\n".join(lines) + "\n"
    if isinstance(path, io.TextIOBase):
        path.write(text)
    else:
        with open(path, "w") as f:
            f.write(text)


def read_matrix_text(path: str | os.PathLike | io.TextIOBase) -> BitMatrix:
    """Read a matrix from the shared coordinate text format."""
    if isinstance(path, io.TextIOBase):
        text = path.read()
    else:
        with open(path) as f:
            text = f.read()
    lines = text.split("\n")
    header = lines[0].split()
    if len(header) != 3:
        raise ValueError("matrix header must be 'rows cols nnz'")
    rows, cols, nnz = (int(x) for x in header)
    m = BitMatrix.zeros(rows, cols)
    count = 0
    for line in lines[1:]:
        if not line.strip():
            continue
        si, sj = line.split()
        i, j = int(si), int(sj)
        if not (0 <= i < rows and 0 <= j < cols):
            raise ValueError(f"coordinate ({i}, {j}) outside {rows}x{cols}")
        m.data[i] |= 1 << j
        count += 1
    if count != nnz:
        raise ValueError(f"header promised {nnz} entries, found {count}")
    return m
