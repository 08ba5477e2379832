"""Dense bit-packed linear algebra over GF(2).

Matrices are stored row-major with one arbitrary-precision integer per
row; bit j of a row word is the entry in column j (little-endian bit
order within the word).  Values are immutable; every operation returns a
new value.  Elimination always takes the first nonzero pivot in
row-major scan order, so all derived objects are reproducible
byte-for-byte.

Empty matrices (0 rows and/or 0 columns) are legal everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


def iter_bits(word: int) -> Iterator[int]:
    """Yield the positions of the set bits of a nonnegative int, ascending."""
    while word:
        low = word & -word
        yield low.bit_length() - 1
        word ^= low


@dataclass(frozen=True)
class BitVector:
    """A length-n vector over GF(2), packed into a single int."""

    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("negative length")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits set beyond vector length")

    @classmethod
    def from_list(cls, values: Sequence[int]) -> "BitVector":
        bits = 0
        for j, v in enumerate(values):
            if v & 1:
                bits |= 1 << j
        return cls(len(values), bits)

    def get(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise IndexError(j)
        return (self.bits >> j) & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def to_list(self) -> list[int]:
        return [(self.bits >> j) & 1 for j in range(self.length)]

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise ValueError("length mismatch")
        return BitVector(self.length, self.bits ^ other.bits)


@dataclass(frozen=True)
class BitMatrix:
    """A rows x cols matrix over GF(2) with bit-packed rows."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimension")
        if len(self.data) != self.rows:
            raise ValueError("row count does not match data")
        for w in self.data:
            if w < 0 or w >> self.cols:
                raise ValueError("bits set beyond column count")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "BitMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        data = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
            w = 0
            for j, v in enumerate(r):
                if v & 1:
                    w |= 1 << j
            data.append(w)
        return cls(len(rows), cols, tuple(data))

    @classmethod
    def from_bits(cls, rows: int, cols: int, data: Sequence[int]) -> "BitMatrix":
        return cls(rows, cols, tuple(data))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def vstack(cls, blocks: Sequence["BitMatrix"]) -> "BitMatrix":
        if not blocks:
            return cls.zeros(0, 0)
        cols = blocks[0].cols
        data: list[int] = []
        for b in blocks:
            if b.cols != cols:
                raise ValueError("column mismatch in vstack")
            data.extend(b.data)
        return cls(len(data), cols, tuple(data))

    # -- element access ------------------------------------------------

    def get(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError((i, j))
        return (self.data[i] >> j) & 1

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.data[i])

    def to_rows(self) -> list[list[int]]:
        return [[(w >> j) & 1 for j in range(self.cols)] for w in self.data]

    def is_zero(self) -> bool:
        return all(w == 0 for w in self.data)

    def row_weights(self) -> list[int]:
        return [w.bit_count() for w in self.data]

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "BitMatrix":
        """Return the block with rows [r0, r1) and columns [c0, c1)."""
        if not (0 <= r0 <= r1 <= self.rows and 0 <= c0 <= c1 <= self.cols):
            raise IndexError((r0, r1, c0, c1))
        mask = (1 << (c1 - c0)) - 1
        return BitMatrix(r1 - r0, c1 - c0,
                         tuple((self.data[i] >> c0) & mask for i in range(r0, r1)))

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return BitMatrix(self.rows, self.cols,
                         tuple(a ^ b for a, b in zip(self.data, other.data)))

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"dimension mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = []
        for w in self.data:
            acc = 0
            for j in iter_bits(w):
                acc ^= other.data[j]
            out.append(acc)
        return BitMatrix(self.rows, other.cols, tuple(out))

    def mul_vector(self, v: BitVector) -> BitVector:
        """Return self @ v^T as a column, packed as a BitVector."""
        if v.length != self.cols:
            raise ValueError("length mismatch")
        bits = 0
        for i, w in enumerate(self.data):
            if (w & v.bits).bit_count() & 1:
                bits |= 1 << i
        return BitVector(self.rows, bits)

    def transpose(self) -> "BitMatrix":
        out = [0] * self.cols
        for i, w in enumerate(self.data):
            for j in iter_bits(w):
                out[j] |= 1 << i
        return BitMatrix(self.cols, self.rows, tuple(out))

    def kron(self, other: "BitMatrix") -> "BitMatrix":
        """Kronecker product with lexicographic row/column linearization."""
        out = []
        for wa in self.data:
            for wb in other.data:
                acc = 0
                for ja in iter_bits(wa):
                    acc |= wb << (ja * other.cols)
                out.append(acc)
        return BitMatrix(self.rows * other.rows, self.cols * other.cols, tuple(out))

    # -- elimination ---------------------------------------------------

    def rref(self) -> tuple[list[int], list[int]]:
        """Reduced row echelon form.

        Returns (rows, pivot_cols) where rows are the packed nonzero rows
        in pivot order.  Pivots are the first nonzero entries found in
        row-major scan order.
        """
        work = list(self.data)
        pivots: list[int] = []
        head = 0
        for col in range(self.cols):
            sel = -1
            for r in range(head, len(work)):
                if (work[r] >> col) & 1:
                    sel = r
                    break
            if sel < 0:
                continue
            work[head], work[sel] = work[sel], work[head]
            for r in range(len(work)):
                if r != head and (work[r] >> col) & 1:
                    work[r] ^= work[head]
            pivots.append(col)
            head += 1
        return work[:head], pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> "BitMatrix":
        """Basis of the right kernel {v : self @ v^T = 0}, one row per vector.

        Deterministic reduced-echelon free-column construction: one basis
        row per non-pivot column, in ascending column order.
        """
        ech, pivots = self.rref()
        pivot_set = set(pivots)
        basis = []
        for f in range(self.cols):
            if f in pivot_set:
                continue
            v = 1 << f
            for r, c in enumerate(pivots):
                if (ech[r] >> f) & 1:
                    v |= 1 << c
            basis.append(v)
        return BitMatrix(len(basis), self.cols, tuple(basis))

    def row_space_contains(self, v: BitVector) -> bool:
        """True iff v is a GF(2) combination of the rows of self."""
        if v.length != self.cols:
            raise ValueError("length mismatch")
        ech, pivots = self.rref()
        r = v.bits
        for row, c in zip(ech, pivots):
            if (r >> c) & 1:
                r ^= row
        return r == 0

    def invert(self) -> "BitMatrix":
        """Inverse over GF(2); raises ValueError on a singular matrix."""
        if self.rows != self.cols:
            raise ValueError("matrix is not square")
        n = self.rows
        work = list(self.data)
        aug = [1 << i for i in range(n)]
        head = 0
        for col in range(n):
            sel = -1
            for r in range(head, n):
                if (work[r] >> col) & 1:
                    sel = r
                    break
            if sel < 0:
                raise ValueError("singular matrix")
            work[head], work[sel] = work[sel], work[head]
            aug[head], aug[sel] = aug[sel], aug[head]
            for r in range(n):
                if r != head and (work[r] >> col) & 1:
                    work[r] ^= work[head]
                    aug[r] ^= aug[head]
            head += 1
        return BitMatrix(n, n, tuple(aug))

    def inv_transpose(self) -> "BitMatrix":
        return self.invert().transpose()

    # -- serialization ------------------------------------------------

    def to_text(self) -> str:
        lines = [f"{self.rows} {self.cols}"]
        for w in self.data:
            lines.append("".join(str((w >> j) & 1) for j in range(self.cols)))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "BitMatrix":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        rows, cols = (int(x) for x in lines[0].split())
        if len(lines) - 1 != rows:
            raise ValueError("row count does not match header")
        data = []
        for ln in lines[1:]:
            ln = ln.strip()
            if len(ln) != cols or set(ln) - {"0", "1"}:
                raise ValueError(f"bad matrix line: {ln!r}")
            data.append(int(ln[::-1], 2) if ln else 0)
        return cls(rows, cols, tuple(data))


def block_diag(blocks: Sequence[BitMatrix]) -> BitMatrix:
    """Block-diagonal assembly of the given matrices."""
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    data = []
    off = 0
    for b in blocks:
        for w in b.data:
            data.append(w << off)
        off += b.cols
    return BitMatrix(rows, cols, tuple(data))


def from_blocks(grid: Sequence[Sequence[BitMatrix]]) -> BitMatrix:
    """Assemble a matrix from a 2D grid of conformable blocks."""
    data: list[int] = []
    cols = None
    for row_blocks in grid:
        nrows = row_blocks[0].rows
        row_words = [0] * nrows
        off = 0
        for b in row_blocks:
            if b.rows != nrows:
                raise ValueError("inconsistent block row counts")
            for i, w in enumerate(b.data):
                row_words[i] |= w << off
            off += b.cols
        if cols is None:
            cols = off
        elif cols != off:
            raise ValueError("inconsistent block column counts")
        data.extend(row_words)
    return BitMatrix(len(data), cols or 0, tuple(data))


def perm_matrix(sources: Sequence[int]) -> BitMatrix:
    """Permutation matrix P with (P @ a).row(i) == a.row(sources[i]).

    As a column action, (a @ P) moves column j of a to column sources.index(j).
    """
    n = len(sources)
    if sorted(sources) != list(range(n)):
        raise ValueError("not a permutation")
    return BitMatrix(n, n, tuple(1 << s for s in sources))
