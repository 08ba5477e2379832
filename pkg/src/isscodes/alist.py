"""Reader and writer for the MacKay alist sparse parity-check format.

Layout: "N M" (columns, rows); max column and row degree; N column
degrees; M row degrees; per column the 1-based row indices padded with
zeros to the max column degree; per row the 1-based column indices
padded likewise.
"""

from __future__ import annotations

from .gf2 import BitMatrix


def to_alist(mat: BitMatrix) -> str:
    cols = [[] for _ in range(mat.cols)]
    rows = [[] for _ in range(mat.rows)]
    for i in range(mat.rows):
        w = mat.data[i]
        while w:
            low = w & -w
            j = low.bit_length() - 1
            cols[j].append(i + 1)
            rows[i].append(j + 1)
            w ^= low
    cmax = max((len(c) for c in cols), default=0)
    rmax = max((len(r) for r in rows), default=0)
    lines = [f"{mat.cols} {mat.rows}", f"{cmax} {rmax}"]
    lines.append(" ".join(str(len(c)) for c in cols))
    lines.append(" ".join(str(len(r)) for r in rows))
    for c in cols:
        lines.append(" ".join(str(v) for v in c + [0] * (cmax - len(c))))
    for r in rows:
        lines.append(" ".join(str(v) for v in r + [0] * (rmax - len(r))))
    return "\n".join(lines) + "\n"


def from_alist(text: str) -> BitMatrix:
    tokens = text.split()
    pos = 0

    def take(k: int) -> list[int]:
        nonlocal pos
        out = [int(t) for t in tokens[pos:pos + k]]
        if len(out) != k:
            raise ValueError("truncated alist data")
        pos += k
        return out

    n, m = take(2)
    cmax, rmax = take(2)
    take(n)  # column degrees, implied by the index lists
    take(m)
    take(n * cmax)
    data = []
    for _ in range(m):
        w = 0
        for j in take(rmax):
            if j:
                w |= 1 << (j - 1)
        data.append(w)
    return BitMatrix(m, n, tuple(data))
