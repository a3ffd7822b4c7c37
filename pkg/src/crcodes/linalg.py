"""Dense matrices over GF(q): reduced row echelon form, kernels, Gram matrices."""

from __future__ import annotations

from dataclasses import dataclass

from .field import GF


@dataclass(frozen=True)
class MatrixGF:
    """Immutable matrix over a finite field, entries row-major element codes."""

    field: GF
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")
        q = self.field.q
        for e in self.entries:
            if not 0 <= e < q:
                raise ValueError(f"entry {e} out of range for GF({q})")

    @classmethod
    def from_rows(cls, field: GF, rows) -> "MatrixGF":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        flat = tuple(int(x) for r in rows for x in r)
        return cls(field, len(rows), ncols, flat)

    def at(self, r: int, c: int) -> int:
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> tuple[int, ...]:
        return self.entries[r * self.cols : (r + 1) * self.cols]

    def row_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def is_zero(self) -> bool:
        return not any(self.entries)


def transpose(m: MatrixGF) -> MatrixGF:
    flat = tuple(m.at(r, c) for c in range(m.cols) for r in range(m.rows))
    return MatrixGF(m.field, m.cols, m.rows, flat)


def matmul(a: MatrixGF, b: MatrixGF) -> MatrixGF:
    if a.field != b.field:
        raise ValueError("field mismatch")
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    f = a.field
    out = []
    bt = [b.row(i) for i in range(b.rows)]
    for i in range(a.rows):
        ra = a.row(i)
        for j in range(b.cols):
            acc = 0
            for k in range(a.cols):
                if ra[k] and bt[k][j]:
                    acc = f.add(acc, f.mul(ra[k], bt[k][j]))
            out.append(acc)
    return MatrixGF(f, a.rows, b.cols, tuple(out))


def gram(g: MatrixGF) -> MatrixGF:
    """G times its own transpose, under the standard inner product."""
    return matmul(g, transpose(g))


def rref(m: MatrixGF) -> tuple[MatrixGF, int, tuple[int, ...]]:
    """Reduced row echelon form; returns (matrix, rank, pivot columns)."""
    f = m.field
    rows = m.row_lists()
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        scale = f.inv(rows[r][c])
        if scale != 1:
            rows[r] = [f.mul(scale, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    flat = tuple(x for row in rows for x in row)
    return MatrixGF(f, m.rows, m.cols, flat), r, tuple(pivots)


def kernel(m: MatrixGF) -> MatrixGF:
    """Basis of the right kernel, one vector per row (0 x cols when trivial)."""
    f = m.field
    red, rank, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * m.cols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = f.neg(red.at(i, fc))
        basis.append(v)
    flat = tuple(x for row in basis for x in row)
    return MatrixGF(f, len(free), m.cols, flat)
