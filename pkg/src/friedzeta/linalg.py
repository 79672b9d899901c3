"""Exact integer linear algebra: determinants, Smith normal form, cokernels.

Everything here works on Python ints, so intermediate coefficient growth is
never an issue.  Matrices are immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for i, r in enumerate(rows):
            if len(r) != cols:
                raise ValueError(f"row {i} has {len(r)} entries, expected {cols}")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def tolist(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_rows(
            [self.column(j) for j in range(self.cols)], cols=self.rows
        )

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix(self.rows, self.cols,
                         tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._check_same_shape(other)
        return IntMatrix(self.rows, self.cols,
                         tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.extend(sum(a * b for a, b in zip(r, c)) for c in cols)
        return IntMatrix(self.rows, other.cols, tuple(out))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def _check_same_shape(self, other: IntMatrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))


@dataclass(frozen=True)
class SNFResult:
    """Certificate ``U @ M @ V == D`` with ``U``, ``V`` unimodular."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.rows, self.D.cols)))


@dataclass(frozen=True)
class CokernelStructure:
    torsion_invariants: tuple[int, ...]
    free_rank: int
    # rows span the maps Z^n -> Z killing the image, one per free summand
    projection: IntMatrix


def determinant(m: IntMatrix) -> int:
    """Bareiss fraction-free elimination; every division is exact."""
    if not m.is_square:
        raise ValueError(f"determinant of non-square {m.shape} matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def smith_normal_form(m: IntMatrix) -> SNFResult:
    """Smith normal form with unimodular transformation certificates.

    Pivots on the entry of least absolute value in the active block.
    """
    rows, cols = m.rows, m.cols
    a = m.tolist()
    u = IntMatrix.identity(rows).tolist()
    v = IntMatrix.identity(cols).tolist()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):
        # row dst += q * row src
        if q:
            a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
            u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        if q:
            for r in a:
                r[dst] += q * r[src]
            for r in v:
                r[dst] += q * r[src]

    for k in range(min(rows, cols)):
        while True:
            best = None
            for i in range(k, rows):
                for j in range(k, cols):
                    x = a[i][j]
                    if x and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(k, best[0])
            swap_cols(k, best[1])
            p = a[k][k]
            clean = True
            for i in range(k + 1, rows):
                if a[i][k]:
                    add_row(i, k, -(a[i][k] // p))
                    if a[i][k]:
                        clean = False
            for j in range(k + 1, cols):
                if a[k][j]:
                    add_col(j, k, -(a[k][j] // p))
                    if a[k][j]:
                        clean = False
            if not clean:
                continue
            # pivot must divide the remaining block
            bad = next(
                (i for i in range(k + 1, rows)
                 for j in range(k + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(k, bad, 1)
        if a[k][k] < 0:
            a[k] = [-x for x in a[k]]
            u[k] = [-x for x in u[k]]

    return SNFResult(
        U=IntMatrix.from_rows(u, cols=rows),
        D=IntMatrix.from_rows(a, cols=cols),
        V=IntMatrix.from_rows(v, cols=cols),
    )


def _sign_normalize(row: Sequence[int]) -> list[int]:
    lead = next((x for x in row if x), 0)
    return [-x for x in row] if lead < 0 else list(row)


def cokernel(m: IntMatrix) -> CokernelStructure:
    """Invariants of ``Z^rows / im(m)`` plus a projection onto its free part."""
    snf = smith_normal_form(m)
    diag = snf.diagonal
    torsion = tuple(d for d in diag if d > 1)
    free = [i for i, d in enumerate(diag) if d == 0]
    free.extend(range(len(diag), m.rows))
    projection = IntMatrix.from_rows(
        [_sign_normalize(snf.U.row(i)) for i in free], cols=m.rows
    )
    return CokernelStructure(torsion, len(free), projection)


def normalize_projection(c: CokernelStructure, designated: int) -> CokernelStructure:
    """Flip the sign of a rank-one projection so ``designated`` maps to +1."""
    if c.free_rank != 1:
        raise ValueError(f"normalization needs free rank 1, got {c.free_rank}")
    value = c.projection[0, designated]
    if value not in (1, -1):
        raise ValueError(
            f"basis element {designated} maps to {value}, not a generator of the free quotient"
        )
    if value == 1:
        return c
    return CokernelStructure(c.torsion_invariants, c.free_rank, -c.projection)


def parse_matrix(text: str) -> IntMatrix:
    """Rows of whitespace-separated integers; ``#`` starts a comment."""
    rows: list[list[int]] = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ValueError(f"line {lineno}: ragged row has {len(row)} entries, expected {width}")
        rows.append(row)
    return IntMatrix.from_rows(rows, cols=width or 0)
