"""Small dense matrices of :class:`MultiPoly` entries."""
from __future__ import annotations

from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .exactalg import ONE, ZERO, MultiPoly, as_poly, poly_exact_div


class Check(NamedTuple):
    """Outcome of a verification: ``ok`` plus the first failing location, if any."""

    ok: bool
    witness: Optional[object] = None

    def __bool__(self):
        return self.ok


class Matrix:
    """Immutable rectangular matrix; lower-triangular arrays use the same type."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        self.rows: Tuple[Tuple[MultiPoly, ...], ...] = tuple(
            tuple(as_poly(v) for v in row) for row in rows
        )
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self):
        return (self.n_rows, self.n_cols)

    def __getitem__(self, rc):
        r, c = rc
        return self.rows[r][c]

    def row(self, r: int) -> Tuple[MultiPoly, ...]:
        return self.rows[r]

    def column(self, c: int) -> List[MultiPoly]:
        return [row[c] for row in self.rows]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.n_cols != other.n_rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = [other.column(j) for j in range(other.n_cols)]
        out = []
        for row in self.rows:
            new_row = []
            for col in cols:
                acc = ZERO
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                new_row.append(acc)
            out.append(new_row)
        return Matrix(out)

    def apply(self, vec: Sequence) -> List[MultiPoly]:
        vec = [as_poly(v) for v in vec]
        out = []
        for row in self.rows:
            acc = ZERO
            for a, b in zip(row, vec):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return out

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "Matrix":
        cols = list(cols)
        return Matrix([[self.rows[r][c] for c in cols] for r in rows])

    def leading(self, n: int) -> "Matrix":
        return self.submatrix(range(n), range(n))

    def map(self, fn) -> "Matrix":
        return Matrix([[fn(v) for v in row] for row in self.rows])

    def subs(self, **values) -> "Matrix":
        return self.map(lambda p: p.subs(**values))

    def is_lower_triangular(self) -> bool:
        return all(not self.rows[r][c] for r in range(self.n_rows)
                   for c in range(r + 1, self.n_cols))

    def inverse_lower(self) -> "Matrix":
        """Inverse of a square lower-triangular matrix by forward substitution.

        Diagonal entries must divide exactly (units, or constants).
        """
        n = self.n_rows
        if n != self.n_cols or not self.is_lower_triangular():
            raise ValueError("inverse_lower needs a square lower-triangular matrix")
        inv = [[ZERO] * n for _ in range(n)]
        for j in range(n):
            for i in range(j, n):
                acc = ONE if i == j else ZERO
                for m in range(j, i):
                    if self.rows[i][m] and inv[m][j]:
                        acc = acc - self.rows[i][m] * inv[m][j]
                inv[i][j] = poly_exact_div(acc, self.rows[i][i])
        return Matrix(inv)

    def to_strings(self, compact: bool = True) -> List[List[str]]:
        return [[p.to_string(compact=compact) for p in row] for row in self.rows]

    def render(self) -> str:
        return "\n".join(" ".join(r) for r in self.to_strings(compact=True))

    def __repr__(self):
        return f"Matrix({self.n_rows}x{self.n_cols})"
