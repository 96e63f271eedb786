"""(k,n)-diagrams, shifted diagrams, border labelings and corners.

Cells are addressed ``(row, col)``, both 1-based, rows counted from the top.
Border labels live in :class:`BorderLabeling` and never in cell coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional, Union

Cell = tuple[int, int]

NO_EMPTY_COLUMNS = "no_empty_columns"
NO_EMPTY_ROWS_OR_COLUMNS = "no_empty_rows_or_columns"


@dataclass(frozen=True)
class Shape:
    """A left-justified diagram inside a ``k x (n-k)`` rectangle."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        k = len(rows)
        if not 0 <= k <= self.n:
            raise ValueError(f"need 0 <= k <= n, got k={k}, n={self.n}")
        m = self.n - k
        for a, b in zip(rows, rows[1:]):
            if a < b:
                raise ValueError(f"row lengths must be non-increasing: {rows}")
        if rows and (rows[-1] < 0 or rows[0] > m):
            raise ValueError(f"row lengths must lie in [0, {m}]: {rows}")

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return self.n - len(self.rows)

    @property
    def grid_rows(self) -> tuple[int, ...]:
        return self.rows

    @property
    def size(self) -> int:
        return sum(self.rows)

    @cached_property
    def column_heights(self) -> tuple[int, ...]:
        return tuple(sum(1 for r in self.rows if r >= c) for c in range(1, self.ncols + 1))

    def cells(self) -> Iterator[Cell]:
        for i, length in enumerate(self.rows, 1):
            for j in range(1, length + 1):
                yield (i, j)

    def __contains__(self, cell) -> bool:
        i, j = cell
        return 1 <= i <= self.k and 1 <= j <= self.rows[i - 1]

    @cached_property
    def steps(self) -> str:
        """South-East border as a word over ``S``/``W``, read from the North-East corner."""
        out = []
        prev = self.ncols
        for length in self.rows:
            out.append("W" * (prev - length))
            out.append("S")
            prev = length
        out.append("W" * prev)
        return "".join(out)

    def reflect(self) -> "Shape":
        """Mirror image across the main diagonal (rows and columns exchanged)."""
        return Shape(self.n, self.column_heights)

    def to_json(self) -> dict:
        return {"n": self.n, "rows": list(self.rows), "shifted": False}

    def ascii(self) -> str:
        return "\n".join("#" * length for length in self.rows)


@dataclass(frozen=True)
class ShiftedShape:
    """A (k,n)-diagram with a staircase of added cells on top.

    Column ``j`` gains ``n-k+1-j`` cells, so the grid has ``n-k`` staircase rows
    above the base rows; staircase row ``r`` spans columns ``1..r`` and ends on its
    diagonal cell ``(r, r)``.
    """

    base: Shape

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def k(self) -> int:
        return self.base.k

    @property
    def ncols(self) -> int:
        return self.base.ncols

    @property
    def stair(self) -> int:
        return self.base.ncols

    @cached_property
    def grid_rows(self) -> tuple[int, ...]:
        return tuple(range(1, self.stair + 1)) + self.base.rows

    @property
    def size(self) -> int:
        return sum(self.grid_rows)

    @cached_property
    def column_heights(self) -> tuple[int, ...]:
        m = self.stair
        return tuple(m - j + 1 + h for j, h in enumerate(self.base.column_heights, 1))

    def cells(self) -> Iterator[Cell]:
        for i, length in enumerate(self.grid_rows, 1):
            for j in range(1, length + 1):
                yield (i, j)

    def __contains__(self, cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.grid_rows) and 1 <= j <= self.grid_rows[i - 1]

    def diagonal_cells(self) -> list[Cell]:
        return [(r, r) for r in range(1, self.stair + 1)]

    def is_diagonal(self, cell: Cell) -> bool:
        i, j = cell
        return i == j and i <= self.stair

    @property
    def steps(self) -> str:
        return self.base.steps

    def to_json(self) -> dict:
        return {"n": self.n, "rows": list(self.base.rows), "shifted": True}

    def ascii(self) -> str:
        lines = []
        for r in range(1, self.stair + 1):
            lines.append("+" * (r - 1) + "*")
        lines.extend("#" * length for length in self.base.rows)
        return "\n".join(lines)


AnyShape = Union[Shape, ShiftedShape]


def shape_from_json(record: dict) -> AnyShape:
    base = Shape(int(record["n"]), tuple(record["rows"]))
    return ShiftedShape(base) if record.get("shifted") else base


@dataclass(frozen=True)
class BorderLabeling:
    steps: str
    row_labels: tuple[int, ...]
    col_labels: tuple[int, ...]
    shifted_row_labels: tuple[int, ...] = ()

    @property
    def row_label_set(self) -> frozenset[int]:
        return frozenset(self.row_labels)

    @property
    def col_label_set(self) -> frozenset[int]:
        return frozenset(self.col_labels)


def border_path(shape: AnyShape) -> BorderLabeling:
    """Label the border steps ``1..n`` from the North-East corner.

    Rows are listed top to bottom and columns left to right.  For a shifted
    shape the border is the base one; staircase row ``r`` carries the label
    ``-(label of column r)``.
    """
    base = shape.base if isinstance(shape, ShiftedShape) else shape
    steps = base.steps
    row_labels = []
    col_labels = [0] * base.ncols
    x = base.ncols
    for label, step in enumerate(steps, 1):
        if step == "S":
            row_labels.append(label)
        else:
            col_labels[x - 1] = label
            x -= 1
    shifted = ()
    if isinstance(shape, ShiftedShape):
        shifted = tuple(-col_labels[r - 1] for r in range(1, base.ncols + 1))
    return BorderLabeling(steps, tuple(row_labels), tuple(col_labels), shifted)


def corners(shape: AnyShape) -> list[Cell]:
    """Cells whose bottom and right edges are both border edges, top to bottom."""
    if isinstance(shape, ShiftedShape):
        off = shape.stair
        return [(i + off, j) for i, j in corners(shape.base)]
    rows = shape.rows
    out = []
    for i, length in enumerate(rows, 1):
        if length > 0 and (i == len(rows) or rows[i] < length):
            out.append((i, length))
    return out


def is_diagonally_symmetric(shape: Shape) -> bool:
    return shape.reflect() == shape


def _partitions_in_box(k: int, m: int, upper: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    # lex-ascending tuples of length k, non-increasing, entries in [0, m]
    if k == 0:
        yield ()
        return
    top = m if upper is None else upper
    for first in range(0, top + 1):
        for rest in _partitions_in_box(k - 1, m, first):
            yield (first,) + rest


def enumerate_shapes(n: int, constraint: Optional[str] = None) -> Iterator[Shape]:
    """All (k,n)-diagrams ordered by ``(k, rows)``.

    ``constraint`` is ``None``, ``NO_EMPTY_COLUMNS`` (permutation tableaux) or
    ``NO_EMPTY_ROWS_OR_COLUMNS`` (tree-like tableaux).
    """
    if constraint not in (None, NO_EMPTY_COLUMNS, NO_EMPTY_ROWS_OR_COLUMNS):
        raise ValueError(f"unknown shape constraint {constraint!r}")
    for k in range(0, n + 1):
        m = n - k
        for rows in _partitions_in_box(k, m):
            if constraint is not None and m > 0 and (not rows or rows[0] < m):
                continue
            if constraint == NO_EMPTY_ROWS_OR_COLUMNS and k > 0 and rows[-1] == 0:
                continue
            yield Shape(n, rows)


def self_conjugate_shapes(half: int, no_empty: bool = False) -> Iterator[Shape]:
    """Diagonally symmetric shapes with ``half`` rows and ``half`` columns."""
    constraint = NO_EMPTY_ROWS_OR_COLUMNS if no_empty else None
    for rows in _partitions_in_box(half, half):
        s = Shape(2 * half, rows)
        if constraint and half > 0 and (rows[0] < half or rows[-1] == 0):
            continue
        if is_diagonally_symmetric(s):
            yield s
