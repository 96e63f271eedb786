"""The six tableau families: validation, exhaustive generation, corner and weight statistics.

Fillings are stored as one string per grid row.  Symbols are ``0``/``1`` for
permutation tableaux, ``.``/``L``/``U`` (empty, left arrow, up arrow) for
alternative tableaux and ``.``/``D`` (empty, dot) for tree-like tableaux.

Family indices used throughout (``generate_all``, ``closed_corner_count``)::

    pt      length n              |PT_n|       = n!
    at      length n              |AT_n|       = (n+1)!
    tlt     size n (length n+1)   |T_n|        = n!
    ptb     length n              |PT^B_n|     = 2^n n!
    atsym   length 2n             |AT^sym_2n|  = 2^n n!
    tltsym  size 2n+1             |T^sym_2n+1| = 2^n n!
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from typing import ClassVar, Iterable, Iterator, NamedTuple, Optional

from .diagrams import (
    NO_EMPTY_COLUMNS,
    NO_EMPTY_ROWS_OR_COLUMNS,
    AnyShape,
    Cell,
    Shape,
    ShiftedShape,
    border_path,
    corners,
    enumerate_shapes,
    self_conjugate_shapes,
    shape_from_json,
)

FAMILIES = ("pt", "at", "tlt", "ptb", "atsym", "tltsym")

# largest family index generate_all accepts without an explicit override
DEFAULT_BOUNDS = {"pt": 9, "at": 8, "tlt": 8, "ptb": 6, "atsym": 5, "tltsym": 5}


class StructuralError(ValueError):
    """Filling does not match the cell set of its shape."""


class BoundError(ValueError):
    """Requested enumeration is beyond the configured desk-scale bound."""


class Validity(NamedTuple):
    ok: bool
    violation: Optional[str] = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class Tableau:
    shape: AnyShape
    rows: tuple[str, ...]

    family: ClassVar[str] = ""
    symbols: ClassVar[str] = ""

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        lengths = self.shape.grid_rows
        if len(rows) != len(lengths) or any(len(r) != l for r, l in zip(rows, lengths)):
            raise StructuralError(
                f"filling rows {[len(r) for r in rows]} do not match shape rows {list(lengths)}"
            )
        bad = set("".join(rows)) - set(self.symbols)
        if bad:
            raise StructuralError(f"unexpected symbols {sorted(bad)} for {self.family}")

    def __getitem__(self, cell: Cell) -> str:
        i, j = cell
        return self.rows[i - 1][j - 1]

    @property
    def filling(self) -> str:
        return "".join(self.rows)

    def cells_with(self, symbol: str) -> list[Cell]:
        return [
            (i, j)
            for i, row in enumerate(self.rows, 1)
            for j, s in enumerate(row, 1)
            if s == symbol
        ]

    def column(self, j: int) -> str:
        return "".join(row[j - 1] for row in self.rows if len(row) >= j)

    def validate(self) -> Validity:
        violation = self.first_violation()
        return Validity(violation is None, violation)

    def first_violation(self) -> Optional[str]:
        raise NotImplementedError

    def to_json(self) -> dict:
        return {"family": self.family, "shape": self.shape.to_json(), "filling": self.filling}

    def ascii(self) -> str:
        table = str.maketrans(self._ascii_map)
        return "\n".join(row.translate(table) for row in self.rows)

    _ascii_map: ClassVar[dict] = {}


def _pt_violation(t: Tableau, shifted: bool) -> Optional[str]:
    rows = t.rows
    ncols = t.shape.ncols
    for j in range(1, ncols + 1):
        if "1" not in t.column(j):
            return f"column {j} has no 1"
    for i, row in enumerate(rows, 1):
        for j, s in enumerate(row, 1):
            if s != "0":
                continue
            left_one = "1" in row[: j - 1]
            above_one = any(rows[r][j - 1] == "1" for r in range(i - 1) if len(rows[r]) >= j)
            if left_one and above_one:
                return f"0 at {(i, j)} has a 1 above and a 1 to its left"
            if shifted and t.shape.is_diagonal((i, j)) and left_one:
                return f"diagonal 0 at {(i, j)} has a 1 to its left"
    return None


@dataclass(frozen=True)
class PermutationTableau(Tableau):
    family: ClassVar[str] = "pt"
    symbols: ClassVar[str] = "01"

    def first_violation(self):
        if not isinstance(self.shape, Shape):
            return "permutation tableaux live on plain (k,n)-diagrams"
        if self.shape.ncols and self.shape.rows[:1] != (self.shape.ncols,):
            return "diagram has an empty column"
        return _pt_violation(self, shifted=False)


@dataclass(frozen=True)
class TypeBPermutationTableau(Tableau):
    family: ClassVar[str] = "ptb"
    symbols: ClassVar[str] = "01"

    def first_violation(self):
        if not isinstance(self.shape, ShiftedShape):
            return "type B permutation tableaux live on shifted diagrams"
        return _pt_violation(self, shifted=True)


@dataclass(frozen=True)
class AlternativeTableau(Tableau):
    family: ClassVar[str] = "at"
    symbols: ClassVar[str] = ".LU"
    _ascii_map: ClassVar[dict] = {"L": "<", "U": "^"}

    def first_violation(self):
        if not isinstance(self.shape, Shape):
            return "alternative tableaux live on plain (k,n)-diagrams"
        for i, row in enumerate(self.rows, 1):
            for j, s in enumerate(row, 1):
                if s == "L" and row[: j - 1].strip("."):
                    return f"left arrow at {(i, j)} points at a filled cell"
                if s == "U" and self.column(j)[: i - 1].strip("."):
                    return f"up arrow at {(i, j)} points at a filled cell"
        return None

    def reflect(self) -> "AlternativeTableau":
        swap = str.maketrans("LU", "UL")
        shape = self.shape.reflect()
        rows = tuple(
            "".join(self.rows[r][c] for r in range(len(self.rows)) if len(self.rows[r]) > c).translate(swap)
            for c in range(shape.k)
        )
        return AlternativeTableau(shape, rows)


@dataclass(frozen=True)
class TreeLikeTableau(Tableau):
    family: ClassVar[str] = "tlt"
    symbols: ClassVar[str] = ".D"
    _ascii_map: ClassVar[dict] = {"D": "o"}

    @property
    def size(self) -> int:
        return self.filling.count("D")

    def first_violation(self):
        shape = self.shape
        if not isinstance(shape, Shape):
            return "tree-like tableaux live on plain (k,n)-diagrams"
        if shape.n == 0:
            return None  # the empty tableau of size 0
        if shape.k == 0 or shape.ncols == 0:
            return "diagram has no cells"
        if shape.rows[0] != shape.ncols or shape.rows[-1] == 0:
            return "diagram has an empty row or column"
        if self.rows[0][0] != "D":
            return "cell (1,1) holds no root point"
        for i, row in enumerate(self.rows, 1):
            for j, s in enumerate(row, 1):
                if s != "D" or (i, j) == (1, 1):
                    continue
                left = "D" in row[: j - 1]
                above = "D" in self.column(j)[: i - 1]
                if left == above:
                    return f"point at {(i, j)} breaks the above-xor-left rule"
        for i, row in enumerate(self.rows, 1):
            if "D" not in row:
                return f"row {i} has no point"
        for j in range(1, shape.ncols + 1):
            if "D" not in self.column(j):
                return f"column {j} has no point"
        if shape.n != self.size + 1:
            return "length is not size + 1"
        return None

    def reflect(self) -> "TreeLikeTableau":
        shape = self.shape.reflect()
        rows = tuple(
            "".join(self.rows[r][c] for r in range(len(self.rows)) if len(self.rows[r]) > c)
            for c in range(shape.k)
        )
        return TreeLikeTableau(shape, rows)


EMPTY_TLT = TreeLikeTableau(Shape(0, ()), ())

_CLASSES = {
    "pt": PermutationTableau,
    "ptb": TypeBPermutationTableau,
    "at": AlternativeTableau,
    "atsym": AlternativeTableau,
    "tlt": TreeLikeTableau,
    "tltsym": TreeLikeTableau,
}


def validate(family: str, candidate: Tableau) -> Validity:
    cls = _CLASSES[family]
    if not isinstance(candidate, cls):
        return Validity(False, f"expected a {cls.__name__}")
    v = candidate.validate()
    if v and family in ("atsym", "tltsym") and candidate.reflect() != candidate:
        return Validity(False, "not symmetric about the main diagonal")
    return v


def tableau_from_json(record: dict) -> Tableau:
    family = record["family"]
    shape = shape_from_json(record["shape"])
    filling = record["filling"]
    rows, pos = [], 0
    for length in shape.grid_rows:
        rows.append(filling[pos : pos + length])
        pos += length
    if pos != len(filling):
        raise StructuralError("filling length does not match the shape")
    return _CLASSES[family](shape, tuple(rows))


# --------------------------------------------------------------------------
# generation


def bound_for(family: str) -> int:
    env = os.environ.get("TABLEAUX_MAX_N")
    if env:
        return int(env)
    return DEFAULT_BOUNDS[family]


def check_bound(family: str, n: int, max_n: Optional[int] = None) -> None:
    limit = bound_for(family) if max_n is None else max_n
    if n > limit:
        raise BoundError(
            f"{family} with n={n} exceeds the enumeration limit {limit}; "
            f"pass max_n or set TABLEAUX_MAX_N to raise it"
        )


def shapes_for(family: str, n: int) -> list[AnyShape]:
    if family == "pt":
        return list(enumerate_shapes(n, NO_EMPTY_COLUMNS))
    if family == "at":
        return list(enumerate_shapes(n))
    if family == "tlt":
        return [Shape(0, ())] if n == 0 else list(enumerate_shapes(n + 1, NO_EMPTY_ROWS_OR_COLUMNS))
    if family == "ptb":
        return [ShiftedShape(s) for s in enumerate_shapes(n)]
    if family == "atsym":
        return list(self_conjugate_shapes(n))
    if family == "tltsym":
        return list(self_conjugate_shapes(n + 1, no_empty=True))
    raise ValueError(f"unknown family {family!r}")


def generate_all(family: str, n: int, max_n: Optional[int] = None) -> Iterator[Tableau]:
    """Every tableau of the family at index ``n``, in shape order then filling order."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    check_bound(family, n, max_n)
    for shape in shapes_for(family, n):
        yield from fillings_for(family, shape)


def fillings_for(family: str, shape: AnyShape) -> Iterator[Tableau]:
    if family == "pt":
        return _pt_fillings(shape, shifted=False)
    if family == "ptb":
        return _pt_fillings(shape, shifted=True)
    if family == "at":
        return _at_fillings(shape, symmetric=False)
    if family == "atsym":
        return iter(sorted(_at_fillings(shape, symmetric=True), key=lambda t: t.rows))
    if family == "tlt":
        if shape.n == 0:
            return iter([EMPTY_TLT])
        return _tlt_fillings(shape, symmetric=False)
    if family == "tltsym":
        return iter(sorted(_tlt_fillings(shape, symmetric=True), key=lambda t: t.rows))
    raise ValueError(f"unknown family {family!r}")


def _pt_fillings(shape: AnyShape, shifted: bool) -> Iterator[Tableau]:
    cls = TypeBPermutationTableau if shifted else PermutationTableau
    lengths = shape.grid_rows
    heights = shape.column_heights
    stair = shape.stair if shifted else 0
    grid = [[""] * length for length in lengths]
    order = [(i, j) for i, length in enumerate(lengths) for j in range(length)]
    row_one = [False] * len(lengths)
    col_one = [False] * len(heights)
    # 0-based index of the bottom cell of every column
    last_row = [h - 1 for h in heights] if not shifted else [stair - 1 + (h - (stair - j)) for j, h in enumerate(heights)]

    def rec(idx):
        if idx == len(order):
            yield cls(shape, tuple("".join(r) for r in grid))
            return
        i, j = order[idx]
        for v in "01":
            if v == "0":
                if row_one[i] and col_one[j]:
                    continue
                if shifted and i == j and i < stair and row_one[i]:
                    continue
                if i == last_row[j] and not col_one[j]:
                    continue
                grid[i][j] = "0"
                yield from rec(idx + 1)
            else:
                saved = row_one[i], col_one[j]
                row_one[i] = col_one[j] = True
                grid[i][j] = "1"
                yield from rec(idx + 1)
                row_one[i], col_one[j] = saved

    return rec(0)


def _at_fillings(shape: Shape, symmetric: bool) -> Iterator[AlternativeTableau]:
    lengths = shape.rows
    grid = [["."] * length for length in lengths]
    order = [
        (i, j)
        for i, length in enumerate(lengths)
        for j in range(length)
        if not symmetric or j > i
    ]
    row_sym = [False] * len(lengths)
    col_sym = [False] * shape.ncols
    swap = {"L": "U", "U": "L"}

    def allowed(i, j, v):
        return not ((v == "L" and row_sym[i]) or (v == "U" and col_sym[j]))

    def rec(idx):
        if idx == len(order):
            yield AlternativeTableau(shape, tuple("".join(r) for r in grid))
            return
        i, j = order[idx]
        yield from rec(idx + 1)
        for v in "LU":
            if not allowed(i, j, v):
                continue
            if symmetric and not allowed(j, i, swap[v]):
                continue
            saved = row_sym[i], col_sym[j], row_sym[j] if symmetric else None, col_sym[i] if symmetric else None
            grid[i][j] = v
            row_sym[i] = col_sym[j] = True
            if symmetric:
                grid[j][i] = swap[v]
                row_sym[j] = col_sym[i] = True
            yield from rec(idx + 1)
            grid[i][j] = "."
            row_sym[i], col_sym[j] = saved[0], saved[1]
            if symmetric:
                grid[j][i] = "."
                row_sym[j], col_sym[i] = saved[2], saved[3]

    return rec(0)


def _tlt_fillings(shape: Shape, symmetric: bool) -> Iterator[TreeLikeTableau]:
    lengths = shape.rows
    heights = shape.column_heights
    k = len(lengths)
    grid = [["."] * length for length in lengths]
    order = [
        (i, j)
        for i, length in enumerate(lengths)
        for j in range(length)
        if not symmetric or j >= i
    ]
    row_has = [False] * k
    col_has = [False] * len(heights)

    def rec(idx):
        if idx == len(order):
            if all(row_has) and all(col_has):
                yield TreeLikeTableau(shape, tuple("".join(r) for r in grid))
            return
        i, j = order[idx]
        row_end = j == lengths[i] - 1
        col_end = i == heights[j] - 1
        if (i, j) != (0, 0):
            if not ((row_end and not row_has[i]) or (col_end and not col_has[j] and not symmetric)):
                yield from rec(idx + 1)
            if row_has[i] == col_has[j]:
                return
        saved = row_has[i], col_has[j], row_has[j] if symmetric else None, col_has[i] if symmetric else None
        grid[i][j] = "D"
        row_has[i] = col_has[j] = True
        if symmetric:
            grid[j][i] = "D"
            row_has[j] = col_has[i] = True
        yield from rec(idx + 1)
        grid[i][j] = "."
        row_has[i], col_has[j] = saved[0], saved[1]
        if symmetric:
            grid[j][i] = "."
            row_has[j], col_has[i] = saved[2], saved[3]

    return rec(0)


def filter_symmetric(stream: Iterable[Tableau]) -> Iterator[Tableau]:
    for t in stream:
        if t.reflect() == t:
            yield t


# --------------------------------------------------------------------------
# corners and statistics


class NocClass(str, Enum):
    AB = "AB"
    A1 = "A1"
    ONE_B = "OneB"
    ONE_ONE = "OneOne"
    NA = "NotApplicable"


@dataclass(frozen=True)
class CornerRecord:
    cell: Cell
    occupied: bool
    noc_class: NocClass = NocClass.NA


def noc_class(t: TreeLikeTableau, cell: Cell) -> NocClass:
    """Classify an empty corner by where the points above it and to its left sit."""
    i, j = cell
    only_top = "D" not in t.column(j)[1 : i - 1]
    only_left = "D" not in t.rows[i - 1][1 : j - 1]
    if only_top and only_left:
        return NocClass.AB
    if only_top:
        return NocClass.A1
    if only_left:
        return NocClass.ONE_B
    return NocClass.ONE_ONE


def corner_records(t: Tableau) -> list[CornerRecord]:
    out = []
    for cell in corners(t.shape):
        symbol = t[cell]
        if isinstance(t, (PermutationTableau, TypeBPermutationTableau)):
            out.append(CornerRecord(cell, True))
        elif isinstance(t, AlternativeTableau):
            out.append(CornerRecord(cell, symbol != "."))
        elif symbol == "D":
            out.append(CornerRecord(cell, True))
        else:
            out.append(CornerRecord(cell, False, noc_class(t, cell)))
    return out


def corner_count(t: Tableau) -> int:
    return len(corners(t.shape))


def noc_count(t: TreeLikeTableau) -> int:
    return sum(1 for cell in corners(t.shape) if t[cell] != "D")


@dataclass(frozen=True)
class WeightStats:
    top: int
    left: int
    left_star: Optional[int] = None
    diag: Optional[int] = None


def top_stat(t: TreeLikeTableau) -> int:
    """Non-root points in the first row; -1 for the empty tableau."""
    return (t.rows[0].count("D") if t.rows else 0) - 1


def left_stat(t: TreeLikeTableau) -> int:
    """Non-root points in the first column; -1 for the empty tableau."""
    return t.column(1).count("D") - 1 if t.rows else -1


def diag_stat(t: TreeLikeTableau) -> int:
    """Non-root points on the main diagonal."""
    return sum(1 for i in range(2, len(t.rows) + 1) if len(t.rows[i - 1]) >= i and t[(i, i)] == "D")


def weight_stats(t: TreeLikeTableau, symmetric: Optional[bool] = None) -> WeightStats:
    top, left = top_stat(t), left_stat(t)
    if symmetric is None:
        symmetric = t.reflect() == t
    if not symmetric:
        return WeightStats(top, left)
    return WeightStats(top, left, left - 1, diag_stat(t))


def left_star(t: TreeLikeTableau) -> int:
    if t.reflect() != t:
        raise ValueError("left* is only defined for symmetric tree-like tableaux")
    return left_stat(t) - 1


@dataclass(frozen=True)
class PTMarkers:
    topmost_ones: frozenset
    restricted_zeros: frozenset
    rightmost_restricted_zeros: frozenset


def pt_markers(t: Tableau) -> PTMarkers:
    """Topmost 1s, restricted 0s and rightmost restricted 0s (diagonal 0s count as restricted)."""
    shifted = isinstance(t, TypeBPermutationTableau)
    topmost = set()
    for j in range(1, t.shape.ncols + 1):
        col = t.column(j)
        # rows of column j start at the top of the grid for plain shapes and at row j for shifted
        first = j if shifted else 1
        pos = col.find("1")
        if pos >= 0:
            topmost.add((first + pos, j))
    top_row = {j: i for i, j in topmost}
    restricted = set()
    rightmost = set()
    for i, row in enumerate(t.rows, 1):
        mine = [
            (i, j)
            for j, s in enumerate(row, 1)
            if s == "0" and ((j in top_row and top_row[j] < i) or (shifted and t.shape.is_diagonal((i, j))))
        ]
        restricted.update(mine)
        if mine:
            rightmost.add(mine[-1])
    return PTMarkers(frozenset(topmost), frozenset(restricted), frozenset(rightmost))


def column_label_set(t: Tableau) -> frozenset:
    return border_path(t.shape).col_label_set
