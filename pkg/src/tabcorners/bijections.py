"""Constructive correspondences between the tableau families, and corners to runs.

Maps and their inverses:

* ``alpha``      tree-like tableau of size n  ->  alternative tableau of length n-1
* ``gamma``      permutation tableau of length n  ->  alternative tableau of length n-1
* ``zeta``       type B permutation tableau of length n  ->  symmetric alternative tableau of length 2n
* ``corner_cut`` (tree-like tableau, corner)  ->  (T_l, T_r, non-ambiguous tree)
* ``triplet_to_run``  that triplet  ->  (permutation, position of a run of size 1)

The descent-set theorems for permutation tableaux are checked as multiset
identities (``phi_contract_check``, ``xi_contract_check``); the underlying maps are
not built.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from . import permstats as ps
from .diagrams import Cell, Shape, ShiftedShape, corners
from .tableaux import (
    EMPTY_TLT,
    AlternativeTableau,
    PermutationTableau,
    TreeLikeTableau,
    TypeBPermutationTableau,
    fillings_for,
    generate_all,
    left_stat,
    pt_markers,
    column_label_set,
    top_stat,
)


class BijectionError(ValueError):
    """Input outside the domain of a map."""


def _require_valid(t, what: str) -> None:
    v = t.validate()
    if not v:
        raise BijectionError(f"invalid {what}: {v.violation}")


def _transpose_rows(rows: Sequence[str], ncols: int) -> tuple[str, ...]:
    return tuple("".join(r[c] for r in rows if len(r) > c) for c in range(ncols))


# --------------------------------------------------------------------------
# alpha: tree-like -> alternative


def alpha(t: TreeLikeTableau) -> AlternativeTableau:
    _require_valid(t, "tree-like tableau")
    if t.size == 0:
        raise BijectionError("alpha is defined from size 1 on")
    out_rows = []
    for i, row in enumerate(t.rows[1:], 2):
        cells = []
        for j, s in enumerate(row[1:], 2):
            if s != "D":
                cells.append(".")
            elif "D" not in row[: j - 1]:
                cells.append("L")
            else:
                cells.append("U")
        out_rows.append("".join(cells))
    shape = Shape(t.shape.n - 2, tuple(r - 1 for r in t.shape.rows[1:]))
    return AlternativeTableau(shape, tuple(out_rows))


def alpha_inv(a: AlternativeTableau) -> TreeLikeTableau:
    _require_valid(a, "alternative tableau")
    k, m = a.shape.k, a.shape.ncols
    first = ["D"]
    for j in range(1, m + 1):
        col = a.column(j).replace(".", "")
        first.append("D" if not col or col[0] == "L" else ".")
    rows = ["".join(first)]
    for i, row in enumerate(a.rows, 1):
        arrows = row.replace(".", "")
        lead = "D" if not arrows or arrows[0] == "U" else "."
        rows.append(lead + "".join("." if s == "." else "D" for s in row))
    shape = Shape(a.shape.n + 2, (m + 1,) + tuple(r + 1 for r in a.shape.rows))
    return TreeLikeTableau(shape, tuple(rows))


# --------------------------------------------------------------------------
# gamma: permutation -> alternative


def _arrow_rows(t) -> list[list[str]]:
    marks = pt_markers(t)
    rows = []
    for i, row in enumerate(t.rows, 1):
        out = []
        for j in range(1, len(row) + 1):
            if (i, j) in marks.topmost_ones:
                out.append("U")
            elif (i, j) in marks.rightmost_restricted_zeros:
                out.append("L")
            else:
                out.append(".")
        rows.append(out)
    return rows


def _fill_from_arrows(grid: list[list[str]], col_start: Sequence[int]) -> tuple[str, ...]:
    """Rebuild a 0/1 filling from up (topmost 1) and left (rightmost restricted 0) arrows.

    Cells above an up arrow and cells left of a left arrow get 0, everything
    else 1.  ``col_start[j]`` is the 0-based top row of column ``j``.
    """
    nrows = len(grid)
    up_row = {}
    for i in range(nrows):
        for j, s in enumerate(grid[i]):
            if s == "U":
                up_row[j] = i
    out = []
    for i, row in enumerate(grid):
        last_left = max((j for j, s in enumerate(row) if s == "L"), default=-1)
        cells = []
        for j, s in enumerate(row):
            if s == "U":
                cells.append("1")
            elif s == "L":
                cells.append("0")
            elif (j in up_row and col_start[j] <= i < up_row[j]) or j < last_left:
                cells.append("0")
            else:
                cells.append("1")
        out.append("".join(cells))
    return tuple(out)


def gamma(t: PermutationTableau) -> AlternativeTableau:
    _require_valid(t, "permutation tableau")
    if t.shape.k == 0:
        raise BijectionError("gamma needs at least one row")
    grid = _arrow_rows(t)
    shape = Shape(t.shape.n - 1, t.shape.rows[1:])
    return AlternativeTableau(shape, tuple("".join(r) for r in grid[1:]))


def gamma_inv(a: AlternativeTableau) -> PermutationTableau:
    _require_valid(a, "alternative tableau")
    m = a.shape.ncols
    grid = [["."] * m] + [list(r) for r in a.rows]
    shape = Shape(a.shape.n + 1, (m,) + a.shape.rows)
    return PermutationTableau(shape, _fill_from_arrows(grid, [0] * m))


# --------------------------------------------------------------------------
# zeta: type B permutation -> symmetric alternative


CUT = "x"


@dataclass(frozen=True)
class AltRep:
    """Arrow representation of a type B permutation tableau.

    Rows follow the shifted grid; diagonal cells are cut and shown as ``x``.
    """

    shape: ShiftedShape
    rows: tuple[str, ...]

    def __getitem__(self, cell: Cell) -> str:
        i, j = cell
        return self.rows[i - 1][j - 1]

    def ascii(self) -> str:
        table = str.maketrans({"L": "<", "U": "^", CUT: " "})
        return "\n".join(r.translate(table) for r in self.rows)


def altrep(t: TypeBPermutationTableau) -> AltRep:
    _require_valid(t, "type B permutation tableau")
    grid = _arrow_rows(t)
    for r in range(1, t.shape.stair + 1):
        grid[r - 1][r - 1] = CUT
    return AltRep(t.shape, tuple("".join(r) for r in grid))


def _symmetric_shape(base: Shape) -> Shape:
    m = base.ncols
    mu = tuple(m + h for h in base.column_heights) + base.rows
    return Shape(2 * base.n, mu)


def reflect_F(rep: AltRep) -> AlternativeTableau:
    """Mirror the strictly-below-diagonal arrows into a symmetric tableau (diagonal left empty)."""
    shape = _symmetric_shape(rep.shape.base)
    swap = {"L": "U", "U": "L", ".": "."}
    rows = []
    for r, length in enumerate(shape.rows, 1):
        cells = []
        for j in range(1, length + 1):
            if r > j:
                cells.append(rep[(r, j)])
            elif r < j:
                cells.append(swap[rep[(j, r)]])
            else:
                cells.append(".")
        rows.append("".join(cells))
    return AlternativeTableau(shape, tuple(rows))


def zeta(t: TypeBPermutationTableau) -> AlternativeTableau:
    return reflect_F(altrep(t))


def reflect_F_inv(a: AlternativeTableau) -> AltRep:
    if a.shape.n % 2 or a.reflect() != a:
        raise BijectionError("expected a symmetric alternative tableau of even length")
    n = a.shape.n // 2
    mu = a.shape.rows + (0,) * (n - a.shape.k)
    if a.shape.k > n or a.shape.ncols != n:
        raise BijectionError("symmetric tableau does not fit an n x n box")
    m = sum(1 for r in range(1, n + 1) if mu[r - 1] >= r)
    base = Shape(n, mu[m:])
    shape = ShiftedShape(base)
    rows = []
    for r, length in enumerate(shape.grid_rows, 1):
        rows.append("".join(CUT if (r == j and r <= m) else a[(r, j)] for j in range(1, length + 1)))
    return AltRep(shape, tuple(rows))


def altrep_inv(rep: AltRep) -> TypeBPermutationTableau:
    shape = rep.shape
    grid = [list(r) for r in rep.rows]
    for r in range(1, shape.stair + 1):
        column_has_up = any(len(row) >= r and row[r - 1] == "U" for row in grid)
        grid[r - 1][r - 1] = "L" if column_has_up else "U"
    col_start = list(range(shape.ncols))
    return TypeBPermutationTableau(shape, _fill_from_arrows(grid, col_start))


def zeta_inv(a: AlternativeTableau) -> TypeBPermutationTableau:
    _require_valid(a, "alternative tableau")
    return altrep_inv(reflect_F_inv(a))


# --------------------------------------------------------------------------
# descent-set contracts


def phi_contract_check(n: int, max_n: Optional[int] = None) -> bool:
    tableau_side = Counter(column_label_set(t) for t in generate_all("pt", n, max_n))
    perm_side = Counter(ps.descents(p) for p in ps.all_permutations(n))
    return tableau_side == perm_side


def xi_contract_check(n: int, max_n: Optional[int] = None) -> bool:
    tableau_side = Counter(column_label_set(t) for t in generate_all("ptb", n, max_n))
    perm_side = Counter(
        frozenset(abs(v) for v in ps.signed_descents(s)) for s in ps.all_signed_permutations(n)
    )
    return tableau_side == perm_side


# --------------------------------------------------------------------------
# non-ambiguous trees and pointed words


@dataclass(frozen=True)
class NonAmbiguousTree:
    """A tree-like tableau on a full ``(h+1) x (w+1)`` rectangle."""

    tlt: TreeLikeTableau

    def __post_init__(self):
        rows = self.tlt.shape.rows
        if not rows or len(set(rows)) != 1:
            raise BijectionError("a non-ambiguous tree needs a rectangular shape")
        _require_valid(self.tlt, "non-ambiguous tree")

    @property
    def h(self) -> int:
        return self.tlt.shape.k - 1

    @property
    def w(self) -> int:
        return self.tlt.shape.ncols - 1

    def transpose(self) -> "NonAmbiguousTree":
        return NonAmbiguousTree(self.tlt.reflect())

    @classmethod
    def from_rows(cls, rows: Sequence[str]) -> "NonAmbiguousTree":
        rows = tuple(rows)
        shape = Shape(len(rows) + len(rows[0]), (len(rows[0]),) * len(rows))
        return cls(TreeLikeTableau(shape, rows))


# A pointed word is a tuple of ints: pointed i -> -i, pointed 0 -> 0, unpointed i -> +i.
PointedWord = tuple[int, ...]


def is_pointed(letter: int) -> bool:
    return letter <= 0


def letter_index(letter: int) -> int:
    return abs(letter)


def format_pointed(word: Sequence[int]) -> str:
    return " ".join(str(v) for v in word)


def parse_pointed(text: str) -> PointedWord:
    return tuple(int(v) for v in text.split())


def is_valid_word(word: Sequence[int], h: Optional[int] = None, w: Optional[int] = None) -> bool:
    if not word:
        return False
    pointed = sorted(-v for v in word if is_pointed(v))
    unpointed = sorted(v for v in word if not is_pointed(v))
    h = len(pointed) - 1 if h is None else h
    w = len(unpointed) if w is None else w
    if pointed != list(range(0, h + 1)) or unpointed != list(range(1, w + 1)):
        return False
    if not is_pointed(word[-1]):
        return False
    for a, b in zip(word, word[1:]):
        if is_pointed(a) == is_pointed(b) and letter_index(a) >= letter_index(b):
            return False
    return True


def valid_words(h: int, w: int) -> list[PointedWord]:
    """All valid pointed words for ``(h, w)`` in lexicographic order of their integer encoding."""
    letters = sorted([-i for i in range(h + 1)] + list(range(1, w + 1)))
    out = []

    def rec(prefix, remaining):
        if not remaining:
            if is_pointed(prefix[-1]):
                out.append(tuple(prefix))
            return
        for idx, v in enumerate(remaining):
            if prefix:
                a = prefix[-1]
                if is_pointed(a) == is_pointed(v) and letter_index(a) >= letter_index(v):
                    continue
            prefix.append(v)
            rec(prefix, remaining[:idx] + remaining[idx + 1 :])
            prefix.pop()

    rec([], letters)
    return out


@lru_cache(maxsize=None)
def _nat_tables(h: int, w: int):
    shape = Shape(h + w + 2, (w + 1,) * (h + 1))
    nats = [t.rows for t in fillings_for("tlt", shape)]
    words = valid_words(h, w)
    if len(nats) != len(words):
        raise BijectionError(f"{len(nats)} trees but {len(words)} words for h={h}, w={w}")
    return {rows: wd for rows, wd in zip(nats, words)}, {wd: rows for rows, wd in zip(nats, words)}


def nat_to_word(nat: NonAmbiguousTree) -> PointedWord:
    """Rank of the tree among all trees of its rectangle, read off the sorted list of valid words."""
    forward, _ = _nat_tables(nat.h, nat.w)
    return forward[nat.tlt.rows]


def word_to_nat(word: Sequence[int]) -> NonAmbiguousTree:
    word = tuple(word)
    if not is_valid_word(word):
        raise BijectionError(f"not a valid pointed word: {format_pointed(word)}")
    h = sum(1 for v in word if is_pointed(v)) - 1
    w = len(word) - h - 1
    _, backward = _nat_tables(h, w)
    return NonAmbiguousTree.from_rows(backward[word])


def _blocks_after_zero(word: Sequence[int]) -> tuple[int, list[list[int]]]:
    z = list(word).index(0)
    blocks: list[list[int]] = []
    for v in word[z + 1 :]:
        if blocks and is_pointed(blocks[-1][-1]) == is_pointed(v):
            blocks[-1].append(v)
        else:
            blocks.append([v])
    return z, blocks


def star_applies(word: Sequence[int]) -> bool:
    z = list(word).index(0)
    return z < len(word) - 1 and not is_pointed(word[z + 1])


def word_star(word: Sequence[int]) -> PointedWord:
    """Swap each unpointed block after the pointed 0 with the pointed block that follows it."""
    word = tuple(word)
    if not star_applies(word):
        return word
    z, blocks = _blocks_after_zero(word)
    if len(blocks) % 2:
        raise BijectionError("word does not factor into (unpointed, pointed) block pairs")
    out = list(word[: z + 1])
    for a, b in zip(blocks[::2], blocks[1::2]):
        out.extend(b)
        out.extend(a)
    return tuple(out)


def word_star_inv(word: Sequence[int]) -> PointedWord:
    word = tuple(word)
    if is_pointed(word[-1]):
        return word  # the swap always leaves an unpointed letter last
    z, blocks = _blocks_after_zero(word)
    if len(blocks) % 2 or not blocks or not is_pointed(blocks[0][0]):
        raise BijectionError("word does not factor into (pointed, unpointed) block pairs")
    out = list(word[: z + 1])
    for b, a in zip(blocks[::2], blocks[1::2]):
        out.extend(a)
        out.extend(b)
    return tuple(out)


# --------------------------------------------------------------------------
# tree-like tableaux and permutations by number of cycles


def axis_dots(t: TreeLikeTableau, axis: str) -> int:
    """Points in the first row (``first_row``) or first column (``first_column``), root included."""
    if axis == "first_row":
        return top_stat(t) + 1
    if axis == "first_column":
        return left_stat(t) + 1
    raise ValueError(f"unknown axis {axis!r}")


@lru_cache(maxsize=None)
def _cycle_tables(n: int, axis: str):
    by_class_t: dict[int, list] = {}
    for t in generate_all("tlt", n, max_n=n):
        by_class_t.setdefault(axis_dots(t, axis), []).append(t)
    by_class_p: dict[int, list] = {}
    for p in ps.all_permutations(n):
        by_class_p.setdefault(len(ps.cycles(p)), []).append(p)
    forward, backward = {}, {}
    for k in sorted(set(by_class_t) | set(by_class_p)):
        ts, pis = by_class_t.get(k, []), by_class_p.get(k, [])
        if len(ts) != len(pis):
            raise BijectionError(f"size {n}: {len(ts)} tableaux vs {len(pis)} permutations with {k} cycles")
        for t, p in zip(ts, pis):
            forward[t] = p
            backward[p] = t
    return forward, backward


def tlt_to_cycleperm(t: TreeLikeTableau, axis: str = "first_column") -> tuple[int, ...]:
    """Pair tableaux with k axis points and permutations with k cycles by rank."""
    forward, _ = _cycle_tables(t.size, axis)
    return forward[t]


def cycleperm_to_tlt(pi: Sequence[int], axis: str = "first_column") -> TreeLikeTableau:
    _, backward = _cycle_tables(len(pi), axis)
    return backward[tuple(pi)]


# --------------------------------------------------------------------------
# corner cut


@dataclass(frozen=True)
class CornerTriplet:
    T_l: TreeLikeTableau
    T_r: TreeLikeTableau
    nat: NonAmbiguousTree

    @property
    def n(self) -> int:
        return self.T_l.size + self.T_r.size + 1

    def check(self) -> None:
        if self.nat.h != left_stat(self.T_r) + 1:
            raise BijectionError("tree height does not match left(T_r) + 1")
        if self.nat.w != top_stat(self.T_l) + 1:
            raise BijectionError("tree width does not match top(T_l) + 1")


def _tlt(rows: Sequence[str]) -> TreeLikeTableau:
    if not rows:
        return EMPTY_TLT
    rows = tuple(rows)
    shape = Shape(len(rows) + len(rows[0]), tuple(len(r) for r in rows))
    return TreeLikeTableau(shape, rows)


def corner_cut(t: TreeLikeTableau, corner: Cell) -> CornerTriplet:
    if corner not in corners(t.shape):
        raise BijectionError(f"{corner} is not a corner")
    i, j = corner
    rows = t.rows
    middle = [r[:j] for r in rows[:i]]
    full_rows = [r for r in range(i) if "D" in middle[r]]
    full_cols = [c for c in range(j) if any(middle[r][c] == "D" for r in range(i))]
    nat_rows = ["".join(middle[r][c] for c in full_cols) for r in full_rows]
    nat = NonAmbiguousTree.from_rows(nat_rows)

    if j > 1:
        head = "".join("D" if c in full_cols else "." for c in range(j - 1))
        t_l = _tlt([head] + [r for r in rows[i:]])
    else:
        t_l = EMPTY_TLT
    if i > 1:
        t_r = _tlt([("D" if r in full_rows else ".") + rows[r][j:] for r in range(i - 1)])
    else:
        t_r = EMPTY_TLT
    triplet = CornerTriplet(t_l, t_r, nat)
    triplet.check()
    return triplet


def corner_glue(triplet: CornerTriplet) -> tuple[TreeLikeTableau, Cell]:
    """Rebuild the tableau and the corner.

    The row and column positions of the tree inside the middle block are read
    off the first column of ``T_r`` and the first row of ``T_l``, so no extra
    data is needed.
    """
    triplet.check()
    t_l, t_r, nat = triplet.T_l, triplet.T_r, triplet.nat
    i = len(t_r.rows) + 1
    j = (len(t_l.rows[0]) if t_l.rows else 0) + 1
    keep_rows = [r for r in range(i - 1) if t_r.rows[r][0] == "D"] + [i - 1]
    keep_cols = [c for c in range(j - 1) if t_l.rows[0][c] == "D"] + [j - 1]
    grid = [["."] * j for _ in range(i)]
    for a, r in enumerate(keep_rows):
        for b, c in enumerate(keep_cols):
            grid[r][c] = nat.tlt.rows[a][b]
    rows = []
    for r in range(i):
        right = t_r.rows[r][1:] if r < i - 1 else ""
        rows.append("".join(grid[r]) + right)
    rows.extend(t_l.rows[1:])
    t = _tlt(rows)
    _require_valid(t, "glued tableau")
    return t, (i, j)


# --------------------------------------------------------------------------
# triplets and runs of size 1


def assemble_run(
    l_sigma: Sequence[int], r_sigma: Sequence[int], word: Sequence[int]
) -> tuple[tuple[int, ...], int]:
    """Build the permutation from the two cycle permutations and a pointed word.

    The word is first passed through ``word_star``.  Returns the permutation and
    the 1-based position of the run of size 1 (the value ``len(l_sigma) + 1``).
    """
    n_l = len(l_sigma)
    pivot = n_l + 1
    l_cycles = ps.cycles(l_sigma)
    r_cycles = tuple(tuple(v + pivot for v in c) for c in ps.cycles(r_sigma))
    out: list[int] = []
    for letter in word_star(word):
        if letter == 0:
            out.append(pivot)
        elif is_pointed(letter):
            out.extend(l_cycles[-letter - 1])
        else:
            out.extend(r_cycles[letter - 1])
    return tuple(out), out.index(pivot) + 1


def split_run(sigma: Sequence[int], k: int) -> tuple[tuple[int, ...], tuple[int, ...], PointedWord]:
    """Inverse of ``assemble_run``: returns ``(l_sigma, r_sigma, word)``."""
    sigma = tuple(sigma)
    pivot = sigma[k - 1]
    n_l = pivot - 1
    n_r = len(sigma) - pivot
    blocks: list[tuple[bool, list[int]]] = []  # (small values?, values)
    for pos, v in enumerate(sigma, 1):
        if pos == k:
            blocks.append((True, [0]))
            continue
        small = v < pivot
        if blocks and blocks[-1][1] != [0] and blocks[-1][0] == small:
            blocks[-1][1].append(v)
        else:
            blocks.append((small, [v]))
    pieces: list[tuple[bool, tuple[int, ...]]] = []
    for small, values in blocks:
        if values == [0]:
            pieces.append((True, (0,)))
            continue
        for c in ps.foata_inverse(values):
            pieces.append((small, c))
    l_cycles = sorted((c for s, c in pieces if s and c != (0,)), key=max)
    r_cycles = sorted((c for s, c in pieces if not s), key=max)
    l_index = {c: i for i, c in enumerate(l_cycles, 1)}
    r_index = {c: i for i, c in enumerate(r_cycles, 1)}
    starred = tuple(
        0 if c == (0,) else (-l_index[c] if s else r_index[c]) for s, c in pieces
    )
    word = word_star_inv(starred)
    l_sigma = ps.from_cycles(l_cycles, n_l)
    r_sigma = ps.from_cycles([tuple(v - pivot for v in c) for c in r_cycles], n_r)
    return l_sigma, r_sigma, word


def triplet_to_run(triplet: CornerTriplet) -> tuple[tuple[int, ...], int]:
    triplet.check()
    l_sigma = tlt_to_cycleperm(triplet.T_l, "first_row")
    r_sigma = tlt_to_cycleperm(triplet.T_r, "first_column")
    # pointed letters index the cycles of l_sigma, whose count is the tree's width,
    # so the word is read from the transposed tree
    word = nat_to_word(triplet.nat.transpose())
    return assemble_run(l_sigma, r_sigma, word)


def run_to_triplet(sigma: Sequence[int], k: int) -> CornerTriplet:
    run = ps.run_decomposition(sigma)
    if k not in run.singletons():
        raise BijectionError(f"position {k} is not a run of size 1")
    l_sigma, r_sigma, word = split_run(sigma, k)
    t_l = cycleperm_to_tlt(l_sigma, "first_row")
    t_r = cycleperm_to_tlt(r_sigma, "first_column")
    return CornerTriplet(t_l, t_r, word_to_nat(word).transpose())


def corners_to_runs(n: int, max_n: Optional[int] = None) -> dict:
    """Map every (tableau, corner) of size n to (permutation, run position)."""
    out = {}
    for t in generate_all("tlt", n, max_n):
        for c in corners(t.shape):
            out[(t, c)] = triplet_to_run(corner_cut(t, c))
    return out


def all_singleton_runs(n: int) -> Iterator[tuple[tuple[int, ...], int]]:
    for pi in ps.all_permutations(n):
        for k in ps.run_decomposition(pi).singletons():
            yield pi, k


def check_corners_to_runs(n: int, max_n: Optional[int] = None) -> tuple[bool, Optional[str]]:
    mapping = corners_to_runs(n, max_n)
    image = list(mapping.values())
    target = set(all_singleton_runs(n))
    if len(set(image)) != len(image):
        return False, "two corners map to the same run"
    extra = set(image) - target
    if extra:
        sigma, k = min(extra)
        return False, f"image {ps.format_word(sigma)} at {k} is not a run of size 1"
    missing = target - set(image)
    if missing:
        sigma, k = min(missing)
        return False, f"run {ps.format_word(sigma)} at {k} is not hit"
    return True, None
