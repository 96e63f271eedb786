"""Permutations and signed permutations, with the statistics used on the tableau side.

Descent-type statistics return sets of *values* rather than positions, so they can
be compared directly with sets of border labels.  Boundary sentinels:

* descents / ascents:       pi_{n+1} = n+1
* signed descents / ascents: sigma_{n+1} = n+1
* ascending runs:           sigma_0 = n+1, sigma_{n+1} = 0
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Iterable, Iterator, Sequence

Word = tuple[int, ...]


def is_permutation(word: Sequence[int]) -> bool:
    return sorted(word) == list(range(1, len(word) + 1))


def is_signed_permutation(word: Sequence[int]) -> bool:
    return 0 not in word and is_permutation([abs(v) for v in word])


def all_permutations(n: int) -> Iterator[Word]:
    """S_n in lexicographic order."""
    return permutations(range(1, n + 1))


def all_signed_permutations(n: int) -> Iterator[Word]:
    """S_n^B ordered by the absolute word, then by the sign mask (first letter most significant)."""
    for word in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            yield tuple(s * v for s, v in zip(signs, word))


def format_word(word: Iterable[int]) -> str:
    return ",".join(str(v) for v in word)


def parse_word(text: str) -> Word:
    text = text.strip()
    return tuple(int(v) for v in text.split(",")) if text else ()


# --------------------------------------------------------------------------
# descents


def descents(pi: Sequence[int]) -> frozenset[int]:
    n = len(pi)
    ext = list(pi) + [n + 1]
    return frozenset(ext[i] for i in range(n) if ext[i] > ext[i + 1])


def ascents(pi: Sequence[int]) -> frozenset[int]:
    return frozenset(pi) - descents(pi)


def signed_descents(sigma: Sequence[int]) -> frozenset[int]:
    n = len(sigma)
    ext = list(sigma) + [n + 1]
    return frozenset(ext[i] for i in range(n) if ext[i] < 0 or ext[i] > abs(ext[i + 1]))


def signed_ascents(sigma: Sequence[int]) -> frozenset[int]:
    return frozenset(sigma) - signed_descents(sigma)


def a_indicator(pi: Sequence[int], i: int) -> int:
    """1 when i is an ascent and i+1 a descent."""
    desc = descents(pi)
    return int(i not in desc and (i + 1) in desc)


def b_indicator(sigma: Sequence[int], i: int) -> int:
    """1 when i is a signed ascent and i+1 a signed descent (either sign of each value)."""
    desc = signed_descents(sigma)
    present = set(sigma)
    vi = i if i in present else -i
    vj = i + 1 if (i + 1) in present else -(i + 1)
    return int(vi not in desc and vj in desc)


def _check_i(n: int, i: int) -> None:
    if n < 2 or not 1 <= i < n:
        raise ValueError(f"need 1 <= i < n and n >= 2, got n={n}, i={i}")


def count_Ai(n: int, i: int) -> int:
    _check_i(n, i)
    return sum(a_indicator(pi, i) for pi in all_permutations(n))


def closed_Ai(n: int, i: int) -> int:
    _check_i(n, i)
    f = factorial(n - 2)
    return (i - 1) * f + (n - i) * f + (n - i) * (i - 1) * f


def count_Bi(n: int, i: int) -> int:
    _check_i(n, i)
    return sum(b_indicator(s, i) for s in all_signed_permutations(n))


def closed_Bi(n: int, i: int) -> int:
    _check_i(n, i)
    f1, f2 = factorial(n - 1), factorial(n - 2)
    inner = f1 + (n - i) * f1 + (i - 1) * f2 + (n - i) * f2 + (n - i) * (i - 1) * f2
    return 2 ** (n - 2) * inner


# --------------------------------------------------------------------------
# ascending runs


@dataclass(frozen=True)
class RunDecomposition:
    word: Word
    runs: tuple[tuple[int, int], ...]  # (1-based start position, length)

    def sizes(self) -> list[int]:
        return [length for _, length in self.runs]

    def singletons(self) -> list[int]:
        """Positions holding a run of size 1."""
        return [start for start, length in self.runs if length == 1]


def run_decomposition(sigma: Sequence[int]) -> RunDecomposition:
    word = tuple(sigma)
    runs = []
    start = 1
    for pos in range(1, len(word) + 1):
        if pos == len(word) or word[pos] < word[pos - 1]:
            runs.append((start, pos - start + 1))
            start = pos + 1
    return RunDecomposition(word, tuple(runs))


def count_runs_of_size(n: int, r: int) -> int:
    if not 0 < r < n:
        raise ValueError(f"need 0 < r < n, got r={r}, n={n}")
    return sum(run_decomposition(pi).sizes().count(r) for pi in all_permutations(n))


# --------------------------------------------------------------------------
# auxiliary statistics


@dataclass(frozen=True)
class AuxStats:
    double_descents: int
    excedance_count: int
    positive_displacement: int


def aux_stats(pi: Sequence[int]) -> AuxStats:
    n = len(pi)
    dd = sum(1 for i in range(n - 2) if pi[i] > pi[i + 1] > pi[i + 2])
    exc = sum(1 for i in range(n - 1) if pi[i] > i + 1)
    disp = sum(max(v - i, 0) for i, v in enumerate(pi, 1))
    return AuxStats(dd, exc, disp)


def total_aux(n: int) -> AuxStats:
    dd = exc = disp = 0
    for pi in all_permutations(n):
        s = aux_stats(pi)
        dd += s.double_descents
        exc += s.excedance_count
        disp += s.positive_displacement
    return AuxStats(dd, exc, disp)


# --------------------------------------------------------------------------
# cycles and the Foata transformation


Cycles = tuple[Word, ...]


def cycles(pi: Sequence[int], offset: int = 0) -> Cycles:
    """Cycles written max-first, listed by increasing maximum.

    ``pi`` may be a bijection of ``{offset+1, ..., offset+n}``.
    """
    mapping = {offset + i: v for i, v in enumerate(pi, 1)}
    seen = set()
    out = []
    for start in sorted(mapping, reverse=True):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        nxt = mapping[start]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = mapping[nxt]
        out.append(tuple(cyc))
    return tuple(sorted(out, key=max))


def normalize_cycles(cyc: Iterable[Sequence[int]]) -> Cycles:
    out = []
    for c in cyc:
        c = tuple(c)
        k = c.index(max(c))
        out.append(c[k:] + c[:k])
    return tuple(sorted(out, key=max))


def from_cycles(cyc: Iterable[Sequence[int]], n: int, offset: int = 0) -> Word:
    image = {}
    for c in cyc:
        for a, b in zip(c, c[1:] + c[:1]):
            image[a] = b
    return tuple(image[offset + i] for i in range(1, n + 1))


def foata(cyc: Iterable[Sequence[int]]) -> Word:
    return tuple(v for c in normalize_cycles(cyc) for v in c)


def foata_inverse(word: Sequence[int]) -> Cycles:
    out = []
    current: list[int] = []
    best = None
    for v in word:
        if best is None or v > best:
            if current:
                out.append(tuple(current))
            current = [v]
            best = v
        else:
            current.append(v)
    if current:
        out.append(tuple(current))
    return tuple(out)


def left_to_right_maxima(word: Sequence[int]) -> int:
    best, count = None, 0
    for v in word:
        if best is None or v > best:
            best, count = v, count + 1
    return count


# --------------------------------------------------------------------------
# tables


def stat_table_csv(n_max: int, signed: bool = False) -> str:
    """CSV rows ``n,i,count,closed_form`` for the A_i (or B_i) indicator counts."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "i", "count", "closed_form"])
    count, closed = (count_Bi, closed_Bi) if signed else (count_Ai, closed_Ai)
    for n in range(2, n_max + 1):
        for i in range(1, n):
            writer.writerow([n, i, count(n, i), closed(n, i)])
    return buf.getvalue()
