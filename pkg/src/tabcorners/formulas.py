"""Closed forms, polynomial analogues and conjecture evaluators.

Everything is exact: integers, :class:`fractions.Fraction` and :class:`~tabcorners.polys.Poly`.
Family indices follow :mod:`tabcorners.tableaux` (``at`` is indexed by its
length, ``tltsym`` by the half-size ``n`` of a tableau of size ``2n+1``).
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Optional

from .diagrams import corners
from .polys import AB, X, XYZ, Poly, rising
from .tableaux import (
    NocClass,
    corner_count,
    corner_records,
    diag_stat,
    fillings_for,
    generate_all,
    left_stat,
    shapes_for,
    top_stat,
)

PASS, FAIL, OUT_OF_BOUNDS = "pass", "fail", "out-of-bounds"


def _exact(num: int, den: int) -> int:
    if num % den:
        raise ArithmeticError(f"{num}/{den} is not an integer")
    return num // den


# --------------------------------------------------------------------------
# corner counts


def closed_corner_count(family: str, n: int) -> int:
    """Total number of corners over the family at index ``n``."""
    if family == "at":
        # alternative tableaux of length n sit next to tableaux of size n+1
        if n < 0:
            raise ValueError("length must be >= 0")
        m = n + 1
        return 0 if m == 1 else _exact(factorial(m - 1) * (m * m + 4 * m - 12), 6)
    if n < 1:
        raise ValueError(f"{family} corner counts start at n=1")
    if family == "pt":
        return 0 if n == 1 else _exact(factorial(n - 1) * (n * n + 4 * n - 6), 6)
    if family == "tlt":
        return 1 if n == 1 else _exact(factorial(n) * (n + 4), 6)
    if family == "ptb":
        return 0 if n == 1 else _exact(2 ** (n - 1) * factorial(n - 1) * (4 * n * n + 7 * n - 12), 12)
    if family == "atsym":
        return 1 if n == 1 else _exact(2**n * factorial(n - 1) * (4 * n * n + 13 * n - 12), 12)
    if family == "tltsym":
        return 3 if n == 1 else _exact(2**n * factorial(n) * (4 * n + 13), 12)
    raise ValueError(f"unknown family {family!r}")


def closed_occupied(family: str, n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    if family == "tlt":
        return factorial(n)
    if family == "tltsym":
        return 2**n * factorial(n)
    raise ValueError("occupied corners are defined for tlt and tltsym")


def closed_noc(family: str, n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    if family == "tlt":
        return 0 if n <= 2 else _exact(factorial(n) * (n - 2), 6)
    if family == "tltsym":
        return 1 if n == 1 else _exact(2**n * factorial(n) * (4 * n + 1), 12)
    raise ValueError("non-occupied corners are defined for tlt and tltsym")


def runs_closed(n: int, r: int) -> int:
    """Number of ascending runs of size ``r`` over all permutations of ``[n]``."""
    if not 0 < r < n:
        raise ValueError(f"need 0 < r < n, got r={r}, n={n}")
    return _exact(factorial(n) * (n * (r * (r + 1) - 1) - r * (r - 2) * (r + 2) + 1), factorial(r + 2))


def enumerated_corner_count(family: str, n: int, max_n: Optional[int] = None) -> int:
    return sum(corner_count(t) for t in generate_all(family, n, max_n))


# --------------------------------------------------------------------------
# polynomial analogues


def a_var() -> Poly:
    return Poly.var(AB, "a")


def b_var() -> Poly:
    return Poly.var(AB, "b")


def T_ab(n: int) -> Poly:
    """``(a+b)(a+b+1)...(a+b+n-2)``, equal to 1 for ``n <= 1``."""
    return rising(a_var() + b_var(), max(n - 1, 0))


def Tsym_x(n: int) -> Poly:
    """``2^n (x+1)...(x+n-1)`` for tableaux of size ``2n+1``.

    At ``n = 0`` the rising-factorial reading of the empty range gives ``x^-1``.
    """
    x = Poly.var(X, "x")
    if n == 0:
        return Poly.var(X, "x", -1)
    return 2**n * rising(x, n - 1, start=1)


def Tsym_xyz(n: int) -> Poly:
    """``(1+z)^n (x+y)(x+y+1)...(x+y+n-2)``."""
    x, y, z = (Poly.var(XYZ, v) for v in XYZ)
    return (z + 1) ** n * rising(x + y, max(n - 1, 0))


def weight(t) -> Poly:
    return Poly.monomial(AB, (top_stat(t), left_stat(t)))


def eulerian_ab(n: int, k: int) -> Poly:
    if n < 1:
        raise ValueError("n must be >= 1")
    return _eulerian_table(n)[k] if 1 <= k <= n else Poly.const(AB, 0)


def _eulerian_table(n: int) -> list[Poly]:
    a, b = a_var(), b_var()
    row = [Poly.const(AB, 0), Poly.const(AB, 1)]  # A(1, k) for k = 0, 1
    for m in range(1, n):
        nxt = [Poly.const(AB, 0)]
        for k in range(1, m + 2):
            cur = row[k] if k <= m else Poly.const(AB, 0)
            prev = row[k - 1] if k - 1 >= 1 else Poly.const(AB, 0)
            nxt.append((a + (k - 1)) * cur + (b + (m + 1 - k)) * prev)
        row = nxt
    return row


def A_t(n: int) -> list[Poly]:
    """Coefficients of ``A_n(t)``: entry ``k`` is the coefficient of ``t^k`` (entry 0 is zero)."""
    return _eulerian_table(n)


def A_at_one(n: int) -> Poly:
    return sum(A_t(n), Poly.const(AB, 0))


def A_prime_at_one(n: int) -> Poly:
    return sum((k * c for k, c in enumerate(A_t(n))), Poly.const(AB, 0))


def lemma_checks(n: int) -> tuple[bool, bool]:
    """``A_n(1) = T_n(a,b)`` and ``A_n'(1) = (a + bn + C(n,2) - 1) T_{n-1}(a,b)``."""
    first = A_at_one(n) == T_ab(n)
    if n == 1:
        second = A_prime_at_one(1) == 1
    else:
        second = A_prime_at_one(n) == (a_var() + n * b_var() + (comb(n, 2) - 1)) * T_ab(n - 1)
    return first, second


# --------------------------------------------------------------------------
# enumeration-backed sums


@dataclass
class TLTSums:
    """Weighted sums over a set of tree-like tableaux of one size.

    Mergeable with ``+``, so shapes can be summed independently.
    """

    count: int = 0
    corners: int = 0
    occupied: int = 0
    noc: int = 0
    w: Poly = field(default_factory=lambda: Poly.const(AB, 0))
    c_w: Poly = field(default_factory=lambda: Poly.const(AB, 0))
    occ_w: Poly = field(default_factory=lambda: Poly.const(AB, 0))
    noc_w: Poly = field(default_factory=lambda: Poly.const(AB, 0))
    classes: dict = field(default_factory=dict)

    def __add__(self, other: "TLTSums") -> "TLTSums":
        classes = dict(self.classes)
        for k, v in other.classes.items():
            classes[k] = classes.get(k, Poly.const(AB, 0)) + v
        return TLTSums(
            self.count + other.count,
            self.corners + other.corners,
            self.occupied + other.occupied,
            self.noc + other.noc,
            self.w + other.w,
            self.c_w + other.c_w,
            self.occ_w + other.occ_w,
            self.noc_w + other.noc_w,
            classes,
        )

    def class_sum(self, cls: NocClass) -> Poly:
        return self.classes.get(cls.value, Poly.const(AB, 0))


def tlt_sums_for_shape(shape) -> TLTSums:
    out = TLTSums()
    for t in fillings_for("tlt", shape):
        wt = weight(t)
        records = corner_records(t)
        occ = sum(1 for r in records if r.occupied)
        out.count += 1
        out.corners += len(records)
        out.occupied += occ
        out.noc += len(records) - occ
        out.w = out.w + wt
        out.c_w = out.c_w + len(records) * wt
        out.occ_w = out.occ_w + occ * wt
        out.noc_w = out.noc_w + (len(records) - occ) * wt
        for r in records:
            if not r.occupied:
                key = r.noc_class.value
                out.classes[key] = out.classes.get(key, Poly.const(AB, 0)) + wt
    return out


def tlt_sums(n: int, max_n: Optional[int] = None, shapes: Optional[Iterable] = None) -> TLTSums:
    from .tableaux import check_bound

    check_bound("tlt", n, max_n)
    total = TLTSums()
    for shape in shapes if shapes is not None else shapes_for("tlt", n):
        total = total + tlt_sums_for_shape(shape)
    return total


@dataclass
class SymSums:
    count: int = 0
    corners: int = 0
    occupied: int = 0
    noc: int = 0
    x: Poly = field(default_factory=lambda: Poly.const(X, 0))
    occ_x: Poly = field(default_factory=lambda: Poly.const(X, 0))
    noc_x: Poly = field(default_factory=lambda: Poly.const(X, 0))
    xyz: Poly = field(default_factory=lambda: Poly.const(XYZ, 0))

    def __add__(self, other: "SymSums") -> "SymSums":
        return SymSums(
            self.count + other.count,
            self.corners + other.corners,
            self.occupied + other.occupied,
            self.noc + other.noc,
            self.x + other.x,
            self.occ_x + other.occ_x,
            self.noc_x + other.noc_x,
            self.xyz + other.xyz,
        )


def sym_sums_for_shape(shape) -> SymSums:
    out = SymSums()
    for t in fillings_for("tltsym", shape):
        ls = left_stat(t) - 1
        ts = top_stat(t) - 1
        mono = Poly.monomial(X, (ls,))
        cs = corners(t.shape)
        occ = sum(1 for c in cs if t[c] == "D")
        out.count += 1
        out.corners += len(cs)
        out.occupied += occ
        out.noc += len(cs) - occ
        out.x = out.x + mono
        out.occ_x = out.occ_x + occ * mono
        out.noc_x = out.noc_x + (len(cs) - occ) * mono
        out.xyz = out.xyz + Poly.monomial(XYZ, (ls, ts, diag_stat(t)))
    return out


def sym_sums(n: int, max_n: Optional[int] = None, shapes: Optional[Iterable] = None) -> SymSums:
    from .tableaux import check_bound

    check_bound("tltsym", n, max_n)
    total = SymSums()
    for shape in shapes if shapes is not None else shapes_for("tltsym", n):
        total = total + sym_sums_for_shape(shape)
    return total


# --------------------------------------------------------------------------
# non-occupied corner classes and the conjectures


def noc_partition_sums(n: int, max_n: Optional[int] = None) -> dict[str, Poly]:
    if n < 3:
        raise ValueError("the class sums are stated for n >= 3")
    sums = tlt_sums(n, max_n)
    return {cls.value: sums.class_sum(cls) for cls in (NocClass.AB, NocClass.A1, NocClass.ONE_B, NocClass.ONE_ONE)}


def noc_partition_closed(n: int) -> dict[str, Poly]:
    """Closed forms for the three classes that have one; ``OneOne`` has none."""
    a, b, t = a_var(), b_var(), T_ab(n - 2)
    return {
        NocClass.AB.value: (n - 2) * a * b * t,
        NocClass.A1.value: comb(n - 2, 2) * a * t,
        NocClass.ONE_B.value: comb(n - 2, 2) * b * t,
    }


def noc_conjecture_ab(n: int) -> Poly:
    a, b = a_var(), b_var()
    return ((n - 2) * a * b + comb(n - 2, 2) * (a + b) + comb(n - 2, 3)) * T_ab(n - 2)


def c_conjecture_ab(n: int) -> Poly:
    return noc_conjecture_ab(n) + T_ab(n)


@dataclass(frozen=True)
class Verdict:
    status: str
    expected: Optional[Poly] = None
    actual: Optional[Poly] = None

    def __bool__(self):
        return self.status == PASS


def _within(family: str, n: int, max_n: Optional[int]) -> bool:
    from .tableaux import bound_for

    return n <= (bound_for(family) if max_n is None else max_n)


def conjecture_ab(n: int, max_n: Optional[int] = None) -> dict:
    if n < 3:
        raise ValueError("the conjecture is stated for n >= 3")
    noc_c, c_c = noc_conjecture_ab(n), c_conjecture_ab(n)
    if not _within("tlt", n, max_n):
        return {"noc_conj": noc_c, "c_conj": c_c, "verdict": Verdict(OUT_OF_BOUNDS)}
    sums = tlt_sums(n, max_n)
    ok = sums.noc_w == noc_c and sums.c_w == c_c
    verdict = Verdict(PASS) if ok else Verdict(FAIL, noc_c, sums.noc_w)
    return {"noc_conj": noc_c, "c_conj": c_c, "verdict": verdict}


def noc_conjecture_x(n: int) -> Poly:
    x = Poly.var(X, "x")
    bracket = 2 * n * x * x + 2 * (2 * n * n - 4 * n + 1) * x + _exact((n - 2) * (n - 1) * (4 * n - 3), 3)
    return bracket * Tsym_x(n - 2)


def reference_table_x(n: int) -> Poly:
    """Reference values of the x-conjecture for n = 2..7."""
    x = Poly.var(X, "x")
    quad = {
        2: None,
        3: (6, 14, 6),
        4: (8, 34, 26),
        5: (10, 62, 68),
        6: (12, 98, 140),
        7: (14, 142, 250),
    }
    if n == 2:
        return 4 * x + 2
    if n not in quad:
        raise ValueError("the table covers n = 2..7")
    c2, c1, c0 = quad[n]
    return (c2 * x * x + c1 * x + c0) * 2 ** (n - 2) * rising(x, n - 3, start=1)


def conjecture_x(n: int, max_n: Optional[int] = None) -> dict:
    if n < 2:
        raise ValueError("the conjecture is stated for n >= 2")
    poly = noc_conjecture_x(n)
    if not _within("tltsym", n, max_n):
        return {"poly": poly, "verdict": Verdict(OUT_OF_BOUNDS)}
    actual = sym_sums(n, max_n).noc_x
    return {"poly": poly, "verdict": Verdict(PASS) if actual == poly else Verdict(FAIL, poly, actual)}


def trivariate_check(n: int, max_n: Optional[int] = None) -> Verdict:
    """Compare the enumerated (x, y, z) weight sum with the product form."""
    expected = Tsym_xyz(n)
    if not _within("tltsym", n, max_n):
        return Verdict(OUT_OF_BOUNDS, expected)
    actual = sym_sums(n, max_n).xyz
    return Verdict(PASS) if actual == expected else Verdict(FAIL, expected, actual)


def expected_X_closed(n: int, a, b) -> Fraction:
    a, b = Fraction(a), Fraction(b)
    num = 3 * (a * a + b * b) + 6 * n * a * b + 3 * (n * n - n - 1) * (a + b) + n * (n - 1) * (n - 2)
    den = 3 * (a + b + n - 1) * (a + b + n - 2)
    return num / den


def expected_X_direct(n: int, a, b, max_n: Optional[int] = None) -> Fraction:
    sums = tlt_sums(n + 1, max_n)
    num = (2 * sums.c_w - sums.w).evaluate(a=a, b=b)
    return num / T_ab(n + 1).evaluate(a=a, b=b)


def expected_X(n: int, a, b, max_n: Optional[int] = None) -> tuple[Fraction, Fraction]:
    """Closed rational expression and the direct weighted average, for comparison."""
    return expected_X_closed(n, a, b), expected_X_direct(n, a, b, max_n)


# --------------------------------------------------------------------------
# tables


def corner_table_csv(rows: Iterable[tuple[int, str, int, int]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "family", "closed", "enumerated", "match"])
    for n, family, closed, enumerated in rows:
        writer.writerow([n, family, closed, enumerated, closed == enumerated])
    return buf.getvalue()
