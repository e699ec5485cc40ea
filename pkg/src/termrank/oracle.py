"""Brute-force reference answers for small instances.

Nothing here calls the rank, classops or realize modules; the only shared
code is the value types in ``core``.  Speed is not a goal.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .core import BinaryMatrix, DegreePair
from .errors import CapacityError

MAX_BRUTE_COLUMNS = 12
MAX_BRUTE_ROWS = 20
CLASS_LIMIT = 10**6


def brute_rank(A: BinaryMatrix, t: int) -> int:
    """Largest number of 1s with at most t per row and one per column.

    Every column either picks one of the rows holding a 1 in it (while that
    row has fewer than t picks) or picks nothing; all assignments are tried,
    skipping branches that cannot beat the best found so far.
    """
    if A.n > MAX_BRUTE_COLUMNS:
        raise CapacityError(f"brute_rank handles at most {MAX_BRUTE_COLUMNS} columns")
    if t < 1:
        raise ValueError("t must be positive")
    col_rows = [[i for i in range(A.m) if A.rows[i][j]] for j in range(A.n)]
    load = [0] * A.m
    best = 0

    def go(j: int, taken: int) -> None:
        nonlocal best
        if taken + (A.n - j) <= best:
            return
        if j == A.n:
            best = taken
            return
        for i in col_rows[j]:
            if load[i] < t:
                load[i] += 1
                go(j + 1, taken + 1)
                load[i] -= 1
        go(j + 1, taken)

    go(0, 0)
    return best


def brute_cover(A: BinaryMatrix, t: int) -> int:
    """min over row sets E of t|E| + (number of columns with a 1 outside E)."""
    if A.m > MAX_BRUTE_ROWS:
        raise CapacityError(f"brute_cover handles at most {MAX_BRUTE_ROWS} rows")
    best = None
    for E in range(1 << A.m):
        cols = set()
        for i in range(A.m):
            if not E >> i & 1:
                cols.update(j for j in range(A.n) if A.rows[i][j])
        weight = t * bin(E).count("1") + len(cols)
        if best is None or weight < best:
            best = weight
    return best


def brute_class(pair: DegreePair, limit: int = CLASS_LIMIT) -> Iterator[BinaryMatrix]:
    """Every member of A(R, S), generated row by row.

    Row i tries each r_i-subset of columns; a column that is already full
    is not offered.  Complete matrices are kept if all column sums match.
    """
    m, n = pair.m, pair.n
    if any(x < 0 for x in pair.R + pair.S) or sum(pair.R) != sum(pair.S):
        return
    room = list(pair.S)
    rows: list[tuple[int, ...]] = []
    count = 0

    def go(i: int) -> Iterator[BinaryMatrix]:
        nonlocal count
        if i == m:
            if not any(room):
                count += 1
                if count > limit:
                    raise CapacityError(f"class has more than {limit} members")
                yield BinaryMatrix(tuple(rows))
            return
        for cols in combinations([j for j in range(n) if room[j] > 0], pair.R[i]):
            for j in cols:
                room[j] -= 1
            rows.append(tuple(int(j in cols) for j in range(n)))
            yield from go(i + 1)
            rows.pop()
            for j in cols:
                room[j] += 1

    yield from go(0)


def brute_max_rank(pair: DegreePair, t: int, limit: int = CLASS_LIMIT) -> int:
    """Max of brute_rank over the class; raises ValueError on an empty class."""
    best = None
    for A in brute_class(pair, limit):
        r = brute_rank(A, t)
        if best is None or r > best:
            best = r
    if best is None:
        raise ValueError(f"A({pair}) is empty")
    return best


def brute_nested_pair(outer: DegreePair, inner: DegreePair, limit: int = CLASS_LIMIT) -> bool:
    """Whether some member of the outer class dominates some member of the inner one."""
    big = list(brute_class(outer, limit))
    small = list(brute_class(inner, limit))
    return any(b <= a for a in big for b in small)
