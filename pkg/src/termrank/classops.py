"""The class A(R, S): feasibility, construction, extremal t-term rank, sampling."""

from __future__ import annotations

import math
import random
from itertools import combinations
from typing import Iterator, Sequence

from .core import BinaryMatrix, DegreePair, sort_monotone
from .errors import CapacityError, DomainError, InfeasibleClassError, SumMismatchError
from .rank import InterchangeMove, apply_interchange

DEFAULT_LIMIT = 10**6


def structure_matrix(pair: DegreePair) -> tuple[tuple[int, ...], ...]:
    """(m+1) x (n+1) grid with entry [k][l] = kl - (s_1+..+s_l) + (r_{k+1}+..+r_m).

    Computed on the vectors exactly as given; no sorting.
    """
    R, S = pair.R, pair.S
    tail = [0] * (len(R) + 1)
    for k in range(len(R) - 1, -1, -1):
        tail[k] = tail[k + 1] + R[k]
    head = [0] * (len(S) + 1)
    for l, s in enumerate(S):
        head[l + 1] = head[l] + s
    return tuple(
        tuple(k * l - head[l] + tail[k] for l in range(len(S) + 1))
        for k in range(len(R) + 1)
    )


def _nonnegative_structure(R: Sequence[int], S: Sequence[int]) -> bool:
    R = sorted(R, reverse=True)
    S = sorted(S, reverse=True)
    return all(x >= 0 for row in structure_matrix(DegreePair(R, S)) for x in row)


def class_nonempty(R: Sequence[int], S: Sequence[int]) -> bool:
    """Lenient nonemptiness test: False instead of raising on bad input."""
    if any(x < 0 for x in R) or any(x < 0 for x in S) or sum(R) != sum(S):
        return False
    return _nonnegative_structure(R, S)


def is_nonempty(pair: DegreePair) -> bool:
    """Ford-Fulkerson criterion on the nonincreasing rearrangement of R and S."""
    if any(x < 0 for x in pair.R + pair.S):
        raise DomainError("row and column sums must be nonnegative")
    if sum(pair.R) != sum(pair.S):
        raise SumMismatchError(f"sum(R) = {sum(pair.R)} but sum(S) = {sum(pair.S)}")
    return _nonnegative_structure(pair.R, pair.S)


def _require_nonempty(pair: DegreePair) -> None:
    try:
        ok = is_nonempty(pair)
    except DomainError as exc:
        raise InfeasibleClassError(str(exc)) from exc
    if not ok:
        raise InfeasibleClassError(f"A({pair}) is empty")


def construct_member(pair: DegreePair) -> BinaryMatrix:
    """A canonical member of A(R, S).

    Columns are filled left to right; each column puts its 1s into the rows
    with the largest remaining row sum, lower row index first on ties.
    """
    _require_nonempty(pair)
    residual = list(pair.R)
    grid = [[0] * pair.n for _ in range(pair.m)]
    for j, s in enumerate(pair.S):
        chosen = sorted(range(pair.m), key=lambda i: (-residual[i], i))[:s]
        for i in chosen:
            if residual[i] == 0:
                raise InfeasibleClassError(f"A({pair}) is empty")
            residual[i] -= 1
            grid[i][j] = 1
    if any(residual):
        raise InfeasibleClassError(f"A({pair}) is empty")
    return BinaryMatrix.from_rows(grid)


def max_t_term_rank(pair: DegreePair, t: int) -> int:
    """Maximum of rho_t over A(R, S): min over (e, f) of t_ef + t*e + f."""
    if t < 1:
        raise DomainError("t must be a positive integer")
    _require_nonempty(pair)
    sorted_pair, _, _ = sort_monotone(pair)
    T = structure_matrix(sorted_pair)
    return min(T[e][f] + t * e + f for e in range(pair.m + 1) for f in range(pair.n + 1))


def full_rank_witness_exists(pair: DegreePair, t: int) -> bool:
    """Whether some member of A(R, S) has rho_t = tm, for the case n = tm."""
    if pair.n != t * pair.m:
        raise DomainError(f"needs n = t*m, got n = {pair.n}, t*m = {t * pair.m}")
    return max_t_term_rank(pair, t) == t * pair.m


def _semiregular_check(m: int, n: int, k: int, l: int) -> None:
    if min(m, n, k, l) < 1:
        raise DomainError("m, n, k, l must be positive")
    if k * m != l * n:
        raise DomainError(f"k*m = {k * m} differs from l*n = {l * n}")
    if k > n or l > m:
        raise DomainError("row sum exceeds n or column sum exceeds m")


def semiregular_rank(m: int, n: int, k: int, l: int, t: int) -> int:
    """rho_t of every member of A(m, n; k, l)."""
    _semiregular_check(m, n, k, l)
    if t < 1:
        raise DomainError("t must be a positive integer")
    return min(t * m, n)


def semiregular_strength(m: int, n: int, k: int, l: int) -> int:
    _semiregular_check(m, n, k, l)
    if m > n:
        raise DomainError("strength formula needs m <= n")
    return math.ceil(n / m)


def enumerate_class(pair: DegreePair, limit: int = DEFAULT_LIMIT) -> Iterator[BinaryMatrix]:
    """Yield every member of A(R, S) once.

    Backtracks over columns.  Each column tries its row sets in
    lexicographic order and keeps only those leaving a feasible residual
    class, so the search never dead-ends.  Raises CapacityError as soon as
    more than ``limit`` members would be produced.
    """
    _require_nonempty(pair)
    return _enumerate(pair, limit)


def _enumerate(pair: DegreePair, limit: int) -> Iterator[BinaryMatrix]:
    m, n = pair.m, pair.n
    residual = list(pair.R)
    columns: list[frozenset[int]] = []
    produced = 0

    def fill(j: int) -> Iterator[BinaryMatrix]:
        nonlocal produced
        if j == n:
            produced += 1
            if produced > limit:
                raise CapacityError(f"class has more than {limit} members")
            yield BinaryMatrix(tuple(
                tuple(int(i in col) for col in columns) for i in range(m)
            ))
            return
        rest = pair.S[j + 1:]
        open_rows = [i for i in range(m) if residual[i] > 0]
        for chosen in combinations(open_rows, pair.S[j]):
            for i in chosen:
                residual[i] -= 1
            if _nonnegative_structure(residual, rest):
                columns.append(frozenset(chosen))
                yield from fill(j + 1)
                columns.pop()
            for i in chosen:
                residual[i] += 1

    yield from fill(0)


class _PortableDraws:
    """Uniform index draws from MT19937's ``random()`` stream.

    Only ``random()`` is guaranteed stable across Python versions, so
    indices are taken as floor(u * k) rather than via ``randrange``.
    """

    def __init__(self, seed: int):
        self._rng = random.Random(seed)

    def below(self, k: int) -> int:
        return int(self._rng.random() * k)

    def distinct_pair(self, k: int) -> tuple[int, int]:
        a = self.below(k)
        b = self.below(k - 1)
        return a, b + (b >= a)


def sample_class(pair: DegreePair, steps: int, seed: int) -> BinaryMatrix:
    """Run a lazy interchange walk of ``steps`` proposals from the canonical member.

    Each step draws two distinct rows and two distinct columns uniformly;
    the interchange is applied if the 2x2 submatrix is a permutation
    pattern, otherwise the step is a no-op.
    """
    if steps < 0:
        raise DomainError("steps must be nonnegative")
    A = construct_member(pair)
    if pair.m < 2 or pair.n < 2:
        return A
    draws = _PortableDraws(seed)
    for _ in range(steps):
        move = InterchangeMove(draws.distinct_pair(pair.m), draws.distinct_pair(pair.n))
        if move.is_legal(A):
            A = apply_interchange(A, move)
    return A
