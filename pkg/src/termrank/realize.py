"""Nested pairs A' <= A across two classes, and the joint realizer.

The joint realizer is a member A of A(R, S) with rho_k(A) equal to the
class maximum for every k <= t at once, together with a structured witness
C <= A.  It is found as a nested pair: with R', S' the target row and column
sums of C, a pair A'' <= A with A'' in A(R - R', S - S') gives C = A - A''.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .classops import class_nonempty, max_t_term_rank
from .core import BinaryMatrix, DegreePair, RankProfile, sort_monotone, unpermute
from .errors import CapacityError, DomainError, InfeasibleClassError

DEFAULT_NODE_BUDGET = 200_000


@dataclass(frozen=True)
class RankPartition:
    """Target sums for the witness C, aligned with the sorted class.

    ``counts[k]`` is the number of rows of C holding exactly k ones
    (k = 0..t).  ``inner_rows`` lists t repeated counts[t] times, then t-1,
    and so on down to 0; ``inner_cols`` is 1 on the first rho-bar_t
    columns and 0 after.
    """

    inner_rows: tuple[int, ...]
    inner_cols: tuple[int, ...]
    counts: tuple[int, ...]
    max_profile: RankProfile


def partition_counts(rho: Sequence[int], m: int) -> tuple[int, ...]:
    """Row counts p_0..p_t from a concave profile rho_0 = 0, rho_1, ..., rho_t.

    p_t = rho_t - rho_{t-1}, p_k = 2 rho_k - rho_{k+1} - rho_{k-1} for
    0 < k < t, and p_0 = m - rho_1.
    """
    t = len(rho) - 1
    if t < 1 or rho[0] != 0:
        raise DomainError("profile must start at rho_0 = 0 and have t >= 1")
    counts = [0] * (t + 1)
    counts[0] = m - rho[1]
    counts[t] = rho[t] - rho[t - 1]
    for k in range(1, t):
        counts[k] = 2 * rho[k] - rho[k + 1] - rho[k - 1]
    if min(counts) < 0:
        raise DomainError(f"profile {tuple(rho)} is not concave or exceeds m")
    return tuple(counts)


def lemma51_partition(pair: DegreePair, t: int) -> RankPartition:
    """Row and column sums that the witness C of the joint realizer must have."""
    if t < 1:
        raise DomainError("t must be a positive integer")
    sorted_pair, _, _ = sort_monotone(pair)
    rho = [0] + [max_t_term_rank(sorted_pair, k) for k in range(1, t + 1)]
    counts = partition_counts(rho, pair.m)
    rows = [k for k in range(t, -1, -1) for _ in range(counts[k])]
    cols = [1] * rho[t] + [0] * (pair.n - rho[t])
    return RankPartition(tuple(rows), tuple(cols), tuple(counts), RankProfile(tuple(rho)))


def _check_bounds(outer: DegreePair, inner: DegreePair, t: int) -> None:
    if (outer.m, outer.n) != (inner.m, inner.n):
        raise DomainError("outer and inner classes have different shapes")
    if t < 1:
        raise DomainError("t must be a positive integer")
    for r, r2 in zip(outer.R, inner.R):
        if not r - t <= r2 <= r:
            raise DomainError(f"inner row sum {r2} outside [{r - t}, {r}]")
    for s, s2 in zip(outer.S, inner.S):
        if not s - 1 <= s2 <= s:
            raise DomainError(f"inner column sum {s2} outside [{s - 1}, {s}]")


def nested_pair(
    outer: DegreePair,
    inner: DegreePair,
    t: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> tuple[BinaryMatrix, BinaryMatrix]:
    """Find A in A(outer) and A' in A(inner) with A' <= A.

    Requires r_i - t <= r'_i <= r_i and s_j - 1 <= s'_j <= s_j.  Such a pair
    exists exactly when both classes are nonempty.  Columns are filled in
    order; column j receives s'_j shared ones and s_j - s'_j outer-only ones
    in disjoint rows, and a choice survives only if both residual classes
    stay nonempty.
    """
    _check_bounds(outer, inner, t)
    if not class_nonempty(outer.R, outer.S):
        raise InfeasibleClassError(f"outer class A({outer}) is empty")
    if not class_nonempty(inner.R, inner.S):
        raise InfeasibleClassError(f"inner class A({inner}) is empty")

    m, n = outer.m, outer.n
    res_out = list(outer.R)
    res_in = list(inner.R)
    shared_cols: list[tuple[int, ...]] = []
    extra_cols: list[tuple[int, ...]] = []
    nodes = 0

    def search(j: int) -> bool:
        nonlocal nodes
        if j == n:
            return True
        nodes += 1
        if nodes > node_budget:
            raise CapacityError(f"nested-pair search exceeded {node_budget} nodes")
        rest_out, rest_in = outer.S[j + 1:], inner.S[j + 1:]
        by_inner = sorted((i for i in range(m) if res_in[i] > 0), key=lambda i: (-res_in[i], i))
        for shared in combinations(by_inner, inner.S[j]):
            taken = set(shared)
            by_gap = sorted(
                (i for i in range(m) if i not in taken and res_out[i] > res_in[i]),
                key=lambda i: (-(res_out[i] - res_in[i]), -res_out[i], i),
            )
            for extra in combinations(by_gap, outer.S[j] - inner.S[j]):
                for i in shared:
                    res_out[i] -= 1
                    res_in[i] -= 1
                for i in extra:
                    res_out[i] -= 1
                if class_nonempty(res_out, rest_out) and class_nonempty(res_in, rest_in):
                    shared_cols.append(shared)
                    extra_cols.append(extra)
                    if search(j + 1):
                        return True
                    shared_cols.pop()
                    extra_cols.pop()
                for i in shared:
                    res_out[i] += 1
                    res_in[i] += 1
                for i in extra:
                    res_out[i] += 1
        return False

    if not search(0):
        raise InfeasibleClassError("no nested pair exists")
    big = [[0] * n for _ in range(m)]
    small = [[0] * n for _ in range(m)]
    for j, (shared, extra) in enumerate(zip(shared_cols, extra_cols)):
        for i in shared:
            big[i][j] = small[i][j] = 1
        for i in extra:
            big[i][j] = 1
    return BinaryMatrix.from_rows(big), BinaryMatrix.from_rows(small)


@dataclass(frozen=True)
class JointRealization:
    """A member A attaining every maximum k-term rank for k <= t, and C <= A.

    A and C are stated for the sorted class ``pair``; row ``k`` of them is row
    ``row_perm[k]`` of the caller's ordering (columns likewise).
    """

    A: BinaryMatrix
    C: BinaryMatrix
    partition: RankPartition
    pair: DegreePair
    row_perm: tuple[int, ...]
    col_perm: tuple[int, ...]

    @property
    def counts(self) -> tuple[int, ...]:
        return self.partition.counts

    @property
    def max_profile(self) -> RankProfile:
        return self.partition.max_profile

    def witness(self, k: int) -> tuple[tuple[int, int], ...]:
        """Cells of C keeping the first min(r'_i, k) ones of each row: a rho-bar_k witness."""
        cells = []
        for i, row in enumerate(self.C.rows):
            ones = [j for j, x in enumerate(row) if x]
            cells.extend((i, j) for j in ones[:k])
        return tuple(cells)

    def in_original_order(self) -> tuple[BinaryMatrix, BinaryMatrix]:
        return (
            unpermute(self.A, self.row_perm, self.col_perm),
            unpermute(self.C, self.row_perm, self.col_perm),
        )


def joint_realizer(pair: DegreePair, t: int, node_budget: int = DEFAULT_NODE_BUDGET) -> JointRealization:
    """Realise the maximum k-term rank for every k = 1..t in one member."""
    if t < 1:
        raise DomainError("t must be a positive integer")
    if not class_nonempty(pair.R, pair.S):
        raise InfeasibleClassError(f"A({pair}) is empty")
    sorted_pair, row_perm, col_perm = sort_monotone(pair)
    part = lemma51_partition(sorted_pair, t)
    rest = DegreePair(
        _minus(sorted_pair.R, part.inner_rows),
        _minus(sorted_pair.S, part.inner_cols),
    )
    A, A_rest = nested_pair(sorted_pair, rest, t, node_budget)
    return JointRealization(A, A - A_rest, part, sorted_pair, row_perm, col_perm)


def _minus(a: Sequence[int], b: Sequence[int]) -> list[int]:
    return [x - y for x, y in zip(a, b)]
