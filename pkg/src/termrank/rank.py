"""t-term rank with primal and dual certificates.

The t-term rank is a maximum matching in the bipartite graph whose left
side holds t copies of every row.  The copies are never materialised: a
left vertex is a pair (row, copy) and all copies of a row share its
support.  Copies are offered to the augmenting search in phases, copy 0 of
every row first, then copy 1, and so on.  Augmenting never unmatches a
left vertex, so after phase k the vertices of copies < k that are matched
number exactly rho_k, and the columns owned by copy k form the k-th layer
of a nested selection.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import BinaryMatrix, Cell, LineCover, RankProfile, Selection
from .errors import CapacityError, DomainError, InvalidMoveError, UndefinedStrengthError

HALL_MAX_ROWS = 20

_FREE = -1


class _LayeredMatching:
    """Kuhn-style augmenting paths on (row, copy) vertices, one copy per phase."""

    def __init__(self, A: BinaryMatrix):
        self.A = A
        self.owner_row = [_FREE] * A.n
        self.owner_copy = [_FREE] * A.n
        # a row whose search failed once can never augment again
        self.dead = [not A.support(i) for i in range(A.m)]
        self.phases = 0
        self.profile = [0]

    def run_phase(self) -> int:
        """Offer one more copy of every row; return how many augmented."""
        copy = self.phases
        gained = 0
        if self.profile[-1] < self.A.n and (copy == 0 or self.profile[-1] > self.profile[-2]):
            for i in range(self.A.m):
                if self.dead[i]:
                    continue
                if self._augment(i, copy):
                    gained += 1
                else:
                    self.dead[i] = True
        self.phases += 1
        self.profile.append(self.profile[-1] + gained)
        return gained

    def run_until(self, t: int) -> None:
        while self.phases < t:
            self.run_phase()

    def _augment(self, root: int, copy: int) -> bool:
        A = self.A
        owner_row, owner_copy = self.owner_row, self.owner_copy
        seen = bytearray(A.n)
        path_rows = [root]
        path_copies = [copy]
        path_cols: list[int] = []
        cursor = [0]
        while path_rows:
            sup = A.support(path_rows[-1])
            k = cursor[-1]
            step = None
            while k < len(sup):
                c = sup[k]
                k += 1
                if not seen[c]:
                    seen[c] = 1
                    step = c
                    break
            cursor[-1] = k
            if step is None:
                path_rows.pop()
                path_copies.pop()
                cursor.pop()
                if path_cols:
                    path_cols.pop()
                continue
            path_cols.append(step)
            if owner_row[step] == _FREE:
                for r, cp, c in zip(path_rows, path_copies, path_cols):
                    owner_row[c] = r
                    owner_copy[c] = cp
                return True
            path_rows.append(owner_row[step])
            path_copies.append(owner_copy[step])
            cursor.append(0)
        return False

    def cells(self, upto: int | None = None) -> tuple[Cell, ...]:
        """Matched cells of copies < upto, sorted by row then column."""
        upto = self.phases if upto is None else upto
        return tuple(sorted(
            (r, c) for c, (r, cp) in enumerate(zip(self.owner_row, self.owner_copy))
            if r != _FREE and cp < upto
        ))


def _matching(A: BinaryMatrix, t: int) -> _LayeredMatching:
    if t < 1:
        raise DomainError("t must be a positive integer")
    engine = _LayeredMatching(A)
    engine.run_until(t)
    return engine


def t_term_rank(A: BinaryMatrix, t: int) -> tuple[int, Selection]:
    """Return rho_t(A) together with a selection attaining it."""
    engine = _matching(A, t)
    return engine.profile[t], Selection(engine.cells(t), t)


def min_cover(A: BinaryMatrix, t: int) -> LineCover:
    """Minimum-weight line cover, weight t*|E| + |F| = rho_t(A).

    Built from alternating reachability out of the unmatched columns.  Every
    row reached this way belongs to every optimal cover, so the returned row
    set is the unique smallest one.
    """
    engine = _matching(A, t)
    owned: list[list[int]] = [[] for _ in range(A.m)]
    for c, r in enumerate(engine.owner_row):
        if r != _FREE:
            owned[r].append(c)
    col_adj: list[list[int]] = [[] for _ in range(A.n)]
    for i in range(A.m):
        for j in A.support(i):
            col_adj[j].append(i)

    col_seen = [engine.owner_row[c] == _FREE for c in range(A.n)]
    row_seen = [False] * A.m
    frontier = [c for c in range(A.n) if col_seen[c]]
    while frontier:
        c = frontier.pop()
        for i in col_adj[c]:
            if row_seen[i]:
                continue
            row_seen[i] = True
            for c2 in owned[i]:
                if not col_seen[c2]:
                    col_seen[c2] = True
                    frontier.append(c2)
    rows = frozenset(i for i in range(A.m) if row_seen[i])
    cols = frozenset(c for c in range(A.n) if not col_seen[c])
    return LineCover(rows, cols, t)


def rank_profile(A: BinaryMatrix, T: int) -> RankProfile:
    """rho_0, ..., rho_T computed in a single layered matching run."""
    return RankProfile(tuple(_matching(A, T).profile))


def strength(A: BinaryMatrix) -> int:
    """Smallest t with rho_t(A) = n.

    Only requires every column to contain a 1; no m <= n condition.
    """
    if any(not any(col) for col in zip(*A.rows)):
        raise UndefinedStrengthError("strength needs at least one 1 in every column")
    engine = _LayeredMatching(A)
    while engine.profile[-1] < A.n:
        engine.run_phase()
    return engine.phases


@dataclass(frozen=True)
class NestedSelections:
    """Disjoint layers K_1, ..., K_t; the first j layers realise rho_j.

    Each layer is a Selection with ``t_bound == 1``: one 1 per row at most,
    one per column.
    """

    layers: tuple[Selection, ...]

    def columns(self, j: int) -> frozenset[int]:
        """Column set of layer j (1-based, as K_j)."""
        return self.layers[j - 1].columns

    def prefix(self, j: int) -> Selection:
        """Union of the first j layers, a rho_j witness."""
        cells = sorted(c for layer in self.layers[:j] for c in layer.cells)
        return Selection(tuple(cells), j)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.layers)


def nested_selections(A: BinaryMatrix, t: int) -> NestedSelections:
    engine = _matching(A, t)
    by_copy: list[list[Cell]] = [[] for _ in range(t)]
    for c, (r, cp) in enumerate(zip(engine.owner_row, engine.owner_copy)):
        if r != _FREE:
            by_copy[cp].append((r, c))
    return NestedSelections(tuple(Selection(tuple(sorted(cells)), 1) for cells in by_copy))


def hall_rank(A: BinaryMatrix, t: int) -> int:
    """min over row sets K of |union of supports of K| + t(m - |K|).

    Exponential in m; a cross-check, not a production path.
    """
    if A.m > HALL_MAX_ROWS:
        raise CapacityError(f"hall_rank supports at most {HALL_MAX_ROWS} rows")
    if t < 1:
        raise DomainError("t must be a positive integer")
    masks = [sum(1 << j for j in A.support(i)) for i in range(A.m)]
    unions = [0] * (1 << A.m)
    best = t * A.m
    for K in range(1, 1 << A.m):
        low = K & -K
        unions[K] = unions[K ^ low] | masks[low.bit_length() - 1]
        best = min(best, unions[K].bit_count() + t * (A.m - K.bit_count()))
    return best


@dataclass(frozen=True)
class InterchangeMove:
    rows: tuple[int, int]
    cols: tuple[int, int]

    def is_legal(self, A: BinaryMatrix) -> bool:
        (i1, i2), (j1, j2) = self.rows, self.cols
        if i1 == i2 or j1 == j2:
            return False
        if not (0 <= min(i1, i2) and max(i1, i2) < A.m and 0 <= min(j1, j2) and max(j1, j2) < A.n):
            return False
        a, b, c, d = A[i1, j1], A[i1, j2], A[i2, j1], A[i2, j2]
        return a == d and b == c and a != b


def apply_interchange(A: BinaryMatrix, move: InterchangeMove) -> BinaryMatrix:
    """Swap the addressed 2x2 permutation pattern for the other one."""
    if not move.is_legal(A):
        raise InvalidMoveError(f"rows {move.rows}, columns {move.cols} do not form an interchange pattern")
    (i1, i2), (j1, j2) = move.rows, move.cols
    return A.replace({(i, j): 1 - A[i, j] for i in (i1, i2) for j in (j1, j2)})


def padded_matrix(A: BinaryMatrix, t: int, p: int) -> BinaryMatrix:
    """The (m+l) x t(m+l) matrix A* with rho_t(A) >= p iff rho_t(A*) = t(m+l).

    Layout, with l the least integer such that t*l >= n - p and
    q = t*l - (n - p)::

        [ J(l, tm-p)  J(l, n)  J(l, q) ]
        [ J(m, tm-p)  A        O(m, q) ]
    """
    if t < 1:
        raise DomainError("t must be a positive integer")
    m, n = A.shape
    if not 0 <= p <= t * m:
        raise DomainError(f"p must lie in [0, {t * m}]")
    l = max(0, -(-(n - p) // t))
    q = t * l - (n - p)
    lead = t * m - p
    top = ((1,) * (lead + n + q),) * l
    bottom = tuple((1,) * lead + row + (0,) * q for row in A.rows)
    return BinaryMatrix(top + bottom)
