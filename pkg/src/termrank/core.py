"""Value types for (0,1)-matrices and degree pairs, plus text formats.

Matrices are dense and immutable: a tuple of row tuples holding 0/1 ints.
Indices are 0-based everywhere in the library.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CapacityError, ParseError

MAX_CELLS = 10**8

Cell = tuple[int, int]


@dataclass(frozen=True)
class BinaryMatrix:
    """An m x n (0,1)-matrix.

    Build with ``BinaryMatrix.from_rows`` (validating) or the helper
    constructors ``zeros``, ``ones`` and ``identity``.
    """

    rows: tuple[tuple[int, ...], ...]
    _supports: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        if not self.rows or not self.rows[0]:
            raise ParseError("a matrix needs at least one row and one column")
        n = len(self.rows[0])
        if len(self.rows) * n > MAX_CELLS:
            raise CapacityError(f"{len(self.rows)}x{n} exceeds the {MAX_CELLS} cell cap")
        for row in self.rows:
            if len(row) != n:
                raise ParseError("ragged rows")
            for x in row:
                if x != 0 and x != 1:
                    raise ParseError(f"entry {x!r} is not 0 or 1")
        supports = tuple(tuple(j for j, x in enumerate(row) if x) for row in self.rows)
        object.__setattr__(self, "_supports", supports)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> BinaryMatrix:
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def zeros(cls, m: int, n: int) -> BinaryMatrix:
        return cls(((0,) * n,) * m)

    @classmethod
    def ones(cls, m: int, n: int) -> BinaryMatrix:
        return cls(((1,) * n,) * m)

    @classmethod
    def identity(cls, n: int) -> BinaryMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    def __getitem__(self, cell: Cell) -> int:
        i, j = cell
        return self.rows[i][j]

    def support(self, i: int) -> tuple[int, ...]:
        """Column indices of the 1s in row ``i``, ascending."""
        return self._supports[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> BinaryMatrix:
        return BinaryMatrix(tuple(zip(*self.rows)))

    def replace(self, updates: dict[Cell, int]) -> BinaryMatrix:
        """Return a copy with the given cells overwritten."""
        grid = [list(row) for row in self.rows]
        for (i, j), x in updates.items():
            grid[i][j] = x
        return BinaryMatrix.from_rows(grid)

    def __le__(self, other: BinaryMatrix) -> bool:
        """Entrywise comparison, as used for nested matrices."""
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return all(
            a <= b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    def __sub__(self, other: BinaryMatrix) -> BinaryMatrix:
        return BinaryMatrix.from_rows(
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)
        )

    def to_text(self) -> str:
        return "".join("".join(map(str, row)) + "\n" for row in self.rows)

    def __str__(self) -> str:
        return self.to_text().rstrip("\n")


@dataclass(frozen=True)
class DegreePair:
    """Row sum vector R and column sum vector S of a class A(R, S).

    Negative entries are allowed here; feasibility queries reject them.
    """

    R: tuple[int, ...]
    S: tuple[int, ...]

    def __init__(self, R: Sequence[int], S: Sequence[int]) -> None:
        object.__setattr__(self, "R", tuple(int(r) for r in R))
        object.__setattr__(self, "S", tuple(int(s) for s in S))

    @property
    def m(self) -> int:
        return len(self.R)

    @property
    def n(self) -> int:
        return len(self.S)

    @classmethod
    def of(cls, A: BinaryMatrix) -> DegreePair:
        return cls(row_sums(A), col_sums(A))

    @classmethod
    def parse(cls, text: str) -> DegreePair:
        """Parse ``"R=2,2,1;S=2,2,1"``."""
        parts = {}
        for chunk in text.strip().split(";"):
            key, sep, value = chunk.partition("=")
            key = key.strip().upper()
            if not sep or key not in ("R", "S") or key in parts:
                raise ParseError(f"bad degree pair {text!r}")
            try:
                parts[key] = [int(v) for v in value.split(",") if v.strip()]
            except ValueError:
                raise ParseError(f"bad degree pair {text!r}") from None
        if set(parts) != {"R", "S"} or not parts["R"] or not parts["S"]:
            raise ParseError(f"bad degree pair {text!r}")
        return cls(parts["R"], parts["S"])

    def __str__(self) -> str:
        return "R={};S={}".format(",".join(map(str, self.R)), ",".join(map(str, self.S)))


@dataclass(frozen=True)
class Selection:
    """A set of 1-positions with at most ``t_bound`` per row and one per column."""

    cells: tuple[Cell, ...]
    t_bound: int

    def __len__(self) -> int:
        return len(self.cells)

    @property
    def columns(self) -> frozenset[int]:
        return frozenset(j for _, j in self.cells)

    def is_valid_for(self, A: BinaryMatrix) -> bool:
        cols = [j for _, j in self.cells]
        if len(set(cols)) != len(cols):
            return False
        load: dict[int, int] = {}
        for i, j in self.cells:
            if not (0 <= i < A.m and 0 <= j < A.n) or not A[i, j]:
                return False
            load[i] = load.get(i, 0) + 1
        return all(c <= self.t_bound for c in load.values())


@dataclass(frozen=True)
class LineCover:
    """Rows E and columns F covering every 1; weight t*|E| + |F|."""

    rows: frozenset[int]
    columns: frozenset[int]
    t_bound: int

    @property
    def weight(self) -> int:
        return self.t_bound * len(self.rows) + len(self.columns)

    def covers(self, A: BinaryMatrix) -> bool:
        return all(
            i in self.rows or j in self.columns
            for i in range(A.m)
            for j in A.support(i)
        )


@dataclass(frozen=True)
class RankProfile:
    """The sequence rho_0 = 0, rho_1, ..., rho_T of one matrix."""

    values: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def increments(self) -> tuple[int, ...]:
        v = self.values
        return tuple(v[k] - v[k - 1] for k in range(1, len(v)))

    def is_concave(self) -> bool:
        inc = self.increments
        return all(inc[k] >= inc[k + 1] for k in range(len(inc) - 1))


def parse_matrix(text: str) -> BinaryMatrix:
    """Read the line-oriented matrix format.

    One row per line of '0'/'1' characters; single spaces between characters
    are ignored, as are blank lines and lines starting with '#'.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "  " in line:
            raise ParseError(f"line {lineno}: only single spaces may separate entries")
        row = []
        for ch in line.replace(" ", ""):
            if ch not in "01":
                raise ParseError(f"line {lineno}: {ch!r} is not a binary digit")
            row.append(int(ch))
        rows.append(tuple(row))
    if not rows:
        raise ParseError("empty matrix")
    if any(len(r) != len(rows[0]) for r in rows):
        raise ParseError("ragged rows")
    return BinaryMatrix(tuple(rows))


def parse_inline(text: str) -> BinaryMatrix:
    """Parse the CLI's compact form ``"10;01"``."""
    return parse_matrix(text.replace(";", "\n"))


def serialize_matrix(A: BinaryMatrix) -> str:
    return A.to_text()


def row_sums(A: BinaryMatrix) -> tuple[int, ...]:
    return tuple(sum(row) for row in A.rows)


def col_sums(A: BinaryMatrix) -> tuple[int, ...]:
    return tuple(sum(col) for col in zip(*A.rows))


def sigma(A: BinaryMatrix) -> int:
    return sum(map(sum, A.rows))


def stack(A: BinaryMatrix, t: int) -> BinaryMatrix:
    """Stack ``t`` copies of ``A`` vertically; row i reappears at i + k*m."""
    if t < 1:
        raise ValueError("t must be positive")
    if t * A.m * A.n > MAX_CELLS:
        raise CapacityError(f"stacking {t} copies exceeds the {MAX_CELLS} cell cap")
    return BinaryMatrix(A.rows * t)


def is_nearly_nonincreasing(U: Sequence[int]) -> bool:
    # u_i >= u_j - 1 for all i < j  <=>  u_i >= (max of the suffix after i) - 1
    suffix_max = None
    for u in reversed(U):
        if suffix_max is not None and u < suffix_max - 1:
            return False
        suffix_max = u if suffix_max is None else max(suffix_max, u)
    return True


def sort_monotone(pair: DegreePair) -> tuple[DegreePair, tuple[int, ...], tuple[int, ...]]:
    """Sort R and S into nonincreasing order.

    Returns the sorted pair and the row and column permutations, where
    ``sorted.R[k] == pair.R[row_perm[k]]`` (likewise for columns). The sort is
    stable, so already-sorted input gives identity permutations.
    """
    row_perm = tuple(sorted(range(pair.m), key=lambda i: -pair.R[i]))
    col_perm = tuple(sorted(range(pair.n), key=lambda j: -pair.S[j]))
    return (
        DegreePair([pair.R[i] for i in row_perm], [pair.S[j] for j in col_perm]),
        row_perm,
        col_perm,
    )


def permute(A: BinaryMatrix, row_perm: Sequence[int], col_perm: Sequence[int]) -> BinaryMatrix:
    """Return B with ``B[k][l] = A[row_perm[k]][col_perm[l]]``."""
    return BinaryMatrix(tuple(tuple(A.rows[i][j] for j in col_perm) for i in row_perm))


def unpermute(B: BinaryMatrix, row_perm: Sequence[int], col_perm: Sequence[int]) -> BinaryMatrix:
    """Inverse of :func:`permute` for the same permutations."""
    grid = [[0] * B.n for _ in range(B.m)]
    for k, i in enumerate(row_perm):
        for l, j in enumerate(col_perm):
            grid[i][j] = B.rows[k][l]
    return BinaryMatrix.from_rows(grid)
