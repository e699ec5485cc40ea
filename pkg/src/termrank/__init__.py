"""t-term rank of (0,1)-matrices and extremal results over classes A(R, S)."""

from .classops import (
    construct_member,
    enumerate_class,
    full_rank_witness_exists,
    is_nonempty,
    max_t_term_rank,
    sample_class,
    semiregular_rank,
    semiregular_strength,
    structure_matrix,
)
from .core import (
    BinaryMatrix,
    DegreePair,
    LineCover,
    RankProfile,
    Selection,
    col_sums,
    is_nearly_nonincreasing,
    parse_matrix,
    row_sums,
    serialize_matrix,
    sigma,
    sort_monotone,
    stack,
)
from .errors import (
    CapacityError,
    DomainError,
    InfeasibleClassError,
    InvalidMoveError,
    ParseError,
    SumMismatchError,
    TermRankError,
    UndefinedStrengthError,
)
from .rank import (
    InterchangeMove,
    NestedSelections,
    apply_interchange,
    hall_rank,
    min_cover,
    nested_selections,
    padded_matrix,
    rank_profile,
    strength,
    t_term_rank,
)
from .realize import JointRealization, joint_realizer, lemma51_partition, nested_pair

__version__ = "0.1.0"
