"""Exit criteria.  One test per criterion; the terminal summary prints a
PASS/FAIL line for each (see conftest.py)."""

import itertools
import math
import random
import time

from termrank.classops import class_nonempty, max_t_term_rank, sample_class
from termrank.core import BinaryMatrix, DegreePair, col_sums, row_sums, stack
from termrank.oracle import brute_class, brute_cover, brute_max_rank, brute_nested_pair, brute_rank
from termrank.errors import InfeasibleClassError
from termrank.rank import (
    InterchangeMove,
    apply_interchange,
    hall_rank,
    min_cover,
    padded_matrix,
    rank_profile,
    strength,
    t_term_rank,
)
from termrank.realize import joint_realizer, nested_pair

from conftest import random_matrix
from matrices import A3, A3_MOVE, A3_SWAPPED, A4, A4_MOVE, A4_SWAPPED, A7, A7_MOVE, A7_SWAPPED


def monotone_vectors(length, top):
    return list(itertools.combinations_with_replacement(range(top, -1, -1), length))


def feasible_monotone_pairs(max_m, max_n, max_entry):
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            for R in monotone_vectors(m, min(max_entry, n)):
                for S in monotone_vectors(n, min(max_entry, m)):
                    if sum(R) == sum(S) and class_nonempty(R, S):
                        yield DegreePair(R, S)


def test_ac01_example_7x9():
    start = time.perf_counter()
    before = rank_profile(A7, 2).values
    swapped = apply_interchange(A7, InterchangeMove(*A7_MOVE))
    after = rank_profile(swapped, 2).values
    elapsed = time.perf_counter() - start
    assert swapped == A7_SWAPPED
    assert before == (0, 6, 8)
    assert after == (0, 7, 8)
    assert elapsed < 1.0


def test_ac02_example_3x6():
    assert rank_profile(A3, 2).values == (0, 3, 5)
    swapped = apply_interchange(A3, InterchangeMove(*A3_MOVE))
    assert swapped == A3_SWAPPED
    assert rank_profile(swapped, 2).values == (0, 3, 6)
    assert strength(swapped) == 2


def test_ac03_example_4x4():
    assert rank_profile(A4, 2).values == (0, 2, 3)
    swapped = apply_interchange(A4, InterchangeMove(*A4_MOVE))
    assert swapped == A4_SWAPPED
    assert rank_profile(swapped, 2).values == (0, 3, 4)


def test_ac04_oracle_equivalence_exhaustive():
    start = time.perf_counter()
    checked = 0
    for m in range(1, 4):
        for n in range(1, 5):
            for bits in itertools.product((0, 1), repeat=m * n):
                A = BinaryMatrix(tuple(bits[i * n:(i + 1) * n] for i in range(m)))
                for t in (1, 2, 3):
                    value = t_term_rank(A, t)[0]
                    assert value == brute_rank(A, t) == brute_cover(A, t) == hall_rank(A, t), (A, t)
                    assert value == t_term_rank(stack(A, t), 1)[0], (A, t)
                    checked += 1
    assert checked == 3 * sum(2 ** (m * n) for m in range(1, 4) for n in range(1, 5))
    assert time.perf_counter() - start < 120


def test_ac05_duality_random():
    rng = random.Random(5)
    for _ in range(1000):
        A = random_matrix(rng, rng.randint(1, 8), rng.randint(1, 10), rng.uniform(0.1, 0.9))
        for t in range(1, 5):
            cover = min_cover(A, t)
            assert cover.covers(A)
            assert cover.weight == t_term_rank(A, t)[0]


def test_ac06_concavity_and_interchange_bounds():
    rng = random.Random(6)
    pairs = violations = 0
    while pairs < 1000:
        A = random_matrix(rng, rng.randint(2, 8), rng.randint(2, 10), rng.uniform(0.2, 0.8))
        moves = [
            InterchangeMove((i1, i2), (j1, j2))
            for i1, i2 in itertools.combinations(range(A.m), 2)
            for j1, j2 in itertools.combinations(range(A.n), 2)
            if InterchangeMove((i1, i2), (j1, j2)).is_legal(A)
        ]
        if not moves:
            continue
        pairs += 1
        B = apply_interchange(A, rng.choice(moves))
        T = 5
        pa, pb = rank_profile(A, T), rank_profile(B, T)
        violations += (not pa.is_concave()) + (not pb.is_concave())
        for t in range(1, T + 1):
            violations += abs(pb[t] - pa[t]) > 1
            if t >= 2 and pb[t - 1] - pa[t - 1] == 1:
                violations += pb[t] < pa[t]
    assert violations == 0


def test_ac07_semiregular_classes():
    classes = 0
    for m in range(1, 7):
        for n in range(1, 7):
            for k in range(1, n + 1):
                if (k * m) % n:
                    continue
                l = k * m // n
                if not 1 <= l <= m:
                    continue
                classes += 1
                pair = DegreePair([k] * m, [l] * n)
                for seed in range(100):
                    A = sample_class(pair, 4 * m * n, seed)
                    assert row_sums(A) == pair.R and col_sums(A) == pair.S
                    prof = rank_profile(A, 4)
                    for t in range(1, 5):
                        assert prof[t] == min(t * m, n), (pair, seed, t)
                    if m <= n:
                        assert strength(A) == math.ceil(n / m)
    assert classes > 0


def test_ac08_max_rank_formula():
    start = time.perf_counter()
    count = 0
    for pair in feasible_monotone_pairs(4, 4, 3):
        for t in (1, 2, 3):
            assert max_t_term_rank(pair, t) == brute_max_rank(pair, t), (pair, t)
        count += 1
    assert count > 0
    assert time.perf_counter() - start < 600


def test_ac09_padding_equivalence():
    rng = random.Random(9)
    for _ in range(200):
        A = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 8), rng.uniform(0.1, 0.9))
        t = rng.randint(1, 4)
        p = rng.randint(0, t * A.m)
        P = padded_matrix(A, t, p)
        assert P.n == t * P.m
        assert (t_term_rank(A, t)[0] >= p) == (t_term_rank(P, t)[0] == t * P.m)


def _all_vectors(length, lows, highs):
    return itertools.product(*(range(lo, hi + 1) for lo, hi in zip(lows, highs)))


def test_ac10_nested_pair_biconditional():
    checked = 0
    for m in range(1, 4):
        for n in range(1, 4):
            for R in itertools.product(range(n + 1), repeat=m):
                for S in itertools.product(range(m + 1), repeat=n):
                    if sum(R) != sum(S):
                        continue
                    outer = DegreePair(R, S)
                    seen = set()
                    for t in (1, 2, 3):
                        for R2 in _all_vectors(m, [r - t for r in R], R):
                            for S2 in _all_vectors(n, [s - 1 for s in S], S):
                                if (R2, S2) in seen:
                                    continue
                                seen.add((R2, S2))
                                inner = DegreePair(R2, S2)
                                both = class_nonempty(R, S) and class_nonempty(R2, S2)
                                try:
                                    A, A2 = nested_pair(outer, inner, t)
                                    ok = True
                                    assert DegreePair.of(A) == outer and DegreePair.of(A2) == inner
                                    assert A2 <= A
                                except InfeasibleClassError:
                                    ok = False
                                brute = brute_nested_pair(outer, inner)
                                assert ok == brute == both, (outer, inner, t)
                                checked += 1
    assert checked > 0


def test_ac11_joint_realization():
    # every class is a row/column permutation of a sorted one; a seeded
    # shuffle of each checks the realizer on unsorted input too
    rng = random.Random(11)
    count = 0
    for pair in feasible_monotone_pairs(5, 5, 3):
        best = [0, 0, 0, 0]
        for A in brute_class(pair):
            for k in (1, 2, 3):
                best[k] = max(best[k], brute_rank(A, k))
        for t in (1, 2, 3):
            jr = joint_realizer(pair, t)
            A, C = jr.A, jr.C
            rho = jr.max_profile.values
            assert DegreePair.of(A) == pair
            assert list(rank_profile(A, t).values[1:]) == best[1:t + 1], (pair, t)
            assert list(rho[1:]) == best[1:t + 1]
            # C <= A with exactly rho_t ones
            assert C <= A
            assert sum(row_sums(C)) == rho[t]
            # (a) the ones of C sit in the leading rho_1 x rho_t block
            assert all(
                i < rho[1] and j < rho[t]
                for i, row in enumerate(C.rows) for j, x in enumerate(row) if x
            )
            # (b) each of the first rho_t columns holds exactly one 1
            assert col_sums(C) == (1,) * rho[t] + (0,) * (pair.n - rho[t])
            # (c) row counts t, t-1, ..., 1 in blocks of p_t, ..., p_1
            expected = [k for k in range(t, 0, -1) for _ in range(jr.counts[k])]
            assert list(row_sums(C)) == expected + [0] * (pair.m - len(expected))
            assert len(expected) == rho[1]
            R, S = list(pair.R), list(pair.S)
            rng.shuffle(R)
            rng.shuffle(S)
            shuffled = DegreePair(R, S)
            B, D = joint_realizer(shuffled, t).in_original_order()
            assert DegreePair.of(B) == shuffled and D <= B
            assert list(rank_profile(B, t).values[1:]) == best[1:t + 1], (shuffled, t)
        count += 1
    assert count > 0
