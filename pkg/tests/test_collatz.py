"""Shortcut-map core: step, trajectories, oracle graph, range verification."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gcelltree.collatz import (
    DEFAULT_STEP_CAP,
    U64_MAX,
    _verify_direct,
    collatz_step,
    oracle_reverse_graph,
    trajectory,
    trajectory_peak,
    verify_range,
)
from gcelltree.errors import IterationCapError, ValueOverflowError

SEQUENCE_FROM_7 = (7, 11, 17, 26, 13, 20, 10, 5, 8, 4, 2, 1)


def brute_trajectory(x):
    """Independent oracle: dumb iteration, no library code."""
    out = [x]
    while x != 1:
        x = (3 * x + 1) // 2 if x % 2 else x // 2
        out.append(x)
    return out


class TestStep:
    @pytest.mark.parametrize("x,expected", [(7, 11), (26, 13), (2, 1), (1, 2)])
    def test_examples(self, x, expected):
        assert collatz_step(x) == expected

    def test_overflow_is_loud(self):
        huge_odd = ((U64_MAX - 1) // 3 + 1) | 1
        with pytest.raises(ValueOverflowError):
            collatz_step(huge_odd)

    def test_even_near_limit_is_fine(self):
        assert collatz_step(U64_MAX - 1) == (U64_MAX - 1) // 2

    @pytest.mark.parametrize("bad", [0, -3])
    def test_rejects_nonpositive(self, bad):
        with pytest.raises(ValueError):
            collatz_step(bad)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueOverflowError):
            collatz_step(U64_MAX + 1)

    @given(st.integers(min_value=2, max_value=10**12))
    def test_parity_law(self, x):
        # even values shrink, odd values above 1 grow
        if x % 2 == 0:
            assert collatz_step(x) < x
        else:
            assert collatz_step(x) > x

    def test_parity_law_exhaustive_small(self):
        for x in range(2, 100_001):
            t = collatz_step(x)
            assert t < x if x % 2 == 0 else t > x


class TestTrajectory:
    def test_reference_sequence_from_seven(self):
        t = trajectory(7)
        assert t.steps == SEQUENCE_FROM_7
        assert t.length == 11
        assert t.peak == 26

    def test_twenty_seven_takes_seventy(self):
        assert trajectory(27).length == 70

    def test_power_of_two_fast(self):
        assert trajectory(1024).length == 10

    def test_terminal_convention(self):
        t = trajectory(1)
        assert t.steps == (1,)
        assert t.length == 0
        assert t.peak == 1

    def test_one_appears_exactly_once(self):
        for x in (7, 27, 96, 1):
            assert trajectory(x).steps.count(1) == 1

    @pytest.mark.parametrize("k", range(63))
    def test_power_of_two_law(self, k):
        assert trajectory(2**k).length == k

    def test_coherence_with_step(self):
        # every adjacent pair of every trajectory below 1e5 is one map step
        for x0 in range(1, 100_001):
            steps = trajectory(x0).steps
            for u, v in zip(steps, steps[1:]):
                assert v == ((3 * u + 1) >> 1 if u & 1 else u >> 1)

    def test_matches_brute_oracle(self):
        for x0 in (3, 7, 27, 97, 703, 871):
            assert list(trajectory(x0).steps) == brute_trajectory(x0)

    def test_cap_is_distinct_error(self):
        with pytest.raises(IterationCapError):
            trajectory(27, step_cap=10)

    def test_cap_boundary_matches_length(self):
        assert trajectory(1024, step_cap=10).length == 10
        with pytest.raises(IterationCapError):
            trajectory(1024, step_cap=9)

    def test_overflow_propagates(self):
        huge_odd = ((U64_MAX - 1) // 3 + 1) | 1
        with pytest.raises(ValueOverflowError):
            trajectory(huge_odd)


class TestTrajectoryPeak:
    def test_peak_examples(self):
        assert trajectory_peak(7) == 26
        assert trajectory_peak(1024) == 1024

    def test_peak_of_27_established_by_oracle(self):
        # the maximum is not quoted anywhere; derive it independently
        assert max(brute_trajectory(27)) == 4616
        assert trajectory_peak(27) == 4616


class TestOracleReverseGraph:
    def test_bound_eight(self):
        g = oracle_reverse_graph(8)
        assert g.arcs == frozenset(
            {(1, 2), (2, 1), (3, 5), (4, 2), (5, 8), (6, 3), (8, 4)}
        )

    def test_bound_two_is_the_cycle(self):
        assert oracle_reverse_graph(2).arcs == frozenset({(1, 2), (2, 1)})

    def test_bound_26_contains_reference_arcs(self):
        arcs = oracle_reverse_graph(26).arcs
        assert (17, 26) in arcs
        assert (13, 20) in arcs

    def test_every_arc_is_a_step(self):
        for u, v in oracle_reverse_graph(500).arcs:
            assert collatz_step(u) == v

    def test_unique_cycle_up_to_1e4(self):
        bound = 10**4
        arcs = dict(oracle_reverse_graph(bound).arcs)
        # out-degree <= 1, so any cycle is found by following successors
        on_cycle = set()
        for n in range(1, bound + 1):
            seen = {}
            x = n
            while x in arcs and x not in seen:
                seen[x] = True
                x = arcs[x]
            if x in seen:  # walked back onto the path: a cycle through x
                cyc = set()
                y = x
                while True:
                    cyc.add(y)
                    y = arcs[y]
                    if y == x:
                        break
                on_cycle |= cyc
        assert on_cycle == {1, 2}

    def test_rejects_bound_below_two(self):
        with pytest.raises(ValueError):
            oracle_reverse_graph(1)


class TestVerifyRange:
    def test_trivial_single(self):
        r = verify_range(1, 1)
        assert r.all_converged
        assert r.max_length == 0
        assert r.max_peak == 1

    def test_small_range_converges(self):
        r = verify_range(1, 1024)
        assert r.all_converged

    def test_statistics_match_brute_oracle(self):
        best_len = best_len_n = -1
        best_peak = best_peak_n = 0
        for n in range(1, 1025):
            seq = brute_trajectory(n)
            if len(seq) - 1 > best_len:
                best_len, best_len_n = len(seq) - 1, n
            if max(seq) > best_peak:
                best_peak, best_peak_n = max(seq), n
        r = verify_range(1, 1024)
        assert (r.max_length, r.max_length_start) == (best_len, best_len_n)
        assert (r.max_peak, r.max_peak_start) == (best_peak, best_peak_n)

    def test_million_range_frozen_values(self):
        # expected values computed once with the brute per-start oracle
        r = verify_range(1, 10**6)
        assert r.all_converged
        assert (r.max_length, r.max_length_start) == (329, 837799)
        assert (r.max_peak, r.max_peak_start) == (28495741760, 704511)

    def test_memo_and_direct_agree(self):
        for lo, hi in ((1, 5000), (123, 4567), (900, 901)):
            memo = verify_range(lo, hi)
            direct = _verify_direct(lo, hi, DEFAULT_STEP_CAP)
            assert memo == direct

    def test_partition_independence(self):
        whole = verify_range(1, 4000)
        left = verify_range(1, 2000)
        right = verify_range(2001, 4000)
        assert whole.all_converged and left.all_converged and right.all_converged
        combined_len = max(
            (left.max_length, left.max_length_start),
            (right.max_length, right.max_length_start),
            key=lambda t: (t[0], -t[1]),
        )
        assert (whole.max_length, whole.max_length_start) == combined_len
        assert whole.max_peak == max(left.max_peak, right.max_peak)

    def test_repeated_runs_identical(self):
        assert verify_range(1, 3000) == verify_range(1, 3000)

    def test_cap_reports_offender(self):
        cap = 10
        first_bad = next(
            n for n in range(20, 41) if len(brute_trajectory(n)) - 1 > cap
        )
        r = verify_range(20, 40, step_cap=cap)
        assert not r.all_converged
        assert r.failed_start == first_bad
        assert r.failure == "iteration cap"

    def test_cap_on_memo_path_matches_direct(self):
        cap = 50
        memo = verify_range(1, 1000, step_cap=cap)
        direct = _verify_direct(1, 1000, cap)
        assert memo == direct
        assert not memo.all_converged
        assert memo.failure == "iteration cap"

    def test_overflow_reports_offender(self):
        huge_odd = ((U64_MAX - 1) // 3 + 1) | 1
        r = verify_range(huge_odd, huge_odd)
        assert not r.all_converged
        assert r.failed_start == huge_odd
        assert r.failure == "overflow"

    def test_rejects_empty_range(self):
        with pytest.raises(ValueError):
            verify_range(10, 5)
