"""The shortcut Collatz map, trajectories, range verification, and the
brute-force reverse-graph oracle.

The map used throughout is the shortcut form: halve even numbers, send an
odd x to (3x + 1) / 2.  Values are restricted to the unsigned 64-bit range;
any step whose mathematical result would leave that range raises
:class:`ValueOverflowError` instead of wrapping.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IterationCapError, ValueOverflowError

U64_MAX = 2**64 - 1

# Largest x for which 3x + 1 is still representable.
_ODD_STEP_LIMIT = (U64_MAX - 1) // 3

#: Default bound on the number of map applications per trajectory.
DEFAULT_STEP_CAP = 1_000_000

#: verify_range uses the vectorized memo sweep only when hi fits below this.
DEFAULT_MEMO_LIMIT = 1 << 25


def check_value(x: int) -> int:
    """Validate x as a positive integer in the 64-bit unsigned range."""
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"expected an integer, got {type(x).__name__}")
    if x < 1:
        raise ValueError(f"value must be >= 1, got {x}")
    if x > U64_MAX:
        raise ValueOverflowError(f"value {x} exceeds the 64-bit unsigned range")
    return x


def collatz_step(x: int) -> int:
    """One application of the shortcut map: x/2 if even, (3x+1)/2 if odd.

    The map is total; in particular collatz_step(1) == 2.  Termination at 1
    is a convention applied by callers.
    """
    check_value(x)
    if x & 1:
        if x > _ODD_STEP_LIMIT:
            raise ValueOverflowError(f"3*{x}+1 exceeds the 64-bit unsigned range")
        return (3 * x + 1) >> 1
    return x >> 1


@dataclass(frozen=True)
class Trajectory:
    """Iterate sequence from a start value down to the first 1 reached.

    steps[0] is the start, steps[-1] is 1, and 1 appears exactly once.
    length counts map applications, i.e. len(steps) - 1.
    """

    start: int
    steps: tuple[int, ...]
    length: int
    peak: int


def trajectory(x0: int, *, step_cap: int = DEFAULT_STEP_CAP) -> Trajectory:
    """Iterate the shortcut map from x0 until 1 is produced.

    trajectory(1) is the single-element sequence [1] with length 0.  Raises
    IterationCapError if 1 is not reached within step_cap applications, and
    propagates ValueOverflowError from the step.
    """
    check_value(x0)
    steps = [x0]
    x = x0
    peak = x0
    while x != 1:
        x = collatz_step(x)
        steps.append(x)
        if x > peak:
            peak = x
        if len(steps) - 1 > step_cap:
            raise IterationCapError(
                f"no convergence witness for {x0} within {step_cap} steps"
            )
    return Trajectory(start=x0, steps=tuple(steps), length=len(steps) - 1, peak=peak)


def trajectory_peak(x0: int, *, step_cap: int = DEFAULT_STEP_CAP) -> int:
    """Maximum value attained by the trajectory of x0."""
    return trajectory(x0, step_cap=step_cap).peak


@dataclass(frozen=True)
class ReverseGraph:
    """Brute-force reverse tree: every arc (n, T(n)) with both ends <= bound."""

    bound: int
    arcs: frozenset[tuple[int, int]]


def oracle_reverse_graph(bound: int) -> ReverseGraph:
    """Enumerate {(n, T(n)) : 1 <= n <= bound, T(n) <= bound}.

    This is the ground truth the G-cell expansion is checked against.
    """
    check_value(bound)
    if bound < 2:
        raise ValueError(f"bound must be >= 2, got {bound}")
    arcs = set()
    for n in range(1, bound + 1):
        t = (3 * n + 1) >> 1 if n & 1 else n >> 1
        if t <= bound:
            arcs.add((n, t))
    return ReverseGraph(bound=bound, arcs=frozenset(arcs))


@dataclass(frozen=True)
class RangeReport:
    """Outcome of verifying every start in [lo, hi].

    all_converged is True iff every start produced a finite trajectory
    without overflow or hitting the step cap.  On failure the smallest
    offending start and the reason are recorded and the max_* fields
    describe only the starts verified before it.
    """

    lo: int
    hi: int
    all_converged: bool
    max_length: int
    max_length_start: int
    max_peak: int
    max_peak_start: int
    failed_start: int | None = None
    failure: str | None = None


def verify_range(
    lo: int,
    hi: int,
    *,
    step_cap: int = DEFAULT_STEP_CAP,
    memo_limit: int = DEFAULT_MEMO_LIMIT,
) -> RangeReport:
    """Verify that every start in [lo, hi] reaches 1, with statistics.

    Below memo_limit the computation runs as a vectorized sweep memoized
    over [1, hi]; above it each start is iterated directly.  Both paths
    produce identical reports for identical inputs.
    """
    check_value(lo)
    check_value(hi)
    if lo > hi:
        raise ValueError(f"empty range: lo={lo} > hi={hi}")
    if hi <= memo_limit and hi - lo >= 64:
        return _verify_memo(lo, hi, step_cap)
    return _verify_direct(lo, hi, step_cap)


def _verify_direct(lo: int, hi: int, step_cap: int) -> RangeReport:
    """Per-start iteration without memoization."""
    max_length = -1
    max_length_start = lo
    max_peak = 0
    max_peak_start = lo
    for n in range(lo, hi + 1):
        x = n
        steps = 0
        peak = n
        while x != 1:
            if x & 1:
                if x > _ODD_STEP_LIMIT:
                    return _failed_report(
                        lo, hi, n, "overflow",
                        max_length, max_length_start, max_peak, max_peak_start,
                    )
                x = (3 * x + 1) >> 1
            else:
                x >>= 1
            steps += 1
            if x > peak:
                peak = x
            if steps > step_cap:
                return _failed_report(
                    lo, hi, n, "iteration cap",
                    max_length, max_length_start, max_peak, max_peak_start,
                )
        if steps > max_length:
            max_length = steps
            max_length_start = n
        if peak > max_peak:
            max_peak = peak
            max_peak_start = n
    return RangeReport(
        lo=lo, hi=hi, all_converged=True,
        max_length=max_length, max_length_start=max_length_start,
        max_peak=max_peak, max_peak_start=max_peak_start,
    )


def _failed_report(lo, hi, start, reason, max_length, max_length_start,
                   max_peak, max_peak_start) -> RangeReport:
    return RangeReport(
        lo=lo, hi=hi, all_converged=False,
        max_length=max(max_length, 0), max_length_start=max_length_start,
        max_peak=max_peak, max_peak_start=max_peak_start,
        failed_start=start, failure=reason,
    )


def _verify_memo(lo: int, hi: int, step_cap: int) -> RangeReport:
    """Vectorized sweep memoized over [1, hi].

    Phase 1 iterates every start simultaneously until its value first drops
    below the start, recording the drop target, the step count and the peak
    seen so far.  Phase 2 resolves full lengths and peaks by pointer
    doubling over the drop targets (each target is strictly smaller than its
    index, and 1 is absorbing).  Any anomaly (overflow, cap) defers to the
    direct path, which reports the smallest offending start exactly.
    """
    import numpy as np

    n = hi
    below = np.zeros(n + 1, dtype=np.int64)
    dsteps = np.zeros(n + 1, dtype=np.int64)
    dpeak = np.zeros(n + 1, dtype=np.uint64)
    below[0] = 1
    below[1] = 1
    dpeak[0] = 1
    dpeak[1] = 1

    idx = np.arange(2, n + 1, dtype=np.int64)
    start = idx.astype(np.uint64)
    val = start.copy()
    steps = np.zeros(idx.size, dtype=np.int64)
    peak = val.copy()
    odd_limit = np.uint64(_ODD_STEP_LIMIT)

    sweep = 0
    while idx.size:
        sweep += 1
        odd = (val & np.uint64(1)).astype(bool)
        if bool((val[odd] > odd_limit).any()) or sweep > step_cap:
            return _verify_direct(lo, hi, step_cap)
        val = np.where(odd, (np.uint64(3) * val + np.uint64(1)) >> np.uint64(1),
                       val >> np.uint64(1))
        steps += 1
        np.maximum(peak, val, out=peak)
        done = val < start
        if bool(done.any()):
            di = idx[done]
            below[di] = val[done].astype(np.int64)
            dsteps[di] = steps[done]
            dpeak[di] = peak[done]
            keep = ~done
            idx = idx[keep]
            start = start[keep]
            val = val[keep]
            steps = steps[keep]
            peak = peak[keep]

    total, tpeak = _resolve_by_doubling(below, dsteps, dpeak)

    span_len = total[lo:hi + 1]
    span_peak = tpeak[lo:hi + 1]
    if int(span_len.max()) > step_cap:
        return _verify_direct(lo, hi, step_cap)
    li = int(np.argmax(span_len))
    pi = int(np.argmax(span_peak))
    return RangeReport(
        lo=lo, hi=hi, all_converged=True,
        max_length=int(span_len[li]), max_length_start=lo + li,
        max_peak=int(span_peak[pi]), max_peak_start=lo + pi,
    )


def _resolve_by_doubling(below, dsteps, dpeak):
    """Pointer-double drop links until every chain is absorbed at 1."""
    import numpy as np

    total = dsteps.copy()
    tpeak = dpeak.copy()
    link = below.copy()
    while bool((link > 1).any()):
        total = total + total[link]
        np.maximum(tpeak, tpeak[link], out=tpeak)
        link = link[link]
    return total, tpeak
