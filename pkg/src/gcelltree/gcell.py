"""G-cell construction and network expansion.

A G-cell is the seven-node, six-arc generating subgraph of the 3x+1 reverse
tree: a doubling column A, 2A, 4A on the left, an optional doubling column
B, 2B, 4B on the right with 3B = 2A - 1, and a seventh node 4B + 1 arcing
into 4A.  Cells abut by sharing boundary columns; expanding a seed set and
deduplicating the union reproduces the reverse tree, which is checked
against the brute-force oracle rather than argued.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple

from .collatz import check_value, collatz_step, oracle_reverse_graph
from .errors import ValueOverflowError

U64_MAX = 2**64 - 1

HALVING = "halving"
ODD = "odd"


def odd_predecessor(m: int) -> int | None:
    """The odd value mapping onto m, i.e. (2m-1)/3 when divisible, else None.

    Exists exactly when m = 2 (mod 3); the result is always odd.
    """
    check_value(m)
    q, r = divmod(2 * m - 1, 3)
    return q if r == 0 else None


class AbutmentKind(Enum):
    AT_BASE = "at_base"
    AT_DOUBLE = "at_double"
    DEAD_BRANCH = "dead_branch"


@dataclass(frozen=True)
class Abutment:
    """How a cell's right side connects: a neighbor seeded at B or 2B, or
    nothing at all when B is an odd multiple of 3."""

    kind: AbutmentKind
    neighbor_seed: int | None

    def __post_init__(self):
        if self.kind is AbutmentKind.DEAD_BRANCH:
            if self.neighbor_seed is not None:
                raise ValueError("dead branch carries no neighbor seed")
        elif self.neighbor_seed is None:
            raise ValueError(f"{self.kind.value} abutment requires a neighbor seed")


@dataclass(frozen=True)
class GCell:
    """One generator instance seeded at A.

    a is the left column (A, 2A, 4A); b the right column (B, 2B, 4B) when
    (2A - 1) is divisible by 3; e the lone 4B + 1 node.  The degenerate root
    cell at A = 2 has B = 1, carries the unique 1 <-> 2 cycle, and marks the
    trunk-duplicating 2B/4B slots (values 2 and 4) as phantoms.
    """

    seed: int
    a: tuple[int, int, int]
    b: tuple[int, int, int] | None
    e: int | None
    generation: int
    is_root: bool
    phantom: frozenset[int]

    @property
    def has_b_side(self) -> bool:
        return self.b is not None

    def nodes(self) -> tuple[int, ...]:
        """Distinct node values, phantoms excluded."""
        vals = list(self.a)
        if self.b is not None:
            vals.extend(v for v in self.b if v not in self.phantom)
            vals.append(self.e)
        seen: dict[int, None] = {}
        for v in vals:
            seen.setdefault(v)
        return tuple(seen)

    def arcs(self) -> tuple[tuple[int, int, str], ...]:
        """Directed arcs (from, to, kind); every arc satisfies to = T(from)."""
        a1, a2, a4 = self.a
        out = [(a2, a1, HALVING), (a4, a2, HALVING)]
        if self.b is not None:
            b1, b2, b4 = self.b
            out.append((b1, a1, ODD))
            out.append((b2, b1, HALVING))
            out.append((b4, b2, HALVING))
            out.append((self.e, a4, ODD))
        seen: dict[tuple[int, int, str], None] = {}
        for arc in out:
            seen.setdefault(arc)
        return tuple(seen)


def build_gcell(a: int, generation: int = 0) -> GCell:
    """Construct the cell seeded at A, the degenerate root cell when A = 2."""
    check_value(a)
    if a < 2:
        raise ValueError(f"cell seed must be >= 2, got {a}")
    if 4 * a > U64_MAX:
        raise ValueOverflowError(f"4*{a} exceeds the 64-bit unsigned range")
    b1 = odd_predecessor(a)
    b = e = None
    if b1 is not None:
        if 4 * b1 + 1 > U64_MAX:
            raise ValueOverflowError(f"4*{b1}+1 exceeds the 64-bit unsigned range")
        b = (b1, 2 * b1, 4 * b1)
        e = 4 * b1 + 1
    is_root = a == 2
    phantom = frozenset({2, 4}) if is_root else frozenset()
    return GCell(seed=a, a=(a, 2 * a, 4 * a), b=b, e=e,
                 generation=generation, is_root=is_root, phantom=phantom)


def right_abutment(cell: GCell) -> Abutment:
    """Classify the cell's right side by the residue of B modulo 3.

    B = 2 (mod 3): a same-generation neighbor shares the B column (AtBase).
    B = 1 (mod 3): the neighbor sits one row up, sharing 2B and 4B (AtDouble).
    B = 0 (mod 3): B is an odd multiple of 3 and the column never branches.
    """
    if cell.b is None:
        raise ValueError(f"cell seeded {cell.seed} has no B side")
    b = cell.b[0]
    r = b % 3
    if r == 2:
        return Abutment(AbutmentKind.AT_BASE, b)
    if r == 1:
        return Abutment(AbutmentKind.AT_DOUBLE, 2 * b)
    return Abutment(AbutmentKind.DEAD_BRANCH, None)


def left_abutment_seed(cell: GCell) -> int | None:
    """Seed of the same-generation cell in which A plays the B role.

    Present only when A is odd (and not 1): an even A connects downward
    only.  The returned seed is T(A).
    """
    a = cell.seed
    if a & 1 and a != 1:
        return collatz_step(a)
    return None


class CellEvent(NamedTuple):
    """One worklist emission, recorded so layout can replay the geometry.

    kind: 'root' | 'cell' | 'column' | 'node'.  parent indexes the emitting
    event (-1 for the origin); relation names the derivation step.
    """

    kind: str
    seed: int
    generation: int
    parent: int
    relation: str


@dataclass(frozen=True)
class GCellNetwork:
    """Deduplicated union of nodes and arcs produced by cell expansion.

    nodes maps value -> generation of the first event that emitted it;
    phantom_nodes lists values present only as ghosts (empty for generated
    networks, where the root cell's ghost values 2 and 4 always also occur
    as real trunk nodes).  arcs maps (from, to) -> kind.  Instances are
    immutable once built and safe to share across threads.
    """

    root_seed: int
    max_value: int
    max_generation: int | None
    nodes: dict[int, int]
    phantom_nodes: frozenset[int]
    arcs: dict[tuple[int, int], str]
    seeds_processed: frozenset[int]
    events: tuple[CellEvent, ...]

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    @property
    def max_generation_seen(self) -> int:
        return max(self.nodes.values(), default=0)

    def restricted_arcs(self, bound: int) -> frozenset[tuple[int, int]]:
        """Arcs with both endpoints <= bound."""
        return frozenset((u, v) for (u, v) in self.arcs if u <= bound and v <= bound)


class _CanonicalScheduler:
    """Pending seeds ordered by (generation, seed value) via per-generation
    integer heaps.  Enqueues never target a smaller generation than the one
    currently draining, so draining generations in order is total."""

    def __init__(self):
        self._buckets: dict[int, list[int]] = {}
        self._gens: list[int] = []
        self._current = -1

    def push(self, gen: int, seed: int) -> None:
        bucket = self._buckets.get(gen)
        if bucket is None:
            bucket = self._buckets[gen] = []
            heapq.heappush(self._gens, gen)
        heapq.heappush(bucket, seed)

    def pop(self) -> tuple[int, int] | None:
        while self._gens:
            gen = self._gens[0]
            bucket = self._buckets[gen]
            if bucket:
                return gen, heapq.heappop(bucket)
            heapq.heappop(self._gens)
            del self._buckets[gen]
        return None


class _FifoScheduler:
    def __init__(self):
        from collections import deque
        self._q = deque()

    def push(self, gen: int, seed: int) -> None:
        self._q.append((gen, seed))

    def pop(self):
        return self._q.popleft() if self._q else None


class _LifoScheduler:
    def __init__(self):
        self._q: list[tuple[int, int]] = []

    def push(self, gen: int, seed: int) -> None:
        self._q.append((gen, seed))

    def pop(self):
        return self._q.pop() if self._q else None


def generate_network(
    root_seed: int,
    max_value: int,
    max_generation: int | None = None,
) -> GCellNetwork:
    """Expand a seed into the deduplicated G-cell network within bounds.

    Worklist dispatch on the pending seed's residue modulo 3: residue 2
    emits a full cell and chains right per the abutment, residue 1 emits a
    node with its halving arc and continues one row up, residue 0 emits a
    bare doubling column.  Seeds 1 and 2 emit the degenerate root cell; node
    1 is never re-expanded.  Nodes and arcs beyond max_value are pruned and
    seeds beyond max_generation (or max_value) are dropped, so bounded
    requests terminate; see covering_bound for how large max_value must be
    for the result to contain every tree arc below a given limit.
    """
    return _expand(root_seed, max_value, max_generation, _CanonicalScheduler())


def _expand(
    root_seed: int,
    max_value: int,
    max_generation: int | None,
    scheduler,
) -> GCellNetwork:
    check_value(root_seed)
    check_value(max_value)
    if max_generation is not None and max_generation < 0:
        raise ValueError("max_generation must be non-negative")

    nodes: dict[int, int] = {}
    arcs: dict[tuple[int, int], str] = {}
    processed: set[int] = set()
    events: list[CellEvent] = []
    # (parent event index, relation) for each pending (gen, seed); the first
    # enqueue wins, matching canonical processing order.
    pending: dict[tuple[int, int], tuple[int, str]] = {}

    def push(gen: int, seed: int, parent: int, relation: str) -> None:
        if seed > max_value or seed in processed:
            return
        if max_generation is not None and gen > max_generation:
            return
        key = (gen, seed)
        if key not in pending:
            pending[key] = (parent, relation)
            scheduler.push(gen, seed)

    def emit_node(value: int, gen: int) -> None:
        if value <= max_value and value not in nodes:
            nodes[value] = gen

    def emit_arc(u: int, v: int, kind: str) -> None:
        if u <= max_value and v <= max_value:
            arcs[(u, v)] = kind

    push(0, root_seed, -1, "origin")

    while (item := scheduler.pop()) is not None:
        gen, seed = item
        parent, relation = pending.pop((gen, seed))
        if seed in processed:
            continue
        if max_generation is not None and gen > max_generation:
            continue
        processed.add(seed)

        if seed <= 2:
            # Root cell: left column 2,4,8, real B = 1 with the cycle pair,
            # ghost 2B/4B slots excluded from the node map.
            cell = build_gcell(2, gen)
            processed.update((1, 2))
            idx = len(events)
            events.append(CellEvent("root", 2, gen, parent, relation))
            for v in cell.nodes():
                emit_node(v, gen)
            for u, v, kind in cell.arcs():
                emit_arc(u, v, kind)
            push(gen + 1, cell.a[2], idx, "up")
            push(gen + 1, cell.e, idx, "e_up")
        elif seed % 3 == 2:
            cell = build_gcell(seed, gen)
            idx = len(events)
            events.append(CellEvent("cell", seed, gen, parent, relation))
            for v in cell.nodes():
                emit_node(v, gen)
            for u, v, kind in cell.arcs():
                emit_arc(u, v, kind)
            abut = right_abutment(cell)
            if abut.kind is AbutmentKind.AT_BASE:
                push(gen, abut.neighbor_seed, idx, "at_base")
            elif abut.kind is AbutmentKind.AT_DOUBLE:
                push(gen, abut.neighbor_seed, idx, "at_double")
            else:
                push(gen + 1, cell.b[2], idx, "dead_branch")
            push(gen + 1, cell.a[2], idx, "up")
            push(gen + 1, cell.e, idx, "e_up")
        elif seed % 3 == 1:
            idx = len(events)
            events.append(CellEvent("node", seed, gen, parent, relation))
            emit_node(seed, gen)
            emit_node(2 * seed, gen)
            emit_arc(2 * seed, seed, HALVING)
            push(gen, 2 * seed, idx, "double_up")
        else:
            idx = len(events)
            events.append(CellEvent("column", seed, gen, parent, relation))
            emit_node(seed, gen)
            emit_node(2 * seed, gen)
            emit_node(4 * seed, gen)
            emit_arc(2 * seed, seed, HALVING)
            emit_arc(4 * seed, 2 * seed, HALVING)
            push(gen + 1, 4 * seed, idx, "up")

    return GCellNetwork(
        root_seed=root_seed,
        max_value=max_value,
        max_generation=max_generation,
        nodes=nodes,
        phantom_nodes=frozenset(),
        arcs=arcs,
        seeds_processed=frozenset(processed),
        events=tuple(events),
    )


def covering_bound(limit: int) -> int:
    """Smallest max_value for which the network generated from the root
    contains every reverse-tree arc with both endpoints <= limit.

    A boundary arc (u, T(u)) may require cells seeded far above limit:
    reaching the cell at T(u) can force the worklist through an ascending
    chain of odd seeds before any entry from below exists.  This computes,
    by a minimax shortest-path search over the enqueue relation, the largest
    seed unavoidably visited for any such arc.
    """
    check_value(limit)
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")

    # Hosts whose cells carry the odd arcs (u, T(u)) with T(u) <= limit.
    required = {collatz_step(u) for u in range(1, limit + 1, 2)
                if collatz_step(u) <= limit and u != 1}
    required.add(2)

    best: dict[int, int] = {}
    heap: list[tuple[int, int]] = [(2, 2)]
    remaining = set(required)
    answer = 2
    while heap and remaining:
        d, seed = heapq.heappop(heap)
        if best.get(seed, U64_MAX) < d:
            continue
        best[seed] = d
        if seed in remaining:
            remaining.discard(seed)
            answer = max(answer, d)
        for child in _enqueue_children(seed):
            nd = max(d, child)
            if best.get(child, U64_MAX) > nd:
                best[child] = nd
                heapq.heappush(heap, (nd, child))
    if remaining:
        raise RuntimeError(f"covering search did not reach hosts: {sorted(remaining)[:5]}")
    return answer


def _enqueue_children(seed: int) -> Iterator[int]:
    """Seeds the dispatch enqueues when processing `seed`."""
    if seed <= 2:
        yield 8
        yield 5
        return
    r = seed % 3
    if r == 2:
        b = odd_predecessor(seed)
        yield 4 * seed
        yield 4 * b + 1
        br = b % 3
        if br == 2:
            yield b
        elif br == 1:
            yield 2 * b
        else:
            yield 4 * b
    elif r == 1:
        yield 2 * seed
    else:
        yield 4 * seed


@dataclass(frozen=True)
class OracleCheck:
    """Difference between a network's arcs (restricted to <= bound) and the
    brute-force reverse graph at that bound.  Empty differences mean the
    tiling reproduced the tree exactly."""

    bound: int
    missing: frozenset[tuple[int, int]]
    extra: frozenset[tuple[int, int]]

    @property
    def passed(self) -> bool:
        return not self.missing and not self.extra


def check_against_oracle(net: GCellNetwork, bound: int) -> OracleCheck:
    """Compare net's arcs restricted to <= bound with the oracle."""
    check_value(bound)
    oracle = oracle_reverse_graph(bound).arcs
    got = net.restricted_arcs(bound)
    return OracleCheck(
        bound=bound,
        missing=frozenset(oracle - got),
        extra=frozenset(got - oracle),
    )


def verify_tiling(limit: int, max_value: int | None = None) -> OracleCheck:
    """Mass check that the expansion's arcs restricted to <= limit equal the
    brute-force reverse graph at that limit.

    Runs the same residue dispatch as generate_network as a vectorized
    frontier sweep, tracking arcs only, so covering-scale bounds (millions
    of seeds) stay fast.  max_value defaults to covering_bound(limit); a
    precomputed value can be passed to skip that search.  Arc-set equality
    with the object path is ordering-independent, which unit tests confirm
    on moderate bounds.
    """
    import numpy as np

    check_value(limit)
    if limit < 2:
        raise ValueError(f"limit must be >= 2, got {limit}")
    m = covering_bound(limit) if max_value is None else max_value
    check_value(m)
    if m < limit:
        raise ValueError(f"max_value {m} is below the check limit {limit}")

    seen = np.zeros(m + 1, dtype=bool)
    froms: list = []
    tos: list = []

    def emit(u, v):
        keep = (u <= m) & (v <= m)
        if not keep.all():
            u = u[keep]
            v = v[keep]
        froms.append(u)
        tos.append(v)

    # Root cell, emitted once; arcs filtered to <= m.
    seen[1:3] = True
    for u, v in ((4, 2), (8, 4), (1, 2), (2, 1), (5, 8)):
        if u <= m and v <= m:
            froms.append(np.array([u], dtype=np.int64))
            tos.append(np.array([v], dtype=np.int64))
    frontier = np.array([s for s in (8, 5) if s <= m], dtype=np.int64)

    while frontier.size:
        frontier = np.unique(frontier)
        frontier = frontier[~seen[frontier]]
        if not frontier.size:
            break
        seen[frontier] = True

        r = frontier % 3
        s2 = frontier[r == 2]
        s1 = frontier[r == 1]
        s0 = frontier[r == 0]
        children = []

        if s2.size:
            b = (2 * s2 - 1) // 3
            e = 4 * b + 1
            emit(2 * s2, s2)
            emit(4 * s2, 2 * s2)
            emit(b, s2)
            emit(2 * b, b)
            emit(4 * b, 2 * b)
            emit(e, 4 * s2)
            children.append(4 * s2)
            children.append(e)
            br = b % 3
            children.append(b[br == 2])
            children.append(2 * b[br == 1])
            children.append(4 * b[br == 0])
        if s1.size:
            emit(2 * s1, s1)
            children.append(2 * s1)
        if s0.size:
            emit(2 * s0, s0)
            emit(4 * s0, 2 * s0)
            children.append(4 * s0)

        if children:
            nxt = np.concatenate(children)
            nxt = nxt[nxt <= m]
            frontier = nxt
        else:
            frontier = np.empty(0, dtype=np.int64)

    all_from = np.concatenate(froms) if froms else np.empty(0, dtype=np.int64)
    all_to = np.concatenate(tos) if tos else np.empty(0, dtype=np.int64)
    within = (all_from <= limit) & (all_to <= limit)
    got = set(zip(all_from[within].tolist(), all_to[within].tolist()))
    oracle = oracle_reverse_graph(limit).arcs
    return OracleCheck(
        bound=limit,
        missing=frozenset(oracle - got),
        extra=frozenset(got - oracle),
    )
