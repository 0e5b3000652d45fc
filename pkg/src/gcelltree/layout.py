"""Planar grid placement for G-cell networks.

Every node gets an exact grid position: x a dyadic rational, y the halving
depth.  The trunk of powers of two runs up the line x = 0.  A cell anchored
at (x0, y0) with width w spans two rows upward and places its B column at
x0 + w and its seventh node at x0 + w/2; derived cells shrink dyadically,
which keeps distinct structures in disjoint strips and the whole placement
collision-free.  Widths are exact Fractions throughout, so layouts compare
without rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import LayoutError, WidthUnderflowError
from .gcell import GCellNetwork, build_gcell

DEFAULT_BASE_WIDTH = Fraction(4)

#: Widths whose denominator exceeds this are reported as underflow.  Depths
#: grow with derivation-chain length (about 2^71 at max_value 10^4, 2^109 at
#: 10^5); this default accommodates regions through the service ceiling.
DEFAULT_DENOMINATOR_LIMIT = 1 << 256


def _is_dyadic(q: Fraction) -> bool:
    d = q.denominator
    return d & (d - 1) == 0


@dataclass(frozen=True)
class GridPos:
    """An exact planar grid position: dyadic x, integer halving depth y."""

    x: Fraction
    y: int

    def __post_init__(self):
        if not isinstance(self.x, Fraction):
            object.__setattr__(self, "x", Fraction(self.x))
        if not _is_dyadic(self.x):
            raise ValueError(f"x denominator must be a power of two, got {self.x}")
        if self.y < 0:
            raise ValueError(f"y must be non-negative, got {self.y}")


@dataclass(frozen=True)
class PlacedNetwork:
    """A network plus an injective grid position per node.

    cell_width maps a generation to the width of that generation's
    chain-initial cells; cells further along a same-generation right chain
    are narrower.  phantom_echoes are render-only ghost copies of the root
    cell's duplicated 2B/4B slots; they are not nodes and carry no arcs.
    """

    network: GCellNetwork
    positions: dict[int, GridPos]
    cell_width: dict[int, Fraction]
    base_width: Fraction
    phantom_echoes: tuple[tuple[int, GridPos], ...]


def layout_network(
    net: GCellNetwork,
    base_width: Fraction | int = DEFAULT_BASE_WIDTH,
    *,
    denominator_limit: int = DEFAULT_DENOMINATOR_LIMIT,
) -> PlacedNetwork:
    """Assign grid positions to every node of a nonempty network.

    Replays the network's derivation events with the dyadic width rules:
    the cell above (seeded 4A) takes half the width, right-chain neighbors
    take half, and the subtree rising from the seventh node takes a quarter
    (it coincides with the upper cell's right neighbor).  Deterministic:
    identical networks and widths give identical positions.
    """
    base = Fraction(base_width)
    if base <= 0:
        raise ValueError(f"base_width must be positive, got {base}")
    if not _is_dyadic(base):
        raise ValueError(f"base_width must be dyadic, got {base}")
    if not net.nodes:
        raise ValueError("cannot lay out an empty network")
    if not net.events:
        raise LayoutError("network carries no derivation events")

    positions: dict[int, GridPos] = {}
    echoes: list[tuple[int, GridPos]] = []

    def place(value: int, x: Fraction, y: int) -> None:
        if value not in net.nodes:
            return
        pos = GridPos(x, y)
        prev = positions.get(value)
        if prev is None:
            positions[value] = pos
        elif prev != pos:
            raise LayoutError(
                f"value {value} placed at both {prev} and {pos}"
            )

    # (x, y, width) per event index, filled in event order; an event's
    # parent always precedes it.
    geometry: list[tuple[Fraction, int, Fraction]] = []

    for ev in net.events:
        if ev.relation == "origin":
            if ev.kind == "root":
                anchor = (Fraction(0), 1, 2 * base)
            else:
                anchor = (Fraction(0), 0, 2 * base)
        else:
            px, py, pw = geometry[ev.parent]
            if ev.relation == "up":
                anchor = (px, py + 2, pw / 2)
            elif ev.relation == "e_up":
                anchor = (px + pw / 2, py + 2, pw / 4)
            elif ev.relation == "at_base":
                anchor = (px + pw, py, pw / 2)
            elif ev.relation == "at_double":
                anchor = (px + pw, py + 1, pw / 2)
            elif ev.relation == "dead_branch":
                anchor = (px + pw, py + 2, pw / 4)
            elif ev.relation == "double_up":
                anchor = (px, py + 1, pw)
            else:
                raise LayoutError(f"unknown relation {ev.relation!r}")
        geometry.append(anchor)
        x, y, w = anchor
        if w.denominator > denominator_limit:
            raise WidthUnderflowError(
                f"cell width {w} at seed {ev.seed} is finer than 1/{denominator_limit}; "
                "request a smaller region or a larger base width"
            )

        if ev.kind == "root":
            cell = build_gcell(2, ev.generation)
            place(cell.b[0], x, y - 1)
            place(cell.a[0], x, y)
            place(cell.a[1], x, y + 1)
            place(cell.a[2], x, y + 2)
            place(cell.e, x + w / 2, y + 2)
            for value, dy in ((cell.b[1], 1), (cell.b[2], 2)):
                if value <= net.max_value:
                    echoes.append((value, GridPos(x + w, y + dy)))
        elif ev.kind == "cell":
            cell = build_gcell(ev.seed, ev.generation)
            place(cell.a[0], x, y)
            place(cell.a[1], x, y + 1)
            place(cell.a[2], x, y + 2)
            place(cell.b[0], x + w, y)
            place(cell.b[1], x + w, y + 1)
            place(cell.b[2], x + w, y + 2)
            place(cell.e, x + w / 2, y + 2)
        elif ev.kind == "column":
            place(ev.seed, x, y)
            place(2 * ev.seed, x, y + 1)
            place(4 * ev.seed, x, y + 2)
        elif ev.kind == "node":
            place(ev.seed, x, y)
            place(2 * ev.seed, x, y + 1)
        else:
            raise LayoutError(f"unknown event kind {ev.kind!r}")

    missing = net.nodes.keys() - positions.keys()
    if missing:
        raise LayoutError(f"nodes left unplaced: {sorted(missing)[:5]}")

    by_pos: dict[GridPos, int] = {}
    for value, pos in positions.items():
        other = by_pos.setdefault(pos, value)
        if other != value:
            raise LayoutError(f"values {other} and {value} share position {pos}")

    max_gen = net.max_generation_seen
    widths = {g: 2 * base / (1 << g) for g in range(max_gen + 1)}

    return PlacedNetwork(
        network=net,
        positions=positions,
        cell_width=widths,
        base_width=base,
        phantom_echoes=tuple(echoes),
    )
