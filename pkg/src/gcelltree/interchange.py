"""Versioned graph-interchange format for placed networks.

A single JSON document lists every node with its exact grid position (x is
carried as a fraction string so nothing is lost to floating point) and
every arc with its kind, plus metadata identifying the generating request.
Emission is byte-deterministic: records are sorted and the encoder uses a
fixed key order and separators, so identical inputs give identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .layout import PlacedNetwork

FORMAT_NAME = "gcell-network"
FORMAT_VERSION = 1


@dataclass(frozen=True)
class NodeRecord:
    value: int
    x: Fraction
    y: int
    generation: int
    phantom: bool


@dataclass(frozen=True)
class ArcRecord:
    from_value: int
    to_value: int
    kind: str


@dataclass(frozen=True)
class RegionDocument:
    """The interchange payload: exactly what goes over the wire."""

    root_seed: int
    max_value: int
    max_generation: int | None
    format_version: int
    nodes: tuple[NodeRecord, ...]
    arcs: tuple[ArcRecord, ...]


def document_from_placed(placed: PlacedNetwork) -> RegionDocument:
    """Project a placed network onto the interchange records."""
    net = placed.network
    nodes = tuple(
        NodeRecord(
            value=value,
            x=placed.positions[value].x,
            y=placed.positions[value].y,
            generation=net.nodes[value],
            phantom=value in net.phantom_nodes,
        )
        for value in sorted(net.nodes)
    )
    arcs = tuple(
        ArcRecord(from_value=u, to_value=v, kind=net.arcs[(u, v)])
        for u, v in sorted(net.arcs)
    )
    return RegionDocument(
        root_seed=net.root_seed,
        max_value=net.max_value,
        max_generation=net.max_generation,
        format_version=FORMAT_VERSION,
        nodes=nodes,
        arcs=arcs,
    )


def emit_interchange(placed: PlacedNetwork) -> str:
    """Serialize a placed network; see parse_interchange for the inverse."""
    return emit_document(document_from_placed(placed))


def emit_document(doc: RegionDocument) -> str:
    payload = {
        "format": FORMAT_NAME,
        "metadata": {
            "root_seed": doc.root_seed,
            "max_value": doc.max_value,
            "max_generation": doc.max_generation,
            "format_version": doc.format_version,
        },
        "nodes": [
            {
                "value": n.value,
                "x": str(n.x),
                "y": n.y,
                "generation": n.generation,
                "phantom": n.phantom,
            }
            for n in doc.nodes
        ],
        "arcs": [
            {"from": a.from_value, "to": a.to_value, "kind": a.kind}
            for a in doc.arcs
        ],
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


class InterchangeFormatError(ValueError):
    """The document is not a well-formed interchange payload."""


def _expect(cond: bool, message: str) -> None:
    if not cond:
        raise InterchangeFormatError(message)


def parse_interchange(text: str) -> RegionDocument:
    """Parse and validate an interchange document.

    Round-trips are lossless: parsing an emitted document reproduces every
    field exactly, fractions included.
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InterchangeFormatError(f"not valid JSON: {exc}") from exc
    _expect(isinstance(payload, dict), "top level must be an object")
    _expect(payload.get("format") == FORMAT_NAME,
            f"format must be {FORMAT_NAME!r}")
    meta = payload.get("metadata")
    _expect(isinstance(meta, dict), "missing metadata object")
    _expect(meta.get("format_version") == FORMAT_VERSION,
            f"unsupported format_version {meta.get('format_version')!r}")
    root_seed = meta.get("root_seed")
    max_value = meta.get("max_value")
    max_generation = meta.get("max_generation")
    _expect(isinstance(root_seed, int) and root_seed >= 1, "bad root_seed")
    _expect(isinstance(max_value, int) and max_value >= 1, "bad max_value")
    _expect(max_generation is None
            or (isinstance(max_generation, int) and max_generation >= 0),
            "bad max_generation")

    raw_nodes = payload.get("nodes")
    raw_arcs = payload.get("arcs")
    _expect(isinstance(raw_nodes, list), "nodes must be a list")
    _expect(isinstance(raw_arcs, list), "arcs must be a list")

    nodes = []
    for rec in raw_nodes:
        _expect(isinstance(rec, dict), "node record must be an object")
        value = rec.get("value")
        _expect(isinstance(value, int) and value >= 1, f"bad node value {value!r}")
        try:
            x = Fraction(rec.get("x"))
        except (TypeError, ValueError) as exc:
            raise InterchangeFormatError(f"bad x for node {value}") from exc
        y = rec.get("y")
        gen = rec.get("generation")
        phantom = rec.get("phantom")
        _expect(isinstance(y, int) and y >= 0, f"bad y for node {value}")
        _expect(isinstance(gen, int) and gen >= 0, f"bad generation for node {value}")
        _expect(isinstance(phantom, bool), f"bad phantom flag for node {value}")
        nodes.append(NodeRecord(value=value, x=x, y=y, generation=gen, phantom=phantom))

    arcs = []
    for rec in raw_arcs:
        _expect(isinstance(rec, dict), "arc record must be an object")
        u = rec.get("from")
        v = rec.get("to")
        kind = rec.get("kind")
        _expect(isinstance(u, int) and u >= 1, f"bad arc source {u!r}")
        _expect(isinstance(v, int) and v >= 1, f"bad arc target {v!r}")
        _expect(kind in ("halving", "odd"), f"bad arc kind {kind!r}")
        arcs.append(ArcRecord(from_value=u, to_value=v, kind=kind))

    return RegionDocument(
        root_seed=root_seed,
        max_value=max_value,
        max_generation=max_generation,
        format_version=FORMAT_VERSION,
        nodes=tuple(nodes),
        arcs=tuple(arcs),
    )
