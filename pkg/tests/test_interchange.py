"""Interchange format: schema, determinism, lossless round-trips."""

from fractions import Fraction

import pytest

from gcelltree.gcell import generate_network
from gcelltree.interchange import (
    InterchangeFormatError,
    document_from_placed,
    emit_document,
    emit_interchange,
    parse_interchange,
)
from gcelltree.layout import layout_network


def placed_region(max_value, seed=1, max_gen=None):
    return layout_network(generate_network(seed, max_value, max_gen), 4)


class TestEmission:
    def test_root_only_records(self):
        doc = parse_interchange(emit_interchange(placed_region(2)))
        assert [n.value for n in doc.nodes] == [1, 2]
        assert len(doc.arcs) == 2
        assert {a.kind for a in doc.arcs} == {"odd", "halving"}

    def test_node_21_with_generation(self):
        doc = parse_interchange(emit_interchange(placed_region(32)))
        rec = next(n for n in doc.nodes if n.value == 21)
        assert rec.generation == 1
        assert rec.x == Fraction(2)
        assert rec.y == 5
        assert rec.phantom is False

    def test_metadata(self):
        doc = parse_interchange(emit_interchange(placed_region(32, max_gen=3)))
        assert doc.root_seed == 1
        assert doc.max_value == 32
        assert doc.max_generation == 3
        assert doc.format_version == 1

    def test_unbounded_generation_serializes_as_null(self):
        text = emit_interchange(placed_region(8))
        assert '"max_generation":null' in text

    def test_records_are_sorted(self):
        doc = parse_interchange(emit_interchange(placed_region(1024)))
        values = [n.value for n in doc.nodes]
        assert values == sorted(values)
        pairs = [(a.from_value, a.to_value) for a in doc.arcs]
        assert pairs == sorted(pairs)

    def test_fractional_x_survives(self):
        doc = parse_interchange(emit_interchange(placed_region(1024)))
        fractional = [n for n in doc.nodes if n.x.denominator > 1]
        assert fractional, "expected sub-integer grid positions at this size"


class TestRoundTrip:
    def test_field_exact_at_1024(self):
        placed = placed_region(1024)
        doc = document_from_placed(placed)
        assert parse_interchange(emit_interchange(placed)) == doc

    def test_reemission_is_byte_identical(self):
        placed = placed_region(1024)
        text = emit_interchange(placed)
        assert emit_document(parse_interchange(text)) == text

    def test_emission_is_deterministic(self):
        assert emit_interchange(placed_region(500)) == emit_interchange(placed_region(500))


class TestValidation:
    def test_rejects_non_json(self):
        with pytest.raises(InterchangeFormatError, match="JSON"):
            parse_interchange("#VRML V2.0 utf8")

    def test_rejects_wrong_format_name(self):
        with pytest.raises(InterchangeFormatError, match="format"):
            parse_interchange('{"format": "dot", "metadata": {}}')

    def test_rejects_wrong_version(self):
        text = emit_interchange(placed_region(2)).replace(
            '"format_version":1', '"format_version":99')
        with pytest.raises(InterchangeFormatError, match="format_version"):
            parse_interchange(text)

    def test_rejects_bad_arc_kind(self):
        text = emit_interchange(placed_region(2)).replace('"kind":"odd"', '"kind":"up"')
        with pytest.raises(InterchangeFormatError, match="kind"):
            parse_interchange(text)

    def test_rejects_bad_fraction(self):
        text = emit_interchange(placed_region(2)).replace('"x":"0"', '"x":"zero"', 1)
        with pytest.raises(InterchangeFormatError, match="bad x"):
            parse_interchange(text)
