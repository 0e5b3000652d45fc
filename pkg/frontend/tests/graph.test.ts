import { readFileSync } from 'node:fs';
import { join } from 'node:path';

import { describe, expect, it } from 'vitest';

import {
  arcKey,
  emptyGraph,
  mergeRegion,
  parseFraction,
  parseRegion,
  RegionFormatError,
} from '../src/graph.js';
import type { Region } from '../src/types.js';

const FIXTURES = join(__dirname, 'fixtures');

export function loadRegionFixture(name: string): Region {
  const raw = JSON.parse(readFileSync(join(FIXTURES, name), 'utf-8'));
  return parseRegion(raw);
}

describe('parseFraction', () => {
  it('handles integers and ratios', () => {
    expect(parseFraction('2')).toBe(2);
    expect(parseFraction('13/4')).toBe(3.25);
    expect(parseFraction('1/2')).toBe(0.5);
  });

  it('rejects junk', () => {
    expect(() => parseFraction('zero')).toThrow(RegionFormatError);
    expect(() => parseFraction('1/0')).toThrow(RegionFormatError);
    expect(() => parseFraction('1/2/3')).toThrow(RegionFormatError);
  });
});

describe('parseRegion', () => {
  it('reads a served region document', () => {
    const region = loadRegionFixture('region-seed1-max32.json');
    expect(region.meta).toEqual({ rootSeed: 1, maxValue: 32, maxGeneration: null });
    const values = region.nodes.map((n) => n.value);
    expect(values).toContain(21);
    expect(values).toContain(1);
    const node21 = region.nodes.find((n) => n.value === 21)!;
    expect(node21.x).toBe(2);
    expect(node21.y).toBe(5);
    expect(node21.generation).toBe(1);
  });

  it('rejects wrong format or version', () => {
    expect(() => parseRegion({ format: 'dot' })).toThrow(RegionFormatError);
    expect(() => parseRegion({
      format: 'gcell-network',
      metadata: { format_version: 9, root_seed: 1, max_value: 2, max_generation: null },
      nodes: [],
      arcs: [],
    })).toThrow(/format_version/);
  });

  it('rejects malformed nodes', () => {
    const region = JSON.parse(readFileSync(join(FIXTURES, 'region-seed1-max32.json'), 'utf-8'));
    region.nodes[0].x = 7; // must be a fraction string
    expect(() => parseRegion(region)).toThrow(RegionFormatError);
  });
});

describe('mergeRegion', () => {
  it('loads a region into an empty graph', () => {
    const region = loadRegionFixture('region-seed1-max32.json');
    const { graph, addedNodes } = mergeRegion(emptyGraph(), region);
    expect(graph.nodes.size).toBe(region.nodes.length);
    expect(graph.arcs.size).toBe(region.arcs.length);
    expect(addedNodes.length).toBe(region.nodes.length);
    expect(graph.nodes.has(21)).toBe(true);
  });

  it('merges by value without duplicates', () => {
    const base = loadRegionFixture('region-seed1-max32.json');
    const expansion = loadRegionFixture('region-seed21-max1024-gen2.json');
    const loaded = mergeRegion(emptyGraph(), base).graph;
    const before = loaded.nodes.size;

    const result = mergeRegion(loaded, expansion, 21);
    expect(result.addedNodes).not.toContain(21); // already on screen
    expect(result.graph.nodes.size).toBe(before + result.addedNodes.length);
    const values = [...result.graph.nodes.keys()];
    expect(new Set(values).size).toBe(values.length);
  });

  it('translates incoming coordinates to the anchor frame', () => {
    const base = loadRegionFixture('region-seed1-max32.json');
    const expansion = loadRegionFixture('region-seed21-max1024-gen2.json');
    const loaded = mergeRegion(emptyGraph(), base).graph;
    const anchor = loaded.nodes.get(21)!;

    const merged = mergeRegion(loaded, expansion, 21).graph;
    // 42 sits one halving step directly above 21 in the expansion frame
    const node42 = merged.nodes.get(42)!;
    expect(node42.x).toBe(anchor.x);
    expect(node42.y).toBe(anchor.y + 1);
    // known nodes keep their original positions
    expect(merged.nodes.get(21)).toEqual(anchor);
  });

  it('is idempotent', () => {
    const base = loadRegionFixture('region-seed1-max32.json');
    const expansion = loadRegionFixture('region-seed21-max1024-gen2.json');
    let graph = mergeRegion(emptyGraph(), base).graph;
    graph = mergeRegion(graph, expansion, 21).graph;
    const again = mergeRegion(graph, expansion, 21);
    expect(again.addedNodes).toEqual([]);
    expect(again.addedArcs).toBe(0);
    expect(again.graph.nodes.size).toBe(graph.nodes.size);
  });

  it('keeps arc keys stable', () => {
    expect(arcKey({ from: 4, to: 2 })).toBe('4->2');
  });
});
