import type { GraphArc, GraphNode, Region, RegionMeta } from './types.js';

const FORMAT_NAME = 'gcell-network';
const FORMAT_VERSION = 1;

export class RegionFormatError extends Error {}

/** Parse an exact fraction string ("13/4" or "2") to a number. */
export function parseFraction(text: string): number {
  const parts = text.split('/');
  if (parts.length === 1) {
    const n = Number(parts[0]);
    if (!Number.isFinite(n)) throw new RegionFormatError(`bad fraction ${text}`);
    return n;
  }
  if (parts.length !== 2) throw new RegionFormatError(`bad fraction ${text}`);
  const num = Number(parts[0]);
  const den = Number(parts[1]);
  if (!Number.isFinite(num) || !Number.isFinite(den) || den === 0) {
    throw new RegionFormatError(`bad fraction ${text}`);
  }
  return num / den;
}

function expect(cond: boolean, message: string): asserts cond {
  if (!cond) throw new RegionFormatError(message);
}

/** Validate a decoded interchange payload into a Region. */
export function parseRegion(raw: unknown): Region {
  expect(typeof raw === 'object' && raw !== null, 'payload must be an object');
  const payload = raw as Record<string, unknown>;
  expect(payload.format === FORMAT_NAME, `format must be ${FORMAT_NAME}`);
  const meta = payload.metadata as Record<string, unknown>;
  expect(typeof meta === 'object' && meta !== null, 'missing metadata');
  expect(meta.format_version === FORMAT_VERSION,
    `unsupported format_version ${String(meta.format_version)}`);
  expect(typeof meta.root_seed === 'number', 'bad root_seed');
  expect(typeof meta.max_value === 'number', 'bad max_value');
  expect(meta.max_generation === null || typeof meta.max_generation === 'number',
    'bad max_generation');
  const regionMeta: RegionMeta = {
    rootSeed: meta.root_seed as number,
    maxValue: meta.max_value as number,
    maxGeneration: meta.max_generation as number | null,
  };

  expect(Array.isArray(payload.nodes), 'nodes must be a list');
  expect(Array.isArray(payload.arcs), 'arcs must be a list');

  const nodes: GraphNode[] = (payload.nodes as unknown[]).map((entry) => {
    const rec = entry as Record<string, unknown>;
    expect(typeof rec.value === 'number', 'bad node value');
    expect(typeof rec.x === 'string', `bad x for node ${String(rec.value)}`);
    expect(typeof rec.y === 'number', `bad y for node ${String(rec.value)}`);
    expect(typeof rec.generation === 'number', `bad generation for ${String(rec.value)}`);
    expect(typeof rec.phantom === 'boolean', `bad phantom for ${String(rec.value)}`);
    return {
      value: rec.value as number,
      x: parseFraction(rec.x as string),
      y: rec.y as number,
      generation: rec.generation as number,
      phantom: rec.phantom as boolean,
    };
  });

  const arcs: GraphArc[] = (payload.arcs as unknown[]).map((entry) => {
    const rec = entry as Record<string, unknown>;
    expect(typeof rec.from === 'number' && typeof rec.to === 'number', 'bad arc endpoint');
    expect(rec.kind === 'halving' || rec.kind === 'odd', `bad arc kind ${String(rec.kind)}`);
    return { from: rec.from as number, to: rec.to as number, kind: rec.kind };
  });

  return { meta: regionMeta, nodes, arcs };
}

export function arcKey(arc: { from: number; to: number }): string {
  return `${arc.from}->${arc.to}`;
}

/** The loaded graph: one entry per distinct node value. */
export interface GraphModel {
  nodes: Map<number, GraphNode>;
  arcs: Map<string, GraphArc>;
}

export function emptyGraph(): GraphModel {
  return { nodes: new Map(), arcs: new Map() };
}

export interface MergeResult {
  graph: GraphModel;
  addedNodes: number[];
  addedArcs: number;
}

/**
 * Merge a fetched region into the loaded graph by node value.
 *
 * A region fetched for an expansion is laid out in its own frame, so when
 * the anchor value is already on screen the incoming coordinates are
 * translated to line its copy up with the existing one.  Known values keep
 * their positions; merging the same region twice changes nothing.
 */
export function mergeRegion(
  graph: GraphModel,
  region: Region,
  anchorValue?: number,
): MergeResult {
  let dx = 0;
  let dy = 0;
  if (anchorValue !== undefined) {
    const existing = graph.nodes.get(anchorValue);
    const incoming = region.nodes.find((n) => n.value === anchorValue);
    if (existing && incoming) {
      dx = existing.x - incoming.x;
      dy = existing.y - incoming.y;
    }
  }

  const nodes = new Map(graph.nodes);
  const arcs = new Map(graph.arcs);
  const addedNodes: number[] = [];
  for (const node of region.nodes) {
    if (!nodes.has(node.value)) {
      nodes.set(node.value, { ...node, x: node.x + dx, y: node.y + dy });
      addedNodes.push(node.value);
    }
  }
  let addedArcs = 0;
  for (const arc of region.arcs) {
    const key = arcKey(arc);
    if (!arcs.has(key) && nodes.has(arc.from) && nodes.has(arc.to)) {
      arcs.set(key, arc);
      addedArcs += 1;
    }
  }
  return { graph: { nodes, arcs }, addedNodes, addedArcs };
}
