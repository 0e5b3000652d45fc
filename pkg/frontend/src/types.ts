export interface GraphNode {
  value: number;
  /** layout x, converted from the exact fraction in the wire format */
  x: number;
  /** halving depth */
  y: number;
  generation: number;
  phantom: boolean;
}

export type ArcKind = 'halving' | 'odd';

export interface GraphArc {
  from: number;
  to: number;
  kind: ArcKind;
}

export interface RegionMeta {
  rootSeed: number;
  maxValue: number;
  maxGeneration: number | null;
}

export interface Region {
  meta: RegionMeta;
  nodes: GraphNode[];
  arcs: GraphArc[];
}

export interface TrajectoryBody {
  start: number;
  steps: number[];
  length: number;
  peak: number;
}

export interface RegionParams {
  seed: number;
  maxValue: number;
  maxGen?: number | null;
}
