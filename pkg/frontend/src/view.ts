import type { GraphModel } from './graph.js';

export interface HighlightResult {
  /** trajectory values present in the loaded graph, trajectory order */
  present: number[];
  /** how many trajectory values are not on screen */
  offscreen: number;
}

/** Intersect a trajectory with the loaded graph. */
export function computeHighlight(graph: GraphModel, steps: number[]): HighlightResult {
  const present: number[] = [];
  let offscreen = 0;
  for (const value of steps) {
    if (graph.nodes.has(value)) {
      present.push(value);
    } else {
      offscreen += 1;
    }
  }
  return { present, offscreen };
}

/**
 * At most one region request is live per user action; responses arriving
 * for superseded requests are discarded.
 */
export class RequestSequencer {
  private latest = 0;

  begin(): number {
    this.latest += 1;
    return this.latest;
  }

  isCurrent(seq: number): boolean {
    return seq === this.latest;
  }
}
