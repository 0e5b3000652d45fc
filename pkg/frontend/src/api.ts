import { parseRegion } from './graph.js';
import type { Region, RegionParams, TrajectoryBody } from './types.js';

export class ApiError extends Error {
  constructor(message: string, readonly status?: number) {
    super(message);
  }
}

async function reasonOf(response: Response): Promise<string> {
  try {
    const body = await response.json();
    if (body && typeof body.reason === 'string') return body.reason;
  } catch {
    /* non-JSON error body */
  }
  return `${response.status} ${response.statusText}`;
}

export class ApiClient {
  constructor(private readonly baseUrl = '') {}

  async fetchRegion(params: RegionParams): Promise<Region> {
    const query = new URLSearchParams({
      seed: String(params.seed),
      max_value: String(params.maxValue),
      format: 'interchange',
    });
    if (params.maxGen !== undefined && params.maxGen !== null) {
      query.set('max_gen', String(params.maxGen));
    }
    const response = await fetch(`${this.baseUrl}/api/v1/region?${query}`);
    if (!response.ok) {
      throw new ApiError(await reasonOf(response), response.status);
    }
    return parseRegion(await response.json());
  }

  async fetchTrajectory(n: number): Promise<TrajectoryBody> {
    const response = await fetch(`${this.baseUrl}/api/v1/trajectory/${n}`);
    if (!response.ok) {
      throw new ApiError(await reasonOf(response), response.status);
    }
    const body = await response.json();
    if (!body || !Array.isArray(body.steps)) {
      throw new ApiError('malformed trajectory body');
    }
    return body as TrajectoryBody;
  }
}
