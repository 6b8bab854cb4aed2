// Thin client over the service JSON API.

import type {
  CompareResponse,
  DestinationGuess,
  PlanRecord,
  PlanRequest,
  SliderValues,
  TabRecord,
} from './types.js';

export class ApiError extends Error {
  constructor(
    message: string,
    public status: number,
    public stage?: string,
  ) {
    super(message);
  }

  /** Text for the error banner; stage failures name the stage. */
  bannerText(): string {
    return this.stage ? `${this.stage}: ${this.message}` : this.message;
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private origin: string,
    private fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchFn(`${this.origin}${path}`, {
        method,
        headers: body === undefined ? undefined : { 'Content-Type': 'application/json' },
        body: body === undefined ? undefined : JSON.stringify(body),
      });
    } catch (err) {
      throw new ApiError(`service unreachable: ${String(err)}`, 0);
    }
    if (!response.ok) {
      let message = `HTTP ${response.status}`;
      let stage: string | undefined;
      try {
        const payload = await response.json();
        if (payload?.error?.message) message = payload.error.message;
        if (payload?.error?.stage) stage = payload.error.stage;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(message, response.status, stage);
    }
    return (await response.json()) as T;
  }

  planTrip(body: PlanRequest): Promise<PlanRecord> {
    return this.request<PlanRecord>('POST', '/api/plan', body);
  }

  getPlan(id: string): Promise<PlanRecord> {
    return this.request<PlanRecord>('GET', `/api/plan/${encodeURIComponent(id)}`);
  }

  listPlans(): Promise<{ id: string; destination: string; days: number; created_at: string }[]> {
    return this.request('GET', '/api/plans');
  }

  comparePlan(id: string, preferences: SliderValues | null): Promise<CompareResponse> {
    const body = preferences === null ? {} : { preferences };
    return this.request<CompareResponse>('POST', `/api/plan/${encodeURIComponent(id)}/compare`, body);
  }

  inferDestination(tabs: TabRecord[]): Promise<DestinationGuess> {
    return this.request<DestinationGuess>('POST', '/api/infer', { tabs });
  }

  health(): Promise<{ status: string; version: string }> {
    return this.request('GET', '/api/health');
  }
}
