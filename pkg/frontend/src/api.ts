// Typed client for the read-only analytics API plus the two async helpers
// the views rely on: debounced triggers and latest-wins response handling.

import type {
  BenchmarkProfileJson,
  BenchmarkRequestJson,
  InstitutionJson,
  OverallJson,
  RateRequestJson,
  RatingRowJson,
  TaxonomyNodeJson,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public errorName: string,
    detail: string,
  ) {
    super(`${errorName}: ${detail}`);
  }
}

async function parseOrThrow<T>(res: Response): Promise<T> {
  if (res.ok) return (await res.json()) as T;
  let name = `HTTP ${res.status}`;
  let detail = res.statusText;
  try {
    const body = (await res.json()) as { error?: string; detail?: string };
    if (body.error) name = body.error;
    if (body.detail) detail = body.detail;
  } catch {
    // non-JSON error body: keep the status line
  }
  throw new ApiError(res.status, name, detail);
}

export class ApiClient {
  constructor(private base: string = "") {}

  private get<T>(path: string): Promise<T> {
    return fetch(this.base + path).then((res) => parseOrThrow<T>(res));
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return fetch(this.base + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    }).then((res) => parseOrThrow<T>(res));
  }

  taxonomy(): Promise<TaxonomyNodeJson[]> {
    return this.get("/api/taxonomy");
  }

  institutions(region = "ALL"): Promise<InstitutionJson[]> {
    return this.get(`/api/institutions?region=${encodeURIComponent(region)}`);
  }

  rate(request: RateRequestJson): Promise<RatingRowJson[]> {
    return this.post("/api/rate", request);
  }

  benchmark(request: BenchmarkRequestJson): Promise<BenchmarkProfileJson> {
    return this.post("/api/benchmark", request);
  }

  overall(preset: string, region = "ALL", minPubs?: number): Promise<OverallJson> {
    const params = new URLSearchParams({ preset, region });
    if (minPubs !== undefined) params.set("min_pubs", String(minPubs));
    return this.get(`/api/overall?${params}`);
  }
}

/** Trailing-edge debounce; in-flight timers reset on every call. */
export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  waitMs = 200,
): (...args: A) => void {
  let timer: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    if (timer !== undefined) clearTimeout(timer);
    timer = setTimeout(() => fn(...args), waitMs);
  };
}

/**
 * Latest-wins guard for overlapping requests: wrap each request promise,
 * and any response that is no longer the newest resolves to null instead
 * of clobbering fresher data (stale errors are swallowed the same way).
 */
export function latestWins<T>(): (request: Promise<T>) => Promise<T | null> {
  let newest = 0;
  return (request: Promise<T>) => {
    const token = ++newest;
    return request.then(
      (value) => (token === newest ? value : null),
      (err) => {
        if (token === newest) throw err;
        return null;
      },
    );
  };
}
