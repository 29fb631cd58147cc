/** Typed client for the three service endpoints. */

export interface LinkRow {
  url: string;
  visit_count: number;
  frecency: number;
}

export interface PredictResponse {
  query: string;
  links: LinkRow[];
}

export interface ClassifyResult {
  url: string;
  category: string;
  scores: Record<string, number>;
}

export interface ClassifyResponse {
  results: ClassifyResult[];
}

export interface RankedCategory {
  category: string;
  probability: number;
}

export interface CategoryPicks {
  category: string;
  urls: string[];
}

export interface RecommendationsResponse {
  ranking: RankedCategory[];
  recommendations: CategoryPicks[];
}

export const DEFAULT_BASE_URL = "http://127.0.0.1:8099";

/**
 * The service base URL comes from the page's query string (`?api=...`)
 * so the static bundle can point anywhere without a rebuild; otherwise
 * the compiled-in default is used.
 */
export function resolveBaseUrl(search: string, fallback = DEFAULT_BASE_URL): string {
  const api = new URLSearchParams(search).get("api");
  return api ? api.replace(/\/+$/, "") : fallback;
}

async function asJson<T>(response: Response): Promise<T> {
  if (!response.ok) {
    const body = await response.text();
    throw new Error(`HTTP ${response.status}: ${body.slice(0, 200)}`);
  }
  return (await response.json()) as T;
}

export class ApiClient {
  constructor(
    readonly baseUrl: string,
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  async predict(query: string, signal?: AbortSignal): Promise<PredictResponse> {
    const q = encodeURIComponent(query);
    const response = await this.fetchFn(`${this.baseUrl}/api/predict?q=${q}`, { signal });
    return asJson<PredictResponse>(response);
  }

  async classify(urls: string[], signal?: AbortSignal): Promise<ClassifyResponse> {
    const response = await this.fetchFn(`${this.baseUrl}/api/classify`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ urls }),
      signal,
    });
    return asJson<ClassifyResponse>(response);
  }

  async recommendations(signal?: AbortSignal): Promise<RecommendationsResponse> {
    const response = await this.fetchFn(`${this.baseUrl}/api/recommendations`, { signal });
    return asJson<RecommendationsResponse>(response);
  }
}
