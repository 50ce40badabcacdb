/** Typed client for the sentiboard gateway JSON/CSV contracts. */

export interface LabelCounts {
  positive: number;
  negative: number;
  neutral: number;
}

export interface SummaryPayload {
  algorithm: string;
  query_digest: string;
  total: number;
  counts: LabelCounts;
  fractions: { positive: number; negative: number; neutral: number };
}

export interface TimeBin {
  bin_start: string;
  counts: LabelCounts;
  mean_compound: number;
}

export interface TimelinePayload {
  algorithm: string;
  query_digest: string;
  bin_seconds: number;
  bins: TimeBin[];
}

export interface TermWeight {
  term: string;
  weight: number;
}

export interface TagCloudPayload {
  algorithm: string;
  query_digest: string;
  terms: TermWeight[];
}

export interface CountryEntry {
  country: string;
  counts: LabelCounts;
  mean_compound: number;
  total: number;
}

export interface MapPayload {
  algorithm: string;
  query_digest: string;
  countries: CountryEntry[];
}

export interface PostRecord {
  id: string;
  created_at: string;
  author: string;
  lang: string;
  country: string | null;
  text: string;
  algorithm: string;
  compound: number;
  label: "positive" | "negative" | "neutral";
  truncated: boolean;
}

export interface PostsPayload {
  algorithm: string;
  query_digest: string;
  posts: PostRecord[];
}

export interface AlgorithmInfo {
  id: string;
  description: string;
}

export type WidgetName = "summary" | "timeline" | "tagcloud" | "map" | "posts";

export interface WidgetPayloads {
  summary: SummaryPayload;
  timeline: TimelinePayload;
  tagcloud: TagCloudPayload;
  map: MapPayload;
  posts: PostsPayload;
}

export class GatewayError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
    readonly retryAfter?: number,
  ) {
    super(message);
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

const API_ROOT = "/api/v1";

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly bearer: string,
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request(path: string): Promise<Response> {
    const response = await this.fetchFn(`${this.baseUrl}${API_ROOT}${path}`, {
      headers: { Authorization: `Bearer ${this.bearer}` },
    });
    if (!response.ok) {
      let code = "http_error";
      let message = `HTTP ${response.status}`;
      try {
        const body = await response.json();
        code = body.code ?? code;
        message = body.message ?? message;
      } catch {
        /* non-JSON error body: keep the generic message */
      }
      const retryAfter = response.headers.get("retry-after");
      throw new GatewayError(
        response.status,
        code,
        message,
        retryAfter ? Number(retryAfter) : undefined,
      );
    }
    return response;
  }

  async widget<W extends WidgetName>(name: W, query: string): Promise<WidgetPayloads[W]> {
    const response = await this.request(`/analysis/${name}?${query}`);
    return (await response.json()) as WidgetPayloads[W];
  }

  /** Raw export bytes, passed through untouched for the download link. */
  async exportCsv(query: string): Promise<Uint8Array> {
    const response = await this.request(`/analysis/export.csv?${query}`);
    return new Uint8Array(await response.arrayBuffer());
  }

  async algorithms(): Promise<AlgorithmInfo[]> {
    const response = await this.request("/algorithms");
    const body = (await response.json()) as { algorithms: AlgorithmInfo[] };
    return body.algorithms;
  }
}

const TOKEN_KEY = "sentiboard.token";

/** The API token lives in session storage only; it is never persisted. */
export function storeSessionToken(token: string): void {
  if (typeof sessionStorage !== "undefined") {
    sessionStorage.setItem(TOKEN_KEY, token);
  }
}

export function sessionToken(): string | null {
  return typeof sessionStorage !== "undefined" ? sessionStorage.getItem(TOKEN_KEY) : null;
}
