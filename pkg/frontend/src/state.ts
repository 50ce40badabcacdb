/** Search form model and per-widget load state. */

export const HARD_RESULT_LIMIT = 1000;

export type TermKind = "keyword" | "hashtag" | "username";

export interface SearchForm {
  termText: string;
  termKind: TermKind;
  algorithm: string;
  language: string;
  timeFrom: string;
  timeTo: string;
  origin: string;
  maxResults: number;
}

export function emptyForm(): SearchForm {
  return {
    termText: "",
    termKind: "keyword",
    algorithm: "valence-rule",
    language: "",
    timeFrom: "",
    timeTo: "",
    origin: "",
    maxResults: 100,
  };
}

/** Submit stays disabled until at least one term is present. */
export function canSubmit(form: SearchForm): boolean {
  return form.termText.trim().length > 0;
}

/** Client-side clamp mirroring the server hard limit. */
export function clampCount(value: number, limit: number = HARD_RESULT_LIMIT): number {
  if (!Number.isFinite(value) || value < 1) return 1;
  return Math.min(Math.floor(value), limit);
}

function decoratedTerm(text: string, kind: TermKind): string {
  const bare = text.trim().replace(/^[#@]+/, "");
  if (kind === "hashtag") return `#${bare}`;
  if (kind === "username") return `@${bare}`;
  return text.trim();
}

/** Gateway query string for the current form (term may repeat). */
export function toQueryString(form: SearchForm): string {
  const params = new URLSearchParams();
  for (const chunk of form.termText.split(",")) {
    const trimmed = chunk.trim();
    if (!trimmed) continue;
    const kind: TermKind = trimmed.startsWith("#")
      ? "hashtag"
      : trimmed.startsWith("@")
        ? "username"
        : form.termKind;
    params.append("term", decoratedTerm(trimmed, kind));
  }
  params.set("algorithm", form.algorithm);
  if (form.language) params.set("lang", form.language);
  if (form.timeFrom) params.set("time_from", form.timeFrom);
  if (form.timeTo) params.set("time_to", form.timeTo);
  if (form.origin) params.set("origin", form.origin);
  params.set("max_results", String(clampCount(form.maxResults)));
  return params.toString();
}

export type WidgetPhase<T> =
  | { phase: "loading" }
  | { phase: "loaded"; payload: T }
  | { phase: "error"; status: number; code: string; message: string; retryAfter?: number };

export function loading<T>(): WidgetPhase<T> {
  return { phase: "loading" };
}

/**
 * Monotone search counter: responses for superseded searches are
 * discarded instead of overwriting newer widget state.
 */
export class SearchSequencer {
  private current = 0;

  next(): number {
    this.current += 1;
    return this.current;
  }

  isCurrent(sequence: number): boolean {
    return sequence === this.current;
  }
}
