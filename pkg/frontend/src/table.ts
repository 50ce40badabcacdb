/** Raw-data table: sorting, client-side pagination, CSV pass-through. */

import type { ApiClient, PostRecord } from "./api.js";
import { escapeHtml } from "./charts.js";

export const PAGE_SIZE = 50;

export type SortColumn = "time" | "author" | "label" | "compound";

export interface SortSpec {
  column: SortColumn;
  descending: boolean;
}

const KEYS: Record<SortColumn, (p: PostRecord) => string | number> = {
  time: (p) => p.created_at,
  author: (p) => p.author.toLowerCase(),
  label: (p) => p.label,
  compound: (p) => p.compound,
};

export function sortPosts(posts: readonly PostRecord[], spec: SortSpec): PostRecord[] {
  const key = KEYS[spec.column];
  const sorted = [...posts].sort((a, b) => {
    const ka = key(a);
    const kb = key(b);
    return ka < kb ? -1 : ka > kb ? 1 : 0;
  });
  if (spec.descending) sorted.reverse();
  return sorted;
}

export function pageCount(total: number, pageSize: number = PAGE_SIZE): number {
  return Math.max(1, Math.ceil(total / pageSize));
}

export function paginate(
  posts: readonly PostRecord[],
  page: number,
  pageSize: number = PAGE_SIZE,
): PostRecord[] {
  const clamped = Math.min(Math.max(page, 0), pageCount(posts.length, pageSize) - 1);
  return posts.slice(clamped * pageSize, (clamped + 1) * pageSize);
}

/** Rows display payload values verbatim; compound keeps its 4 decimals. */
export function renderRows(posts: readonly PostRecord[]): string {
  return posts
    .map(
      (p) =>
        `<tr><td>${escapeHtml(p.created_at)}</td>` +
        `<td>${escapeHtml(p.author)}</td>` +
        `<td class="label-${p.label}">${p.label}</td>` +
        `<td class="num">${p.compound.toFixed(4)}</td>` +
        `<td>${escapeHtml(p.text)}</td></tr>`,
    )
    .join("");
}

/**
 * Download the export endpoint's bytes untouched. The blob the user
 * saves must be byte-identical to the HTTP response body; the client
 * never re-serializes rows itself.
 */
export async function fetchCsvBytes(client: ApiClient, query: string): Promise<Uint8Array> {
  return client.exportCsv(query);
}

export function csvObjectUrl(bytes: Uint8Array): string {
  const buffer = bytes.buffer.slice(
    bytes.byteOffset,
    bytes.byteOffset + bytes.byteLength,
  ) as ArrayBuffer;
  const blob = new Blob([buffer], { type: "text/csv;charset=utf-8" });
  return URL.createObjectURL(blob);
}
