/**
 * Widget renderers: payload in, SVG/HTML markup out.
 *
 * Pure string builders so they can be unit-tested without a DOM. All
 * numbers shown are the payload's numbers verbatim (compounds already
 * arrive rounded to 4 decimals); nothing is recomputed client-side.
 */

import type {
  MapPayload,
  SummaryPayload,
  TagCloudPayload,
  TimelinePayload,
} from "./api.js";

export const LABEL_COLORS: Record<string, string> = {
  positive: "#46d68c",
  negative: "#ff6b7a",
  neutral: "#8fa7bd",
};

export const EMPTY_MESSAGE = "no posts matched this search";

export function escapeHtml(raw: string): string {
  return raw
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function emptyState(): string {
  return `<p class="empty-state" role="status">${EMPTY_MESSAGE}</p>`;
}

/** Diverging fill centered at compound 0: red below, green above. */
export function divergingColor(compound: number): string {
  const t = Math.max(-1, Math.min(1, compound));
  const mix = (a: number, b: number) => Math.round(a + (b - a) * Math.abs(t));
  return t >= 0
    ? `rgb(${mix(143, 70)},${mix(167, 214)},${mix(189, 140)})`
    : `rgb(${mix(143, 255)},${mix(167, 107)},${mix(189, 122)})`;
}

export function renderPie(payload: SummaryPayload): string {
  if (payload.total === 0) return emptyState();
  const radius = 80;
  const center = 100;
  let angle = -Math.PI / 2;
  const sectors: string[] = [];
  const legend: string[] = [];
  for (const label of ["positive", "negative", "neutral"] as const) {
    const fraction = payload.fractions[label];
    if (fraction <= 0) continue;
    const sweep = fraction * 2 * Math.PI;
    const x1 = center + radius * Math.cos(angle);
    const y1 = center + radius * Math.sin(angle);
    angle += sweep;
    const x2 = center + radius * Math.cos(angle);
    const y2 = center + radius * Math.sin(angle);
    const large = sweep > Math.PI ? 1 : 0;
    const path =
      fraction >= 1
        ? `<circle cx="${center}" cy="${center}" r="${radius}" fill="${LABEL_COLORS[label]}"/>`
        : `<path d="M${center},${center} L${x1.toFixed(2)},${y1.toFixed(2)} ` +
          `A${radius},${radius} 0 ${large} 1 ${x2.toFixed(2)},${y2.toFixed(2)} Z" ` +
          `fill="${LABEL_COLORS[label]}"/>`;
    sectors.push(path);
    const percent = (fraction * 100).toFixed(1);
    legend.push(
      `<li><span class="swatch" style="background:${LABEL_COLORS[label]}"></span>` +
        `${label}: ${payload.counts[label]} (${percent}%)</li>`,
    );
  }
  return (
    `<svg viewBox="0 0 200 200" role="img" aria-label="polarity distribution">` +
    sectors.join("") +
    `</svg><ul class="legend">${legend.join("")}</ul>`
  );
}

export function renderLine(payload: TimelinePayload): string {
  if (payload.bins.length === 0) return emptyState();
  const width = 420;
  const height = 160;
  const step = payload.bins.length > 1 ? width / (payload.bins.length - 1) : 0;
  const y = (compound: number) => height / 2 - compound * (height / 2 - 10);
  const points = payload.bins
    .map((bin, i) => `${(i * step).toFixed(1)},${y(bin.mean_compound).toFixed(1)}`)
    .join(" ");
  const maxCount = Math.max(
    1,
    ...payload.bins.map((b) => b.counts.positive + b.counts.negative + b.counts.neutral),
  );
  const bars = payload.bins
    .map((bin, i) => {
      const total = bin.counts.positive + bin.counts.negative + bin.counts.neutral;
      const barHeight = (total / maxCount) * 40;
      return (
        `<rect x="${(i * step - 2).toFixed(1)}" y="${(height - barHeight).toFixed(1)}" ` +
        `width="4" height="${barHeight.toFixed(1)}" class="volume-bar">` +
        `<title>${escapeHtml(bin.bin_start)}: ${total} posts, mean ${bin.mean_compound}</title></rect>`
      );
    })
    .join("");
  return (
    `<svg viewBox="0 0 ${width} ${height}" role="img" aria-label="sentiment timeline">` +
    `<line x1="0" y1="${height / 2}" x2="${width}" y2="${height / 2}" class="axis"/>` +
    bars +
    `<polyline points="${points}" fill="none" class="mean-line"/>` +
    `</svg>`
  );
}

export function renderTagCloud(payload: TagCloudPayload): string {
  if (payload.terms.length === 0) return emptyState();
  const top = payload.terms[0].weight;
  const spans = payload.terms.map((tw) => {
    const scale = 0.8 + 1.4 * (tw.weight / top);
    return (
      `<span class="cloud-term" style="font-size:${scale.toFixed(2)}em" ` +
      `title="${tw.weight}">${escapeHtml(tw.term)}</span>`
    );
  });
  return `<p class="tag-cloud" role="img" aria-label="frequent terms">${spans.join(" ")}</p>`;
}

export const UNKNOWN_LOCATION_LABEL = "unknown location";

export function renderTileMap(payload: MapPayload): string {
  if (payload.countries.length === 0) return emptyState();
  const tiles = payload.countries.map((entry) => {
    const name = entry.country === "??" ? UNKNOWN_LOCATION_LABEL : entry.country;
    return (
      `<div class="map-tile" style="background:${divergingColor(entry.mean_compound)}" ` +
      `role="img" aria-label="${escapeHtml(name)}: ${entry.total} posts, mean ${entry.mean_compound}">` +
      `<strong>${escapeHtml(entry.country)}</strong>` +
      `<span>${entry.total}</span><span>${entry.mean_compound}</span></div>`
    );
  });
  const legend =
    `<p class="map-legend">tile color: mean compound ` +
    `<span style="color:${divergingColor(-0.8)}">negative</span> to ` +
    `<span style="color:${divergingColor(0.8)}">positive</span>` +
    (payload.countries.some((c) => c.country === "??")
      ? `; ?? = ${UNKNOWN_LOCATION_LABEL}`
      : "") +
    `</p>`;
  return `<div class="map-grid">${tiles.join("")}</div>${legend}`;
}
