/** Test utilities: fixture loading and a fixture-backed fetch mock.
 *
 * The fixture files are byte captures of real gateway responses
 * (recorded via the gateway's own test client), so these tests exercise
 * the exact wire format the dashboard sees in production.
 */

import { readFileSync } from "node:fs";
import { fileURLToPath } from "node:url";

import type { FetchLike } from "../src/api.js";

export function fixtureBytes(name: string): Uint8Array {
  const path = fileURLToPath(new URL(`./fixtures/${name}`, import.meta.url));
  return new Uint8Array(readFileSync(path));
}

export function fixtureJson<T>(name: string): T {
  return JSON.parse(new TextDecoder().decode(fixtureBytes(name))) as T;
}

export interface MockOptions {
  /** endpoint suffixes (e.g. "timeline") that should return HTTP 500 */
  fail?: string[];
  /** endpoint suffixes answered only after `release()` is called */
  stall?: string[];
}

export interface MockFetch {
  fetch: FetchLike;
  requests: string[];
  release: () => void;
}

const WIDGET_FILES: Record<string, string> = {
  summary: "summary.json",
  timeline: "timeline.json",
  tagcloud: "tagcloud.json",
  map: "map.json",
  posts: "posts.json",
  "export.csv": "export.csv",
  algorithms: "algorithms.json",
};

export function gatewayMock(options: MockOptions = {}): MockFetch {
  const requests: string[] = [];
  let releaseAll = () => {};
  const gate = new Promise<void>((resolve) => {
    releaseAll = resolve;
  });

  const fetchFn: FetchLike = async (url) => {
    requests.push(url);
    const widget = Object.keys(WIDGET_FILES).find((w) =>
      url.includes(`/analysis/${w}?`) || url.endsWith(`/${w}`),
    );
    if (!widget) {
      return new Response(JSON.stringify({ code: "not_found", message: "no route" }), {
        status: 404,
        headers: { "content-type": "application/json" },
      });
    }
    if (options.stall?.includes(widget)) await gate;
    if (options.fail?.includes(widget)) {
      return new Response(
        JSON.stringify({ code: "internal_error", message: "forced failure" }),
        { status: 500, headers: { "content-type": "application/json" } },
      );
    }
    const body = fixtureBytes(WIDGET_FILES[widget]);
    const type = widget === "export.csv" ? "text/csv; charset=utf-8" : "application/json";
    return new Response(body.slice().buffer as ArrayBuffer, {
      status: 200,
      headers: { "content-type": type },
    });
  };

  return { fetch: fetchFn, requests, release: releaseAll };
}
