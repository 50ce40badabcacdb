/**
 * Dashboard acceptance criteria, one describe block per criterion.
 * Widget fixtures are byte captures of real gateway responses.
 */

import { describe, expect, it } from "vitest";

import {
  ApiClient,
  MapPayload,
  PostsPayload,
  SummaryPayload,
  TagCloudPayload,
  TimelinePayload,
} from "../src/api.js";
import { renderLine, renderPie, renderTagCloud, renderTileMap } from "../src/charts.js";
import { loadDashboard, loadedCount } from "../src/dashboard.js";
import { SearchSequencer, canSubmit, emptyForm, toQueryString } from "../src/state.js";
import { fixtureBytes, fixtureJson, gatewayMock } from "./helpers.js";

describe("simple search within two interactions from cold load", () => {
  it("type a term, submit: all widget requests dispatch", async () => {
    const form = emptyForm(); // cold state
    expect(canSubmit(form)).toBe(false);

    form.termText = "#energy"; // interaction 1: type the term
    expect(canSubmit(form)).toBe(true);

    const mock = gatewayMock(); // interaction 2: press search
    const client = new ApiClient("", "t.secret", mock.fetch);
    await loadDashboard(client, toQueryString(form), new SearchSequencer());

    const hit = (w: string) => mock.requests.some((u) => u.includes(`/analysis/${w}?`));
    for (const widget of ["summary", "timeline", "tagcloud", "map", "posts"]) {
      expect(hit(widget), widget).toBe(true);
    }
  });

  it("empty form submit is blocked before any network call", async () => {
    const form = emptyForm();
    const mock = gatewayMock();
    if (canSubmit(form)) {
      const client = new ApiClient("", "t.secret", mock.fetch);
      await loadDashboard(client, toQueryString(form), new SearchSequencer());
    }
    expect(mock.requests).toHaveLength(0);
  });
});

describe("all four widgets render from a live gateway fixture", () => {
  it("produces non-empty markup for each visualization", () => {
    const pie = renderPie(fixtureJson<SummaryPayload>("summary.json"));
    const line = renderLine(fixtureJson<TimelinePayload>("timeline.json"));
    const cloud = renderTagCloud(fixtureJson<TagCloudPayload>("tagcloud.json"));
    const map = renderTileMap(fixtureJson<MapPayload>("map.json"));
    expect(pie).toContain("<svg");
    expect(line).toContain("<svg");
    expect(cloud).toContain("cloud-term");
    expect(map).toContain("map-tile");
  });

  it("displayed numbers equal payload numbers", () => {
    const posts = fixtureJson<PostsPayload>("posts.json");
    const summary = fixtureJson<SummaryPayload>("summary.json");
    expect(posts.posts.length).toBe(summary.total);
    const pie = renderPie(summary);
    expect(pie).toContain(`positive: ${summary.counts.positive}`);
  });
});

describe("one widget endpoint forced to 500 leaves the other three rendered", () => {
  it.each(["summary", "timeline", "tagcloud", "map"] as const)(
    "failing %s keeps the rest alive",
    async (victim) => {
      const mock = gatewayMock({ fail: [victim] });
      const client = new ApiClient("", "t.secret", mock.fetch);
      const state = await loadDashboard(
        client, "term=%23coffee", new SearchSequencer());
      expect(state[victim].phase).toBe("error");
      expect(loadedCount(state)).toBe(4); // the other three charts + posts
    },
  );
});

describe("downloaded CSV bytes equal the export endpoint response", () => {
  it("passes bytes through untouched", async () => {
    const mock = gatewayMock();
    const client = new ApiClient("", "t.secret", mock.fetch);
    const downloaded = await client.exportCsv("term=%23coffee");
    const served = fixtureBytes("export.csv");
    expect(downloaded.length).toBe(served.length);
    expect(downloaded).toEqual(served);
  });
});
