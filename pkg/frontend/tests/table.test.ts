import { describe, expect, it } from "vitest";

import { ApiClient, PostRecord, PostsPayload } from "../src/api.js";
import { PAGE_SIZE, pageCount, paginate, renderRows, sortPosts } from "../src/table.js";
import { fixtureBytes, fixtureJson, gatewayMock } from "./helpers.js";

const posts = fixtureJson<PostsPayload>("posts.json").posts;

function synthetic(n: number): PostRecord[] {
  return Array.from({ length: n }, (_, i) => ({
    ...posts[i % posts.length],
    id: `row-${i}`,
  }));
}

describe("sorting", () => {
  it("sorts by compound descending", () => {
    const sorted = sortPosts(posts, { column: "compound", descending: true });
    const values = sorted.map((p) => p.compound);
    expect(values).toEqual([...values].sort((a, b) => b - a));
  });

  it("sorts by time ascending when toggled", () => {
    const sorted = sortPosts(posts, { column: "time", descending: false });
    const stamps = sorted.map((p) => p.created_at);
    expect(stamps).toEqual([...stamps].sort());
  });

  it("never mutates its input", () => {
    const before = [...posts];
    sortPosts(posts, { column: "author", descending: true });
    expect(posts).toEqual(before);
  });
});

describe("pagination", () => {
  it("pages at 50 rows", () => {
    const rows = synthetic(1000);
    expect(PAGE_SIZE).toBe(50);
    expect(pageCount(rows.length)).toBe(20);
    expect(paginate(rows, 0)).toHaveLength(50);
    expect(paginate(rows, 19)[0].id).toBe("row-950");
  });

  it("clamps out-of-range pages", () => {
    const rows = synthetic(60);
    expect(paginate(rows, 99)).toHaveLength(10);
    expect(paginate(rows, -4)[0].id).toBe("row-0");
  });
});

describe("rendering", () => {
  it("shows payload compounds at 4 decimal places, unmodified", () => {
    const html = renderRows(posts.slice(0, 5));
    for (const post of posts.slice(0, 5)) {
      expect(html).toContain(post.compound.toFixed(4));
    }
  });

  it("escapes post text", () => {
    const hostile = { ...posts[0], text: 'x <img src=x> & "y"' };
    const html = renderRows([hostile]);
    expect(html).not.toContain("<img");
    expect(html).toContain("&lt;img src=x&gt; &amp; &quot;y&quot;");
  });
});

describe("csv download", () => {
  it("passes export bytes through without re-serialization", async () => {
    const mock = gatewayMock();
    const client = new ApiClient("", "t.secret", mock.fetch);
    const bytes = await client.exportCsv("term=grid");
    expect(bytes).toEqual(fixtureBytes("export.csv"));
  });
});
