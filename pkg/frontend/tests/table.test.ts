import { readFileSync } from "node:fs";

import { describe, expect, it } from "vitest";

import { renderEmptyScopeNotice, renderRatingTable, sortRows } from "../src/table.js";
import { fmt, type RatingRowJson } from "../src/types.js";

const rows: RatingRowJson[] = JSON.parse(
  readFileSync(new URL("./fixtures/rate_equal_cs.json", import.meta.url), "utf-8"),
);

describe("rating table from a recorded API response", () => {
  const html = renderRatingTable(rows);

  it("renders one row per institution in response order", () => {
    const ids = [...html.matchAll(/data-institution="([^"]+)"/g)].map((m) => m[1]);
    expect(ids).toEqual(rows.map((r) => r.institution));
  });

  it("every cell value traces to a response field", () => {
    const cellsPerRow = [...html.matchAll(/<tr[^>]*>(.*?)<\/tr>/g)]
      .slice(1) // header
      .map((m) => [...m[1].matchAll(/<td>(.*?)<\/td>/g)].map((c) => c[1]));
    expect(cellsPerRow.length).toBe(rows.length);
    rows.forEach((row, i) => {
      expect(cellsPerRow[i]).toEqual([
        row.name,
        fmt(row.pubs),
        fmt(row.cites),
        fmt(row.h),
        fmt(row.pct_top_snip),
        fmt(row.cpp),
        fmt(row.percentage),
        fmt(row.band),
      ]);
    });
  });

  it("colors each row by its band", () => {
    rows.forEach((row) => {
      expect(html).toContain(`class="band-${row.band}" data-institution="${row.institution}"`);
    });
  });

  it("the top row is the percentage-100 band-1 leader", () => {
    expect(rows[0].percentage).toBe(100);
    expect(rows[0].band).toBe(1);
  });
});

describe("client-side sorting (display only, API values untouched)", () => {
  it("sorts by any numeric column without altering values", () => {
    const byCites = sortRows(rows, { key: "cites", descending: true });
    const expected = [...rows].sort((a, b) => b.cites - a.cites).map((r) => r.institution);
    expect(byCites.map((r) => r.institution)).toEqual(expected);
    // same multiset of rows, just reordered
    expect([...byCites].sort((a, b) => a.institution.localeCompare(b.institution))).toEqual(
      [...rows].sort((a, b) => a.institution.localeCompare(b.institution)),
    );
  });

  it("sorts names lexically ascending", () => {
    const byName = sortRows(rows, { key: "name", descending: false });
    const names = byName.map((r) => r.name);
    expect(names).toEqual([...names].sort((a, b) => a.localeCompare(b)));
  });

  it("marks the sorted column in the header", () => {
    const html = renderRatingTable(rows, { key: "cpp", descending: true });
    expect(html).toMatch(/<th data-key="cpp">CPP ▾<\/th>/);
  });
});

describe("empty scope", () => {
  it("shows the no-institutions notice for a 422", () => {
    const notice = renderEmptyScopeNotice();
    expect(notice).toContain("No institutions pass");
    expect(notice).toContain("empty-scope");
  });
});
