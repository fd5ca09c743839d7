import { readFileSync } from "node:fs";

import { describe, expect, it } from "vitest";

import { radarPoint, renderRadar, renderRadarLegend } from "../src/radar.js";
import { fmt, type BenchmarkProfileJson } from "../src/types.js";

const profile: BenchmarkProfileJson = JSON.parse(
  readFileSync(new URL("./fixtures/benchmark_ee.json", import.meta.url), "utf-8"),
);

const count = (haystack: string, needle: RegExp) => (haystack.match(needle) ?? []).length;

describe("radar rendering from a recorded API profile", () => {
  const svg = renderRadar(profile);

  it("draws exactly five axes", () => {
    expect(count(svg, /class="axis[" ]/g)).toBe(5);
    expect(count(svg, /class="axis-label[" ]/g)).toBe(5);
  });

  it("draws one polygon per chosen institution (at most five)", () => {
    expect(profile.entries.length).toBeLessThanOrEqual(5);
    expect(count(svg, /class="polygon"/g)).toBe(profile.entries.length);
  });

  it("labels every vertex with the actual value from the response", () => {
    for (const entry of profile.entries) {
      for (const actual of entry.actual) {
        expect(svg).toContain(`: ${fmt(actual)}<`);
      }
      expect(svg).toContain(entry.name);
    }
  });

  it("puts the axis leader on the 100 ring", () => {
    // the engine guarantees a 100 on every non-degenerate axis; the leader's
    // vertex must therefore sit exactly at the axis endpoint
    profile.indicators.forEach((_, axis) => {
      if (profile.degenerate[axis]) return;
      const leader = profile.entries.find((e) => e.pct[axis] === 100)!;
      expect(leader).toBeDefined();
      const vertex = radarPoint(axis, leader.pct[axis], 210, 210, 420 * 0.36);
      const endpoint = radarPoint(axis, 100, 210, 210, 420 * 0.36);
      expect(vertex).toEqual(endpoint);
    });
  });

  it("legend lists the actual values verbatim", () => {
    const legend = renderRadarLegend(profile);
    for (const entry of profile.entries) {
      expect(legend).toContain(entry.name);
      for (const actual of entry.actual) {
        expect(legend).toContain(fmt(actual));
      }
    }
  });
});

describe("degenerate axes", () => {
  const dead: BenchmarkProfileJson = {
    ...profile,
    entries: profile.entries.map((e) => ({
      ...e,
      actual: [e.actual[0], 0, 0, 0, 0],
      pct: [e.pct[0], 0, 0, 0, 0],
    })),
    degenerate: [false, true, true, true, true],
  };

  it("are flagged visibly in the markup", () => {
    const svg = renderRadar(dead);
    expect(count(svg, /class="axis degenerate"/g)).toBe(4);
    expect(count(svg, /\(all zero\)/g)).toBe(4);
  });

  it("collapse their vertices to the center", () => {
    const center = radarPoint(1, 0, 210, 210, 151.2);
    expect(center.x).toBeCloseTo(210);
    expect(center.y).toBeCloseTo(210);
  });
});

describe("radar geometry", () => {
  it("starts at 12 o'clock and walks clockwise in 72-degree steps", () => {
    const top = radarPoint(0, 100, 0, 0, 100);
    expect(top.x).toBeCloseTo(0);
    expect(top.y).toBeCloseTo(-100);
    const second = radarPoint(1, 100, 0, 0, 100);
    expect(second.x).toBeGreaterThan(0);
  });

  it("scales linearly with the percentage", () => {
    const half = radarPoint(2, 50, 0, 0, 100);
    const full = radarPoint(2, 100, 0, 0, 100);
    expect(half.x).toBeCloseTo(full.x / 2);
    expect(half.y).toBeCloseTo(full.y / 2);
  });
});
