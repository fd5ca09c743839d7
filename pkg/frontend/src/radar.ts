// Radar (spider-web) chart as an SVG string, straight from a benchmark
// profile: five fixed axes in indicator order, one polygon per institution,
// vertices carrying the actual values as hover labels. Pure string
// building so it is testable without a DOM.

import type { BenchmarkProfileJson } from "./types.js";
import { fmt } from "./types.js";

export const AXIS_TITLES: Record<string, string> = {
  pubs: "Publications",
  cites: "Citations",
  h: "h-index",
  pct_top_snip: "% top-25% SNIP",
  cpp: "CPP",
};

export const POLYGON_COLORS = ["#2563eb", "#dc2626", "#059669", "#d97706", "#7c3aed"];

export interface RadarPoint {
  x: number;
  y: number;
}

/** Vertex for a percentage value on axis `index` (0..4), 12 o'clock first. */
export function radarPoint(
  index: number,
  pct: number,
  cx: number,
  cy: number,
  radius: number,
): RadarPoint {
  const angle = -Math.PI / 2 + (index * 2 * Math.PI) / 5;
  const r = (pct / 100) * radius;
  return { x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) };
}

const esc = (s: string) =>
  s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;").replace(/"/g, "&quot;");

export function renderRadar(profile: BenchmarkProfileJson, size = 420): string {
  const cx = size / 2;
  const cy = size / 2;
  const radius = size * 0.36;
  const parts: string[] = [];
  parts.push(
    `<svg class="radar" viewBox="0 0 ${size} ${size}" role="img" ` +
      `aria-label="benchmark radar chart">`,
  );

  // grid rings at 25/50/75/100%
  for (const ringPct of [25, 50, 75, 100]) {
    const ring = [0, 1, 2, 3, 4]
      .map((i) => radarPoint(i, ringPct, cx, cy, radius))
      .map((p) => `${p.x.toFixed(1)},${p.y.toFixed(1)}`)
      .join(" ");
    parts.push(`<polygon class="grid" points="${ring}"/>`);
  }

  // axes with labels; degenerate (all-zero) axes are flagged visibly
  profile.indicators.forEach((indicator, i) => {
    const end = radarPoint(i, 100, cx, cy, radius);
    const labelPos = radarPoint(i, 118, cx, cy, radius);
    const dead = profile.degenerate[i];
    const title = AXIS_TITLES[indicator] ?? indicator;
    parts.push(
      `<line class="axis${dead ? " degenerate" : ""}" x1="${cx}" y1="${cy}" ` +
        `x2="${end.x.toFixed(1)}" y2="${end.y.toFixed(1)}"/>`,
    );
    parts.push(
      `<text class="axis-label${dead ? " degenerate" : ""}" ` +
        `x="${labelPos.x.toFixed(1)}" y="${labelPos.y.toFixed(1)}" text-anchor="middle">` +
        `${esc(title)}${dead ? " (all zero)" : ""}</text>`,
    );
  });

  // one polygon per chosen institution, vertices label the actual values
  profile.entries.forEach((entry, k) => {
    const color = POLYGON_COLORS[k % POLYGON_COLORS.length];
    const points = entry.pct
      .map((pct, i) => radarPoint(i, pct, cx, cy, radius))
      .map((p) => `${p.x.toFixed(1)},${p.y.toFixed(1)}`)
      .join(" ");
    parts.push(
      `<polygon class="polygon" data-institution="${esc(entry.institution)}" ` +
        `points="${points}" fill="${color}" stroke="${color}"/>`,
    );
    entry.pct.forEach((pct, i) => {
      const p = radarPoint(i, pct, cx, cy, radius);
      const indicator = profile.indicators[i];
      parts.push(
        `<circle class="vertex" cx="${p.x.toFixed(1)}" cy="${p.y.toFixed(1)}" r="3.5" ` +
          `fill="${color}">` +
          `<title>${esc(entry.name)} — ${esc(AXIS_TITLES[indicator] ?? indicator)}: ` +
          `${fmt(entry.actual[i])}</title></circle>`,
      );
    });
  });

  parts.push("</svg>");
  return parts.join("");
}

/** Legend rows: institution name plus its actual values on every axis. */
export function renderRadarLegend(profile: BenchmarkProfileJson): string {
  const rows = profile.entries.map((entry, k) => {
    const color = POLYGON_COLORS[k % POLYGON_COLORS.length];
    const values = profile.indicators
      .map((ind, i) => `${AXIS_TITLES[ind] ?? ind} ${fmt(entry.actual[i])}`)
      .join(" · ");
    return (
      `<div class="legend-row"><span class="swatch" style="background:${color}"></span>` +
      `<strong>${esc(entry.name)}</strong> <span class="legend-values">${values}</span></div>`
    );
  });
  return `<div class="radar-legend">${rows.join("")}</div>`;
}
