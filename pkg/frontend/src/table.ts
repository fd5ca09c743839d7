// Rating table rendering: band-colored rows, client-side column sorting.
// Cells display API fields verbatim (two-decimal formatting only).

import type { RatingRowJson } from "./types.js";
import { fmt } from "./types.js";

export type SortKey =
  | "name"
  | "pubs"
  | "cites"
  | "h"
  | "pct_top_snip"
  | "cpp"
  | "percentage"
  | "band";

export interface SortOrder {
  key: SortKey;
  descending: boolean;
}

export const COLUMNS: { key: SortKey; label: string }[] = [
  { key: "name", label: "University" },
  { key: "pubs", label: "Publication" },
  { key: "cites", label: "Citation" },
  { key: "h", label: "H-index" },
  { key: "pct_top_snip", label: "% Pubs in top 25% SNIP" },
  { key: "cpp", label: "CPP" },
  { key: "percentage", label: "Score %" },
  { key: "band", label: "Band" },
];

export function sortRows(rows: RatingRowJson[], order: SortOrder): RatingRowJson[] {
  const sorted = [...rows];
  sorted.sort((a, b) => {
    const va = a[order.key];
    const vb = b[order.key];
    const cmp =
      typeof va === "number" && typeof vb === "number"
        ? va - vb
        : String(va).localeCompare(String(vb));
    return order.descending ? -cmp : cmp;
  });
  return sorted;
}

const esc = (s: string) =>
  s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");

export function renderRatingTable(rows: RatingRowJson[], order?: SortOrder): string {
  const view = order ? sortRows(rows, order) : rows;
  const head = COLUMNS.map((col) => {
    const marker =
      order && order.key === col.key ? (order.descending ? " ▾" : " ▴") : "";
    return `<th data-key="${col.key}">${esc(col.label)}${marker}</th>`;
  }).join("");
  const body = view
    .map(
      (row) =>
        `<tr class="band-${row.band}" data-institution="${esc(row.institution)}">` +
        `<td>${esc(row.name)}</td>` +
        `<td>${fmt(row.pubs)}</td>` +
        `<td>${fmt(row.cites)}</td>` +
        `<td>${fmt(row.h)}</td>` +
        `<td>${fmt(row.pct_top_snip)}</td>` +
        `<td>${fmt(row.cpp)}</td>` +
        `<td>${fmt(row.percentage)}</td>` +
        `<td>${fmt(row.band)}</td></tr>`,
    )
    .join("");
  return (
    `<table class="rating"><thead><tr>${head}</tr></thead>` +
    `<tbody>${body}</tbody></table>`
  );
}

export function renderEmptyScopeNotice(): string {
  return `<p class="notice empty-scope">No institutions pass the publication threshold in this scope.</p>`;
}
