// Overall view: institutions x top-15-subjects band heat-grid. Cells show
// the band straight from the API; below-threshold cells are ABSENT and
// rendered distinctly.

import type { OverallJson } from "./types.js";

const esc = (s: string) =>
  s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");

export function renderOverallGrid(data: OverallJson): string {
  const head = data.subjects
    .map((s) => `<th class="subject" title="${esc(s.name)}">${s.code}</th>`)
    .join("");
  const rows = data.institutions
    .map((inst, r) => {
      const cells = data.bands[r]
        .map((band) =>
          band === null
            ? `<td class="absent" title="below publication threshold">·</td>`
            : `<td class="band-${band}">${band}</td>`,
        )
        .join("");
      return `<tr><th class="inst">${esc(inst.name)}</th>${cells}</tr>`;
    })
    .join("");
  return (
    `<table class="overall" data-preset="${esc(data.preset)}">` +
    `<thead><tr><th></th>${head}</tr></thead><tbody>${rows}</tbody></table>`
  );
}
