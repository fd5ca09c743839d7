// Single-page client: wires the controls to the analytics API and renders
// the three views. All numbers shown come from API responses; this file
// only moves state around, debounces queries and swaps innerHTML.

import { ApiClient, ApiError, debounce, latestWins } from "./api.js";
import { renderOverallGrid } from "./overall.js";
import { renderRadar, renderRadarLegend } from "./radar.js";
import { COLUMNS, renderEmptyScopeNotice, renderRatingTable, SortOrder } from "./table.js";
import {
  applyPreset,
  canSubmitBenchmark,
  canSubmitRating,
  currentSubject,
  decodeState,
  encodeState,
  MAX_INSTITUTIONS,
  PresetName,
  SessionState,
  SubjectRef,
  WeightVector,
} from "./state.js";
import type { InstitutionJson, RatingRowJson, TaxonomyNodeJson } from "./types.js";

const WEIGHT_NAMES = ["Publications", "Citations", "h-index", "% top-SNIP", "CPP"];

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function apiBase(): string {
  const override = new URLSearchParams(location.search).get("api");
  if (override) return override;
  if (location.protocol === "file:") return "http://127.0.0.1:8080";
  return "";
}

class App {
  private client = new ApiClient(apiBase());
  private state: SessionState = decodeState(location.search);
  private taxonomy: TaxonomyNodeJson[] = [];
  private institutions: InstitutionJson[] = [];
  private years: number[] = [];
  private sort: SortOrder | null = null;
  private lastRows: RatingRowJson[] = [];
  private newestRating = latestWins<RatingRowJson[]>();
  private newestOverall = latestWins<string>();
  private newestBenchmark = latestWins<string[]>();
  private refreshSoon = debounce(() => void this.refresh(), 200);

  async boot(): Promise<void> {
    const health = await this.client
      .taxonomy()
      .then((tree) => ((this.taxonomy = tree), this.client.institutions()))
      .then((inst) => ((this.institutions = inst), fetch(apiBase() + "/api/health")))
      .then((res) => res.json());
    const counts = health.counts as { year_min: number; year_max: number };
    for (let y = counts.year_min; y <= counts.year_max; y++) this.years.push(y);

    this.buildControls();
    this.syncControls();
    this.wireEvents();
    void this.refresh();
  }

  // ---- state plumbing ----------------------------------------------------

  private setState(patch: Partial<SessionState>, immediate = false): void {
    this.state = { ...this.state, ...patch };
    history.replaceState(null, "", `?${encodeState(this.state)}`);
    this.syncControls();
    if (immediate) void this.refresh();
    else this.refreshSoon();
  }

  // ---- control construction ----------------------------------------------

  private buildControls(): void {
    const fill = (select: HTMLSelectElement, values: (string | number)[], labels?: string[]) => {
      select.innerHTML = values
        .map((v, i) => `<option value="${v}">${labels ? labels[i] : v}</option>`)
        .join("");
    };
    fill(el<HTMLSelectElement>("year-from"), this.years);
    fill(el<HTMLSelectElement>("year-to"), this.years);

    const regions = ["ALL", ...new Set(this.institutions.map((i) => i.region))].sort();
    fill(el<HTMLSelectElement>("region"), regions);

    el<HTMLDivElement>("institution-list").innerHTML = this.institutions
      .map(
        (inst) =>
          `<label><input type="checkbox" class="inst-pick" value="${inst.institution}">` +
          `${inst.name}</label>`,
      )
      .join("");

    el<HTMLDivElement>("sliders").innerHTML = this.state.weights
      .map(
        (w, i) =>
          `<label class="slider-row">${WEIGHT_NAMES[i]}` +
          `<input type="range" class="weight" data-axis="${i}" min="0" max="100" value="${w}">` +
          `<output id="wout-${i}">${w}</output></label>`,
      )
      .join("");
  }

  private subjectOptions(level: number): TaxonomyNodeJson[] {
    if (level === 1) return this.taxonomy;
    const parentCode = this.state.subjectPath[level - 2];
    if (parentCode === undefined) return [];
    const find = (nodes: TaxonomyNodeJson[]): TaxonomyNodeJson | undefined => {
      for (const node of nodes) {
        if (node.code === parentCode) return node;
        const hit = node.children && find(node.children);
        if (hit) return hit;
      }
      return undefined;
    };
    return find(this.taxonomy)?.children ?? [];
  }

  private syncControls(): void {
    const s = this.state;
    el<HTMLSelectElement>("year-from").value = String(s.years[0]);
    el<HTMLSelectElement>("year-to").value = String(s.years[1]);
    el<HTMLSelectElement>("region").value = s.region;
    el<HTMLInputElement>("min-pubs").value = String(s.minPubs);

    for (let level = 1; level <= 3; level++) {
      const select = el<HTMLSelectElement>(`subject-l${level}`);
      const options = this.subjectOptions(level);
      select.innerHTML =
        `<option value="">${level === 1 ? "choose discipline" : "(stay at level " + (level - 1) + ")"}</option>` +
        options.map((n) => `<option value="${n.code}">${n.name}</option>`).join("");
      select.disabled = options.length === 0;
      select.value = String(s.subjectPath[level - 1] ?? "");
    }

    s.weights.forEach((w, i) => {
      const slider = document.querySelector<HTMLInputElement>(`.weight[data-axis="${i}"]`);
      if (slider) slider.value = String(w);
      el<HTMLOutputElement>(`wout-${i}`).textContent = String(w);
    });

    document.querySelectorAll<HTMLInputElement>(".inst-pick").forEach((box) => {
      box.checked = s.institutions.includes(box.value);
      box.disabled = !box.checked && s.institutions.length >= MAX_INSTITUTIONS;
    });

    document.querySelectorAll<HTMLButtonElement>(".view-switch").forEach((btn) => {
      btn.classList.toggle("active", btn.dataset.view === s.view);
    });
    document.querySelectorAll<HTMLElement>(".view").forEach((section) => {
      section.hidden = section.dataset.view !== s.view;
    });
    document.querySelectorAll<HTMLButtonElement>(".overall-preset").forEach((btn) => {
      btn.classList.toggle("active", btn.dataset.preset === s.preset);
    });

    el<HTMLDivElement>("tab-strip").innerHTML = s.tabs
      .map((tab, i) => {
        const name = this.subjectName(tab);
        return (
          `<span class="tab${i === s.activeTab ? " active" : ""}" data-tab="${i}">` +
          `${name}<button class="close-tab" data-tab="${i}">×</button></span>`
        );
      })
      .join("");
  }

  private subjectName(ref: SubjectRef): string {
    const walk = (nodes: TaxonomyNodeJson[]): string | undefined => {
      for (const node of nodes) {
        if (node.code === ref.code) return node.name;
        const hit = node.children && walk(node.children);
        if (hit) return hit;
      }
      return undefined;
    };
    return walk(this.taxonomy) ?? `subject ${ref.code}`;
  }

  // ---- events ---------------------------------------------------------------

  private wireEvents(): void {
    el("year-from").addEventListener("change", (e) =>
      this.setState({ years: [Number((e.target as HTMLSelectElement).value), this.state.years[1]] }),
    );
    el("year-to").addEventListener("change", (e) =>
      this.setState({ years: [this.state.years[0], Number((e.target as HTMLSelectElement).value)] }),
    );
    el("region").addEventListener("change", (e) =>
      this.setState({ region: (e.target as HTMLSelectElement).value }),
    );
    el("min-pubs").addEventListener("change", (e) =>
      this.setState({ minPubs: Number((e.target as HTMLInputElement).value) }),
    );

    for (let level = 1; level <= 3; level++) {
      el(`subject-l${level}`).addEventListener("change", (e) => {
        const value = (e.target as HTMLSelectElement).value;
        const path = this.state.subjectPath.slice(0, level - 1);
        if (value) path.push(Number(value));
        this.setState({ subjectPath: path });
      });
    }

    el("sliders").addEventListener("input", (e) => {
      const slider = e.target as HTMLInputElement;
      if (!slider.classList.contains("weight")) return;
      const weights = [...this.state.weights] as WeightVector;
      weights[Number(slider.dataset.axis)] = Number(slider.value);
      this.setState({ weights });
    });

    document.querySelectorAll<HTMLButtonElement>(".preset").forEach((btn) =>
      btn.addEventListener("click", () =>
        this.setState({ ...applyPreset(this.state, btn.dataset.preset as PresetName) }, true),
      ),
    );

    el("institution-list").addEventListener("change", () => {
      const picked = [...document.querySelectorAll<HTMLInputElement>(".inst-pick:checked")]
        .map((box) => box.value)
        .slice(0, MAX_INSTITUTIONS);
      this.setState({ institutions: picked });
    });

    document.querySelectorAll<HTMLButtonElement>(".view-switch").forEach((btn) =>
      btn.addEventListener("click", () =>
        this.setState({ view: btn.dataset.view as SessionState["view"] }, true),
      ),
    );

    el("open-tab").addEventListener("click", () => {
      const subject = currentSubject(this.state);
      if (!subject) return;
      const tabs = [...this.state.tabs];
      const existing = tabs.findIndex((t) => t.code === subject.code && t.level === subject.level);
      if (existing >= 0) {
        this.setState({ activeTab: existing }, true);
        return;
      }
      tabs.push(subject);
      this.setState({ tabs, activeTab: tabs.length - 1 }, true);
    });

    el("tab-strip").addEventListener("click", (e) => {
      const target = e.target as HTMLElement;
      const index = Number(target.dataset.tab);
      if (!Number.isInteger(index)) return;
      if (target.classList.contains("close-tab")) {
        const tabs = this.state.tabs.filter((_, i) => i !== index);
        this.setState({ tabs, activeTab: Math.max(0, Math.min(this.state.activeTab, tabs.length - 1)) }, true);
      } else {
        this.setState({ activeTab: index }, true);
      }
    });

    document.querySelectorAll<HTMLButtonElement>(".overall-preset").forEach((btn) =>
      btn.addEventListener("click", () =>
        this.setState({ preset: btn.dataset.preset as PresetName }, true),
      ),
    );

    el("rating-output").addEventListener("click", (e) => {
      const th = (e.target as HTMLElement).closest("th[data-key]");
      if (!th) return;
      const key = th.getAttribute("data-key") as SortOrder["key"];
      const descending = this.sort?.key === key ? !this.sort.descending : key !== "name";
      this.sort = { key, descending };
      if (!COLUMNS.some((c) => c.key === key)) return;
      el("rating-output").querySelector("table")?.replaceWith(
        new DOMParser()
          .parseFromString(renderRatingTable(this.lastRows, this.sort), "text/html")
          .body.firstElementChild!,
      );
    });
  }

  // ---- data refresh -----------------------------------------------------------

  private async refresh(): Promise<void> {
    if (this.state.view === "rating") await this.refreshRating();
    else if (this.state.view === "benchmark") await this.refreshBenchmark();
    else await this.refreshOverall();
  }

  private async refreshRating(): Promise<void> {
    const output = el("rating-output");
    const subject = currentSubject(this.state);
    if (!canSubmitRating(this.state) || !subject) {
      output.innerHTML = `<p class="notice">Pick a subject to rate (weights need at least one positive value).</p>`;
      return;
    }
    try {
      const rows = await this.newestRating(
        this.client.rate({
          subject: subject.code,
          level: subject.level,
          years: this.state.years,
          region: this.state.region,
          weights: this.state.weights,
          min_pubs: this.state.minPubs,
        }),
      );
      if (rows === null) return; // a newer request superseded this one
      this.lastRows = rows;
      output.innerHTML = renderRatingTable(rows, this.sort ?? undefined);
    } catch (err) {
      if (err instanceof ApiError && err.status === 422) {
        output.innerHTML = renderEmptyScopeNotice();
      } else {
        output.innerHTML = `<p class="notice error">${(err as Error).message}</p>`;
      }
    }
  }

  private async refreshBenchmark(): Promise<void> {
    const output = el("benchmark-output");
    if (!canSubmitBenchmark(this.state)) {
      output.innerHTML = `<p class="notice">Pick one to five institutions and open a subject tab.</p>`;
      return;
    }
    const tab = this.state.tabs[this.state.activeTab];
    try {
      const parts = await this.newestBenchmark(
        this.client
          .benchmark({
            institutions: this.state.institutions,
            subject: tab.code,
            level: tab.level,
            years: this.state.years,
          })
          .then((profile) => [renderRadar(profile), renderRadarLegend(profile)]),
      );
      if (parts === null) return;
      output.innerHTML = `<h3>${this.subjectName(tab)}</h3>` + parts.join("");
    } catch (err) {
      output.innerHTML = `<p class="notice error">${(err as Error).message}</p>`;
    }
  }

  private async refreshOverall(): Promise<void> {
    const output = el("overall-output");
    try {
      const html = await this.newestOverall(
        this.client
          .overall(this.state.preset, this.state.region, this.state.minPubs)
          .then(renderOverallGrid),
      );
      if (html === null) return;
      output.innerHTML = html;
    } catch (err) {
      output.innerHTML = `<p class="notice error">${(err as Error).message}</p>`;
    }
  }
}

new App().boot().catch((err) => {
  document.body.insertAdjacentHTML(
    "afterbegin",
    `<p class="notice error">Cannot reach the API: ${(err as Error).message}</p>`,
  );
});
