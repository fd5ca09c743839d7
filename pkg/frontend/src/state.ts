// Session state: everything the user has dialled in, mirrored to the URL
// query string so a reload (or a shared link) reproduces the exact view.

export type ViewName = "rating" | "benchmark" | "overall";
export type PresetName = "equal" | "volume" | "quality";
export type WeightVector = [number, number, number, number, number];

export interface SubjectRef {
  code: number;
  level: number;
}

export interface SessionState {
  view: ViewName;
  years: [number, number];
  region: string;
  /** drill-down codes, level 1 -> 2 -> 3; the deepest entry is queried */
  subjectPath: number[];
  weights: WeightVector;
  minPubs: number;
  /** chosen institutions for benchmarking, at most five */
  institutions: string[];
  /** open benchmark subject tabs */
  tabs: SubjectRef[];
  activeTab: number;
  preset: PresetName;
}

export const MAX_INSTITUTIONS = 5;

export const PRESET_WEIGHTS: Record<PresetName, WeightVector> = {
  volume: [100, 100, 100, 0, 0],
  quality: [0, 0, 0, 100, 100],
  equal: [50, 50, 50, 50, 50],
};

export const DEFAULT_STATE: SessionState = {
  view: "rating",
  years: [2008, 2013],
  region: "ALL",
  subjectPath: [],
  weights: [...PRESET_WEIGHTS.equal] as WeightVector,
  minPubs: 40,
  institutions: [],
  tabs: [],
  activeTab: 0,
  preset: "equal",
};

export function applyPreset(state: SessionState, preset: PresetName): SessionState {
  return { ...state, weights: [...PRESET_WEIGHTS[preset]] as WeightVector };
}

/** The subject actually queried: the deepest drill-down selection. */
export function currentSubject(state: SessionState): SubjectRef | null {
  if (state.subjectPath.length === 0) return null;
  return {
    code: state.subjectPath[state.subjectPath.length - 1],
    level: state.subjectPath.length,
  };
}

export function canSubmitRating(state: SessionState): boolean {
  return (
    currentSubject(state) !== null &&
    state.years[0] <= state.years[1] &&
    state.minPubs >= 0 &&
    state.weights.some((w) => w > 0) &&
    state.weights.every((w) => w >= 0 && w <= 100)
  );
}

export function canSubmitBenchmark(state: SessionState): boolean {
  return (
    state.institutions.length >= 1 &&
    state.institutions.length <= MAX_INSTITUTIONS &&
    state.tabs.length > 0 &&
    state.years[0] <= state.years[1]
  );
}

const clampWeight = (w: number) => (Number.isFinite(w) ? Math.min(100, Math.max(0, w)) : 0);

export function encodeState(state: SessionState): string {
  const params = new URLSearchParams();
  params.set("view", state.view);
  params.set("years", `${state.years[0]}:${state.years[1]}`);
  params.set("region", state.region);
  if (state.subjectPath.length) params.set("path", state.subjectPath.join("."));
  params.set("w", state.weights.join(","));
  params.set("min", String(state.minPubs));
  if (state.institutions.length) params.set("inst", state.institutions.join(","));
  if (state.tabs.length) {
    params.set("tabs", state.tabs.map((t) => `${t.code}:${t.level}`).join("|"));
    params.set("tab", String(state.activeTab));
  }
  params.set("preset", state.preset);
  return params.toString();
}

export function decodeState(query: string): SessionState {
  const params = new URLSearchParams(query);
  const state: SessionState = {
    ...DEFAULT_STATE,
    subjectPath: [],
    weights: [...DEFAULT_STATE.weights] as WeightVector,
    institutions: [],
    tabs: [],
  };

  const view = params.get("view");
  if (view === "rating" || view === "benchmark" || view === "overall") state.view = view;

  const years = params.get("years");
  if (years) {
    const [a, b] = years.split(":").map(Number);
    if (Number.isInteger(a) && Number.isInteger(b)) state.years = [a, b];
  }

  const region = params.get("region");
  if (region) state.region = region;

  const path = params.get("path");
  if (path) {
    const codes = path.split(".").map(Number).filter(Number.isInteger);
    state.subjectPath = codes.slice(0, 3);
  }

  const weights = params.get("w");
  if (weights) {
    const parts = weights.split(",").map(Number);
    if (parts.length === 5) state.weights = parts.map(clampWeight) as WeightVector;
  }

  const min = params.get("min");
  if (min !== null && Number.isInteger(Number(min)) && Number(min) >= 0) {
    state.minPubs = Number(min);
  }

  const inst = params.get("inst");
  if (inst) {
    state.institutions = inst.split(",").filter(Boolean).slice(0, MAX_INSTITUTIONS);
  }

  const tabs = params.get("tabs");
  if (tabs) {
    state.tabs = tabs
      .split("|")
      .map((part) => {
        const [code, level] = part.split(":").map(Number);
        return { code, level };
      })
      .filter((t) => Number.isInteger(t.code) && t.level >= 1 && t.level <= 3);
    const active = Number(params.get("tab") ?? 0);
    state.activeTab = Number.isInteger(active)
      ? Math.min(Math.max(0, active), Math.max(0, state.tabs.length - 1))
      : 0;
  }

  const preset = params.get("preset");
  if (preset === "equal" || preset === "volume" || preset === "quality") {
    state.preset = preset;
  }

  return state;
}
