// Wire formats of the rating/benchmarking API. The UI renders these
// verbatim: every number on screen comes from one of these fields.

export interface RatingRowJson {
  institution: string;
  name: string;
  pubs: number;
  cites: number;
  h: number;
  pct_top_snip: number;
  cpp: number;
  percentage: number;
  band: number;
}

export interface BenchmarkEntryJson {
  institution: string;
  name: string;
  actual: number[];
  pct: number[];
}

export interface BenchmarkProfileJson {
  subject: number;
  level: number;
  window: [number, number];
  indicators: string[];
  entries: BenchmarkEntryJson[];
  degenerate: boolean[];
}

export interface TaxonomyNodeJson {
  code: number;
  name: string;
  level: number;
  children?: TaxonomyNodeJson[];
}

export interface InstitutionJson {
  institution: string;
  name: string;
  region: string;
}

export interface OverallJson {
  region: string;
  preset: string;
  min_pubs: number;
  window: [number, number];
  subjects: { code: number; name: string }[];
  institutions: { institution: string; name: string }[];
  bands: (number | null)[][];
}

export interface RateRequestJson {
  subject: number;
  level: number;
  years: [number, number];
  region: string;
  weights: string | number[];
  min_pubs: number;
}

export interface BenchmarkRequestJson {
  institutions: string[];
  subject: number;
  level: number;
  years: [number, number];
}

/** Display formatting only: integers stay bare, decimals get two places. */
export function fmt(value: number): string {
  return Number.isInteger(value) ? String(value) : value.toFixed(2);
}
