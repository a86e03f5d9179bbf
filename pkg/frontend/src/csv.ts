/**
 * Readers for the simulation CLI's file formats.
 *
 * Every reader validates the header against the expected schema and
 * reports problems as DataError with file and line number, naming the
 * offending column.  Files are only ever opened for reading.
 */

import { readFileSync } from "fs";
import path from "path";

export class DataError extends Error {
  file: string;
  line: number | null;

  constructor(file: string, line: number | null, message: string) {
    super(line === null ? `${file}: ${message}` : `${file}:${line}: ${message}`);
    this.name = "DataError";
    this.file = file;
    this.line = line;
  }
}

export interface SeriesData {
  file: string;
  t: number[];
  tOverTJ: number[];
  x: number[];
  sigma: number[];
  sigma2: number[];
  stderrSigma2: number[];
}

export interface DensityData {
  file: string;
  /** snapshot time parsed from the density_t<...>.csv filename, NaN otherwise */
  t: number;
  l: number[];
  p: number[];
}

export interface ScanData {
  file: string;
  /** first header column: "omega" or "F_omega_over_F" */
  axisName: string;
  axis: number[];
  t: number[];
  sigma: number[];
}

export interface SuppressionData {
  file: string;
  t: number[];
  c: number[];
}

// ---------------------------------------------------------------------------
// low-level parsing

function readLines(file: string): string[] {
  let text: string;
  try {
    text = readFileSync(file, "utf-8");
  } catch (err: any) {
    throw new DataError(file, null, err.code === "ENOENT" ? "file not found" : String(err.message));
  }
  if (text.length === 0) throw new DataError(file, 1, "empty file");
  const lines = text.split("\n");
  if (lines[lines.length - 1] === "") lines.pop();
  return lines;
}

function checkHeader(file: string, got: string, expected: string[]): void {
  const cols = got.split(",");
  for (const name of expected) {
    if (!cols.includes(name)) {
      throw new DataError(file, 1, `missing column "${name}" (header was "${got}")`);
    }
  }
  for (const name of cols) {
    if (!expected.includes(name)) {
      throw new DataError(file, 1, `unexpected column "${name}"`);
    }
  }
  for (let i = 0; i < expected.length; i++) {
    if (cols[i] !== expected[i]) {
      throw new DataError(file, 1, `column ${i + 1} must be "${expected[i]}", got "${cols[i]}"`);
    }
  }
}

/** Parse a numeric table with an exact header; returns one array per column. */
function readTable(file: string, columns: string[]): number[][] {
  const lines = readLines(file);
  checkHeader(file, lines[0], columns);
  const out: number[][] = columns.map(() => []);
  for (let i = 1; i < lines.length; i++) {
    const cells = lines[i].split(",");
    if (cells.length !== columns.length) {
      throw new DataError(file, i + 1, `expected ${columns.length} fields, got ${cells.length}`);
    }
    for (let j = 0; j < columns.length; j++) {
      const v = Number(cells[j]);
      if (cells[j].trim() === "" || Number.isNaN(v)) {
        throw new DataError(file, i + 1, `column "${columns[j]}": cannot parse "${cells[j]}" as a number`);
      }
      out[j].push(v);
    }
  }
  if (out[0].length === 0) throw new DataError(file, 2, "no data rows");
  return out;
}

// ---------------------------------------------------------------------------
// schema readers

const SERIES_COLUMNS = ["t", "t_over_TJ", "x", "sigma", "sigma2", "stderr_sigma2"];

export function readSeries(file: string): SeriesData {
  const [t, tOverTJ, x, sigma, sigma2, stderrSigma2] = readTable(file, SERIES_COLUMNS);
  return { file, t, tOverTJ, x, sigma, sigma2, stderrSigma2 };
}

export function readDensity(file: string): DensityData {
  const [l, p] = readTable(file, ["l", "P"]);
  for (let i = 1; i < l.length; i++) {
    if (l[i] !== l[i - 1] + 1) {
      throw new DataError(file, i + 2, `column "l": sites must be consecutive (${l[i - 1]} then ${l[i]})`);
    }
  }
  const m = path.basename(file).match(/^density_t(.+)\.csv$/);
  const t = m ? Number(m[1]) : NaN;
  return { file, t, l, p };
}

const SCAN_AXES = ["omega", "F_omega_over_F"];

export function readScan(file: string): ScanData {
  const lines = readLines(file);
  const axisName = lines[0].split(",")[0];
  if (!SCAN_AXES.includes(axisName)) {
    throw new DataError(file, 1, `missing column "omega" or "F_omega_over_F" (header was "${lines[0]}")`);
  }
  const [axis, t, sigma] = readTable(file, [axisName, "t", "sigma"]);
  return { file, axisName, axis, t, sigma };
}

export function readSuppression(file: string): SuppressionData {
  const [t, c] = readTable(file, ["t", "C"]);
  return { file, t, c };
}

// ---------------------------------------------------------------------------
// JSON sidecars

function readJson(file: string): any {
  const lines = readLines(file);
  try {
    return JSON.parse(lines.join("\n"));
  } catch (err: any) {
    throw new DataError(file, null, `invalid JSON: ${err.message}`);
  }
}

export interface PresetManifest {
  file: string;
  preset: string;
  members: string[];
}

export function readPresetManifest(dir: string): PresetManifest {
  const file = path.join(dir, "preset.json");
  const doc = readJson(file);
  if (doc.schema !== "tiltlat-preset-v1") {
    throw new DataError(file, null, `expected schema "tiltlat-preset-v1", got "${doc.schema}"`);
  }
  if (!Array.isArray(doc.members) || doc.members.some((m: any) => typeof m !== "string")) {
    throw new DataError(file, null, 'field "members" must be a list of member names');
  }
  return { file, preset: String(doc.preset), members: doc.members };
}

export interface RunSidecar {
  file: string;
  schema: string;
  params: { J: number; dF: number; dFomega: number; omega: number; g: number };
  /** series/density filenames for run sidecars, scan filename for scans */
  outputs: Record<string, any>;
  config: Record<string, any>;
}

export function readRunSidecar(file: string): RunSidecar {
  const doc = readJson(file);
  if (doc.schema !== "tiltlat-run-v1" && doc.schema !== "tiltlat-scan-v1") {
    throw new DataError(file, null, `expected a tiltlat run/scan sidecar, got schema "${doc.schema}"`);
  }
  const params = doc.config && doc.config.params;
  for (const key of ["J", "dF", "dFomega", "omega", "g"]) {
    if (typeof (params || {})[key] !== "number") {
      throw new DataError(file, null, `missing numeric field "config.params.${key}"`);
    }
  }
  return { file, schema: doc.schema, params, outputs: doc.outputs ?? {}, config: doc.config };
}
