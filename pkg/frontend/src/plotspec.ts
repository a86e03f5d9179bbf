/**
 * Generic figure description, for plots that are not preset shaped.
 * A spec is a JSON file:
 *
 * {
 *   "title": "...", "width": 920, "height": 340,
 *   "layout": {"rows": 1, "cols": 2},
 *   "panels": [{
 *     "title": "...",
 *     "x": {"label": "t", "scale": "linear", "min": 0, "max": 100},
 *     "y": {"label": "sigma", "scale": "log"},
 *     "legend": "tr",
 *     "curves": [{"file": "series.csv", "kind": "series", "y": "sigma",
 *                 "t": "t_over_TJ", "label": "run A", "markers": false}],
 *     "carpet": {"files": ["density_t0.0.csv", "..."], "floor": 1e-6,
 *                "t_div": 6.2832},
 *     "inset": {"pos": [0.07, 0.05, 0.44, 0.46], "x": {...}, "y": {...},
 *               "curves": [...]}
 *   }]
 * }
 *
 * An inset without "curves" replots the host panel's curves (the usual
 * zoom / change-of-scale use).  File paths are resolved relative to the
 * spec file.  Unknown keys are rejected so typos cannot silently change
 * a figure.
 */

import { readFileSync } from "fs";
import path from "path";

import { buildCarpet } from "./carpet";
import { AxisOpts, Figure, Panel } from "./chart";
import { DataError, readDensity, readScan, readSeries, readSuppression } from "./csv";

export class SpecError extends Error {
  constructor(file: string, message: string) {
    super(`${file}: ${message}`);
    this.name = "SpecError";
  }
}

function checkKeys(obj: any, allowed: string[], ctx: string, file: string): void {
  if (typeof obj !== "object" || obj === null || Array.isArray(obj)) {
    throw new SpecError(file, `${ctx} must be an object`);
  }
  for (const k of Object.keys(obj)) {
    if (!allowed.includes(k)) {
      throw new SpecError(file, `unknown key "${k}" in ${ctx}`);
    }
  }
}

function axisOpts(raw: any, ctx: string, file: string): AxisOpts {
  if (raw === undefined) return {};
  checkKeys(raw, ["label", "scale", "min", "max"], ctx, file);
  if (raw.scale !== undefined && raw.scale !== "linear" && raw.scale !== "log") {
    throw new SpecError(file, `${ctx}.scale must be "linear" or "log", got "${raw.scale}"`);
  }
  const opts: AxisOpts = { label: raw.label, scale: raw.scale };
  if (raw.min !== undefined || raw.max !== undefined) {
    if (typeof raw.min !== "number" || typeof raw.max !== "number") {
      throw new SpecError(file, `${ctx} needs both numeric "min" and "max" when either is given`);
    }
    opts.domain = [raw.min, raw.max];
  }
  return opts;
}

const CURVE_KINDS = ["series", "scan", "suppression", "density"];
const SERIES_Y = ["sigma", "sigma2", "x"];

function addCurve(panel: Panel, raw: any, baseDir: string, ctx: string, file: string): void {
  checkKeys(raw, ["file", "kind", "y", "t", "label", "markers", "dash", "color", "width"], ctx, file);
  if (typeof raw.file !== "string") throw new SpecError(file, `${ctx}.file must be a path`);
  const kind = raw.kind ?? "series";
  if (!CURVE_KINDS.includes(kind)) {
    throw new SpecError(file, `${ctx}.kind must be one of ${CURVE_KINDS.join("/")}, got "${kind}"`);
  }
  const fp = path.resolve(baseDir, raw.file);
  const opts = {
    label: raw.label,
    markers: raw.markers === true,
    dash: raw.dash,
    color: raw.color,
    width: raw.width,
  };
  if (kind === "series") {
    const yCol = raw.y ?? "sigma";
    if (!SERIES_Y.includes(yCol)) {
      throw new SpecError(file, `${ctx}.y must be one of ${SERIES_Y.join("/")}, got "${yCol}"`);
    }
    const tCol = raw.t ?? "t";
    if (tCol !== "t" && tCol !== "t_over_TJ") {
      throw new SpecError(file, `${ctx}.t must be "t" or "t_over_TJ", got "${raw.t}"`);
    }
    const s = readSeries(fp);
    const ys = yCol === "sigma" ? s.sigma : yCol === "sigma2" ? s.sigma2 : s.x;
    panel.line(tCol === "t" ? s.t : s.tOverTJ, ys, opts);
  } else if (kind === "scan") {
    const s = readScan(fp);
    panel.line(s.axis, s.sigma, opts);
  } else if (kind === "suppression") {
    const s = readSuppression(fp);
    panel.line(s.t, s.c, opts);
  } else {
    const s = readDensity(fp);
    panel.line(s.l, s.p, opts);
  }
}

const PANEL_KEYS = ["title", "x", "y", "legend", "curves", "carpet", "inset"];
const LEGEND_POS = ["tl", "tr", "bl", "br", "none"];

function fillPanel(fig: Figure, panel: Panel, raw: any, baseDir: string, ctx: string, file: string): void {
  if (raw.title !== undefined) panel.title = String(raw.title);
  if (raw.legend !== undefined) {
    if (!LEGEND_POS.includes(raw.legend)) {
      throw new SpecError(file, `${ctx}.legend must be one of ${LEGEND_POS.join("/")}`);
    }
    panel.legendPos = raw.legend;
  }
  const curves = raw.curves ?? [];
  if (!Array.isArray(curves)) throw new SpecError(file, `${ctx}.curves must be a list`);
  curves.forEach((c: any, i: number) => addCurve(panel, c, baseDir, `${ctx}.curves[${i}]`, file));

  if (raw.carpet !== undefined) {
    checkKeys(raw.carpet, ["files", "floor", "t_div"], `${ctx}.carpet`, file);
    if (!Array.isArray(raw.carpet.files) || raw.carpet.files.length === 0) {
      throw new SpecError(file, `${ctx}.carpet.files must be a non-empty list`);
    }
    const snaps = raw.carpet.files.map((f: any) => readDensity(path.resolve(baseDir, String(f))));
    panel.carpet(buildCarpet(snaps, { floor: raw.carpet.floor, tDiv: raw.carpet.t_div }));
  }

  if (raw.inset !== undefined) {
    checkKeys(raw.inset, ["pos", "x", "y", "curves"], `${ctx}.inset`, file);
    const pos = raw.inset.pos ?? [0.07, 0.05, 0.44, 0.46];
    if (!Array.isArray(pos) || pos.length !== 4 || pos.some((v: any) => typeof v !== "number")) {
      throw new SpecError(file, `${ctx}.inset.pos must be [fx, fy, fw, fh]`);
    }
    const inset = fig.inset(
      panel, pos[0], pos[1], pos[2], pos[3],
      axisOpts(raw.inset.x, `${ctx}.inset.x`, file),
      axisOpts(raw.inset.y, `${ctx}.inset.y`, file),
    );
    const icurves = raw.inset.curves;
    if (icurves === undefined) {
      inset.mirrorCurves(panel); // default: the host panel's data on the inset axes
    } else {
      if (!Array.isArray(icurves)) throw new SpecError(file, `${ctx}.inset.curves must be a list`);
      icurves.forEach((c: any, i: number) => addCurve(inset, c, baseDir, `${ctx}.inset.curves[${i}]`, file));
    }
  }
}

export function figureFromSpec(specFile: string): Figure {
  let text: string;
  try {
    text = readFileSync(specFile, "utf-8");
  } catch (err: any) {
    throw new DataError(specFile, null, err.code === "ENOENT" ? "file not found" : String(err.message));
  }
  let doc: any;
  try {
    doc = JSON.parse(text);
  } catch (err: any) {
    throw new SpecError(specFile, `invalid JSON: ${err.message}`);
  }
  checkKeys(doc, ["title", "width", "height", "layout", "panels"], "spec", specFile);
  if (!Array.isArray(doc.panels) || doc.panels.length === 0) {
    throw new SpecError(specFile, 'spec needs a non-empty "panels" list');
  }

  let rows = 1;
  let cols = doc.panels.length;
  if (doc.layout !== undefined) {
    checkKeys(doc.layout, ["rows", "cols"], "layout", specFile);
    rows = doc.layout.rows ?? 1;
    cols = doc.layout.cols ?? doc.panels.length;
    if (rows * cols < doc.panels.length) {
      throw new SpecError(specFile, `layout ${rows}x${cols} cannot hold ${doc.panels.length} panels`);
    }
  }

  const width = doc.width ?? Math.min(480 * cols, 1400);
  const height = doc.height ?? 340 * rows;
  const fig = new Figure(width, height, doc.title ?? "");
  const boxes = fig.grid(rows, cols);
  const baseDir = path.dirname(path.resolve(specFile));

  doc.panels.forEach((rawPanel: any, i: number) => {
    checkKeys(rawPanel, PANEL_KEYS, `panels[${i}]`, specFile);
    const panel = fig.panel(
      boxes[i],
      axisOpts(rawPanel.x, `panels[${i}].x`, specFile),
      axisOpts(rawPanel.y, `panels[${i}].y`, specFile),
    );
    fillPanel(fig, panel, rawPanel, baseDir, `panels[${i}]`, specFile);
  });
  return fig;
}
