/**
 * One figure builder per simulation preset.  Builders read the preset
 * output tree (preset.json manifest + per-member series/density/scan
 * files) and are data driven: axis ranges, snapshot lists and member
 * sets all come from the files, so reduced-size sample runs render the
 * same way as full ones.
 */

import path from "path";

import { buildCarpet } from "./carpet";
import { AxisOpts, Figure, Panel } from "./chart";
import {
  DataError,
  DensityData,
  readDensity,
  readPresetManifest,
  readRunSidecar,
  readScan,
  readSeries,
  readSuppression,
  RunSidecar,
  ScanData,
  SeriesData,
} from "./csv";
import { fmtNum } from "./scale";

interface Member {
  name: string;
  dir: string;
  sidecar: RunSidecar;
}

function members(dir: string): Member[] {
  const manifest = readPresetManifest(dir);
  return manifest.members.map((name) => {
    const mdir = path.join(dir, name);
    return { name, dir: mdir, sidecar: readRunSidecar(path.join(mdir, "run.json")) };
  });
}

function seriesOf(m: Member): SeriesData {
  return readSeries(path.join(m.dir, String(m.sidecar.outputs.series ?? "series.csv")));
}

function scanOf(m: Member): ScanData {
  return readScan(path.join(m.dir, String(m.sidecar.outputs.scan ?? "scan.csv")));
}

function densitiesOf(m: Member): DensityData[] {
  const names: string[] = m.sidecar.outputs.densities ?? [];
  const snaps = names.map((n) => readDensity(path.join(m.dir, n)));
  return snaps.sort((a, b) => a.t - b.t);
}

function tJ(m: Member): number {
  return (2 * Math.PI) / m.sidecar.params.J;
}

function gLabel(m: Member): string {
  return `g = ${fmtNum(m.sidecar.params.g)}`;
}

/** site range where any snapshot is meaningfully occupied */
function occupiedRange(snaps: DensityData[], threshold: number): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const s of snaps) {
    for (let i = 0; i < s.p.length; i++) {
      if (s.p[i] > threshold) {
        if (s.l[i] < lo) lo = s.l[i];
        if (s.l[i] > hi) hi = s.l[i];
      }
    }
  }
  if (!(lo <= hi)) return [-10, 10];
  const pad = Math.max(2, Math.round(0.08 * (hi - lo)));
  return [lo - pad, hi + pad];
}

const X_TJ: AxisOpts = { label: "t / T_J" };
const Y_SIGMA: AxisOpts = { label: "sigma (sites)" };

// ---------------------------------------------------------------------------

function figFig3(dir: string): Figure {
  const ms = members(dir);
  const inc = ms.find((m) => m.name === "incoherent") ?? ms[ms.length - 1];
  const fig = new Figure(960, 350, "tilted lattice: density carpet and width growth");
  const [b1, b2] = fig.grid(1, 2);

  const snaps = densitiesOf(inc);
  const carpet = buildCarpet(snaps, { tDiv: tJ(inc) });
  fig
    .panel(b1, X_TJ, { label: "site l" })
    .carpet(carpet).title = `mean density (incoherent, ${gLabel(inc)})`;

  const p2 = fig.panel(b2, X_TJ, Y_SIGMA);
  for (const m of ms) {
    const s = seriesOf(m);
    p2.line(s.tOverTJ, s.sigma, { label: m.name });
  }
  p2.title = "packet width";
  p2.legendPos = "br";
  return fig;
}

function figFig4(dir: string): Figure {
  const ms = members(dir);
  const fig = new Figure(920, 340, "density profiles, tilted lattice");
  const [b1, b2] = fig.grid(1, 2);

  const finals = ms.map((m) => {
    const snaps = densitiesOf(m);
    return { m, snap: snaps[snaps.length - 1], snaps };
  });
  const xRange = occupiedRange(finals.map((f) => f.snap), 1e-10);

  const p1 = fig.panel(b1, { label: "site l", domain: xRange }, { label: "P_l" });
  for (const f of finals) {
    p1.line(f.snap.l, f.snap.p, { label: `${gLabel(f.m)}, t = ${fmtNum(f.snap.t / tJ(f.m))} T_J` });
  }
  p1.title = "final profile (linear)";

  const p2 = fig.panel(
    b2,
    { label: "site l", domain: xRange },
    { label: "P_l", scale: "log", domain: [1e-12, 1.5] },
  );
  const rich = finals[finals.length - 1];
  for (const snap of rich.snaps) {
    p2.line(snap.l, snap.p, { label: `${gLabel(rich.m)}, t = ${fmtNum(snap.t / tJ(rich.m))} T_J` });
  }
  const base = finals[0];
  if (base !== rich) {
    p2.line(base.snap.l, base.snap.p, {
      label: `${gLabel(base.m)}, t = ${fmtNum(base.snap.t / tJ(base.m))} T_J`,
      dash: [4, 3], color: "#555555",
    });
  }
  p2.title = "same data, log scale";
  p2.legendPos = "br";
  return fig;
}

function figFig6(dir: string): Figure {
  const ms = members(dir);
  const fig = new Figure(620, 430, "interaction-driven spreading, tilted lattice");
  const [b] = fig.grid(1, 1);
  const main = fig.panel(b, { label: "t" }, { label: "sigma^2 (sites^2)" });
  const curves = ms.map((m) => ({ s: seriesOf(m), label: gLabel(m) }));
  for (const c of curves) main.line(c.s.t, c.s.sigma2, { label: c.label });
  main.legendPos = "br";

  // the same family on double log axes exposes the power law
  const inset = fig.inset(main, 0.07, 0.05, 0.44, 0.46, { label: "t", scale: "log" }, { scale: "log" });
  for (const c of curves) inset.line(c.s.t, c.s.sigma2, {});
  return fig;
}

function figFig7(dir: string): Figure {
  const ms = members(dir);
  const coh = ms.find((m) => m.name === "coherent") ?? ms[0];
  const fig = new Figure(920, 340, "slow drive near resonance: center and width");
  const [b1, b2] = fig.grid(1, 2);

  const sc = seriesOf(coh);
  const p1 = fig.panel(b1, { label: "t" }, { label: "x (sites)" });
  p1.line(sc.t, sc.x, { label: coh.name });
  p1.title = "packet center";
  p1.legendPos = "tl";

  const p2 = fig.panel(b2, { label: "t" }, Y_SIGMA);
  for (const m of ms) {
    const s = seriesOf(m);
    p2.line(s.t, s.sigma, { label: m.name });
  }
  p2.title = "packet width";
  p2.legendPos = "tl";
  return fig;
}

function figFig9(dir: string): Figure {
  const ms = members(dir);
  const fig = new Figure(920, 340, "untilted lattice: interaction suppresses spreading");
  const [b1, b2] = fig.grid(1, 2);

  const p1 = fig.panel(b1, { label: "t" }, Y_SIGMA);
  for (const m of ms) {
    const s = seriesOf(m);
    p1.line(s.t, s.sigma, { label: gLabel(m) });
  }
  p1.title = "width";
  p1.legendPos = "tl";

  const finals = ms.map((m) => {
    const snaps = densitiesOf(m);
    return { m, snap: snaps[snaps.length - 1] };
  });
  const xRange = occupiedRange(finals.map((f) => f.snap), 1e-8);
  const p2 = fig.panel(
    b2,
    { label: "site l", domain: xRange },
    { label: "P_l", scale: "log", domain: [1e-8, 2] },
  );
  for (const f of finals) p2.line(f.snap.l, f.snap.p, { label: gLabel(f.m) });
  p2.title = `final density, t = ${fmtNum(finals[0].snap.t)}`;
  p2.legendPos = "br";
  return fig;
}

function figFig10c(dir: string): Figure {
  const ms = members(dir);
  const fig = new Figure(620, 360, "drive amplitude controls spreading (g = 40)");
  const [b] = fig.grid(1, 1);
  const p = fig.panel(b, { label: "t" }, Y_SIGMA);
  for (const m of ms) {
    const ratio = m.sidecar.params.dFomega / m.sidecar.params.dF;
    const s = seriesOf(m);
    p.line(s.t, s.sigma, { label: `F_omega/F = ${fmtNum(ratio)}` });
  }
  p.legendPos = "tl";
  return fig;
}

function scanCurvesByTime(scan: ScanData): { t: number; axis: number[]; sigma: number[] }[] {
  const ts = [...new Set(scan.t)].sort((a, b) => a - b);
  return ts.map((t) => {
    const axis: number[] = [];
    const sigma: number[] = [];
    for (let i = 0; i < scan.t.length; i++) {
      if (scan.t[i] === t) {
        axis.push(scan.axis[i]);
        sigma.push(scan.sigma[i]);
      }
    }
    return { t, axis, sigma };
  });
}

function figFig15(dir: string): Figure {
  const ms = members(dir);
  const m = ms[0];
  const scan = scanOf(m);
  const curves = scanCurvesByTime(scan);
  const omegaB = m.sidecar.params.dF;
  const fig = new Figure(620, 360, "drive frequency scan, closed form (g = 0)");
  const [b] = fig.grid(1, 1);
  const p = fig.panel(b, { label: "omega" }, Y_SIGMA);
  for (const c of curves) p.line(c.axis, c.sigma, { label: `t = ${fmtNum(c.t)}` });
  p.refX(omegaB, { label: "omega_B" });
  p.refX(omegaB / 2, { label: "omega_B/2" });
  p.legendPos = "tl";
  return fig;
}

function figFig16(dir: string): Figure {
  const ms = members(dir);
  const fig = new Figure(620, 360, "resonance peak with interactions");
  const [b] = fig.grid(1, 1);
  const p = fig.panel(b, { label: "omega" }, Y_SIGMA);
  for (const m of ms) {
    const scan = scanOf(m);
    const curves = scanCurvesByTime(scan);
    for (const c of curves) {
      if (m.name === "analytic") {
        p.line(c.axis, c.sigma, { label: "g = 0 (closed form)" });
      } else {
        p.line(c.axis, c.sigma, { label: gLabel(m), markers: true, width: 1.0 });
      }
    }
  }
  const omegaB = ms[0].sidecar.params.dF;
  p.refX(omegaB, { label: "omega_B" });
  p.legendPos = "tl";
  return fig;
}

function figFig17(dir: string): Figure {
  const ms = members(dir);
  const m = ms[0];
  const curves = scanCurvesByTime(scanOf(m));
  const fig = new Figure(620, 360, `resonance peak vs time (${gLabel(m)})`);
  const [b] = fig.grid(1, 1);
  const p = fig.panel(b, { label: "omega" }, Y_SIGMA);
  for (const c of curves) {
    p.line(c.axis, c.sigma, { label: `t = ${fmtNum(c.t)}`, markers: true, width: 1.0 });
  }
  p.refX(m.sidecar.params.dF, { label: "omega_B" });
  p.legendPos = "tl";
  return fig;
}

function figFig18(dir: string): Figure {
  const ms = members(dir);
  const runs = ms.filter((m) => m.sidecar.schema === "tiltlat-run-v1");
  const scans = ms.filter((m) => m.sidecar.schema === "tiltlat-scan-v1");
  const fig = new Figure(920, 340, "resonant drive: growth and amplitude scan");
  const [b1, b2] = fig.grid(1, 2);

  const p1 = fig.panel(b1, { label: "t" }, Y_SIGMA);
  for (const m of runs) {
    const s = seriesOf(m);
    p1.line(s.t, s.sigma, { label: `${m.name.replace("_", ", ")}` });
  }
  p1.title = "width at exact resonance";
  p1.legendPos = "tl";

  const p2 = fig.panel(b2, { label: "F_omega / F" }, Y_SIGMA);
  for (const m of scans) {
    const curves = scanCurvesByTime(scanOf(m));
    for (const c of curves) {
      if (m.name === "analytic") {
        p2.line(c.axis, c.sigma, { label: "g = 0 (closed form)" });
      } else {
        p2.line(c.axis, c.sigma, { label: gLabel(m), markers: true, width: 1.0 });
      }
    }
  }
  p2.title = "amplitude scan";
  return fig;
}

function figFigC(dir: string): Figure {
  const ms = members(dir);
  const fig = new Figure(920, 340, "interaction suppression of resonant spreading");
  const [b1, b2] = fig.grid(1, 2);

  const p1 = fig.panel(b1, { label: "t" }, Y_SIGMA);
  for (const m of ms) {
    const s = seriesOf(m);
    p1.line(s.t, s.sigma, { label: gLabel(m) });
  }
  p1.title = "width";
  p1.legendPos = "tl";

  const p2 = fig.panel(b2, { label: "t" }, { label: "C = sigma_g / sigma_0" });
  for (const m of ms) {
    if (m.sidecar.params.g === 0) continue;
    const sup = readSuppression(path.join(dir, `suppression_${m.name}.csv`));
    p2.line(sup.t, sup.c, { label: gLabel(m) });
  }
  p2.refY(1.0, { label: "C = 1" });
  p2.title = "suppression coefficient";
  p2.legendPos = "bl";
  return fig;
}

// ---------------------------------------------------------------------------

const BUILDERS: Record<string, (dir: string) => Figure> = {
  fig3: figFig3,
  fig4: figFig4,
  fig6: figFig6,
  fig7: figFig7,
  fig9: figFig9,
  fig10c: figFig10c,
  fig15: figFig15,
  fig16: figFig16,
  fig17: figFig17,
  fig18: figFig18,
  figC: figFigC,
};

export const PRESET_NAMES = Object.keys(BUILDERS);

export function buildPresetFigure(preset: string, dir: string): Figure {
  const builder = BUILDERS[preset];
  if (!builder) {
    throw new Error(`unknown preset "${preset}"; available: ${PRESET_NAMES.join(", ")}`);
  }
  const manifest = readPresetManifest(dir);
  if (manifest.preset !== preset) {
    throw new DataError(manifest.file, null, `directory holds preset "${manifest.preset}", not "${preset}"`);
  }
  return builder(dir);
}
