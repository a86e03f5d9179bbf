/**
 * Density carpets: stacked density snapshots as a pixel image, time
 * along x and site index along y.  Color is log10(P) clamped below at
 * a floor (default 1e-6) so the slowly decaying tails stay visible
 * without letting numerical noise set the color range.
 */

import { DataError, DensityData } from "./csv";

export const DENSITY_FLOOR = 1e-6;

// dark violet -> teal -> yellow ramp, interpolated between anchors
const ANCHORS: [number, number, number][] = [
  [68, 1, 84],
  [59, 82, 139],
  [33, 145, 140],
  [94, 201, 98],
  [253, 231, 37],
];

export function colormap(u: number): [number, number, number] {
  const t = Math.max(0, Math.min(1, u)) * (ANCHORS.length - 1);
  const i = Math.min(ANCHORS.length - 2, Math.floor(t));
  const f = t - i;
  const a = ANCHORS[i];
  const b = ANCHORS[i + 1];
  return [
    Math.round(a[0] + (b[0] - a[0]) * f),
    Math.round(a[1] + (b[1] - a[1]) * f),
    Math.round(a[2] + (b[2] - a[2]) * f),
  ];
}

/** Log color coordinate of a density value: 0 at the floor, 1 at pmax. */
export function colorCoord(p: number, pmax: number, floor: number): number {
  const clamped = Math.max(p, floor);
  return Math.log10(clamped / floor) / Math.log10(pmax / floor);
}

export interface Carpet {
  nx: number;
  ny: number;
  rgba: Uint8Array;
  /** display-unit time range, outer cell edges */
  tRange: [number, number];
  /** site range, outer cell edges */
  lRange: [number, number];
  floor: number;
  pmax: number;
}

export interface CarpetOpts {
  floor?: number;
  /** divide snapshot times by this before plotting (e.g. T_J) */
  tDiv?: number;
}

export function buildCarpet(snaps: DensityData[], opts: CarpetOpts = {}): Carpet {
  const floor = opts.floor ?? DENSITY_FLOOR;
  const tDiv = opts.tDiv ?? 1;
  if (snaps.length === 0) throw new Error("carpet needs at least one density snapshot");
  const sorted = [...snaps].sort((a, b) => a.t - b.t);
  const ref = sorted[0];
  for (const s of sorted) {
    if (!Number.isFinite(s.t)) {
      throw new DataError(s.file, null, "snapshot time not encoded in filename");
    }
    if (s.l[0] !== ref.l[0] || s.l.length !== ref.l.length) {
      throw new DataError(s.file, null, `site window differs from ${ref.file}`);
    }
  }

  let pmax = 0;
  for (const s of sorted) for (const v of s.p) if (v > pmax) pmax = v;
  if (!(pmax > floor)) {
    throw new DataError(ref.file, null, `all densities are at or below the color floor ${floor}`);
  }

  // crop to the occupied sites (anything above the floor), small pad
  let iLo = ref.l.length - 1;
  let iHi = 0;
  for (const s of sorted) {
    for (let i = 0; i < s.p.length; i++) {
      if (s.p[i] > floor) {
        if (i < iLo) iLo = i;
        if (i > iHi) iHi = i;
      }
    }
  }
  const pad = Math.max(2, Math.round(0.05 * (iHi - iLo)));
  iLo = Math.max(0, iLo - pad);
  iHi = Math.min(ref.l.length - 1, iHi + pad);

  const nx = sorted.length;
  const ny = iHi - iLo + 1;
  const rgba = new Uint8Array(nx * ny * 4);
  const denom = Math.log10(pmax / floor);
  for (let c = 0; c < nx; c++) {
    const p = sorted[c].p;
    for (let r = 0; r < ny; r++) {
      const v = p[iHi - r]; // row 0 = largest site index = top
      const u = Math.log10(Math.max(v, floor) / floor) / denom;
      const [cr, cg, cb] = colormap(u);
      const o = (r * nx + c) * 4;
      rgba[o] = cr;
      rgba[o + 1] = cg;
      rgba[o + 2] = cb;
      rgba[o + 3] = 255;
    }
  }

  const t0 = sorted[0].t / tDiv;
  const t1 = sorted[nx - 1].t / tDiv;
  const dt = nx > 1 ? (t1 - t0) / (nx - 1) : 1;
  return {
    nx,
    ny,
    rgba,
    tRange: [t0 - dt / 2, t1 + dt / 2],
    lRange: [ref.l[iLo] - 0.5, ref.l[iHi] + 0.5],
    floor,
    pmax,
  };
}
