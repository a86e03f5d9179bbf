/** Axis scales (linear / log10) with tick generation and label formatting. */

export type ScaleKind = "linear" | "log";

export interface Scale {
  kind: ScaleKind;
  lo: number;
  hi: number;
  /** normalized position in [0, 1] */
  pos(v: number): number;
  ticks(count: number): number[];
  fmt(v: number): string;
}

export function fmtNum(v: number, step?: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 1e4 || a < 1e-3) {
    return v.toExponential(2).replace(/\.?0+e/, "e").replace("e+", "e");
  }
  let decimals = 0;
  if (step !== undefined && step > 0) {
    decimals = Math.max(0, -Math.floor(Math.log10(step) + 1e-9));
  } else if (a < 10) {
    decimals = a < 1 ? 3 : 2;
  }
  let s = v.toFixed(Math.min(decimals, 6));
  if (s.includes(".")) s = s.replace(/0+$/, "").replace(/\.$/, "");
  return s;
}

function niceStep(rough: number): number {
  const mag = Math.pow(10, Math.floor(Math.log10(rough)));
  for (const m of [1, 2, 5, 10]) {
    if (m * mag >= rough) return m * mag;
  }
  return 10 * mag;
}

export function linearScale(lo: number, hi: number): Scale {
  if (!(hi > lo)) hi = lo + 1;
  const span = hi - lo;
  return {
    kind: "linear",
    lo,
    hi,
    pos: (v) => (v - lo) / span,
    ticks(count: number): number[] {
      const step = niceStep(span / count);
      const start = Math.ceil(lo / step) * step;
      const out: number[] = [];
      for (let v = start; v <= hi + step * 1e-6; v += step) {
        out.push(Math.abs(v) < step * 1e-9 ? 0 : v);
      }
      return out;
    },
    fmt: (v) => fmtNum(v, niceStep(span / 5)),
  };
}

export function logScale(lo: number, hi: number): Scale {
  if (!(lo > 0)) throw new Error(`log scale needs positive bounds, got [${lo}, ${hi}]`);
  if (!(hi > lo)) hi = lo * 10;
  const llo = Math.log10(lo);
  const lhi = Math.log10(hi);
  return {
    kind: "log",
    lo,
    hi,
    pos: (v) => (Math.log10(v) - llo) / (lhi - llo),
    ticks(): number[] {
      const out: number[] = [];
      const e0 = Math.ceil(llo - 1e-9);
      const e1 = Math.floor(lhi + 1e-9);
      for (let e = e0; e <= e1; e++) out.push(Math.pow(10, e));
      if (out.length <= 1) {
        // under one decade: fall back to 1-2-5 mantissas
        for (const m of [2, 5]) {
          for (let e = e0 - 1; e <= e1; e++) {
            const v = m * Math.pow(10, e);
            if (v >= lo && v <= hi) out.push(v);
          }
        }
        out.sort((a, b) => a - b);
      }
      return out;
    },
    fmt: (v) => {
      const e = Math.log10(v);
      if (Math.abs(e - Math.round(e)) < 1e-9) {
        const n = Math.round(e);
        return n >= -3 && n <= 3 ? fmtNum(v) : `1e${n}`;
      }
      return fmtNum(v);
    },
  };
}

export function makeScale(kind: ScaleKind, lo: number, hi: number): Scale {
  return kind === "log" ? logScale(lo, hi) : linearScale(lo, hi);
}

/** Data range helper: min/max over finite values, with optional padding. */
export function dataRange(arrays: number[][], padFrac = 0.0): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const a of arrays) {
    for (const v of a) {
      if (!Number.isFinite(v)) continue;
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
  }
  if (!(lo <= hi)) return [0, 1];
  const pad = (hi - lo || Math.abs(hi) || 1) * padFrac;
  return [lo - pad, hi + pad];
}
