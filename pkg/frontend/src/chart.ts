/**
 * Declarative figure builder.  A Figure owns panels; a Panel owns
 * curves, reference lines and at most one carpet, computes its axis
 * ranges from the data, and emits primitives for the two backends.
 * Everything is a pure function of the inputs, so identical data gives
 * identical output bytes.
 */

import { Carpet, colormap } from "./carpet";
import { Anchor, Prim, textWidth } from "./prims";
import { dataRange, makeScale, Scale, ScaleKind } from "./scale";

export interface Box {
  x: number;
  y: number;
  w: number;
  h: number;
}

export interface AxisOpts {
  label?: string;
  scale?: ScaleKind;
  domain?: [number, number];
}

export interface CurveOpts {
  color?: string;
  label?: string;
  width?: number;
  dash?: number[];
  opacity?: number;
  markers?: boolean;
  markerR?: number;
}

interface Curve extends CurveOpts {
  xs: number[];
  ys: number[];
  color: string;
}

interface RefLine {
  axis: "x" | "y";
  value: number;
  color: string;
  label?: string;
  dash: number[];
}

export const PALETTE = [
  "#4361ee",
  "#e63946",
  "#2d6a4f",
  "#f77f00",
  "#9d4edd",
  "#118ab2",
  "#b5838d",
  "#6b705c",
];

const TICK_SIZE = 8;
const LABEL_SIZE = 9.5;
const TITLE_SIZE = 10;
const COLORBAR_W = 46;

// margins around each panel's plot area
const ML = 56;
const MR = 14;
const MT = 26;
const MB = 42;

function clipSegment(
  x1: number, y1: number, x2: number, y2: number, box: Box,
): [number, number, number, number] | null {
  let t0 = 0;
  let t1 = 1;
  const dx = x2 - x1;
  const dy = y2 - y1;
  const p = [-dx, dx, -dy, dy];
  const q = [x1 - box.x, box.x + box.w - x1, y1 - box.y, box.y + box.h - y1];
  for (let i = 0; i < 4; i++) {
    if (p[i] === 0) {
      if (q[i] < 0) return null;
    } else {
      const r = q[i] / p[i];
      if (p[i] < 0) {
        if (r > t1) return null;
        if (r > t0) t0 = r;
      } else {
        if (r < t0) return null;
        if (r < t1) t1 = r;
      }
    }
  }
  return [x1 + t0 * dx, y1 + t0 * dy, x1 + t1 * dx, y1 + t1 * dy];
}

export class Panel {
  readonly box: Box;
  readonly xAxis: AxisOpts;
  readonly yAxis: AxisOpts;
  title = "";
  legendPos: "tl" | "tr" | "bl" | "br" | "none" = "tr";
  cssClass = "panel";
  tickSize = TICK_SIZE;
  xTickCount = 6;
  yTickCount = 5;

  private curves: Curve[] = [];
  private refs: RefLine[] = [];
  private carpetData: Carpet | null = null;
  private paletteIdx = 0;

  constructor(box: Box, xAxis: AxisOpts, yAxis: AxisOpts) {
    this.box = box;
    this.xAxis = xAxis;
    this.yAxis = yAxis;
  }

  private nextColor(): string {
    return PALETTE[this.paletteIdx++ % PALETTE.length];
  }

  line(xs: number[], ys: number[], opts: CurveOpts = {}): this {
    if (xs.length !== ys.length) {
      throw new Error(`curve has ${xs.length} x values but ${ys.length} y values`);
    }
    this.curves.push({ ...opts, xs, ys, color: opts.color ?? this.nextColor() });
    return this;
  }

  points(xs: number[], ys: number[], opts: CurveOpts = {}): this {
    return this.line(xs, ys, { markers: true, width: 0, ...opts });
  }

  /** Copy another panel's curves (an inset replotting the same data). */
  mirrorCurves(other: Panel): this {
    for (const c of other.curves) this.curves.push({ ...c });
    return this;
  }

  refX(value: number, opts: { color?: string; label?: string; dash?: number[] } = {}): this {
    this.refs.push({ axis: "x", value, color: opts.color ?? "#888", label: opts.label, dash: opts.dash ?? [4, 3] });
    return this;
  }

  refY(value: number, opts: { color?: string; label?: string; dash?: number[] } = {}): this {
    this.refs.push({ axis: "y", value, color: opts.color ?? "#888", label: opts.label, dash: opts.dash ?? [4, 3] });
    return this;
  }

  carpet(c: Carpet): this {
    this.carpetData = c;
    return this;
  }

  /** plot area after reserving colorbar space */
  plotBox(): Box {
    const b = this.box;
    return this.carpetData ? { ...b, w: b.w - COLORBAR_W } : b;
  }

  private domains(): { xs: Scale; ys: Scale } {
    const xKind = this.xAxis.scale ?? "linear";
    const yKind = this.yAxis.scale ?? "linear";
    let xd = this.xAxis.domain;
    let yd = this.yAxis.domain;
    if (this.carpetData) {
      xd = xd ?? this.carpetData.tRange;
      yd = yd ?? this.carpetData.lRange;
    }
    const xArrays = this.curves.map((c) => (xKind === "log" ? c.xs.filter((v) => v > 0) : c.xs));
    const yArrays = this.curves.map((c) => (yKind === "log" ? c.ys.filter((v) => v > 0) : c.ys));
    if (!xd) {
      let [lo, hi] = dataRange(xArrays);
      if (xKind === "linear" && this.curves.some((c) => c.markers)) {
        const pad = (hi - lo || 1) * 0.03;
        lo -= pad;
        hi += pad;
      } else if (xKind === "log") {
        lo /= 1.2;
        hi *= 1.2;
      }
      xd = [lo, hi];
    }
    if (!yd) {
      if (yKind === "log") {
        const [lo, hi] = dataRange(yArrays);
        yd = [lo / 1.5, hi * 1.5];
      } else {
        yd = dataRange(yArrays, 0.05);
      }
    }
    return { xs: makeScale(xKind, xd[0], xd[1]), ys: makeScale(yKind, yd[0], yd[1]) };
  }

  build(out: Prim[]): void {
    const pb = this.plotBox();
    const { xs, ys } = this.domains();
    const px = (v: number) => pb.x + xs.pos(v) * pb.w;
    const py = (v: number) => pb.y + (1 - ys.pos(v)) * pb.h;

    out.push({ kind: "group", cls: this.cssClass });

    if (this.cssClass === "inset") {
      // mask the parent panel behind the inset and its tick labels
      out.push({
        kind: "rect",
        x: pb.x - 36, y: pb.y - 14, w: pb.w + 44, h: pb.h + 32,
        fill: "#ffffff", opacity: 0.95,
      });
    }

    // grid
    const yTicks = ys.ticks(this.yTickCount);
    for (const v of yTicks) {
      const y = py(v);
      out.push({ kind: "line", x1: pb.x, y1: y, x2: pb.x + pb.w, y2: y, stroke: "#e8e8e8", width: 0.5 });
    }

    if (this.carpetData) {
      const c = this.carpetData;
      // image corners follow the data ranges, not the full plot box
      const x0 = px(c.tRange[0]);
      const x1 = px(c.tRange[1]);
      const y0 = py(c.lRange[1]);
      const y1 = py(c.lRange[0]);
      out.push({ kind: "image", x: x0, y: y0, w: x1 - x0, h: y1 - y0, nx: c.nx, ny: c.ny, rgba: c.rgba });
    }

    for (const r of this.refs) {
      if (r.axis === "x") {
        const x = px(r.value);
        if (x < pb.x || x > pb.x + pb.w) continue;
        out.push({ kind: "line", x1: x, y1: pb.y, x2: x, y2: pb.y + pb.h, stroke: r.color, width: 0.9, dash: r.dash });
        if (r.label) {
          out.push({ kind: "text", x: x + 3, y: pb.y + 10, text: r.label, size: this.tickSize - 1, fill: r.color, anchor: "start" });
        }
      } else {
        const y = py(r.value);
        if (y < pb.y || y > pb.y + pb.h) continue;
        out.push({ kind: "line", x1: pb.x, y1: y, x2: pb.x + pb.w, y2: y, stroke: r.color, width: 0.9, dash: r.dash });
        if (r.label) {
          out.push({ kind: "text", x: pb.x + pb.w - 3, y: y - 4, text: r.label, size: this.tickSize - 1, fill: r.color, anchor: "end" });
        }
      }
    }

    for (const c of this.curves) {
      const pts: number[] = [];
      let lastX = NaN;
      let lastY = NaN;
      for (let i = 0; i + 1 < c.xs.length; i++) {
        const a = this.toPixel(c.xs[i], c.ys[i], xs, ys, pb);
        const b = this.toPixel(c.xs[i + 1], c.ys[i + 1], xs, ys, pb);
        if (!a || !b) continue;
        const seg = clipSegment(a[0], a[1], b[0], b[1], pb);
        if (!seg) continue;
        if (seg[0] !== lastX || seg[1] !== lastY) {
          if (pts.length > 0) pts.push(NaN, NaN);
          pts.push(seg[0], seg[1]);
        }
        pts.push(seg[2], seg[3]);
        lastX = seg[2];
        lastY = seg[3];
      }
      if ((c.width ?? 1.2) > 0 && pts.length >= 4) {
        out.push({
          kind: "polyline", pts, stroke: c.color,
          width: c.width ?? 1.2, dash: c.dash, opacity: c.opacity,
        });
      }
      if (c.markers) {
        for (let i = 0; i < c.xs.length; i++) {
          const a = this.toPixel(c.xs[i], c.ys[i], xs, ys, pb);
          if (!a) continue;
          if (a[0] < pb.x || a[0] > pb.x + pb.w || a[1] < pb.y || a[1] > pb.y + pb.h) continue;
          out.push({ kind: "circle", cx: a[0], cy: a[1], r: c.markerR ?? 2.2, fill: c.color, opacity: c.opacity });
        }
      }
    }

    // frame
    out.push({ kind: "line", x1: pb.x, y1: pb.y, x2: pb.x, y2: pb.y + pb.h, stroke: "#333", width: 0.8 });
    out.push({ kind: "line", x1: pb.x, y1: pb.y + pb.h, x2: pb.x + pb.w, y2: pb.y + pb.h, stroke: "#333", width: 0.8 });
    out.push({ kind: "line", x1: pb.x + pb.w, y1: pb.y, x2: pb.x + pb.w, y2: pb.y + pb.h, stroke: "#333", width: 0.8 });
    out.push({ kind: "line", x1: pb.x, y1: pb.y, x2: pb.x + pb.w, y2: pb.y, stroke: "#333", width: 0.8 });

    // ticks and labels
    for (const v of xs.ticks(this.xTickCount)) {
      const x = px(v);
      if (x < pb.x - 0.5 || x > pb.x + pb.w + 0.5) continue;
      out.push({ kind: "line", x1: x, y1: pb.y + pb.h, x2: x, y2: pb.y + pb.h + 3, stroke: "#333", width: 0.6 });
      out.push({ kind: "text", x, y: pb.y + pb.h + 12, text: xs.fmt(v), size: this.tickSize, fill: "#555", anchor: "middle" });
    }
    for (const v of yTicks) {
      const y = py(v);
      out.push({ kind: "line", x1: pb.x - 3, y1: y, x2: pb.x, y2: y, stroke: "#333", width: 0.6 });
      out.push({ kind: "text", x: pb.x - 5, y: y + 3, text: ys.fmt(v), size: this.tickSize, fill: "#555", anchor: "end" });
    }
    if (this.xAxis.label) {
      out.push({
        kind: "text", x: pb.x + pb.w / 2, y: pb.y + pb.h + 27,
        text: this.xAxis.label, size: LABEL_SIZE, fill: "#333", anchor: "middle",
      });
    }
    if (this.yAxis.label) {
      out.push({
        kind: "text", x: pb.x - 40, y: pb.y + pb.h / 2,
        text: this.yAxis.label, size: LABEL_SIZE, fill: "#333", anchor: "middle", rotated: true,
      });
    }
    if (this.title) {
      out.push({ kind: "text", x: pb.x, y: pb.y - 8, text: this.title, size: TITLE_SIZE, fill: "#222", anchor: "start", bold: true });
    }

    if (this.carpetData) this.buildColorbar(out, pb);
    this.buildLegend(out, pb);
    out.push({ kind: "endgroup" });
  }

  private toPixel(x: number, y: number, xs: Scale, ys: Scale, pb: Box): [number, number] | null {
    if (!Number.isFinite(x) || !Number.isFinite(y)) return null;
    if (xs.kind === "log" && x <= 0) return null;
    if (ys.kind === "log" && y <= 0) return null;
    return [pb.x + xs.pos(x) * pb.w, pb.y + (1 - ys.pos(y)) * pb.h];
  }

  private buildColorbar(out: Prim[], pb: Box): void {
    const c = this.carpetData!;
    const bar: Box = { x: pb.x + pb.w + 8, y: pb.y, w: 9, h: pb.h };
    const n = 64;
    const rgba = new Uint8Array(n * 4);
    for (let i = 0; i < n; i++) {
      const u = 1 - i / (n - 1);
      const [r, g, b] = colormap(u);
      rgba.set([r, g, b, 255], i * 4);
    }
    out.push({ kind: "image", x: bar.x, y: bar.y, w: bar.w, h: bar.h, nx: 1, ny: n, rgba });
    out.push({ kind: "line", x1: bar.x, y1: bar.y, x2: bar.x, y2: bar.y + bar.h, stroke: "#333", width: 0.6 });
    out.push({ kind: "line", x1: bar.x + bar.w, y1: bar.y, x2: bar.x + bar.w, y2: bar.y + bar.h, stroke: "#333", width: 0.6 });
    const denom = Math.log10(c.pmax / c.floor);
    const e0 = Math.ceil(Math.log10(c.floor) - 1e-9);
    const e1 = Math.floor(Math.log10(c.pmax) + 1e-9);
    for (let e = e0; e <= e1; e++) {
      const u = (e - Math.log10(c.floor)) / denom;
      const y = bar.y + (1 - u) * bar.h;
      out.push({ kind: "line", x1: bar.x + bar.w, y1: y, x2: bar.x + bar.w + 3, y2: y, stroke: "#333", width: 0.6 });
      out.push({
        kind: "text", x: bar.x + bar.w + 5, y: y + 3,
        text: e === 0 ? "1" : `1e${e}`, size: this.tickSize - 1, fill: "#555", anchor: "start",
      });
    }
    out.push({ kind: "text", x: bar.x + bar.w / 2, y: bar.y - 6, text: "P_l", size: this.tickSize, fill: "#333", anchor: "middle" });
  }

  private buildLegend(out: Prim[], pb: Box): void {
    if (this.legendPos === "none") return;
    const entries: { color: string; label: string; dash?: number[]; marker?: boolean }[] = [];
    for (const c of this.curves) {
      if (c.label) entries.push({ color: c.color, label: c.label, dash: c.dash, marker: c.markers && (c.width ?? 1.2) === 0 });
    }
    if (entries.length === 0) return;

    const size = this.tickSize;
    const lw = Math.max(...entries.map((e) => textWidth(e.label, size))) + 26;
    const lh = entries.length * 11 + 6;
    const lx = this.legendPos.includes("l") ? pb.x + 8 : pb.x + pb.w - lw - 8;
    const ly = this.legendPos.includes("t") ? pb.y + 6 : pb.y + pb.h - lh - 6;
    out.push({ kind: "rect", x: lx, y: ly, w: lw, h: lh, fill: "#ffffff", opacity: 0.88 });
    let i = 0;
    for (const e of entries) {
      const yy = ly + 10 + i * 11;
      if (e.marker) {
        out.push({ kind: "circle", cx: lx + 11, cy: yy - 2.5, r: 2.2, fill: e.color });
      } else {
        out.push({ kind: "line", x1: lx + 4, y1: yy - 2.5, x2: lx + 18, y2: yy - 2.5, stroke: e.color, width: 1.4, dash: e.dash });
      }
      out.push({ kind: "text", x: lx + 22, y: yy, text: e.label, size, fill: "#444", anchor: "start" });
      i++;
    }
  }
}

export class Figure {
  readonly width: number;
  readonly height: number;
  readonly title: string;
  private panels: Panel[] = [];

  constructor(width: number, height: number, title = "") {
    this.width = width;
    this.height = height;
    this.title = title;
  }

  /** inner plot boxes for a rows x cols grid, row-major */
  grid(rows: number, cols: number): Box[] {
    const top = this.title ? 20 : 2;
    const cellW = (this.width - 4) / cols;
    const cellH = (this.height - top - 2) / rows;
    const boxes: Box[] = [];
    for (let r = 0; r < rows; r++) {
      for (let c = 0; c < cols; c++) {
        boxes.push({
          x: 2 + c * cellW + ML,
          y: top + r * cellH + MT,
          w: cellW - ML - MR,
          h: cellH - MT - MB,
        });
      }
    }
    return boxes;
  }

  panel(box: Box, xAxis: AxisOpts, yAxis: AxisOpts): Panel {
    const p = new Panel(box, xAxis, yAxis);
    this.panels.push(p);
    return p;
  }

  /** small panel placed inside a host panel, by fractional position */
  inset(host: Panel, fx: number, fy: number, fw: number, fh: number, xAxis: AxisOpts, yAxis: AxisOpts): Panel {
    const hb = host.plotBox();
    const p = new Panel(
      { x: hb.x + fx * hb.w, y: hb.y + fy * hb.h, w: fw * hb.w, h: fh * hb.h },
      xAxis, yAxis,
    );
    p.cssClass = "inset";
    p.tickSize = 7;
    p.xTickCount = 4;
    p.yTickCount = 3;
    p.legendPos = "none";
    this.panels.push(p);
    return p;
  }

  build(): Prim[] {
    const out: Prim[] = [];
    out.push({ kind: "rect", x: 0, y: 0, w: this.width, h: this.height, fill: "#ffffff" });
    if (this.title) {
      out.push({ kind: "text", x: 8, y: 14, text: this.title, size: 11, fill: "#222", anchor: "start", bold: true });
    }
    for (const p of this.panels) p.build(out);
    return out;
  }
}
