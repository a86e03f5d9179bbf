/**
 * Software rasterizer for the primitive list.  Renders at a fixed 2x
 * device scale (the PNG is a retina-style export of the SVG layout).
 * Lines get distance-based coverage antialiasing; text comes from the
 * bundled bitmap font at the nearest integer scale.
 */

import { FONT_BASELINE, FONT_H, FONT_W, GLYPHS } from "./font";
import { parseColor, Prim, Rgba } from "./prims";

export const DEVICE_SCALE = 2;

export class Raster {
  readonly w: number;
  readonly h: number;
  readonly buf: Uint8Array;

  constructor(cssWidth: number, cssHeight: number) {
    this.w = Math.round(cssWidth * DEVICE_SCALE);
    this.h = Math.round(cssHeight * DEVICE_SCALE);
    this.buf = new Uint8Array(this.w * this.h * 4);
    this.buf.fill(255);
  }

  private blend(x: number, y: number, c: Rgba, alpha: number): void {
    if (x < 0 || y < 0 || x >= this.w || y >= this.h || alpha <= 0) return;
    const i = (y * this.w + x) * 4;
    const a = (alpha * c.a) / 255;
    this.buf[i] = Math.round(this.buf[i] * (1 - a) + c.r * a);
    this.buf[i + 1] = Math.round(this.buf[i + 1] * (1 - a) + c.g * a);
    this.buf[i + 2] = Math.round(this.buf[i + 2] * (1 - a) + c.b * a);
    this.buf[i + 3] = 255;
  }

  fillRect(x: number, y: number, w: number, h: number, color: string, opacity = 1): void {
    const c = parseColor(color);
    const x0 = Math.round(x * DEVICE_SCALE);
    const y0 = Math.round(y * DEVICE_SCALE);
    const x1 = Math.round((x + w) * DEVICE_SCALE);
    const y1 = Math.round((y + h) * DEVICE_SCALE);
    for (let yy = Math.max(0, y0); yy < Math.min(this.h, y1); yy++) {
      for (let xx = Math.max(0, x0); xx < Math.min(this.w, x1); xx++) {
        this.blend(xx, yy, c, opacity);
      }
    }
  }

  /** One solid segment in device coordinates, coverage-antialiased. */
  private segment(x1: number, y1: number, x2: number, y2: number, c: Rgba, halfWidth: number, opacity: number): void {
    const minX = Math.max(0, Math.floor(Math.min(x1, x2) - halfWidth - 1));
    const maxX = Math.min(this.w - 1, Math.ceil(Math.max(x1, x2) + halfWidth + 1));
    const minY = Math.max(0, Math.floor(Math.min(y1, y2) - halfWidth - 1));
    const maxY = Math.min(this.h - 1, Math.ceil(Math.max(y1, y2) + halfWidth + 1));
    const dx = x2 - x1;
    const dy = y2 - y1;
    const len2 = dx * dx + dy * dy;
    for (let yy = minY; yy <= maxY; yy++) {
      for (let xx = minX; xx <= maxX; xx++) {
        const px = xx + 0.5 - x1;
        const py = yy + 0.5 - y1;
        const t = len2 > 0 ? Math.max(0, Math.min(1, (px * dx + py * dy) / len2)) : 0;
        const ex = px - t * dx;
        const ey = py - t * dy;
        const d = Math.sqrt(ex * ex + ey * ey);
        const cov = Math.max(0, Math.min(1, halfWidth + 0.5 - d));
        if (cov > 0) this.blend(xx, yy, c, cov * opacity);
      }
    }
  }

  /** Split a segment into dash-pattern pieces, tracking phase across calls. */
  private dashedSegment(
    x1: number, y1: number, x2: number, y2: number,
    c: Rgba, halfWidth: number, opacity: number, dash: number[], phase: number,
  ): number {
    const len = Math.hypot(x2 - x1, y2 - y1);
    if (len === 0) return phase;
    const period = dash.reduce((a, b) => a + b, 0);
    let s = 0;
    while (s < len) {
      let p = phase % period;
      let idx = 0;
      while (p >= dash[idx]) {
        p -= dash[idx];
        idx = (idx + 1) % dash.length;
      }
      const remain = dash[idx] - p;
      const piece = Math.min(remain, len - s);
      if (idx % 2 === 0) {
        const t0 = s / len;
        const t1 = (s + piece) / len;
        this.segment(
          x1 + (x2 - x1) * t0, y1 + (y2 - y1) * t0,
          x1 + (x2 - x1) * t1, y1 + (y2 - y1) * t1,
          c, halfWidth, opacity,
        );
      }
      s += piece;
      phase += piece;
    }
    return phase;
  }

  line(x1: number, y1: number, x2: number, y2: number, color: string, width: number, dash?: number[], opacity = 1): void {
    const c = parseColor(color);
    const hw = (width * DEVICE_SCALE) / 2;
    const pts = [x1, y1, x2, y2].map((v) => v * DEVICE_SCALE);
    if (dash && dash.length >= 2) {
      this.dashedSegment(pts[0], pts[1], pts[2], pts[3], c, hw, opacity, dash.map((d) => d * DEVICE_SCALE), 0);
    } else {
      this.segment(pts[0], pts[1], pts[2], pts[3], c, hw, opacity);
    }
  }

  polyline(pts: number[], color: string, width: number, dash?: number[], opacity = 1): void {
    const c = parseColor(color);
    const hw = (width * DEVICE_SCALE) / 2;
    const scaled = dash?.map((d) => d * DEVICE_SCALE);
    let phase = 0;
    for (let i = 0; i + 3 < pts.length; i += 2) {
      const x1 = pts[i] * DEVICE_SCALE;
      const y1 = pts[i + 1] * DEVICE_SCALE;
      const x2 = pts[i + 2] * DEVICE_SCALE;
      const y2 = pts[i + 3] * DEVICE_SCALE;
      if (!Number.isFinite(x1 + y1 + x2 + y2)) continue;
      if (scaled && scaled.length >= 2) {
        phase = this.dashedSegment(x1, y1, x2, y2, c, hw, opacity, scaled, phase);
      } else {
        this.segment(x1, y1, x2, y2, c, hw, opacity);
      }
    }
  }

  circle(cx: number, cy: number, r: number, color: string, opacity = 1): void {
    const c = parseColor(color);
    const x0 = cx * DEVICE_SCALE;
    const y0 = cy * DEVICE_SCALE;
    const rr = r * DEVICE_SCALE;
    for (let yy = Math.floor(y0 - rr - 1); yy <= Math.ceil(y0 + rr + 1); yy++) {
      for (let xx = Math.floor(x0 - rr - 1); xx <= Math.ceil(x0 + rr + 1); xx++) {
        const d = Math.hypot(xx + 0.5 - x0, yy + 0.5 - y0);
        const cov = Math.max(0, Math.min(1, rr + 0.5 - d));
        if (cov > 0) this.blend(xx, yy, c, cov * opacity);
      }
    }
  }

  text(x: number, y: number, s: string, size: number, color: string, anchor: "start" | "middle" | "end", rotated = false): void {
    const c = parseColor(color);
    const k = Math.max(1, Math.round((size * DEVICE_SCALE) / 12));
    const cellW = FONT_W * k;
    const width = s.length * cellW;
    let ox = x * DEVICE_SCALE;
    let oy = y * DEVICE_SCALE;
    const shift = anchor === "middle" ? width / 2 : anchor === "end" ? width : 0;
    if (rotated) oy += shift;
    else ox -= shift;
    for (let ci = 0; ci < s.length; ci++) {
      const code = s.charCodeAt(ci) - 32;
      const glyph = code >= 0 && code < GLYPHS.length ? GLYPHS[code] : GLYPHS[31]; // '?'
      for (let gy = 0; gy < FONT_H; gy++) {
        const mask = glyph[gy];
        if (mask === 0) continue;
        for (let gx = 0; gx < FONT_W; gx++) {
          if (!(mask & (1 << gx))) continue;
          for (let sy = 0; sy < k; sy++) {
            for (let sx = 0; sx < k; sx++) {
              const px = gx * k + sx + ci * cellW;
              const py = (gy - FONT_BASELINE) * k + sy;
              if (rotated) {
                this.blend(Math.round(ox + py), Math.round(oy - px), c, 1);
              } else {
                this.blend(Math.round(ox + px), Math.round(oy + py), c, 1);
              }
            }
          }
        }
      }
    }
  }

  image(x: number, y: number, w: number, h: number, nx: number, ny: number, rgba: Uint8Array): void {
    const x0 = Math.round(x * DEVICE_SCALE);
    const y0 = Math.round(y * DEVICE_SCALE);
    const x1 = Math.round((x + w) * DEVICE_SCALE);
    const y1 = Math.round((y + h) * DEVICE_SCALE);
    for (let yy = Math.max(0, y0); yy < Math.min(this.h, y1); yy++) {
      const sy = Math.min(ny - 1, Math.floor(((yy - y0) / (y1 - y0)) * ny));
      for (let xx = Math.max(0, x0); xx < Math.min(this.w, x1); xx++) {
        const sx = Math.min(nx - 1, Math.floor(((xx - x0) / (x1 - x0)) * nx));
        const si = (sy * nx + sx) * 4;
        this.blend(xx, yy, { r: rgba[si], g: rgba[si + 1], b: rgba[si + 2], a: rgba[si + 3] }, 1);
      }
    }
  }
}

export function rasterize(width: number, height: number, prims: Prim[]): Raster {
  const r = new Raster(width, height);
  for (const p of prims) {
    switch (p.kind) {
      case "rect":
        r.fillRect(p.x, p.y, p.w, p.h, p.fill, p.opacity ?? 1);
        break;
      case "line":
        r.line(p.x1, p.y1, p.x2, p.y2, p.stroke, p.width, p.dash, p.opacity ?? 1);
        break;
      case "polyline":
        r.polyline(p.pts, p.stroke, p.width, p.dash, p.opacity ?? 1);
        break;
      case "circle":
        r.circle(p.cx, p.cy, p.r, p.fill, p.opacity ?? 1);
        break;
      case "text":
        r.text(p.x, p.y, p.text, p.size, p.fill, p.anchor, p.rotated ?? false);
        break;
      case "image":
        r.image(p.x, p.y, p.w, p.h, p.nx, p.ny, p.rgba);
        break;
      case "group":
      case "endgroup":
        break;
    }
  }
  return r;
}
