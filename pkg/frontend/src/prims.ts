/**
 * Drawing primitives shared by the SVG and PNG backends.  Coordinates
 * are CSS pixels with the origin at the top-left corner.
 */

export type Anchor = "start" | "middle" | "end";

export interface RectPrim {
  kind: "rect";
  x: number;
  y: number;
  w: number;
  h: number;
  fill: string;
  opacity?: number;
}

export interface LinePrim {
  kind: "line";
  x1: number;
  y1: number;
  x2: number;
  y2: number;
  stroke: string;
  width: number;
  dash?: number[];
  opacity?: number;
}

export interface PolylinePrim {
  kind: "polyline";
  /** flat [x0, y0, x1, y1, ...]; NaN pairs break the line */
  pts: number[];
  stroke: string;
  width: number;
  dash?: number[];
  opacity?: number;
}

export interface CirclePrim {
  kind: "circle";
  cx: number;
  cy: number;
  r: number;
  fill: string;
  opacity?: number;
}

export interface TextPrim {
  kind: "text";
  x: number;
  y: number;
  text: string;
  size: number;
  fill: string;
  anchor: Anchor;
  /** rotate 90 degrees counter-clockwise around (x, y) */
  rotated?: boolean;
  bold?: boolean;
}

/** Pixel grid (carpet cells, colorbar ramps), scaled without smoothing. */
export interface ImagePrim {
  kind: "image";
  x: number;
  y: number;
  w: number;
  h: number;
  nx: number;
  ny: number;
  /** row-major RGBA, ny rows of nx pixels, row 0 at the top */
  rgba: Uint8Array;
}

/** Marks a named group (panel, inset) in the SVG output; no-op in PNG. */
export interface GroupPrim {
  kind: "group";
  cls: string;
}

export interface EndGroupPrim {
  kind: "endgroup";
}

export type Prim =
  | RectPrim
  | LinePrim
  | PolylinePrim
  | CirclePrim
  | TextPrim
  | ImagePrim
  | GroupPrim
  | EndGroupPrim;

/** Approximate rendered text width in CSS px (monospace cell 7/12 of size). */
export function textWidth(text: string, size: number): number {
  return text.length * size * (7 / 12);
}

export interface Rgba {
  r: number;
  g: number;
  b: number;
  a: number;
}

/** Parse "#rgb", "#rrggbb" or "#rrggbbaa". */
export function parseColor(c: string): Rgba {
  if (c[0] !== "#") throw new Error(`unsupported color "${c}"`);
  const h = c.slice(1);
  if (h.length === 3) {
    return {
      r: parseInt(h[0] + h[0], 16),
      g: parseInt(h[1] + h[1], 16),
      b: parseInt(h[2] + h[2], 16),
      a: 255,
    };
  }
  return {
    r: parseInt(h.slice(0, 2), 16),
    g: parseInt(h.slice(2, 4), 16),
    b: parseInt(h.slice(4, 6), 16),
    a: h.length === 8 ? parseInt(h.slice(6, 8), 16) : 255,
  };
}
