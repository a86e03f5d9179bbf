/** Renders a Figure to <base>.svg and <base>.png. */

import { mkdirSync, writeFileSync } from "fs";
import path from "path";

import { Figure } from "./chart";
import { encodePng } from "./png";
import { rasterize } from "./raster";
import { toSvg } from "./svg";

export interface RenderedFigure {
  svgPath: string;
  pngPath: string;
  svg: string;
  png: Buffer;
}

export function renderFigure(fig: Figure): { svg: string; png: Buffer } {
  const prims = fig.build();
  const svg = toSvg(fig.width, fig.height, prims);
  const raster = rasterize(fig.width, fig.height, prims);
  const png = encodePng(raster.w, raster.h, raster.buf);
  return { svg, png };
}

export function writeFigure(fig: Figure, outBase: string): RenderedFigure {
  const { svg, png } = renderFigure(fig);
  mkdirSync(path.dirname(path.resolve(outBase)), { recursive: true });
  const svgPath = `${outBase}.svg`;
  const pngPath = `${outBase}.png`;
  writeFileSync(svgPath, svg);
  writeFileSync(pngPath, png);
  return { svgPath, pngPath, svg, png };
}
