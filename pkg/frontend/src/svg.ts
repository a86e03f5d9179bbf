/** Primitive list -> standalone SVG document. */

import { encodePng } from "./png";
import { Prim } from "./prims";

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;").replace(/"/g, "&quot;");
}

function num(v: number): string {
  const r = Math.round(v * 100) / 100;
  return Object.is(r, -0) ? "0" : String(r);
}

export function toSvg(width: number, height: number, prims: Prim[]): string {
  const out: string[] = [];
  out.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
      `viewBox="0 0 ${width} ${height}" font-family="DejaVu Sans Mono, monospace">`,
  );
  for (const p of prims) {
    switch (p.kind) {
      case "rect": {
        const op = p.opacity !== undefined && p.opacity < 1 ? ` fill-opacity="${p.opacity}"` : "";
        out.push(`<rect x="${num(p.x)}" y="${num(p.y)}" width="${num(p.w)}" height="${num(p.h)}" fill="${p.fill}"${op}/>`);
        break;
      }
      case "line": {
        const dash = p.dash ? ` stroke-dasharray="${p.dash.join(",")}"` : "";
        const op = p.opacity !== undefined && p.opacity < 1 ? ` stroke-opacity="${p.opacity}"` : "";
        out.push(
          `<line x1="${num(p.x1)}" y1="${num(p.y1)}" x2="${num(p.x2)}" y2="${num(p.y2)}" ` +
            `stroke="${p.stroke}" stroke-width="${p.width}"${dash}${op}/>`,
        );
        break;
      }
      case "polyline": {
        // NaN pairs split the polyline into separate elements
        const runs: string[][] = [[]];
        for (let i = 0; i + 1 < p.pts.length; i += 2) {
          if (Number.isFinite(p.pts[i]) && Number.isFinite(p.pts[i + 1])) {
            runs[runs.length - 1].push(`${num(p.pts[i])},${num(p.pts[i + 1])}`);
          } else if (runs[runs.length - 1].length > 0) {
            runs.push([]);
          }
        }
        const dash = p.dash ? ` stroke-dasharray="${p.dash.join(",")}"` : "";
        const op = p.opacity !== undefined && p.opacity < 1 ? ` stroke-opacity="${p.opacity}"` : "";
        for (const run of runs) {
          if (run.length < 2) continue;
          out.push(
            `<polyline fill="none" stroke="${p.stroke}" stroke-width="${p.width}"${dash}${op} ` +
              `stroke-linejoin="round" points="${run.join(" ")}"/>`,
          );
        }
        break;
      }
      case "circle": {
        const op = p.opacity !== undefined && p.opacity < 1 ? ` fill-opacity="${p.opacity}"` : "";
        out.push(`<circle cx="${num(p.cx)}" cy="${num(p.cy)}" r="${num(p.r)}" fill="${p.fill}"${op}/>`);
        break;
      }
      case "text": {
        const rot = p.rotated ? ` transform="rotate(-90,${num(p.x)},${num(p.y)})"` : "";
        const weight = p.bold ? ` font-weight="600"` : "";
        out.push(
          `<text x="${num(p.x)}" y="${num(p.y)}" font-size="${p.size}" fill="${p.fill}" ` +
            `text-anchor="${p.anchor}"${weight}${rot}>${esc(p.text)}</text>`,
        );
        break;
      }
      case "image": {
        const png = encodePng(p.nx, p.ny, p.rgba).toString("base64");
        out.push(
          `<image x="${num(p.x)}" y="${num(p.y)}" width="${num(p.w)}" height="${num(p.h)}" ` +
            `preserveAspectRatio="none" style="image-rendering:pixelated" ` +
            `href="data:image/png;base64,${png}"/>`,
        );
        break;
      }
      case "group":
        out.push(`<g class="${p.cls}">`);
        break;
      case "endgroup":
        out.push(`</g>`);
        break;
    }
  }
  out.push("</svg>");
  return out.join("\n") + "\n";
}
