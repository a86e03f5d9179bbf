/**
 * Shared runner for the per-preset scripts.
 *
 *   node dist/scripts/<preset>.js [data-dir] [out-base]
 *
 * defaults: data-dir = samples/<preset>, out-base = figures/<preset>
 */

import path from "path";

import { buildPresetFigure } from "../src/presets";
import { writeFigure } from "../src/render";

export function renderPreset(preset: string, argv: string[] = process.argv.slice(2)): void {
  const root = path.join(__dirname, "..", "..");
  const dataDir = argv[0] ?? path.join(root, "samples", preset);
  const outBase = argv[1] ?? path.join(root, "figures", preset);
  try {
    const res = writeFigure(buildPresetFigure(preset, dataDir), outBase);
    console.log(`SVG -> ${res.svgPath}`);
    console.log(`PNG -> ${res.pngPath}`);
  } catch (err: any) {
    console.error(`error: ${err.message}`);
    process.exitCode = 1;
  }
}
