/**
 * Renders every preset figure from the shipped samples.
 *
 *   node dist/scripts/all.js [samples-root] [figures-root]
 */

import path from "path";

import { buildPresetFigure, PRESET_NAMES } from "../src/presets";
import { writeFigure } from "../src/render";

const root = path.join(__dirname, "..", "..");
const samplesRoot = process.argv[2] ?? path.join(root, "samples");
const figuresRoot = process.argv[3] ?? path.join(root, "figures");

let failed = 0;
for (const preset of PRESET_NAMES) {
  try {
    const res = writeFigure(
      buildPresetFigure(preset, path.join(samplesRoot, preset)),
      path.join(figuresRoot, preset),
    );
    console.log(`${preset}: ${res.svgPath} + ${res.pngPath}`);
  } catch (err: any) {
    console.error(`${preset}: error: ${err.message}`);
    failed++;
  }
}
if (failed > 0) process.exitCode = 1;
