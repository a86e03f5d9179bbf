/**
 * Command line entry:
 *
 *   tiltlat-plot plot <spec.json> -o <outbase>
 *   tiltlat-plot preset <name> <data-dir> -o <outbase>
 *
 * Both write <outbase>.svg and <outbase>.png.  Exit codes: 0 ok,
 * 1 bad input data, 2 bad usage.
 */

import { buildPresetFigure, PRESET_NAMES } from "./presets";
import { figureFromSpec } from "./plotspec";
import { writeFigure } from "./render";

export interface Logger {
  log(msg: string): void;
  error(msg: string): void;
}

const USAGE = [
  "usage:",
  "  tiltlat-plot plot <spec.json> -o <outbase>",
  "  tiltlat-plot preset <name> <data-dir> -o <outbase>",
  "",
  `presets: ${PRESET_NAMES.join(", ")}`,
].join("\n");

function takeOut(args: string[], io: Logger): string | null {
  for (const flag of ["-o", "--out"]) {
    const i = args.indexOf(flag);
    if (i >= 0) {
      if (i + 1 >= args.length) {
        io.error(`${flag} needs a value`);
        return null;
      }
      const v = args[i + 1];
      args.splice(i, 2);
      return v;
    }
  }
  io.error("missing -o <outbase>");
  return null;
}

export function main(argv: string[], io: Logger = console): number {
  const args = [...argv];
  if (args.length === 0 || args[0] === "-h" || args[0] === "--help") {
    io.log(USAGE);
    return args.length === 0 ? 2 : 0;
  }
  const cmd = args.shift()!;

  try {
    if (cmd === "plot") {
      const out = takeOut(args, io);
      if (out === null) return 2;
      if (args.length !== 1) {
        io.error(USAGE);
        return 2;
      }
      const fig = figureFromSpec(args[0]);
      const res = writeFigure(fig, out);
      io.log(`wrote ${res.svgPath} and ${res.pngPath}`);
      return 0;
    }
    if (cmd === "preset") {
      const out = takeOut(args, io);
      if (out === null) return 2;
      if (args.length !== 2) {
        io.error(USAGE);
        return 2;
      }
      const fig = buildPresetFigure(args[0], args[1]);
      const res = writeFigure(fig, out);
      io.log(`wrote ${res.svgPath} and ${res.pngPath}`);
      return 0;
    }
    io.error(`unknown command "${cmd}"\n${USAGE}`);
    return 2;
  } catch (err: any) {
    io.error(`error: ${err.message}`);
    return 1;
  }
}
