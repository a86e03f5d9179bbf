export { buildCarpet, colorCoord, colormap, DENSITY_FLOOR } from "./carpet";
export { AxisOpts, Box, CurveOpts, Figure, PALETTE, Panel } from "./chart";
export {
  DataError,
  readDensity,
  readPresetManifest,
  readRunSidecar,
  readScan,
  readSeries,
  readSuppression,
} from "./csv";
export { main } from "./cli";
export { decodePng, encodePng } from "./png";
export { buildPresetFigure, PRESET_NAMES } from "./presets";
export { figureFromSpec, SpecError } from "./plotspec";
export { renderFigure, writeFigure } from "./render";
export { DEVICE_SCALE } from "./raster";
export { toSvg } from "./svg";
