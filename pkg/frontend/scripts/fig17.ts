import { renderPreset } from "./run";

renderPreset("fig17");
