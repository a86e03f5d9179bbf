import { renderPreset } from "./run";

renderPreset("fig16");
