import { renderPreset } from "./run";

renderPreset("fig6");
