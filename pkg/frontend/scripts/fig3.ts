import { renderPreset } from "./run";

renderPreset("fig3");
