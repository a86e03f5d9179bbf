import { renderPreset } from "./run";

renderPreset("fig10c");
