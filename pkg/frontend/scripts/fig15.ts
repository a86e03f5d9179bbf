import { renderPreset } from "./run";

renderPreset("fig15");
