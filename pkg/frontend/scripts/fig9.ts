import { renderPreset } from "./run";

renderPreset("fig9");
