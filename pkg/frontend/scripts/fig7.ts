import { renderPreset } from "./run";

renderPreset("fig7");
