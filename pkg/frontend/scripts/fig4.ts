import { renderPreset } from "./run";

renderPreset("fig4");
