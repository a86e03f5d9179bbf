import { renderPreset } from "./run";

renderPreset("figC");
