import { renderPreset } from "./run";

renderPreset("fig18");
