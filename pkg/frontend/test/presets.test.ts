/**
 * End-to-end checks against the shipped sample data: every preset
 * figure renders from its sample tree, the spreading-family figure
 * carries its double-log inset, carpets use the documented color
 * floor, inputs stay untouched, and output bytes are reproducible.
 */

import { createHash } from "crypto";
import { existsSync, mkdtempSync, readdirSync, readFileSync, rmSync, statSync } from "fs";
import { tmpdir } from "os";
import path from "path";
import { afterAll, describe, expect, it } from "vitest";

import { decodePng } from "../src/png";
import { buildPresetFigure, PRESET_NAMES } from "../src/presets";
import { renderFigure, writeFigure } from "../src/render";
import { DEVICE_SCALE } from "../src/raster";

const SAMPLES = path.resolve(__dirname, "..", "samples");
const out = mkdtempSync(path.join(tmpdir(), "tiltlat-figs-"));
afterAll(() => rmSync(out, { recursive: true, force: true }));

function treeHash(dir: string): string {
  const h = createHash("sha256");
  const walk = (d: string) => {
    for (const name of readdirSync(d).sort()) {
      const p = path.join(d, name);
      if (statSync(p).isDirectory()) walk(p);
      else h.update(name).update(readFileSync(p));
    }
  };
  walk(dir);
  return h.digest("hex");
}

describe("preset figures from the shipped samples", () => {
  it("ships sample data for every preset", () => {
    expect(PRESET_NAMES).toHaveLength(11);
    for (const preset of PRESET_NAMES) {
      expect(existsSync(path.join(SAMPLES, preset, "preset.json")), preset).toBe(true);
    }
  });

  for (const preset of PRESET_NAMES) {
    it(`renders ${preset} without error`, () => {
      const fig = buildPresetFigure(preset, path.join(SAMPLES, preset));
      const res = writeFigure(fig, path.join(out, preset));
      expect(existsSync(res.svgPath)).toBe(true);
      expect(existsSync(res.pngPath)).toBe(true);
      expect(res.svg.startsWith("<svg ")).toBe(true);
      expect(res.svg.trimEnd().endsWith("</svg>")).toBe(true);
      const png = decodePng(readFileSync(res.pngPath));
      expect(png.width).toBe(fig.width * DEVICE_SCALE);
      expect(png.height).toBe(fig.height * DEVICE_SCALE);
    });
  }

  it("fig6 carries the double-log inset", () => {
    const fig = buildPresetFigure("fig6", path.join(SAMPLES, "fig6"));
    const { svg } = renderFigure(fig);
    const start = svg.indexOf('<g class="inset">');
    expect(start).toBeGreaterThan(0);
    const inset = svg.slice(start, svg.indexOf("</g>", start));
    // log axes tick at decades
    const labels = [...inset.matchAll(/<text[^>]*>([^<]+)<\/text>/g)].map((m) => m[1]);
    const decades = labels.filter((s) => /^1e-?\d+$/.test(s) || /^10+$/.test(s) || s === "1");
    expect(decades.length).toBeGreaterThanOrEqual(3);
  });

  it("density carpets use the log color floor", () => {
    const fig = buildPresetFigure("fig3", path.join(SAMPLES, "fig3"));
    const { svg } = renderFigure(fig);
    // embedded carpet image plus the colorbar's floor decade label
    expect(svg).toContain("data:image/png;base64,");
    expect(svg).toContain(">1e-6<");
  });

  it("plotting leaves the input bytes alone", () => {
    const dir = path.join(SAMPLES, "fig9");
    const before = treeHash(dir);
    renderFigure(buildPresetFigure("fig9", dir));
    expect(treeHash(dir)).toBe(before);
  });

  it("same inputs give identical bytes", () => {
    const dir = path.join(SAMPLES, "fig7");
    const a = renderFigure(buildPresetFigure("fig7", dir));
    const b = renderFigure(buildPresetFigure("fig7", dir));
    expect(a.svg).toBe(b.svg);
    expect(a.png.equals(b.png)).toBe(true);
  });

  it("refuses a directory holding a different preset", () => {
    expect(() => buildPresetFigure("fig4", path.join(SAMPLES, "fig3"))).toThrowError(/holds preset "fig3"/);
  });

  it("names unknown presets", () => {
    expect(() => buildPresetFigure("fig99", SAMPLES)).toThrowError(/unknown preset "fig99"/);
  });
});
