import { describe, expect, it } from "vitest";

import { buildCarpet, colorCoord, colormap, DENSITY_FLOOR } from "../src/carpet";
import { DensityData } from "../src/csv";

function snap(t: number, p: number[], l0 = 0): DensityData {
  return { file: `density_t${t}.csv`, t, l: p.map((_, i) => l0 + i), p };
}

describe("log color floor", () => {
  it("defaults to 1e-6", () => {
    expect(DENSITY_FLOOR).toBe(1e-6);
  });

  it("clamps everything at or below the floor to one color", () => {
    const pmax = 0.3;
    const atFloor = colorCoord(1e-6, pmax, 1e-6);
    expect(atFloor).toBe(0);
    expect(colorCoord(1e-9, pmax, 1e-6)).toBe(0);
    expect(colorCoord(0, pmax, 1e-6)).toBe(0);
    expect(colorCoord(1e-5, pmax, 1e-6)).toBeGreaterThan(0);
    expect(colorCoord(pmax, pmax, 1e-6)).toBeCloseTo(1, 12);
  });

  it("is logarithmic: each decade moves the coordinate equally", () => {
    const a = colorCoord(1e-5, 1, 1e-6) - colorCoord(1e-6, 1, 1e-6);
    const b = colorCoord(1e-2, 1, 1e-6) - colorCoord(1e-3, 1, 1e-6);
    expect(a).toBeCloseTo(b, 12);
  });
});

describe("colormap", () => {
  it("is monotone dark to bright and clamps", () => {
    const lum = (u: number) => {
      const [r, g, b] = colormap(u);
      return 0.2126 * r + 0.7152 * g + 0.0722 * b;
    };
    let prev = -1;
    for (let u = 0; u <= 1.001; u += 0.05) {
      const v = lum(u);
      expect(v).toBeGreaterThan(prev);
      prev = v;
    }
    expect(colormap(-5)).toEqual(colormap(0));
    expect(colormap(7)).toEqual(colormap(1));
  });
});

describe("buildCarpet", () => {
  const tail = 1e-9; // below the floor, should be cropped away
  const snaps = [
    snap(0, [tail, tail, 0.5, tail, tail], -2),
    snap(10, [tail, 0.2, 0.2, 0.2, tail], -2),
  ];

  it("crops to occupied sites and paints floor pixels identically", () => {
    const c = buildCarpet(snaps, { floor: 1e-6 });
    expect(c.nx).toBe(2);
    // occupied sites -1..1 plus the 2-site pad, clamped to the window
    expect(c.lRange).toEqual([-2.5, 2.5]);
    const floorColor = colormap(0);
    // site -2 (bottom row) never exceeds the floor in either column
    const bottom = (c.ny - 1) * c.nx * 4;
    expect([c.rgba[bottom], c.rgba[bottom + 1], c.rgba[bottom + 2]]).toEqual(floorColor);
    // the bright center of the first column is the top of the ramp
    const peak = colormap(1);
    const mid = (2 * c.nx + 0) * 4; // row of site 0, column t=0
    expect([c.rgba[mid], c.rgba[mid + 1], c.rgba[mid + 2]]).toEqual(peak);
  });

  it("spans outer cell edges in time", () => {
    const c = buildCarpet(snaps, {});
    expect(c.tRange).toEqual([-5, 15]);
  });

  it("divides times for display when asked", () => {
    const c = buildCarpet(snaps, { tDiv: 10 });
    expect(c.tRange).toEqual([-0.5, 1.5]);
  });

  it("rejects mismatched site windows", () => {
    const bad = [snap(0, [1, 0, 0]), snap(1, [1, 0, 0, 0])];
    expect(() => buildCarpet(bad)).toThrowError(/site window differs/);
  });

  it("rejects carpets that are entirely at the floor", () => {
    expect(() => buildCarpet([snap(0, [1e-9, 1e-8, 1e-9])])).toThrowError(/at or below the color floor/);
  });

  it("requires parseable snapshot times", () => {
    const s = snap(0, [0.5, 0.5]);
    s.t = NaN;
    s.file = "custom.csv";
    expect(() => buildCarpet([s])).toThrowError(/snapshot time/);
  });
});
