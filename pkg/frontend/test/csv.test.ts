import { mkdirSync, mkdtempSync, rmSync, writeFileSync } from "fs";
import { tmpdir } from "os";
import path from "path";
import { afterAll, describe, expect, it } from "vitest";

import {
  DataError,
  readDensity,
  readPresetManifest,
  readRunSidecar,
  readScan,
  readSeries,
  readSuppression,
} from "../src/csv";

const dir = mkdtempSync(path.join(tmpdir(), "tiltlat-csv-"));
afterAll(() => rmSync(dir, { recursive: true, force: true }));

function write(name: string, text: string): string {
  const p = path.join(dir, name);
  writeFileSync(p, text);
  return p;
}

const SERIES_HEADER = "t,t_over_TJ,x,sigma,sigma2,stderr_sigma2";

describe("readSeries", () => {
  it("parses a well formed file", () => {
    const p = write("ok.csv", `${SERIES_HEADER}\n0.0,0.0,0.0,10.0,100.0,0.0\n0.5,0.0795,−0.1,10.2,104.04,0.3\n`.replace("−", "-"));
    const s = readSeries(p);
    expect(s.t).toEqual([0.0, 0.5]);
    expect(s.sigma2[1]).toBeCloseTo(104.04, 12);
    expect(s.stderrSigma2).toHaveLength(2);
  });

  it("names the missing column and the file and line", () => {
    const p = write("missing.csv", "t,t_over_TJ,x,sigma,stderr_sigma2\n0,0,0,1,0\n");
    expect(() => readSeries(p)).toThrowError(/missing\.csv:1: missing column "sigma2"/);
  });

  it("rejects extra columns by name", () => {
    const p = write("extra.csv", `${SERIES_HEADER},mood\n0,0,0,1,1,0,great\n`);
    expect(() => readSeries(p)).toThrowError(/unexpected column "mood"/);
  });

  it("rejects reordered headers", () => {
    const p = write("order.csv", "t_over_TJ,t,x,sigma,sigma2,stderr_sigma2\n0,0,0,1,1,0\n");
    expect(() => readSeries(p)).toThrowError(/column 1 must be "t"/);
  });

  it("reports unparseable cells with line number and column name", () => {
    const p = write("cell.csv", `${SERIES_HEADER}\n0,0,0,1,1,0\n1,0.1,oops,1,1,0\n`);
    try {
      readSeries(p);
      expect.unreachable();
    } catch (err: any) {
      expect(err).toBeInstanceOf(DataError);
      expect(err.line).toBe(3);
      expect(err.message).toContain('column "x"');
      expect(err.message).toContain("oops");
    }
  });

  it("reports ragged rows", () => {
    const p = write("ragged.csv", `${SERIES_HEADER}\n0,0,0,1\n`);
    expect(() => readSeries(p)).toThrowError(/ragged\.csv:2: expected 6 fields, got 4/);
  });

  it("rejects empty and header-only files", () => {
    expect(() => readSeries(write("empty.csv", ""))).toThrowError(/empty file/);
    expect(() => readSeries(write("hdr.csv", `${SERIES_HEADER}\n`))).toThrowError(/no data rows/);
  });

  it("names a nonexistent file", () => {
    expect(() => readSeries(path.join(dir, "nope.csv"))).toThrowError(/file not found/);
  });
});

describe("readDensity", () => {
  it("parses and pulls the snapshot time from the filename", () => {
    const p = write("density_t62.83.csv", "l,P\n-2,0.1\n-1,0.2\n0,0.4\n1,0.2\n2,0.1\n");
    const d = readDensity(p);
    expect(d.t).toBeCloseTo(62.83, 12);
    expect(d.l).toEqual([-2, -1, 0, 1, 2]);
  });

  it("rejects gaps in the site ladder", () => {
    const p = write("density_t1.0.csv", "l,P\n0,0.5\n2,0.5\n");
    expect(() => readDensity(p)).toThrowError(/:3: column "l": sites must be consecutive/);
  });

  it("names a wrong header", () => {
    const p = write("density_t2.0.csv", "site,P\n0,1.0\n");
    expect(() => readDensity(p)).toThrowError(/missing column "l"/);
  });
});

describe("readScan", () => {
  it("detects the frequency axis", () => {
    const p = write("scan1.csv", "omega,t,sigma\n0.25,628.3,40.0\n0.5,628.3,300.0\n");
    const s = readScan(p);
    expect(s.axisName).toBe("omega");
    expect(s.sigma[1]).toBe(300.0);
  });

  it("detects the amplitude axis", () => {
    const p = write("scan2.csv", "F_omega_over_F,t,sigma\n1.21,628.3,200.0\n");
    expect(readScan(p).axisName).toBe("F_omega_over_F");
  });

  it("names the missing axis column", () => {
    const p = write("scan3.csv", "frequency,t,sigma\n0.5,1.0,10.0\n");
    expect(() => readScan(p)).toThrowError(/missing column "omega" or "F_omega_over_F"/);
  });
});

describe("readSuppression", () => {
  it("round trips", () => {
    const p = write("sup.csv", "t,C\n0.0,1.0\n6.28,0.8\n");
    expect(readSuppression(p).c).toEqual([1.0, 0.8]);
  });
});

describe("sidecars", () => {
  it("reads a preset manifest", () => {
    write("preset.json", JSON.stringify({ schema: "tiltlat-preset-v1", version: "0.1.0", preset: "fig6", members: ["g0", "g10"] }));
    const m = readPresetManifest(dir);
    expect(m.preset).toBe("fig6");
    expect(m.members).toEqual(["g0", "g10"]);
  });

  it("rejects a wrong manifest schema", () => {
    const d2 = path.join(dir, "bad-manifest");
    mkdirSync(d2, { recursive: true });
    writeFileSync(path.join(d2, "preset.json"), JSON.stringify({ schema: "tiltlat-preset-v2", preset: "x", members: [] }));
    expect(() => readPresetManifest(d2)).toThrowError(/expected schema "tiltlat-preset-v1"/);
    expect(() => readPresetManifest(path.join(dir, "missing-dir"))).toThrowError(/file not found/);
  });

  it("reads a run sidecar and its params", () => {
    const p = write("run.json", JSON.stringify({
      schema: "tiltlat-run-v1",
      config: { params: { J: 2.0, dF: 0.5, dFomega: 0.605, omega: 0.5, g: 0.0 } },
      outputs: { series: "series.csv", densities: [] },
    }));
    const sc = readRunSidecar(p);
    expect(sc.params.dF).toBe(0.5);
    expect(sc.outputs.series).toBe("series.csv");
  });

  it("rejects foreign schemas and missing params", () => {
    const p1 = write("run1.json", JSON.stringify({ schema: "something-else" }));
    expect(() => readRunSidecar(p1)).toThrowError(/schema "something-else"/);
    const p2 = write("run2.json", JSON.stringify({ schema: "tiltlat-run-v1", config: { params: { J: 1 } } }));
    expect(() => readRunSidecar(p2)).toThrowError(/config\.params\.dF/);
  });

  it("reports invalid JSON with the file name", () => {
    const p = write("run3.json", "{nope");
    expect(() => readRunSidecar(p)).toThrowError(/run3\.json: invalid JSON/);
  });
});
