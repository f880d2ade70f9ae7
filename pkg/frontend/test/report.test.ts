import * as fs from "fs";
import * as os from "os";
import * as path from "path";

import { afterEach, beforeEach, describe, expect, it } from "vitest";

import { fitScaling, parseSummaryCsv } from "../src/analyze";
import { parseSweepCsv } from "../src/csv";
import { generateReport, main } from "../src/main";

const FIXTURE = path.join(__dirname, "..", "fixtures", "sweep_k3.csv");

let outdir: string;

beforeEach(() => {
    outdir = fs.mkdtempSync(path.join(os.tmpdir(), "scaling-report-"));
});

afterEach(() => {
    fs.rmSync(outdir, { recursive: true, force: true });
});

describe("report generation on a real sweep", () => {
    it("writes figures and a summary without error", () => {
        const fits = generateReport(FIXTURE, outdir);
        expect(fits.length).toBeGreaterThan(0);
        const files = fs.readdirSync(outdir).sort();
        expect(files).toContain("summary.csv");
        expect(files).toContain("fit_k3_n_over_p_pow.svg");
        expect(files).toContain("fit_k3_n_log_n.svg");
        const svg = fs.readFileSync(path.join(outdir, "fit_k3_n_over_p_pow.svg"), "utf8");
        expect(svg).toMatch(/^<svg /);
        expect(svg).toContain("</svg>");
        expect((svg.match(/<circle /g) ?? []).length).toBe(24);
    });

    it("summary numbers round-trip: re-reading equals refitting", () => {
        generateReport(FIXTURE, outdir);
        const written = parseSummaryCsv(
            fs.readFileSync(path.join(outdir, "summary.csv"), "utf8"),
        );
        const refit = fitScaling(parseSweepCsv(fs.readFileSync(FIXTURE, "utf8")));
        expect(written.length).toBe(refit.length);
        for (let i = 0; i < refit.length; i++) {
            expect(written[i].k).toBe(refit[i].k);
            expect(written[i].nFixedOrPooled).toBe(refit[i].nFixedOrPooled);
            expect(written[i].predictor).toBe(refit[i].predictor);
            // String(x) -> Number(text) is exact for doubles
            expect(written[i].slope).toBe(refit[i].slope);
            expect(written[i].intercept).toBe(refit[i].intercept);
            expect(written[i].rSquared).toBe(refit[i].rSquared);
            expect(written[i].points).toBe(refit[i].points);
        }
    });

    it("is deterministic across runs", () => {
        generateReport(FIXTURE, outdir);
        const second = fs.mkdtempSync(path.join(os.tmpdir(), "scaling-report-b-"));
        try {
            generateReport(FIXTURE, second);
            for (const name of fs.readdirSync(outdir)) {
                expect(fs.readFileSync(path.join(second, name), "utf8")).toBe(
                    fs.readFileSync(path.join(outdir, name), "utf8"),
                );
            }
        } finally {
            fs.rmSync(second, { recursive: true, force: true });
        }
    });

    it("both predictors get r^2 reported, no pass/fail judgement", () => {
        const fits = generateReport(FIXTURE, outdir);
        const pooled = fits.filter((f) => f.nFixedOrPooled === "pooled");
        expect(pooled).toHaveLength(2);
        for (const f of pooled) {
            expect(f.rSquared).toBeGreaterThan(0);
            expect(f.rSquared).toBeLessThanOrEqual(1);
        }
    });
});

describe("command line entry", () => {
    it("returns 0 on success", () => {
        expect(main(["--input", FIXTURE, "--outdir", outdir])).toBe(0);
    });

    it("returns 2 on usage errors", () => {
        expect(main(["--input", FIXTURE])).toBe(2);
        expect(main(["--bogus"])).toBe(2);
    });

    it("returns 1 on schema errors", () => {
        const bad = path.join(outdir, "bad.csv");
        fs.writeFileSync(bad, "not,a,sweep\n1,2,3\n");
        expect(main(["--input", bad, "--outdir", outdir])).toBe(1);
    });

    it("returns 1 when fits are refused", () => {
        const single = path.join(outdir, "single.csv");
        const text = fs
            .readFileSync(FIXTURE, "utf8")
            .split(/\r?\n/)
            .filter((l) => l.trim() !== "");
        const headerIdx = text.findIndex((l) => !l.startsWith("#"));
        fs.writeFileSync(single, text.slice(0, headerIdx + 2).join("\n") + "\n");
        expect(main(["--input", single, "--outdir", outdir])).toBe(1);
    });
});
