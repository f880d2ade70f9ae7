import { describe, expect, it } from "vitest";

import { fitScaling } from "../src/analyze";
import { CSV_COLUMNS, parseSweepCsv } from "../src/csv";
import { FitError, leastSquares } from "../src/fit";

function syntheticCsv(slope: number, rows: Array<[number, number, number]>): string {
    // rows: [n, p, k]; log_count planted exactly at slope * predictor
    const lines = [CSV_COLUMNS.join(",")];
    rows.forEach(([n, p, k], i) => {
        const predictor = n / Math.pow(p, 1 / (k - 2));
        const logCount = slope * predictor;
        lines.push(
            [n, p, k, i, 10, "1024", logCount, logCount / Math.LN2, predictor, 1.0].join(","),
        );
    });
    return lines.join("\n") + "\n";
}

describe("leastSquares", () => {
    it("recovers an exact line", () => {
        const f = leastSquares([1, 2, 3, 4], [3, 5, 7, 9]);
        expect(f.slope).toBeCloseTo(2, 12);
        expect(f.intercept).toBeCloseTo(1, 12);
        expect(f.rSquared).toBeCloseTo(1, 12);
    });

    it("refuses fewer than three points", () => {
        expect(() => leastSquares([1, 2], [1, 2])).toThrow(FitError);
        expect(() => leastSquares([1, 2], [1, 2])).toThrow(/at least 3 points/);
    });

    it("refuses a constant predictor", () => {
        expect(() => leastSquares([2, 2, 2], [1, 2, 3])).toThrow(/constant/);
    });
});

describe("fitScaling on planted data", () => {
    it("recovers slope 2.0 within 1e-9 and r^2 = 1.0", () => {
        const csv = syntheticCsv(2.0, [
            [8, 0.3, 3], [8, 0.5, 3], [8, 0.7, 3], [8, 0.9, 3],
            [10, 0.3, 3], [10, 0.5, 3], [10, 0.7, 3], [10, 0.9, 3],
            [12, 0.3, 3], [12, 0.5, 3], [12, 0.7, 3], [12, 0.9, 3],
        ]);
        const fits = fitScaling(parseSweepCsv(csv));
        const pooled = fits.find(
            (f) => f.predictor === "n_over_p_pow" && f.nFixedOrPooled === "pooled",
        )!;
        expect(Math.abs(pooled.slope - 2.0)).toBeLessThan(1e-9);
        expect(Math.abs(pooled.intercept)).toBeLessThan(1e-9);
        expect(Math.abs(pooled.rSquared - 1.0)).toBeLessThan(1e-12);
        // per-fixed-n fits see the same exact line
        for (const f of fits.filter((f) => f.nFixedOrPooled !== "pooled")) {
            expect(Math.abs(f.slope - 2.0)).toBeLessThan(1e-9);
            expect(Math.abs(f.rSquared - 1.0)).toBeLessThan(1e-12);
        }
    });

    it("refuses a single-row input with a clear message", () => {
        const csv = syntheticCsv(2.0, [[8, 0.5, 3]]);
        expect(() => fitScaling(parseSweepCsv(csv))).toThrow(/at least 3 rows/);
    });

    it("reports both candidate predictors per k", () => {
        const csv = syntheticCsv(1.5, [
            [8, 0.3, 3], [9, 0.5, 3], [10, 0.7, 3], [11, 0.9, 3],
            [8, 0.3, 4], [9, 0.5, 4], [10, 0.7, 4], [11, 0.9, 4],
        ]);
        const fits = fitScaling(parseSweepCsv(csv));
        for (const k of [3, 4]) {
            const preds = fits
                .filter((f) => f.k === k && f.nFixedOrPooled === "pooled")
                .map((f) => f.predictor)
                .sort();
            expect(preds).toEqual(["n_log_n", "n_over_p_pow"]);
        }
    });
});
