// Scaling fits of log-count against the two candidate predictors,
// n / p^(1/(k-2)) and n * log(n), grouped per k (pooled over n) and per
// fixed n where enough points exist.

import { SweepRow } from "./csv";
import { FitError, leastSquares } from "./fit";

export type PredictorName = "n_over_p_pow" | "n_log_n";

export interface FitResult {
    k: number;
    nFixedOrPooled: string; // "pooled" or the fixed n as a string
    predictor: PredictorName;
    slope: number;
    intercept: number;
    rSquared: number;
    points: number;
}

function predictorValue(row: SweepRow, which: PredictorName): number {
    if (which === "n_over_p_pow") {
        return row.predictor;
    }
    return row.n * Math.log(row.n);
}

function fitGroup(
    rows: SweepRow[],
    k: number,
    label: string,
    which: PredictorName,
): FitResult | null {
    const xs = rows.map((r) => predictorValue(r, which));
    const ys = rows.map((r) => r.logCount);
    try {
        const f = leastSquares(xs, ys);
        return {
            k,
            nFixedOrPooled: label,
            predictor: which,
            slope: f.slope,
            intercept: f.intercept,
            rSquared: f.rSquared,
            points: f.points,
        };
    } catch (err) {
        if (err instanceof FitError) {
            return null; // too few points or constant predictor in this group
        }
        throw err;
    }
}

export function fitScaling(rows: SweepRow[]): FitResult[] {
    if (rows.length < 3) {
        throw new FitError(`fit refused: needs at least 3 rows, got ${rows.length}`);
    }
    const ks = [...new Set(rows.map((r) => r.k))].sort((a, b) => a - b);
    const out: FitResult[] = [];
    for (const k of ks) {
        const group = rows.filter((r) => r.k === k);
        for (const which of ["n_over_p_pow", "n_log_n"] as PredictorName[]) {
            const pooled = fitGroup(group, k, "pooled", which);
            if (pooled !== null) {
                out.push(pooled);
            }
        }
        const ns = [...new Set(group.map((r) => r.n))].sort((a, b) => a - b);
        for (const n of ns) {
            const fixed = group.filter((r) => r.n === n);
            const fit = fitGroup(fixed, k, String(n), "n_over_p_pow");
            if (fit !== null) {
                out.push(fit);
            }
        }
    }
    if (out.length === 0) {
        throw new FitError("fit refused: no group had 3 points with a varying predictor");
    }
    return out;
}

export const SUMMARY_HEADER = "k,group,predictor,slope,intercept,r_squared,points";

export function summaryCsv(fits: FitResult[]): string {
    const lines = [SUMMARY_HEADER];
    for (const f of fits) {
        lines.push(
            [
                String(f.k),
                f.nFixedOrPooled,
                f.predictor,
                String(f.slope),
                String(f.intercept),
                String(f.rSquared),
                String(f.points),
            ].join(","),
        );
    }
    return lines.join("\n") + "\n";
}

export function parseSummaryCsv(text: string): FitResult[] {
    const lines = text.split(/\r?\n/).filter((l) => l.trim() !== "");
    if (lines[0] !== SUMMARY_HEADER) {
        throw new FitError(`unexpected summary header: "${lines[0]}"`);
    }
    return lines.slice(1).map((line) => {
        const parts = line.split(",");
        return {
            k: Number(parts[0]),
            nFixedOrPooled: parts[1],
            predictor: parts[2] as PredictorName,
            slope: Number(parts[3]),
            intercept: Number(parts[4]),
            rSquared: Number(parts[5]),
            points: Number(parts[6]),
        };
    });
}
