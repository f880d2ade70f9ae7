// Standalone report generator: reads an orientcount sweep CSV, fits
// log-count against both candidate predictors, and writes SVG figures and
// a summary CSV into the output directory.
//
// Usage: node dist/main.js --input sweep.csv --outdir report/

import * as fs from "fs";
import * as path from "path";

import { FitResult, fitScaling, summaryCsv } from "./analyze";
import { parseSweepCsv, SweepRow } from "./csv";
import { renderScatter } from "./svg";

function parseArgs(argv: string[]): { input: string; outdir: string } {
    let input: string | null = null;
    let outdir: string | null = null;
    for (let i = 0; i < argv.length; i++) {
        if (argv[i] === "--input") {
            input = argv[++i];
        } else if (argv[i] === "--outdir") {
            outdir = argv[++i];
        } else {
            throw new Error(`unknown argument: ${argv[i]}`);
        }
    }
    if (!input || !outdir) {
        throw new Error("usage: main.js --input <sweep.csv> --outdir <dir>");
    }
    return { input, outdir };
}

function figureFor(
    rows: SweepRow[],
    fit: FitResult,
): string {
    const group = rows.filter(
        (r) =>
            r.k === fit.k &&
            (fit.nFixedOrPooled === "pooled" || r.n === Number(fit.nFixedOrPooled)),
    );
    const xOf = (r: SweepRow) =>
        fit.predictor === "n_over_p_pow" ? r.predictor : r.n * Math.log(r.n);
    const xLabel =
        fit.predictor === "n_over_p_pow"
            ? `n / p^(1/(k-2)), k=${fit.k}`
            : "n log n";
    return renderScatter({
        title: `log count vs ${xLabel} (${fit.nFixedOrPooled}, slope ${fit.slope.toPrecision(5)}, r2 ${fit.rSquared.toPrecision(5)})`,
        xLabel,
        yLabel: "log count",
        points: group.map((r) => ({ x: xOf(r), y: r.logCount })),
        slope: fit.slope,
        intercept: fit.intercept,
    });
}

export function generateReport(inputPath: string, outdir: string): FitResult[] {
    const rows = parseSweepCsv(fs.readFileSync(inputPath, "utf8"));
    const fits = fitScaling(rows);
    fs.mkdirSync(outdir, { recursive: true });
    for (const fit of fits) {
        if (fit.nFixedOrPooled !== "pooled") {
            continue; // per-n fits appear in the summary table only
        }
        const name = `fit_k${fit.k}_${fit.predictor}.svg`;
        fs.writeFileSync(path.join(outdir, name), figureFor(rows, fit));
    }
    fs.writeFileSync(path.join(outdir, "summary.csv"), summaryCsv(fits));
    return fits;
}

export function main(argv: string[]): number {
    let args;
    try {
        args = parseArgs(argv);
    } catch (err) {
        console.error((err as Error).message);
        return 2;
    }
    try {
        const fits = generateReport(args.input, args.outdir);
        for (const f of fits) {
            console.log(
                `k=${f.k} group=${f.nFixedOrPooled} predictor=${f.predictor} ` +
                    `slope=${f.slope.toPrecision(6)} r2=${f.rSquared.toPrecision(6)} ` +
                    `points=${f.points}`,
            );
        }
        console.log(`report written to ${args.outdir}`);
        return 0;
    } catch (err) {
        console.error((err as Error).message);
        return 1;
    }
}

if (require.main === module) {
    process.exit(main(process.argv.slice(2)));
}
