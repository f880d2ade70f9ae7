// Reader for the sweep CSV emitted by the orientcount CLI.
//
// Layout: "#" comment lines (metadata and skip records), one header row
// naming every column, then numeric rows. The exact orientation count can
// exceed 2^53, so it stays a decimal string; fits use log_count.

export const CSV_COLUMNS = [
    "n",
    "p",
    "k",
    "seed",
    "edge_count",
    "count",
    "log_count",
    "log2_count",
    "predictor",
    "runtime_ms",
] as const;

export interface SweepRow {
    n: number;
    p: number;
    k: number;
    seed: number;
    edgeCount: number;
    count: string;
    logCount: number;
    log2Count: number;
    predictor: number;
    runtimeMs: number;
}

export class SchemaError extends Error {}

function numeric(field: string, value: string, line: number): number {
    const x = Number(value);
    if (value === "" || Number.isNaN(x)) {
        throw new SchemaError(`line ${line}: field ${field} is not numeric: "${value}"`);
    }
    return x;
}

function integral(field: string, value: string, line: number): number {
    const x = numeric(field, value, line);
    if (!Number.isInteger(x)) {
        throw new SchemaError(`line ${line}: field ${field} is not an integer: "${value}"`);
    }
    return x;
}

export function parseSweepCsv(text: string): SweepRow[] {
    const rows: SweepRow[] = [];
    let headerSeen = false;
    const lines = text.split(/\r?\n/);
    for (let i = 0; i < lines.length; i++) {
        const line = lines[i].trim();
        const lineNo = i + 1;
        if (line === "" || line.startsWith("#")) {
            continue;
        }
        if (!headerSeen) {
            const header = line.split(",");
            if (header.length !== CSV_COLUMNS.length ||
                header.some((h, j) => h !== CSV_COLUMNS[j])) {
                throw new SchemaError(
                    `line ${lineNo}: unexpected header "${line}"; expected "${CSV_COLUMNS.join(",")}"`);
            }
            headerSeen = true;
            continue;
        }
        const parts = line.split(",");
        if (parts.length !== CSV_COLUMNS.length) {
            throw new SchemaError(
                `line ${lineNo}: expected ${CSV_COLUMNS.length} fields, got ${parts.length}`);
        }
        if (!/^\d+$/.test(parts[5])) {
            throw new SchemaError(`line ${lineNo}: field count is not a decimal integer: "${parts[5]}"`);
        }
        rows.push({
            n: integral("n", parts[0], lineNo),
            p: numeric("p", parts[1], lineNo),
            k: integral("k", parts[2], lineNo),
            seed: integral("seed", parts[3], lineNo),
            edgeCount: integral("edge_count", parts[4], lineNo),
            count: parts[5],
            logCount: numeric("log_count", parts[6], lineNo),
            log2Count: numeric("log2_count", parts[7], lineNo),
            predictor: numeric("predictor", parts[8], lineNo),
            runtimeMs: numeric("runtime_ms", parts[9], lineNo),
        });
    }
    if (!headerSeen) {
        throw new SchemaError("missing CSV header row");
    }
    return rows;
}
