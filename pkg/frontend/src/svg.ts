// Deterministic SVG scatter plots with a fitted line. No DOM, no
// randomness, fixed styles: identical input gives byte-identical output.

export interface Point {
    x: number;
    y: number;
}

export interface PlotSpec {
    title: string;
    xLabel: string;
    yLabel: string;
    points: Point[];
    slope: number;
    intercept: number;
}

const W = 640;
const H = 440;
const MARGIN = { left: 64, right: 20, top: 40, bottom: 48 };

function ticks(lo: number, hi: number, count: number): number[] {
    if (hi === lo) {
        return [lo];
    }
    const step = (hi - lo) / (count - 1);
    const out: number[] = [];
    for (let i = 0; i < count; i++) {
        out.push(lo + i * step);
    }
    return out;
}

function fmt(x: number): string {
    return x.toFixed(2);
}

export function renderScatter(spec: PlotSpec): string {
    const xs = spec.points.map((p) => p.x);
    const ys = spec.points.map((p) => p.y);
    const xLo = Math.min(...xs);
    const xHi = Math.max(...xs);
    const yFit = [spec.slope * xLo + spec.intercept, spec.slope * xHi + spec.intercept];
    const yLo = Math.min(...ys, ...yFit);
    const yHi = Math.max(...ys, ...yFit);
    const plotW = W - MARGIN.left - MARGIN.right;
    const plotH = H - MARGIN.top - MARGIN.bottom;
    const sx = (x: number) =>
        MARGIN.left + (xHi === xLo ? plotW / 2 : ((x - xLo) / (xHi - xLo)) * plotW);
    const sy = (y: number) =>
        MARGIN.top + plotH - (yHi === yLo ? plotH / 2 : ((y - yLo) / (yHi - yLo)) * plotH);

    const parts: string[] = [];
    parts.push(
        `<svg xmlns="http://www.w3.org/2000/svg" width="${W}" height="${H}" viewBox="0 0 ${W} ${H}">`,
    );
    parts.push(`<rect width="${W}" height="${H}" fill="white"/>`);
    parts.push(
        `<text x="${W / 2}" y="22" text-anchor="middle" font-family="sans-serif" font-size="15">${spec.title}</text>`,
    );
    // axes
    const x0 = MARGIN.left;
    const y0 = MARGIN.top + plotH;
    parts.push(
        `<line x1="${x0}" y1="${MARGIN.top}" x2="${x0}" y2="${y0}" stroke="black"/>`,
    );
    parts.push(
        `<line x1="${x0}" y1="${y0}" x2="${x0 + plotW}" y2="${y0}" stroke="black"/>`,
    );
    for (const t of ticks(xLo, xHi, 5)) {
        const px = sx(t);
        parts.push(`<line x1="${fmt(px)}" y1="${y0}" x2="${fmt(px)}" y2="${y0 + 5}" stroke="black"/>`);
        parts.push(
            `<text x="${fmt(px)}" y="${y0 + 20}" text-anchor="middle" font-family="sans-serif" font-size="11">${t.toPrecision(4)}</text>`,
        );
    }
    for (const t of ticks(yLo, yHi, 5)) {
        const py = sy(t);
        parts.push(`<line x1="${x0 - 5}" y1="${fmt(py)}" x2="${x0}" y2="${fmt(py)}" stroke="black"/>`);
        parts.push(
            `<text x="${x0 - 8}" y="${fmt(py + 4)}" text-anchor="end" font-family="sans-serif" font-size="11">${t.toPrecision(4)}</text>`,
        );
    }
    parts.push(
        `<text x="${MARGIN.left + plotW / 2}" y="${H - 10}" text-anchor="middle" font-family="sans-serif" font-size="12">${spec.xLabel}</text>`,
    );
    parts.push(
        `<text x="16" y="${MARGIN.top + plotH / 2}" text-anchor="middle" font-family="sans-serif" font-size="12" transform="rotate(-90 16 ${MARGIN.top + plotH / 2})">${spec.yLabel}</text>`,
    );
    // fitted line
    parts.push(
        `<line x1="${fmt(sx(xLo))}" y1="${fmt(sy(yFit[0]))}" x2="${fmt(sx(xHi))}" y2="${fmt(sy(yFit[1]))}" stroke="#c0392b" stroke-width="1.5"/>`,
    );
    // points
    for (const p of spec.points) {
        parts.push(
            `<circle cx="${fmt(sx(p.x))}" cy="${fmt(sy(p.y))}" r="3" fill="#2c5f8a" fill-opacity="0.75"/>`,
        );
    }
    parts.push("</svg>");
    return parts.join("\n") + "\n";
}
