// Ordinary least squares for the scaling fits.

export interface LineFit {
    slope: number;
    intercept: number;
    rSquared: number;
    points: number;
}

export class FitError extends Error {}

export function leastSquares(xs: number[], ys: number[]): LineFit {
    if (xs.length !== ys.length) {
        throw new FitError("x and y lengths differ");
    }
    const m = xs.length;
    if (m < 3) {
        throw new FitError(`fit refused: needs at least 3 points, got ${m}`);
    }
    let sx = 0, sy = 0;
    for (let i = 0; i < m; i++) {
        sx += xs[i];
        sy += ys[i];
    }
    const mx = sx / m;
    const my = sy / m;
    let sxx = 0, sxy = 0;
    for (let i = 0; i < m; i++) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx === 0) {
        throw new FitError("fit refused: predictor is constant over the points");
    }
    const slope = sxy / sxx;
    const intercept = my - slope * mx;
    let ssRes = 0, ssTot = 0;
    for (let i = 0; i < m; i++) {
        const e = ys[i] - (slope * xs[i] + intercept);
        ssRes += e * e;
        ssTot += (ys[i] - my) * (ys[i] - my);
    }
    const rSquared = ssTot === 0 ? 1 : 1 - ssRes / ssTot;
    return { slope, intercept, rSquared, points: m };
}
