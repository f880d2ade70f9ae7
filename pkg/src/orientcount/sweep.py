"""Exact-count parameter sweeps over (n, p, k, seed) grids with CSV/JSON output.

Every cell samples G(n, p) at its seed and counts the orientations with no
directed k-cycle, exactly.  Cells whose edge count exceeds the method's
budget are skipped with a logged reason code and a skip comment in the
output, never silently, and never replaced by sampling: exactness is the
product.  Output is written atomically; identical specs give byte-identical
files except for the runtime column.  log_count is the natural logarithm
(log2_count is offered as a derived column); count itself is emitted as an
exact decimal string since it exceeds 64 bits early.
"""

from __future__ import annotations

import hashlib
import json
import logging
import math
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import IO, Iterable, Optional

from . import __version__
from .counting import (
    BRUTE_EDGE_LIMIT,
    PROPAGATE_EDGE_GUIDELINE,
    count_bruteforce,
    count_propagate,
)
from .errors import PreconditionError
from .sampling import sample_gnp

log = logging.getLogger("orientcount.sweep")

CSV_COLUMNS = [
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
]


@dataclass(frozen=True)
class SweepSpec:
    n_values: tuple[int, ...]
    p_values: tuple[float, ...]
    k_values: tuple[int, ...]
    seeds_per_cell: int
    method: str = "propagate"
    output_path: Optional[str] = None

    def __post_init__(self):
        for name in ("n_values", "p_values", "k_values"):
            vals = getattr(self, name)
            if not isinstance(vals, tuple):
                object.__setattr__(self, name, tuple(vals))
            if not getattr(self, name):
                raise PreconditionError(f"{name} must be non-empty")
        if self.seeds_per_cell < 1:
            raise PreconditionError("seeds_per_cell must be >= 1")
        if self.method not in ("brute", "propagate", "both"):
            raise PreconditionError("method must be brute, propagate or both")

    def spec_hash(self) -> str:
        payload = json.dumps(
            {
                "n_values": list(self.n_values),
                "p_values": list(self.p_values),
                "k_values": list(self.k_values),
                "seeds_per_cell": self.seeds_per_cell,
                "method": self.method,
            },
            sort_keys=True,
        )
        return hashlib.sha256(payload.encode()).hexdigest()


@dataclass(frozen=True)
class SweepRow:
    n: int
    p: float
    k: int
    seed: int
    edge_count: int
    count: int
    log_count: float
    log2_count: float
    predictor: float
    runtime_ms: float


@dataclass(frozen=True)
class SkippedCell:
    n: int
    p: float
    k: int
    seed: int
    edge_count: int
    reason: str


def _edge_budget(method: str) -> int:
    # "both" runs the brute-force counter too, so it inherits its budget
    if method in ("brute", "both"):
        return BRUTE_EDGE_LIMIT
    return PROPAGATE_EDGE_GUIDELINE


def _run_cell(args) -> SweepRow | SkippedCell:
    method, n, p, k, seed = args
    g = sample_gnp(n, p, seed)
    m = g.e()
    if m > _edge_budget(method):
        return SkippedCell(n, p, k, seed, m, "edge_budget")
    if method == "brute":
        res = count_bruteforce(g, k)
    elif method == "propagate":
        res = count_propagate(g, k)
    else:
        res = count_propagate(g, k)
        other = count_bruteforce(g, k)
        if other.count != res.count:
            raise AssertionError(
                f"method disagreement at n={n} p={p} k={k} seed={seed}: "
                f"propagate={res.count} brute={other.count}"
            )
    count = res.count
    log_count = math.log(count) if count > 0 else float("-inf")
    predictor = n / p ** (1.0 / (k - 2)) if k > 2 else float("nan")
    return SweepRow(
        n=n,
        p=p,
        k=k,
        seed=seed,
        edge_count=m,
        count=count,
        log_count=log_count,
        log2_count=res.log2_count,
        predictor=predictor,
        runtime_ms=res.elapsed * 1000.0,
    )


def _cells(spec: SweepSpec):
    for n in spec.n_values:
        for p in spec.p_values:
            for k in spec.k_values:
                for seed in range(spec.seeds_per_cell):
                    yield (spec.method, n, p, k, seed)


def execute_sweep(
    spec: SweepSpec, threads: int = 1
) -> tuple[list[SweepRow], list[SkippedCell]]:
    """Run every cell in spec order; returns (rows, skipped cells)."""
    cells = list(_cells(spec))
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_cell, cells))
    else:
        results = [_run_cell(c) for c in cells]
    rows: list[SweepRow] = []
    skips: list[SkippedCell] = []
    for r in results:
        if isinstance(r, SkippedCell):
            log.warning(
                "skipping cell n=%d p=%g k=%d seed=%d: %s (m=%d)",
                r.n, r.p, r.k, r.seed, r.reason, r.edge_count,
            )
            skips.append(r)
        else:
            rows.append(r)
    return rows, skips


def run_sweep(spec: SweepSpec, threads: int = 1) -> list[SweepRow]:
    """Run the sweep; writes CSV to spec.output_path when set."""
    rows, skips = execute_sweep(spec, threads)
    if spec.output_path:
        write_sweep_csv(spec.output_path, spec, rows, skips)
    return rows


def _float_repr(x: float) -> str:
    return repr(x)


def _csv_text(spec: SweepSpec, rows: list[SweepRow], skips: list[SkippedCell]) -> str:
    lines = [
        f"# orientcount sweep v{__version__}",
        f"# spec_hash={spec.spec_hash()}",
        f"# method={spec.method} seeds_per_cell={spec.seeds_per_cell}",
    ]
    for s in skips:
        lines.append(
            f"# skip n={s.n} p={_float_repr(s.p)} k={s.k} seed={s.seed} "
            f"reason={s.reason} m={s.edge_count}"
        )
    lines.append(",".join(CSV_COLUMNS))
    for r in rows:
        lines.append(
            ",".join(
                [
                    str(r.n),
                    _float_repr(r.p),
                    str(r.k),
                    str(r.seed),
                    str(r.edge_count),
                    str(r.count),
                    _float_repr(r.log_count),
                    _float_repr(r.log2_count),
                    _float_repr(r.predictor),
                    f"{r.runtime_ms:.3f}",
                ]
            )
        )
    return "\n".join(lines) + "\n"


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_sweep_csv(
    path: str, spec: SweepSpec, rows: list[SweepRow], skips: list[SkippedCell]
) -> None:
    _atomic_write(path, _csv_text(spec, rows, skips))


def write_sweep_json(
    path: str, spec: SweepSpec, rows: list[SweepRow], skips: list[SkippedCell]
) -> None:
    payload = {
        "metadata": {
            "tool": f"orientcount v{__version__}",
            "spec_hash": spec.spec_hash(),
            "method": spec.method,
            "seeds_per_cell": spec.seeds_per_cell,
            "skips": [
                {
                    "n": s.n, "p": s.p, "k": s.k, "seed": s.seed,
                    "reason": s.reason, "edge_count": s.edge_count,
                }
                for s in skips
            ],
        },
        "rows": [
            {
                "n": r.n,
                "p": r.p,
                "k": r.k,
                "seed": r.seed,
                "edge_count": r.edge_count,
                "count": str(r.count),
                "log_count": r.log_count,
                "log2_count": r.log2_count,
                "predictor": r.predictor,
                "runtime_ms": r.runtime_ms,
            }
            for r in rows
        ],
    }
    _atomic_write(path, json.dumps(payload, indent=2) + "\n")


def read_sweep_csv(f: IO[str]) -> list[SweepRow]:
    """Parse a sweep CSV; raises a schema error naming the offending row."""
    header: list[str] | None = None
    rows: list[SweepRow] = []
    for lineno, raw in enumerate(f, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = line.split(",")
            if header != CSV_COLUMNS:
                raise PreconditionError(
                    f"line {lineno}: unexpected header {header!r}"
                )
            continue
        parts = line.split(",")
        if len(parts) != len(CSV_COLUMNS):
            raise PreconditionError(
                f"line {lineno}: expected {len(CSV_COLUMNS)} fields, got {len(parts)}"
            )
        try:
            rows.append(
                SweepRow(
                    n=int(parts[0]),
                    p=float(parts[1]),
                    k=int(parts[2]),
                    seed=int(parts[3]),
                    edge_count=int(parts[4]),
                    count=int(parts[5]),
                    log_count=float(parts[6]),
                    log2_count=float(parts[7]),
                    predictor=float(parts[8]),
                    runtime_ms=float(parts[9]),
                )
            )
        except ValueError as exc:
            raise PreconditionError(f"line {lineno}: {exc}") from exc
    if header is None:
        raise PreconditionError("missing CSV header")
    return rows


# ---------------------------------------------------------------------------
# Closed-form slack check
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BoundCheckEntry:
    n: int
    p: float
    k: int
    seed: int
    log_count: float
    bound: float
    slack_ratio: float
    ok: bool


@dataclass(frozen=True)
class BoundCheckReport:
    entries: list[BoundCheckEntry] = field(default_factory=list)

    @property
    def violations(self) -> int:
        return sum(1 for e in self.entries if not e.ok)

    @property
    def ok(self) -> bool:
        return self.violations == 0


def upper_bound(n: int, p: float, k: int) -> float:
    """13 * ell * n * (log n)^2 / p^(1/ell) with ell = k - 2, natural log."""
    if k < 3:
        raise PreconditionError("bound check needs k >= 3")
    ell = k - 2
    return 13.0 * ell * n * math.log(n) ** 2 / p ** (1.0 / ell)


def bound_check_rows(rows: Iterable[SweepRow]) -> BoundCheckReport:
    entries = []
    for r in rows:
        b = upper_bound(r.n, r.p, r.k)
        slack = b / r.log_count if r.log_count > 0 else math.inf
        entries.append(
            BoundCheckEntry(r.n, r.p, r.k, r.seed, r.log_count, b, slack, r.log_count <= b)
        )
    return BoundCheckReport(entries)


def run_theorem_bound_check(spec: SweepSpec, threads: int = 1) -> BoundCheckReport:
    """Run the sweep and assert every row against the closed-form bound."""
    rows, _ = execute_sweep(spec, threads)
    return bound_check_rows(rows)


# ---------------------------------------------------------------------------
# Config files: line-based "key = value"
# ---------------------------------------------------------------------------

_CONFIG_KEYS = {
    "n_values",
    "p_values",
    "k_values",
    "seeds_per_cell",
    "method",
    "output",
}


def parse_config(text: str) -> dict:
    """Parse the sweep config grammar: one ``key = value`` per line.

    Keys: n_values, p_values, k_values (comma-separated numbers),
    seeds_per_cell (int), method (brute|propagate|both), output (path).
    ``#`` starts a comment; blank lines are ignored.  CLI flags override
    config values.
    """
    out: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise PreconditionError(f"config line {lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _CONFIG_KEYS:
            raise PreconditionError(f"config line {lineno}: unknown key {key!r}")
        if key == "n_values" or key == "k_values":
            out[key] = tuple(int(t) for t in value.split(","))
        elif key == "p_values":
            out[key] = tuple(float(t) for t in value.split(","))
        elif key == "seeds_per_cell":
            out[key] = int(value)
        else:
            out[key] = value
    return out
