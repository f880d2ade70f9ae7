"""Command-line interface.

Subcommands: sample, count, density, encode, kw, verify-key-lemma, sweep,
bound-check.  Exit codes: 0 success, 2 precondition violation, 3 budget
refusal.

Frame files are plain text: lines ``r <int>``, ``A <ids...>``,
``B <ids...>``, ``X <ids...>`` (X may be omitted), ``#`` comments.  Graph
and orientation files use the edge-list format from the graphs module.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import IO

from . import __version__
from .bitsets import bits, mask_of
from .containers import KWConfig, kw_check_hypothesis, kw_family
from .counting import count_bruteforce, count_propagate
from .density import Frame, Params, is_r_locally_dense
from .encode import EncodeInput, encode
from .errors import BudgetRefusal, PreconditionError
from .extensions import estimate_dense_case, estimate_sparse_case
from .graphs import read_graph, read_orientation, write_edge_list
from .sampling import sample_gnp, sample_orientation
from .sweep import (
    SweepSpec,
    bound_check_rows,
    execute_sweep,
    parse_config,
    read_sweep_csv,
    write_sweep_csv,
    write_sweep_json,
)


def _open_out(path: str | None) -> IO[str]:
    if path is None or path == "-":
        return sys.stdout
    return open(path, "w")


def _close_out(f: IO[str]) -> None:
    if f is not sys.stdout:
        f.close()


def parse_frame_file(f: IO[str]) -> tuple[int, int, int, int]:
    """Returns (r, A mask, B mask, X mask)."""
    r = None
    masks = {"A": 0, "B": 0, "X": 0}
    for lineno, raw in enumerate(f, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "r":
            r = int(parts[1])
        elif parts[0] in masks:
            masks[parts[0]] = mask_of(int(t) for t in parts[1:])
        else:
            raise PreconditionError(f"frame line {lineno}: cannot parse {line!r}")
    if r is None:
        raise PreconditionError("frame file must set r")
    if masks["A"] == 0:
        raise PreconditionError("frame file must set A")
    return r, masks["A"], masks["B"], masks["X"]


def _cmd_sample(args) -> int:
    g = sample_gnp(args.n, args.p, args.seed)
    comments = [f"gnp n={args.n} p={args.p!r} seed={args.seed}"]
    out = _open_out(args.output)
    try:
        if args.orient:
            o = sample_orientation(g, args.seed)
            write_edge_list(o, out, comments=comments + ["fair-coin orientation"])
        else:
            write_edge_list(g, out, comments=comments)
    finally:
        _close_out(out)
    return 0


def _cmd_count(args) -> int:
    with open(args.input) as f:
        g = read_graph(f)
    if args.method == "brute":
        res = count_bruteforce(g, args.k)
        print(f"count={res.count} log2={res.log2_count:.6f} "
              f"nodes={res.nodes_explored} ms={res.elapsed * 1000:.3f}")
    elif args.method == "propagate":
        res = count_propagate(g, args.k)
        print(f"count={res.count} log2={res.log2_count:.6f} "
              f"nodes={res.nodes_explored} ms={res.elapsed * 1000:.3f}")
    else:
        rb = count_bruteforce(g, args.k)
        rp = count_propagate(g, args.k)
        if rb.count != rp.count:
            raise AssertionError(
                f"methods disagree: brute={rb.count} propagate={rp.count}"
            )
        print(f"count={rp.count} log2={rp.log2_count:.6f} "
              f"brute_ms={rb.elapsed * 1000:.3f} propagate_ms={rp.elapsed * 1000:.3f} "
              "methods_agree=true")
    return 0


def _cmd_density(args) -> int:
    with open(args.input) as f:
        o = read_orientation(f)
    params = Params(
        ell=args.ell, p=args.p, n=o.base.num_vertices(), alpha_scale=args.alpha_scale
    )
    verdict = is_r_locally_dense(o, args.r, params, args.budget, seed=args.seed)
    word = "dense" if verdict.dense else "sparse"
    mode = "exhaustive" if verdict.exhaustive else "sampled"
    print(f"verdict={word} mode={mode} triples_checked={verdict.pairs_checked} "
          f"alpha={params.alpha:.4f} outside_regime={str(params.outside_regime).lower()}")
    if verdict.witness is not None:
        a, b, x = verdict.witness
        print("witness A' = " + " ".join(map(str, bits(a))))
        print("witness B  = " + " ".join(map(str, bits(b))))
        print("witness X  = " + " ".join(map(str, bits(x))))
    return 0


def _cmd_encode(args) -> int:
    with open(args.orientation) as f:
        g_orient = read_orientation(f)
    if not g_orient.is_complete():
        raise PreconditionError("orientation file must be complete")
    with open(args.frame) as f:
        r, A, B, X = parse_frame_file(f)
    g = g_orient.base
    hv = g.verts & ~A
    h = g.induced(hv)
    h_orient = g_orient.restricted_to(hv)
    params = Params(ell=args.ell, p=args.p, n=g.num_vertices(), alpha_scale=args.alpha_scale)
    frame = Frame(A, h, B, X, r)
    out = encode(EncodeInput(frame, h_orient, g, g_orient), params)
    with open(args.out_fingerprint, "w") as f:
        write_edge_list(out.fingerprint, f, comments=["encode fingerprint T"])
    with open(args.out_container, "w") as f:
        write_edge_list(out.container, f, comments=["encode container C"])
    trace_f = _open_out(args.out_trace)
    try:
        for a, steps in out.per_a_trace.items():
            for i, step in enumerate(steps, start=1):
                trace_f.write(
                    json.dumps(
                        {
                            "a": a,
                            "i": i,
                            "v": step.v,
                            "arc": list(step.arc),
                            "branch": step.branch,
                            "b_size": step.b_size,
                        }
                    )
                    + "\n"
                )
    finally:
        _close_out(trace_f)
    print(f"L={out.L} trivial={str(out.trivial).lower()} "
          f"fingerprint_arcs={out.fingerprint.num_arcs()} "
          f"container_arcs={out.container.num_arcs()}")
    return 0


def _cmd_kw(args) -> int:
    with open(args.input) as f:
        g = read_graph(f)
    cfg = KWConfig(beta=args.beta, q=args.q, R=args.R)
    admissible = cfg.admissible_for(g.num_vertices())
    hyp = kw_check_hypothesis(g, cfg, seed=args.seed)
    print(f"admissible={str(admissible).lower()} hypothesis={str(hyp).lower()}")
    if args.enumerate:
        fam = kw_family(g, cfg)
        out = _open_out(args.output)
        try:
            for cont in fam.containers:
                out.write(" ".join(str(v) for v in bits(cont)) + "\n")
        finally:
            _close_out(out)
        print(f"containers={len(fam.containers)} "
              f"independent_sets={len(fam.fingerprints)}")
    return 0


def _cmd_verify_key_lemma(args) -> int:
    with open(args.host) as f:
        h_orient = read_orientation(f)
    params = Params(ell=args.ell, p=args.p, n=args.n, alpha_scale=args.alpha_scale)
    if args.case == "i":
        if args.frame is None:
            raise PreconditionError("case i needs --frame")
        with open(args.frame) as f:
            r, A, B, X = parse_frame_file(f)
        h_orient = h_orient.padded(A.bit_length())
        frame = Frame(A, h_orient.base, B, X, r)
        report = estimate_sparse_case(h_orient, frame, params, args.trials, args.seed)
    else:
        if args.a_verts is None:
            raise PreconditionError("case ii needs --a-verts")
        A = mask_of(int(t) for t in args.a_verts.split(","))
        h_orient = h_orient.padded(A.bit_length())
        report = estimate_dense_case(h_orient, A, params, args.trials, args.seed)
    out = _open_out(args.output)
    try:
        for t, c in enumerate(report.trial_counts):
            out.write(f"trial={t} count={c} bound={report.bound!r}\n")
        out.write(
            f"summary case={report.case} samples={report.samples} "
            f"mean={report.sample_mean!r} bound={report.bound!r} "
            f"ok={str(report.sample_mean <= report.bound).lower()} "
            f"vacuous_trials={report.vacuous_trials}\n"
        )
    finally:
        _close_out(out)
    return 0


def _values(text: str, cast):
    return tuple(cast(t) for t in text.split(","))


def _build_sweep_spec(args) -> SweepSpec:
    cfg = {}
    if args.config:
        with open(args.config) as f:
            cfg = parse_config(f.read())
    n_values = _values(args.n_values, int) if args.n_values else cfg.get("n_values")
    p_values = _values(args.p_values, float) if args.p_values else cfg.get("p_values")
    k_values = _values(args.k_values, int) if args.k_values else cfg.get("k_values")
    seeds = args.seeds_per_cell if args.seeds_per_cell else cfg.get("seeds_per_cell")
    method = args.method or cfg.get("method", "propagate")
    output = args.output or cfg.get("output")
    if not (n_values and p_values and k_values and seeds):
        raise PreconditionError(
            "sweep needs n_values, p_values, k_values and seeds_per_cell "
            "(flags or config file)"
        )
    return SweepSpec(n_values, p_values, k_values, seeds, method, output)


def _cmd_sweep(args) -> int:
    spec = _build_sweep_spec(args)
    rows, skips = execute_sweep(spec, threads=args.threads)
    if spec.output_path:
        if args.format == "json":
            write_sweep_json(spec.output_path, spec, rows, skips)
        else:
            write_sweep_csv(spec.output_path, spec, rows, skips)
        print(f"rows={len(rows)} skips={len(skips)} output={spec.output_path}")
    else:
        for r in rows:
            print(f"n={r.n} p={r.p!r} k={r.k} seed={r.seed} m={r.edge_count} "
                  f"count={r.count}")
        print(f"rows={len(rows)} skips={len(skips)}")
    return 0


def _cmd_bound_check(args) -> int:
    if args.input:
        with open(args.input) as f:
            rows = read_sweep_csv(f)
    else:
        spec = _build_sweep_spec(args)
        rows, _ = execute_sweep(spec, threads=args.threads)
    report = bound_check_rows(rows)
    for e in report.entries:
        print(f"n={e.n} p={e.p!r} k={e.k} seed={e.seed} "
              f"log_count={e.log_count:.4f} bound={e.bound:.4f} "
              f"slack={e.slack_ratio:.2f} ok={str(e.ok).lower()}")
    print(f"rows={len(report.entries)} violations={report.violations}")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orientcount",
        description="Exact counting and verification for k-cycle-free orientations",
    )
    parser.add_argument("--version", action="version", version=f"orientcount {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="64-bit seed")
    common.add_argument("--threads", type=int, default=1, help="worker processes")
    common.add_argument("--output", default=None, help="output path (default stdout)")
    common.add_argument("--format", choices=["csv", "json"], default="csv")

    ps = sub.add_parser("sample", parents=[common], help="sample G(n,p) (optionally oriented)")
    ps.add_argument("--n", type=int, required=True)
    ps.add_argument("--p", type=float, required=True)
    ps.add_argument("--orient", action="store_true", help="emit a fair-coin orientation")
    ps.set_defaults(func=_cmd_sample)

    pc = sub.add_parser("count", parents=[common], help="exact k-cycle-free orientation count")
    pc.add_argument("--input", required=True, help="edge-list file")
    pc.add_argument("--k", type=int, required=True)
    pc.add_argument("--method", choices=["brute", "propagate", "both"], default="propagate")
    pc.set_defaults(func=_cmd_count)

    pd = sub.add_parser("density", parents=[common], help="r-local density check")
    pd.add_argument("--input", required=True, help="orientation file (arc list)")
    pd.add_argument("--r", type=int, required=True)
    pd.add_argument("--ell", type=int, required=True)
    pd.add_argument("--p", type=float, required=True)
    pd.add_argument("--alpha-scale", type=float, default=64.0)
    pd.add_argument("--budget", type=int, default=10**6)
    pd.set_defaults(func=_cmd_density)

    pe = sub.add_parser("encode", parents=[common], help="run the container encoder")
    pe.add_argument("--frame", required=True, help="frame file (r/A/B/X)")
    pe.add_argument("--orientation", required=True, help="complete orientation of g")
    pe.add_argument("--ell", type=int, required=True)
    pe.add_argument("--p", type=float, required=True)
    pe.add_argument("--alpha-scale", type=float, default=64.0)
    pe.add_argument("--out-fingerprint", required=True)
    pe.add_argument("--out-container", required=True)
    pe.add_argument("--out-trace", default=None, help="JSONL trace (default stdout)")
    pe.set_defaults(func=_cmd_encode)

    pk = sub.add_parser("kw", parents=[common], help="independent-set containers")
    pk.add_argument("--input", required=True, help="edge-list file")
    pk.add_argument("--beta", type=float, required=True)
    pk.add_argument("--q", type=int, required=True)
    pk.add_argument("--R", type=float, required=True)
    pk.add_argument("--enumerate", action="store_true",
                    help="emit the container family, one vertex set per line")
    pk.set_defaults(func=_cmd_kw)

    pv = sub.add_parser("verify-key-lemma", parents=[common],
                        help="Monte Carlo extension-count bound checks")
    pv.add_argument("--case", choices=["i", "ii"], required=True)
    pv.add_argument("--host", required=True, help="complete orientation of the host H")
    pv.add_argument("--frame", default=None, help="frame file (case i)")
    pv.add_argument("--a-verts", default=None, help="comma-separated hub ids (case ii)")
    pv.add_argument("--ell", type=int, required=True)
    pv.add_argument("--p", type=float, required=True)
    pv.add_argument("--n", type=int, required=True, help="ambient n for alpha")
    pv.add_argument("--alpha-scale", type=float, default=64.0)
    pv.add_argument("--trials", type=int, default=20)
    pv.set_defaults(func=_cmd_verify_key_lemma)

    pw = sub.add_parser("sweep", parents=[common], help="exact counting sweep over a grid")
    pw.add_argument("--config", default=None, help="key = value config file")
    pw.add_argument("--n-values", default=None, help="comma-separated")
    pw.add_argument("--p-values", default=None, help="comma-separated")
    pw.add_argument("--k-values", default=None, help="comma-separated")
    pw.add_argument("--seeds-per-cell", type=int, default=None)
    pw.add_argument("--method", choices=["brute", "propagate", "both"], default=None)
    pw.set_defaults(func=_cmd_sweep)

    pb = sub.add_parser("bound-check", parents=[common],
                        help="closed-form slack check over sweep rows")
    pb.add_argument("--input", default=None, help="existing sweep CSV")
    pb.add_argument("--config", default=None)
    pb.add_argument("--n-values", default=None)
    pb.add_argument("--p-values", default=None)
    pb.add_argument("--k-values", default=None)
    pb.add_argument("--seeds-per-cell", type=int, default=None)
    pb.add_argument("--method", choices=["brute", "propagate", "both"], default=None)
    pb.set_defaults(func=_cmd_bound_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"precondition violation: {exc}", file=sys.stderr)
        return 2
    except BudgetRefusal as exc:
        print(f"budget refusal: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())
