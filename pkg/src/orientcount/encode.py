"""Container-building encoding of orientations that extend a fixed oriented host.

Given an r-frame (A, H, B, X) with r >= 2, a complete orientation of H, and
a complete orientation of a graph on A united with V(H) extending it, the
encoder processes each hub a in A independently: it repeatedly picks the
unused host vertex with the largest bidirectional (r-1)-power degree into
the current target set (smallest label on ties), orients the candidate
edge {a, v} toward the side holding at least half of the power
neighborhood, and then either records the arc in both the fingerprint T
and the container C (if the input orientation really contains it),
shrinking the target set by the picked vertex's power neighborhood, or
records the reversed arc in C only.  Unpicked host vertices contribute both
arcs to C, which is why C may hold antiparallel pairs.

The pass is deterministic, and T determines C: the input orientation is
consulted only through "is this candidate arc present" tests, whose
positive answers are exactly the arcs of T.

Majority rule detail: by default the comparison uses set cardinalities of
the power neighborhoods restricted to the current target set (a vertex
that is both in- and out-neighbor counts once).  Degree-sum semantics
(antiparallel power arcs counted twice) are equally defensible, so encode
exposes them as an alternative ``majority`` mode for sensitivity testing;
the active rule is recorded in the output metadata.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .bitsets import bits, size
from .density import Frame, Params, validate_frame
from .errors import PreconditionError
from .graphs import Digraph, Graph, Orientation, power_digraph, remove_vertices


@dataclass(frozen=True)
class EncodeInput:
    """Frame, oriented host, and a complete extension on A united with V(H)."""

    frame: Frame
    h_orient: Orientation
    g: Graph
    g_orient: Orientation


class TraceStep(NamedTuple):
    v: int
    arc: tuple[int, int]
    branch: str  # "kept" (arc present, goes to T and C) or "reversed" (C only)
    b_size: int


@dataclass(frozen=True)
class EncodeOutput:
    fingerprint: Digraph
    container: Digraph
    per_a_trace: dict[int, list[TraceStep]]
    hubs: int  # mask of A
    hosts: int  # mask of V(H)
    L: int
    trivial: bool
    metadata: dict = field(default_factory=dict)


def _validate_input(inp: EncodeInput, params: Params) -> None:
    f = inp.frame
    if not validate_frame(f, params):
        raise PreconditionError("invalid frame")
    if f.r < 2:
        raise PreconditionError("encode requires frame r >= 2")
    if inp.h_orient.base != f.H:
        raise PreconditionError("h_orient must orient exactly the frame's H")
    if not inp.h_orient.is_complete():
        raise PreconditionError("h_orient must be complete")
    if inp.g.verts != (f.A | f.H.verts):
        raise PreconditionError("g must live on A united with V(H)")
    if inp.g.induced(f.H.verts) != f.H:
        raise PreconditionError("g restricted to V(H) must equal H")
    if inp.g_orient.base != inp.g or not inp.g_orient.is_complete():
        raise PreconditionError("g_orient must be a complete orientation of g")
    if inp.g_orient.restricted_to(f.H.verts) != inp.h_orient:
        raise PreconditionError("g_orient must extend h_orient")


def encode(
    inp: EncodeInput, params: Params, majority: str = "set-cardinality"
) -> EncodeOutput:
    """Run the encoding pass; returns fingerprint T, container C and the trace.

    When L = |V(H)| - |B| - |X| - ceil(alpha) is negative the host is too
    small for the pass and the result is the flagged trivial container: the
    complete bipartite digraph between A and V(H) with an empty fingerprint.

    ``majority`` selects the orientation rule for the candidate edge:
    "set-cardinality" (default) compares |N+| against half of |N+ u N-|;
    "degree-sum" compares the out-degree against half the bidirectional
    degree, counting antiparallel power arcs twice.
    """
    if majority not in ("set-cardinality", "degree-sum"):
        raise PreconditionError("majority must be set-cardinality or degree-sum")
    _validate_input(inp, params)
    f = inp.frame
    n = inp.g.n
    hosts = f.H.verts
    metadata = {"majority_rule": majority, "tie_break": "smallest-label"}
    L = size(hosts) - size(f.B) - size(f.X) - params.a_prime_size

    t_rows = [0] * n
    c_rows = [0] * n

    if L < 0:
        for a in bits(f.A):
            for v in bits(hosts):
                c_rows[a] |= 1 << v
                c_rows[v] |= 1 << a
        return EncodeOutput(
            fingerprint=Digraph._from_rows(n, t_rows, inp.g.verts),
            container=Digraph._from_rows(n, c_rows, inp.g.verts),
            per_a_trace={},
            hubs=f.A,
            hosts=hosts,
            L=L,
            trivial=True,
            metadata=metadata,
        )

    P = power_digraph(remove_vertices(inp.h_orient.to_digraph(), f.X), f.r - 1)
    pool0 = hosts & ~(f.B | f.X)
    g_out = inp.g_orient.out_mask
    trace: dict[int, list[TraceStep]] = {}

    for a in bits(f.A):
        b_cur = f.B
        chosen = 0
        steps: list[TraceStep] = []
        for _ in range(L):
            best_v = -1
            best_d = -1
            for v in bits(pool0 & ~chosen):
                dv = size(P.succ(v) & b_cur) + size(P.pred(v) & b_cur)
                if dv > best_d:
                    best_d = dv
                    best_v = v
            v = best_v
            n_plus = P.succ(v) & b_cur
            n_minus = P.pred(v) & b_cur
            if majority == "set-cardinality":
                toward_hub = 2 * size(n_plus) >= size(n_plus | n_minus)
            else:
                toward_hub = 2 * size(n_plus) >= size(n_plus) + size(n_minus)
            arc = (a, v) if toward_hub else (v, a)
            if (g_out(arc[0]) >> arc[1]) & 1:
                t_rows[arc[0]] |= 1 << arc[1]
                c_rows[arc[0]] |= 1 << arc[1]
                b_cur &= ~(P.succ(v) | P.pred(v))
                branch = "kept"
            else:
                c_rows[arc[1]] |= 1 << arc[0]
                branch = "reversed"
            steps.append(TraceStep(v, arc, branch, size(b_cur)))
            chosen |= 1 << v
        for v in bits(hosts & ~chosen):
            c_rows[a] |= 1 << v
            c_rows[v] |= 1 << a
        trace[a] = steps

    return EncodeOutput(
        fingerprint=Digraph._from_rows(n, t_rows, inp.g.verts),
        container=Digraph._from_rows(n, c_rows, inp.g.verts),
        per_a_trace=trace,
        hubs=f.A,
        hosts=hosts,
        L=L,
        trivial=False,
        metadata=metadata,
    )


def verify_T_determines_C(
    in1: EncodeInput,
    in2: EncodeInput,
    params: Params,
    majority: str = "set-cardinality",
) -> bool:
    """Equal fingerprints must give equal containers for inputs sharing a
    frame and host orientation; returns whether the implication holds."""
    if in1.frame != in2.frame or in1.h_orient != in2.h_orient:
        raise PreconditionError("inputs must share frame and host orientation")
    out1 = encode(in1, params, majority=majority)
    out2 = encode(in2, params, majority=majority)
    if out1.fingerprint != out2.fingerprint:
        return True
    return out1.container == out2.container


def fingerprint_degree_report(out: EncodeOutput, params: Params) -> dict[int, int]:
    """Fingerprint degree (in + out arcs) of every hub vertex."""
    T = out.fingerprint
    return {a: size(T.succ(a)) + size(T.pred(a)) for a in bits(out.hubs)}


def antiparallel_pairs(d: Digraph) -> int:
    """Number of unordered pairs carrying arcs in both directions."""
    return sum(size(d.succ(u) & d.pred(u)) for u in bits(d.verts)) // 2


def container_family_stats(outputs: list[EncodeOutput], params: Params) -> tuple[int, int]:
    """Distinct containers and the worst antiparallel-pair count among them."""
    distinct = set()
    worst = 0
    for out in outputs:
        distinct.add(frozenset(out.container.arcs()))
        worst = max(worst, antiparallel_pairs(out.container))
    return len(distinct), worst
