"""Graph containers for independent sets via the max-degree fingerprint walk.

Configuration (beta, q, R) is admissible for an n-vertex graph when
R >= e^(-beta q) n and every vertex subset U with |U| >= R spans at least
beta * C(|U|, 2) edges.  Under those hypotheses every independent set I is
assigned a fingerprint S (|S| <= q) and a container S united with the
surviving candidate set; the container has size at most R + q, the family
of distinct containers has size at most sum_{i<=q} C(n, i), and the
container is reconstructible from (graph, fingerprint, config) alone.

To build containers inside a vertex neighborhood instead of globally, pass
``g.induced(neighborhood_mask)``; labels are preserved so the outputs
compose either way.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Optional

from .bitsets import bits, mask_of, size
from .density import Params, _iceil
from .errors import BudgetRefusal, PreconditionError
from .graphs import Graph, Orientation, power_digraph, remove_vertices

ENUM_VERTEX_LIMIT = 20


@dataclass(frozen=True)
class KWConfig:
    beta: float
    q: int
    R: float

    def __post_init__(self):
        if not (0.0 <= self.beta <= 1.0):
            raise PreconditionError("beta must lie in [0, 1]")
        if self.q < 0:
            raise PreconditionError("q must be nonnegative")

    def admissible_for(self, n: int) -> bool:
        return self.R >= math.exp(-self.beta * self.q) * n


@dataclass(frozen=True)
class ContainerFamily:
    """Distinct containers plus the fingerprint map independent set ->
    (fingerprint mask, container index)."""

    containers: list[int]
    fingerprints: dict[int, tuple[int, int]]


def canonical_kw_config(params: Params) -> KWConfig:
    """The constant bundle used when containing power-graph neighborhoods:

        beta = p^(1/ell) / (2 (ell+1))
        q    = ceil(2 (ell+1) log(n) / p^(1/ell))
        R    = (ell + 1) * alpha

    beta * q >= log n gives e^(-beta q) n <= 1, so the bundle is admissible
    whenever (ell+1) * alpha >= 1; the density hypothesis itself is what
    the averaging check supplies on locally-dense inputs.
    """
    root = params.p ** (1.0 / params.ell)
    beta = root / (2 * (params.ell + 1))
    q = math.ceil(2 * (params.ell + 1) * math.log(params.n) / root)
    return KWConfig(beta=beta, q=q, R=(params.ell + 1) * params.alpha)


def _induced_edges(g: Graph, U: int) -> int:
    return sum(size(g.adj(u) & U) for u in bits(U)) // 2


def kw_check_hypothesis(
    g: Graph, cfg: KWConfig, budget: int = 200_000, seed: int = 0
) -> bool:
    """Every U with |U| >= R spans at least beta * C(|U|,2) edges.

    Exhaustive for graphs with at most ENUM_VERTEX_LIMIT active vertices,
    otherwise checked on ``budget`` seeded uniform subsets per size.
    """
    vm = g.verts
    nv = size(vm)
    smin = max(_iceil(cfg.R), 0)
    vlist = list(bits(vm))
    if nv <= ENUM_VERTEX_LIMIT:
        for s in range(smin, nv + 1):
            need = cfg.beta * math.comb(s, 2)
            for Uc in combinations(vlist, s):
                if _induced_edges(g, mask_of(Uc)) < need:
                    return False
        return True
    rng = random.Random(seed)
    sizes = list(range(smin, nv + 1))
    if not sizes:
        return True
    for _ in range(budget):
        s = rng.choice(sizes)
        U = mask_of(rng.sample(vlist, s))
        if _induced_edges(g, U) < cfg.beta * math.comb(s, 2):
            return False
    return True


def _max_degree_vertex(g: Graph, U: int) -> int:
    best_v = -1
    best_d = -1
    for v in bits(U):
        dv = size(g.adj(v) & U)
        if dv > best_d:
            best_d = dv
            best_v = v
    return best_v


def _kw_walk(g: Graph, members: int, cfg: KWConfig) -> tuple[int, int]:
    """Max-degree deletion walk; returns (selected fingerprint, container)."""
    U = g.verts
    S = 0
    picked = 0
    while picked < cfg.q and size(U) > cfg.R:
        u = _max_degree_vertex(g, U)
        if (members >> u) & 1:
            S |= 1 << u
            picked += 1
            U &= ~((1 << u) | g.adj(u))
        else:
            U &= ~(1 << u)
    return S, S | U


def kw_fingerprint(g: Graph, I, cfg: KWConfig) -> tuple[int, int]:
    """Fingerprint and container of an independent set.

    Deterministic: repeatedly take the max-degree vertex of the candidate
    set (smallest label on ties); members of I join the fingerprint and
    drop their neighborhoods, non-members are just deleted; stop once q
    members were taken or at most R candidates remain.  Guarantees
    I <= container and |fingerprint| <= q; admissibility of cfg for g is
    the caller's obligation (see kw_check_hypothesis).
    """
    Im = I if isinstance(I, int) else mask_of(I)
    if Im & ~g.verts:
        raise PreconditionError("I contains inactive vertices")
    for u in bits(Im):
        if g.adj(u) & Im:
            raise PreconditionError("I is not independent")
    return _kw_walk(g, Im, cfg)


def kw_reconstruct(g: Graph, S: int, cfg: KWConfig) -> int:
    """Container rebuilt from the fingerprint alone (no independent set)."""
    return _kw_walk(g, S, cfg)[1]


def _independent_sets(g: Graph) -> list[int]:
    vlist = list(bits(g.verts))
    out: list[int] = []

    def rec(i: int, cur: int, forbidden: int) -> None:
        if i == len(vlist):
            out.append(cur)
            return
        v = vlist[i]
        rec(i + 1, cur, forbidden)
        if not ((forbidden >> v) & 1):
            rec(i + 1, cur | (1 << v), forbidden | g.adj(v))

    rec(0, 0, 0)
    return out


def kw_family(
    g: Graph,
    cfg: KWConfig,
    sample_budget: Optional[int] = None,
    seed: int = 0,
) -> ContainerFamily:
    """Container family over all independent sets of g.

    Exhaustive for at most ENUM_VERTEX_LIMIT active vertices; beyond that a
    sample_budget must be supplied and the family covers that many seeded
    random independent sets (coverage properties then hold for the sampled
    sets only).
    """
    nv = g.num_vertices()
    if nv > ENUM_VERTEX_LIMIT and sample_budget is None:
        raise BudgetRefusal(
            f"{nv} vertices exceed the exhaustive enumeration limit "
            f"{ENUM_VERTEX_LIMIT}; pass sample_budget for sampled mode"
        )
    if nv <= ENUM_VERTEX_LIMIT:
        all_sets = _independent_sets(g)
    else:
        rng = random.Random(seed)
        vlist = list(bits(g.verts))
        found = set()
        for _ in range(sample_budget):
            order = rng.sample(vlist, len(vlist))
            cur = 0
            forbidden = 0
            for v in order:
                if not ((forbidden >> v) & 1) and rng.random() < 0.5:
                    cur |= 1 << v
                    forbidden |= g.adj(v)
            found.add(cur)
        all_sets = sorted(found)
    containers: list[int] = []
    index: dict[int, int] = {}
    fingerprints: dict[int, tuple[int, int]] = {}
    for I in all_sets:
        S, cont = _kw_walk(g, I, cfg)
        if cont not in index:
            index[cont] = len(containers)
            containers.append(cont)
        fingerprints[I] = (S, index[cont])
    return ContainerFamily(containers, fingerprints)


class AveragingResult(NamedTuple):
    lhs: int
    rhs: float
    ok: bool


def averaging_check(o: Orientation, U, X, params: Params) -> AveragingResult:
    """Edge count of the ell-power of o minus X induced on U against
    p^(1/ell) * C(|U|,2) / (2 ell + 2); antiparallel power-arcs count once.

    Meaningful as a guaranteed inequality only when o is ell-locally-dense;
    the caller supplies that verdict.  X may be smaller than the rounded
    alpha: deleting fewer vertices only adds power edges, so the guarantee
    carries over.
    """
    Um = U if isinstance(U, int) else mask_of(U)
    Xm = X if isinstance(X, int) else mask_of(X)
    if Um & Xm:
        raise PreconditionError("U and X must be disjoint")
    if not o.is_complete():
        raise PreconditionError("orientation must be complete")
    if size(Um) < _iceil((params.ell + 1) * params.alpha):
        raise PreconditionError("|U| must be at least (ell + 1) * alpha")
    if size(Xm) > params.a_prime_size:
        raise PreconditionError("|X| must be at most the rounded alpha")
    P = power_digraph(remove_vertices(o.to_digraph(), Xm), params.ell)
    lhs = 0
    for u in bits(Um):
        both = (P.succ(u) | P.pred(u)) & Um
        lhs += size(both >> (u + 1))
    nu = size(Um)
    rhs = params.p ** (1.0 / params.ell) * math.comb(nu, 2) / (2 * params.ell + 2)
    return AveragingResult(lhs, rhs, lhs >= rhs)
