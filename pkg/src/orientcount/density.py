"""Parameter bundle and checkers for locally-dense orientations and frames.

The constant bundle ties everything to alpha = alpha_scale * log(n) / p
(natural log).  alpha_scale defaults to 64, the analysis constant; scaled
desk experiments shrink it so that admissible set sizes become small enough
to enumerate.  alpha is rarely an integer, so derived sizes are rounded
once, in one place, and conservatively:

    |A'| = ceil(alpha)          |A| = ceil(alpha / 2)
    ceil(r * alpha) <= |B| <= ceil(ell * alpha)
    |X| <= floor((ell + 1 - r) * alpha)

A complete orientation is r-locally-dense when every admissible disjoint
triple (A', B, X) has at least (1/2) * p^((ell-r+1)/ell) * |A'| * |B| arcs
(in either direction, antiparallel counted twice) between A' and B in the
r-th power of the orientation with X deleted.  Checking is exhaustive when
the number of admissible triples fits the caller's budget and sampled
otherwise; a returned witness always certifies sparsity, while a sampled
"dense" verdict is only probabilistic.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Optional

from .bitsets import bits, mask_of, size
from .errors import PreconditionError
from .graphs import (
    Digraph,
    Graph,
    Orientation,
    bidir_degree,
    power_digraph,
    remove_vertices,
)

_EPS = 1e-9


def _iceil(x: float) -> int:
    return math.ceil(x - _EPS)


def _ifloor(x: float) -> int:
    return math.floor(x + _EPS)


@dataclass(frozen=True)
class Params:
    """Constant bundle: ell = k - 2, edge probability p, ambient n, alpha knob."""

    ell: int
    p: float
    n: int
    alpha_scale: float = 64.0

    def __post_init__(self):
        if self.ell < 1:
            raise PreconditionError("ell must be >= 1")
        if not (0.0 < self.p <= 1.0):
            raise PreconditionError("p must lie in (0, 1]")
        if self.n < 2:
            raise PreconditionError("n must be >= 2 so that alpha > 0")
        if self.alpha_scale <= 0:
            raise PreconditionError("alpha_scale must be positive")

    @property
    def alpha(self) -> float:
        return self.alpha_scale * math.log(self.n) / self.p

    @property
    def outside_regime(self) -> bool:
        """True when p exceeds (2^7 ell)^(-ell), the analyzed parameter range."""
        return self.p > (2.0**7 * self.ell) ** (-self.ell)

    @property
    def a_prime_size(self) -> int:
        return _iceil(self.alpha)

    @property
    def a_size(self) -> int:
        return _iceil(self.alpha / 2)

    def b_min(self, r: int) -> int:
        return _iceil(r * self.alpha)

    @property
    def b_max(self) -> int:
        return _iceil(self.ell * self.alpha)

    def x_max(self, r: int) -> int:
        return _ifloor((self.ell + 1 - r) * self.alpha)

    def density_exponent(self, r: int) -> float:
        return (self.ell - r + 1) / self.ell

    def density_threshold(self, r: int, a_size: int, b_size: int) -> float:
        return 0.5 * self.p ** self.density_exponent(r) * a_size * b_size

    def sparse_threshold(self, r: int, b_size: int) -> float:
        return self.p ** self.density_exponent(r) * b_size


@dataclass(frozen=True)
class Frame:
    """An r-frame (A, H, B, X): hub set A outside H, targets B and cut X inside."""

    A: int
    H: Graph
    B: int
    X: int
    r: int


def validate_frame(f: Frame, params: Params) -> bool:
    """True iff all frame invariants hold under the params' rounded sizes."""
    if not (1 <= f.r <= params.ell):
        return False
    vh = f.H.verts
    if f.A & vh or f.A == 0 or f.A >> f.H.n:
        return False
    if f.B & ~vh or f.X & ~vh or f.B & f.X:
        return False
    if size(f.A) != params.a_size:
        return False
    if not (params.b_min(f.r) <= size(f.B) <= params.b_max):
        return False
    if size(f.X) > params.x_max(f.r):
        return False
    return True


@dataclass(frozen=True)
class DensityVerdict:
    """Outcome of a local-density check.

    witness is a violating (A', B, X) triple of masks and is present iff
    dense is False.  pairs_checked counts evaluated triples ((A', B) pairs
    for r = 1, where X provably cannot matter).  exhaustive says whether
    every admissible triple was covered, making the verdict exact.
    """

    dense: bool
    witness: Optional[tuple[int, int, int]]
    pairs_checked: int
    exhaustive: bool


def _bidir_count(P: Digraph, Am: int, Bm: int) -> int:
    total = 0
    for a in bits(Am):
        total += size(P.succ(a) & Bm) + size(P.pred(a) & Bm)
    return total


def _admissible_triple_count(nv: int, ap: int, bmin: int, bmax: int, xmax: int) -> int:
    total = 0
    for x in range(0, xmax + 1):
        if x > nv:
            break
        cx = math.comb(nv, x)
        rest = nv - x
        if ap > rest:
            continue
        ca = math.comb(rest, ap)
        sb = sum(math.comb(rest - ap, b) for b in range(bmin, min(bmax, rest - ap) + 1))
        total += cx * ca * sb
    return total


def is_r_locally_dense(
    o: Orientation, r: int, params: Params, budget: int, seed: int = 0
) -> DensityVerdict:
    """Decide whether a complete orientation is r-locally-dense.

    Exhaustive when the admissible triple count fits the budget, otherwise
    the verdict comes from ``budget`` seeded uniform triples (uniform over
    admissible size profiles, then uniform subsets).  When no admissible
    triple exists the verdict is vacuously dense with pairs_checked = 0.
    """
    if not (1 <= r <= params.ell):
        raise PreconditionError(f"r must lie in [1, {params.ell}]")
    if not o.is_complete():
        raise PreconditionError("orientation must be complete")
    vm = o.base.verts
    nv = size(vm)
    ap = params.a_prime_size
    bmin, bmax = params.b_min(r), params.b_max
    xmax = params.x_max(r)
    vacuous = ap > nv or bmin > nv - ap or bmin > bmax
    if vacuous:
        return DensityVerdict(True, None, 0, True)
    d = o.to_digraph()
    threshold = params.density_threshold

    if r == 1:
        # Deleting X cannot touch arcs between A' and B, so the verdict is
        # X-independent; cover all (A', B) pairs and report X = empty set.
        total_pairs = math.comb(nv, ap) * sum(
            math.comb(nv - ap, b) for b in range(bmin, min(bmax, nv - ap) + 1)
        )
        vlist = list(bits(vm))
        if total_pairs <= budget:
            checked = 0
            for Ac in combinations(vlist, ap):
                Am = mask_of(Ac)
                restl = [v for v in vlist if not ((Am >> v) & 1)]
                for bsize in range(bmin, min(bmax, len(restl)) + 1):
                    need = threshold(1, ap, bsize)
                    for Bc in combinations(restl, bsize):
                        Bm = mask_of(Bc)
                        checked += 1
                        if _bidir_count(d, Am, Bm) < need:
                            return DensityVerdict(False, (Am, Bm, 0), checked, True)
            return DensityVerdict(True, None, checked, True)
        rng = random.Random(seed)
        for i in range(budget):
            bsize = rng.randint(bmin, min(bmax, nv - ap))
            Ac = rng.sample(vlist, ap)
            Am = mask_of(Ac)
            Bc = rng.sample([v for v in vlist if not ((Am >> v) & 1)], bsize)
            Bm = mask_of(Bc)
            if _bidir_count(d, Am, Bm) < threshold(1, ap, bsize):
                return DensityVerdict(False, (Am, Bm, 0), i + 1, False)
        return DensityVerdict(True, None, budget, False)

    total = _admissible_triple_count(nv, ap, bmin, bmax, xmax)
    if total == 0:
        return DensityVerdict(True, None, 0, True)
    vlist = list(bits(vm))
    if total <= budget:
        checked = 0
        for xsize in range(0, min(xmax, nv) + 1):
            for Xc in combinations(vlist, xsize):
                Xm = mask_of(Xc)
                if nv - xsize < ap + bmin:
                    continue
                P = power_digraph(remove_vertices(d, Xm), r)
                avail = [v for v in vlist if not ((Xm >> v) & 1)]
                for Ac in combinations(avail, ap):
                    Am = mask_of(Ac)
                    restl = [v for v in avail if not ((Am >> v) & 1)]
                    for bsize in range(bmin, min(bmax, len(restl)) + 1):
                        need = threshold(r, ap, bsize)
                        for Bc in combinations(restl, bsize):
                            Bm = mask_of(Bc)
                            checked += 1
                            if _bidir_count(P, Am, Bm) < need:
                                return DensityVerdict(False, (Am, Bm, Xm), checked, True)
        return DensityVerdict(True, None, checked, True)

    rng = random.Random(seed)
    power_cache: dict[int, Digraph] = {}
    for i in range(budget):
        xsize = rng.randint(0, min(xmax, nv - ap - bmin))
        Xm = mask_of(rng.sample(vlist, xsize))
        avail = [v for v in vlist if not ((Xm >> v) & 1)]
        bsize = rng.randint(bmin, min(bmax, len(avail) - ap))
        Am = mask_of(rng.sample(avail, ap))
        Bm = mask_of(rng.sample([v for v in avail if not ((Am >> v) & 1)], bsize))
        P = power_cache.get(Xm)
        if P is None:
            P = power_digraph(remove_vertices(d, Xm), r)
            if len(power_cache) < 4096:
                power_cache[Xm] = P
        if _bidir_count(P, Am, Bm) < threshold(r, ap, bsize):
            return DensityVerdict(False, (Am, Bm, Xm), i + 1, False)
    return DensityVerdict(True, None, budget, False)


def is_sparse_extension(o: Orientation, f: Frame, params: Params) -> bool:
    """True iff every hub a in A has bidirectional r-power degree into B at
    most p^((ell-r+1)/ell) * |B| after deleting X."""
    if not validate_frame(f, params):
        raise PreconditionError("invalid frame")
    if not o.is_complete():
        raise PreconditionError("orientation must be complete")
    if o.base.verts != (f.A | f.H.verts):
        raise PreconditionError("orientation must live on A united with V(H)")
    if o.base.induced(f.H.verts) != f.H:
        raise PreconditionError("orientation's base must restrict to H on V(H)")
    P = power_digraph(remove_vertices(o.to_digraph(), f.X), f.r)
    limit = params.sparse_threshold(f.r, size(f.B))
    return all(bidir_degree(P, a, f.B) <= limit for a in bits(f.A))


class MomentBound(NamedTuple):
    exact: float
    bound: float
    ok: bool


def moment_bound_check(set_size: int, p: float, c: float) -> MomentBound:
    """Closed-form E[c^|S_p|] = (1 - p + p c)^|S| against the bound e^{c p |S|}."""
    if set_size < 0:
        raise PreconditionError("set_size must be nonnegative")
    if not (0.0 <= p <= 1.0):
        raise PreconditionError("p must lie in [0, 1]")
    if c < 0:
        raise PreconditionError("c must be nonnegative")
    base = 1.0 - p + p * c
    try:
        exact = base**set_size
    except OverflowError:
        exact = math.inf
    try:
        bound = math.exp(c * p * set_size)
    except OverflowError:
        bound = math.inf
    return MomentBound(exact, bound, exact <= bound)
