"""Seeded, reproducible samplers for random graphs and orientations.

Randomness contract: every sampler draws from a Philox4x64 counter-based
generator keyed by (seed, purpose tag), and consumes one double per
candidate pair/edge in lexicographic (min, max) order.  The indicator of a
pair therefore depends only on (seed, position of the pair in that fixed
enumeration), never on evaluation order, and identical inputs reproduce
bit-identical samples across runs and platforms.
"""

from __future__ import annotations

import numpy as np

from .bitsets import as_mask, bits
from .errors import PreconditionError
from .graphs import Graph, Orientation

_TAG_GNP = 0x67_6E_70  # "gnp"
_TAG_EXTENSION = 0x65_78_74  # "ext"
_TAG_ORIENT = 0x6F_72_69  # "ori"

_MAX_SEED = 2**64


def _check_seed(seed: int) -> int:
    if not isinstance(seed, int) or not (0 <= seed < _MAX_SEED):
        raise PreconditionError("seed must be a 64-bit unsigned integer")
    return seed


def _generator(seed: int, tag: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=[seed, tag]))


def sample_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi sample: each of the C(n,2) pairs present with probability p."""
    _check_seed(seed)
    if not (0.0 <= p <= 1.0):
        raise PreconditionError("p must lie in [0, 1]")
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    gen = _generator(seed, _TAG_GNP)
    if n <= 1024:
        m = n * (n - 1) // 2
        u = gen.random(m)
        rows = [0] * n
        idx = 0
        for a in range(n):
            width = n - 1 - a
            seg = u[idx : idx + width]
            idx += width
            row = 0
            for off in np.flatnonzero(seg < p):
                row |= 1 << (a + 1 + int(off))
            rows[a] |= row
            for b in bits(row):
                rows[b] |= 1 << a
        return Graph._from_rows(n, rows, (1 << n) - 1)
    # Large n: assemble through a packed boolean matrix.
    upper = np.zeros((n, n), dtype=bool)
    for a in range(n):
        width = n - 1 - a
        if width:
            upper[a, a + 1 :] = gen.random(width) < p
    fullm = upper | upper.T
    packed = np.packbits(fullm, axis=1, bitorder="little")
    rows = [int.from_bytes(packed[a].tobytes(), "little") for a in range(n)]
    return Graph._from_rows(n, rows, (1 << n) - 1)


def sample_extension(A, h: Graph, p: float, seed: int) -> Graph:
    """Random graph fixing h and adding A: pairs outside C(V(h),2) appear w.p. p.

    A must be disjoint from the active vertices of h and lie inside h's
    ground set.  The output shares the ground set; its active vertices are
    A together with V(h), and its restriction to V(h) equals h exactly.
    """
    _check_seed(seed)
    if not (0.0 <= p <= 1.0):
        raise PreconditionError("p must lie in [0, 1]")
    Am = as_mask(A, h.n)
    if Am >> h.n:
        raise PreconditionError("A outside ground set of h")
    if Am & h.verts:
        raise PreconditionError("A overlaps the vertices of h")
    new_verts = Am | h.verts
    vlist = list(bits(new_verts))
    pairs = [
        (u, v)
        for i, u in enumerate(vlist)
        for v in vlist[i + 1 :]
        if (Am >> u) & 1 or (Am >> v) & 1
    ]
    gen = _generator(seed, _TAG_EXTENSION)
    u = gen.random(len(pairs))
    rows = [h.adj(x) for x in range(h.n)]
    for i in np.flatnonzero(u < p):
        a, b = pairs[int(i)]
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return Graph._from_rows(h.n, rows, new_verts)


def sample_orientation(g: Graph, seed: int) -> Orientation:
    """Complete orientation of g, each edge directed by an independent fair bit."""
    _check_seed(seed)
    edges = list(g.edges())
    gen = _generator(seed, _TAG_ORIENT)
    u = gen.random(len(edges))
    out = [0] * g.n
    for i, (a, b) in enumerate(edges):
        if u[i] < 0.5:
            out[a] |= 1 << b
        else:
            out[b] |= 1 << a
    return Orientation._from_rows(g, out)
