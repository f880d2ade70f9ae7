"""Core graph, digraph and orientation types plus the primitives built on them.

All types are immutable after construction and index vertices by ints from a
ground set [n].  Adjacency is stored as one arbitrary-precision bitmask per
vertex, so n is capped only by memory; the fast path is small n where each
row fits a machine word or two.  Deleting vertices never renumbers: an
object keeps its ground set size and remembers which vertices are active
through the ``verts`` mask, so set-valued arguments (A, B, X, ...) compose
across derived objects without index translation.

Serialization is a plain-text edge list: a header line ``n <count>`` with
the ground set size, then one line per edge, ``u v`` for an undirected edge
or ``u > v`` for an arc, 0-indexed and whitespace separated.  Lines starting
with ``#`` are comments; a ``# verts: ...`` comment preserves active vertex
sets that differ from the full ground set.
"""

from __future__ import annotations

from typing import IO, Iterable, Iterator, Sequence

from .bitsets import as_mask, bits, full_mask, mask_of, size
from .errors import PreconditionError


class Graph:
    """Undirected simple graph: symmetric bitmask adjacency, no loops."""

    __slots__ = ("n", "_adj", "_verts")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), verts=None):
        if n < 0:
            raise PreconditionError("vertex count must be nonnegative")
        self.n = n
        vm = full_mask(n) if verts is None else as_mask(verts, n)
        if vm >> n:
            raise PreconditionError("verts outside ground set")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise PreconditionError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u},{v}) outside ground set")
            if not ((vm >> u) & 1 and (vm >> v) & 1):
                raise PreconditionError(f"edge ({u},{v}) touches inactive vertex")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._adj = tuple(adj)
        self._verts = vm

    @classmethod
    def _from_rows(cls, n: int, rows: Sequence[int], verts: int) -> "Graph":
        g = cls.__new__(cls)
        g.n = n
        g._adj = tuple(rows)
        g._verts = verts
        return g

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        fm = full_mask(n)
        return cls._from_rows(n, [fm ^ (1 << u) for u in range(n)], fm)

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @property
    def verts(self) -> int:
        return self._verts

    def num_vertices(self) -> int:
        return size(self._verts)

    def adj(self, u: int) -> int:
        return self._adj[u]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._adj[u] >> v) & 1)

    def e(self) -> int:
        return sum(size(r) for r in self._adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in bits(self._verts):
            for v in bits(self._adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def degree(self, u: int) -> int:
        return size(self._adj[u])

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v or self.has_edge(u, v):
            raise PreconditionError(f"cannot add edge ({u},{v})")
        rows = list(self._adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._from_rows(self.n, rows, self._verts | (1 << u) | (1 << v))

    def induced(self, keep) -> "Graph":
        """Induced subgraph on the given vertex set, labels preserved."""
        keep = as_mask(keep, self.n) & self._verts
        rows = [self._adj[u] & keep if (keep >> u) & 1 else 0 for u in range(self.n)]
        return Graph._from_rows(self.n, rows, keep)

    def padded(self, n2: int) -> "Graph":
        """Same graph over an enlarged ground set [n2]; new ids stay inactive."""
        if n2 <= self.n:
            return self
        return Graph._from_rows(n2, list(self._adj) + [0] * (n2 - self.n), self._verts)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._verts == other._verts
            and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._verts, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.e()})"


class Digraph:
    """Directed graph without loops; antiparallel arc pairs are allowed."""

    __slots__ = ("n", "_succ", "_pred", "_verts")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = (), verts=None):
        if n < 0:
            raise PreconditionError("vertex count must be nonnegative")
        self.n = n
        vm = full_mask(n) if verts is None else as_mask(verts, n)
        if vm >> n:
            raise PreconditionError("verts outside ground set")
        succ = [0] * n
        pred = [0] * n
        for u, v in arcs:
            if u == v:
                raise PreconditionError(f"self-arc at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"arc ({u},{v}) outside ground set")
            if not ((vm >> u) & 1 and (vm >> v) & 1):
                raise PreconditionError(f"arc ({u},{v}) touches inactive vertex")
            succ[u] |= 1 << v
            pred[v] |= 1 << u
        self._succ = tuple(succ)
        self._pred = tuple(pred)
        self._verts = vm

    @classmethod
    def _from_rows(cls, n: int, succ: Sequence[int], verts: int) -> "Digraph":
        d = cls.__new__(cls)
        d.n = n
        d._succ = tuple(succ)
        pred = [0] * n
        for u in range(n):
            for v in bits(succ[u]):
                pred[v] |= 1 << u
        d._pred = tuple(pred)
        d._verts = verts
        return d

    @property
    def verts(self) -> int:
        return self._verts

    def num_vertices(self) -> int:
        return size(self._verts)

    def succ(self, u: int) -> int:
        return self._succ[u]

    def pred(self, u: int) -> int:
        return self._pred[u]

    def has_arc(self, u: int, v: int) -> bool:
        return bool((self._succ[u] >> v) & 1)

    def num_arcs(self) -> int:
        return sum(size(r) for r in self._succ)

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u in bits(self._verts):
            for v in bits(self._succ[u]):
                yield u, v

    def reverse(self) -> "Digraph":
        d = Digraph.__new__(Digraph)
        d.n = self.n
        d._succ = self._pred
        d._pred = self._succ
        d._verts = self._verts
        return d

    def underlying_graph(self) -> Graph:
        rows = [self._succ[u] | self._pred[u] for u in range(self.n)]
        return Graph._from_rows(self.n, rows, self._verts)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self._verts == other._verts
            and self._succ == other._succ
        )

    def __hash__(self) -> int:
        return hash((self.n, self._verts, self._succ))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.num_arcs()})"


FORWARD = 1
BACKWARD = -1
UNSET = 0


class Orientation:
    """A (possibly partial) edge-direction assignment over a base graph.

    Each base edge {u,v} carries at most one arc.  ``forward`` on edge
    {u,v} with u < v means the arc u -> v.  A complete orientation has an
    arc on every edge; its digraph then has exactly e(base) arcs and no
    antiparallel pair.
    """

    __slots__ = ("base", "_out")

    def __init__(self, base: Graph, arcs: Iterable[tuple[int, int]] = ()):
        self.base = base
        out = [0] * base.n
        for u, v in arcs:
            if not base.has_edge(u, v):
                raise PreconditionError(f"arc ({u},{v}) is not over a base edge")
            if (out[u] >> v) & 1 or (out[v] >> u) & 1:
                raise PreconditionError(f"edge ({u},{v}) oriented twice")
            out[u] |= 1 << v
        self._out = tuple(out)

    @classmethod
    def _from_rows(cls, base: Graph, out: Sequence[int]) -> "Orientation":
        o = cls.__new__(cls)
        o.base = base
        o._out = tuple(out)
        return o

    def direction(self, u: int, v: int) -> int:
        """FORWARD if arc u->v is assigned, BACKWARD if v->u, else UNSET."""
        if not self.base.has_edge(u, v):
            raise PreconditionError(f"({u},{v}) is not a base edge")
        if (self._out[u] >> v) & 1:
            return FORWARD
        if (self._out[v] >> u) & 1:
            return BACKWARD
        return UNSET

    def out_mask(self, u: int) -> int:
        return self._out[u]

    def assigned_count(self) -> int:
        return sum(size(r) for r in self._out)

    def is_complete(self) -> bool:
        return self.assigned_count() == self.base.e()

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u in bits(self.base.verts):
            for v in bits(self._out[u]):
                yield u, v

    def to_digraph(self) -> Digraph:
        return Digraph._from_rows(self.base.n, self._out, self.base.verts)

    def restricted_to(self, keep) -> "Orientation":
        """Restriction to the induced base subgraph on a vertex set."""
        keep = as_mask(keep, self.base.n)
        sub = self.base.induced(keep)
        rows = [self._out[u] & keep if (keep >> u) & 1 else 0 for u in range(self.base.n)]
        return Orientation._from_rows(sub, rows)

    def padded(self, n2: int) -> "Orientation":
        """Same orientation over an enlarged ground set [n2]."""
        if n2 <= self.base.n:
            return self
        return Orientation._from_rows(
            self.base.padded(n2), list(self._out) + [0] * (n2 - self.base.n)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Orientation)
            and self.base == other.base
            and self._out == other._out
        )

    def __hash__(self) -> int:
        return hash((self.base, self._out))

    def __repr__(self) -> str:
        state = "complete" if self.is_complete() else f"{self.assigned_count()}/{self.base.e()}"
        return f"Orientation({self.base!r}, {state})"


def power_digraph(d: Digraph, r: int) -> Digraph:
    """Digraph with an arc (u,v) iff d has a simple directed r-edge path u->v.

    Paths visit distinct vertices, so the output never has self-arcs; it may
    contain antiparallel pairs.  r = 0 is rejected as degenerate.
    """
    if r < 1:
        raise PreconditionError("path length r must be >= 1")
    if r == 1:
        return Digraph._from_rows(d.n, d._succ, d._verts)
    succ = d._succ
    rows = [0] * d.n

    def extend(current: int, depth: int, visited: int, acc: list[int]) -> None:
        nxt = succ[current] & ~visited
        if depth == r - 1:
            acc.append(nxt)
            return
        for w in bits(nxt):
            extend(w, depth + 1, visited | (1 << w), acc)

    for s in bits(d._verts):
        acc: list[int] = []
        extend(s, 0, 1 << s, acc)
        row = 0
        for m in acc:
            row |= m
        rows[s] = row
    return Digraph._from_rows(d.n, rows, d._verts)


def has_directed_cycle(d: Digraph, k: int) -> bool:
    """True iff d contains a simple directed cycle with exactly k arcs.

    Search is rooted at the smallest vertex of the cycle: from each root s
    only vertices above s are explored, which visits every cycle once.
    k larger than the number of active vertices is trivially False.
    """
    if k < 2:
        raise PreconditionError("cycle length k must be >= 2")
    if k > d.num_vertices():
        return False
    succ = d._succ

    def dfs(s: int, u: int, depth: int, visited: int, allowed: int) -> bool:
        if depth == k - 1:
            return bool((succ[u] >> s) & 1)
        for w in bits(succ[u] & allowed & ~visited):
            if dfs(s, w, depth + 1, visited | (1 << w), allowed):
                return True
        return False

    for s in bits(d._verts):
        above = d._verts & ~full_mask(s + 1)
        if dfs(s, s, 0, 1 << s, above):
            return True
    return False


def bidir_degree(d: Digraph, a: int, B) -> int:
    """Arcs between a and B in either direction; antiparallel pairs count twice."""
    Bm = as_mask(B, d.n)
    if (Bm >> a) & 1:
        raise PreconditionError(f"vertex {a} must not lie in B")
    return size(d._succ[a] & Bm) + size(d._pred[a] & Bm)


def bidir_edge_count(d: Digraph, A, B) -> int:
    """Arcs between disjoint sets A and B in either direction."""
    Am = as_mask(A, d.n)
    Bm = as_mask(B, d.n)
    if Am & Bm:
        raise PreconditionError("A and B must be disjoint")
    return sum(size(d._succ[a] & Bm) + size(d._pred[a] & Bm) for a in bits(Am))


def remove_vertices(g, X):
    """Induced subobject on the active vertices minus X; labels preserved."""
    if isinstance(g, Graph):
        keep = g.verts & ~as_mask(X, g.n)
        return g.induced(keep)
    if isinstance(g, Digraph):
        keep = g.verts & ~as_mask(X, g.n)
        rows = [g._succ[u] & keep if (keep >> u) & 1 else 0 for u in range(g.n)]
        return Digraph._from_rows(g.n, rows, keep)
    if isinstance(g, Orientation):
        return g.restricted_to(g.base.verts & ~as_mask(X, g.base.n))
    raise PreconditionError(f"unsupported object {type(g).__name__}")


# ---------------------------------------------------------------------------
# Edge-list serialization
# ---------------------------------------------------------------------------


def write_edge_list(obj, f: IO[str], comments: Iterable[str] = ()) -> None:
    """Write a Graph, Digraph or Orientation in the plain-text format.

    Orientations write assigned arcs as ``u > v`` and unset edges as plain
    ``u v`` lines, so partial orientations round-trip.
    """
    for c in comments:
        f.write(f"# {c}\n")
    if isinstance(obj, Graph):
        n, verts = obj.n, obj.verts
        lines = [f"{u} {v}" for u, v in obj.edges()]
    elif isinstance(obj, Digraph):
        n, verts = obj.n, obj.verts
        lines = [f"{u} > {v}" for u, v in obj.arcs()]
    elif isinstance(obj, Orientation):
        n, verts = obj.base.n, obj.base.verts
        lines = [f"{u} > {v}" for u, v in obj.arcs()]
        for u, v in obj.base.edges():
            if obj.direction(u, v) == UNSET:
                lines.append(f"{u} {v}")
    else:
        raise PreconditionError(f"unsupported object {type(obj).__name__}")
    if verts != full_mask(n):
        f.write("# verts: " + " ".join(str(v) for v in bits(verts)) + "\n")
    f.write(f"n {n}\n")
    for line in lines:
        f.write(line + "\n")


def _parse_edge_lines(f: IO[str]):
    n = None
    verts = None
    undirected: list[tuple[int, int]] = []
    arcs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(f, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("verts:"):
                verts = mask_of(int(t) for t in body[len("verts:"):].split())
            continue
        parts = line.split()
        if parts[0] == "n":
            n = int(parts[1])
            continue
        if n is None:
            raise PreconditionError(f"line {lineno}: header 'n <count>' must come first")
        if len(parts) == 3 and parts[1] == ">":
            arcs.append((int(parts[0]), int(parts[2])))
        elif len(parts) == 2:
            undirected.append((int(parts[0]), int(parts[1])))
        else:
            raise PreconditionError(f"line {lineno}: cannot parse {line!r}")
    if n is None:
        raise PreconditionError("missing 'n <count>' header")
    return n, verts, undirected, arcs


def read_graph(f: IO[str]) -> Graph:
    n, verts, undirected, arcs = _parse_edge_lines(f)
    if arcs:
        raise PreconditionError("graph file contains arc lines")
    return Graph(n, undirected, verts=verts)


def read_digraph(f: IO[str]) -> Digraph:
    n, verts, undirected, arcs = _parse_edge_lines(f)
    if undirected:
        raise PreconditionError("digraph file contains undirected lines")
    return Digraph(n, arcs, verts=verts)


def read_orientation(f: IO[str]) -> Orientation:
    """Read an orientation: ``u > v`` lines are arcs, ``u v`` lines unset edges."""
    n, verts, undirected, arcs = _parse_edge_lines(f)
    edges = undirected + arcs
    base = Graph(n, edges, verts=verts)
    return Orientation(base, arcs)
