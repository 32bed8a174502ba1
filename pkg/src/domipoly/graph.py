"""Immutable simple graphs stored as per-vertex neighbour bitmasks.

Vertex ``v`` owns bit ``1 << v``; ``Graph.nbrs[v]`` is the open
neighbourhood of ``v`` as an int.  At most 63 vertices are allowed so that a
vertex set fits in one unsigned 64-bit word, which is what the enumeration
code in :mod:`domipoly.oracle` relies on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, TextIO

import numpy as np

from .errors import CapacityError, GraphFormatError, InvalidVertexError

MAX_VERTICES = 63


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _check_capacity(n: int) -> None:
    if n > MAX_VERTICES:
        raise CapacityError(f"{n} vertices exceeds the {MAX_VERTICES}-vertex limit")


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Build instances with :meth:`from_edges` or the family generators rather
    than by hand; the constructor validates symmetry and loop-freeness.
    """

    n: int
    nbrs: tuple[int, ...]

    def __post_init__(self):
        _check_capacity(self.n)
        if len(self.nbrs) != self.n:
            raise ValueError("need one neighbour mask per vertex")
        full = (1 << self.n) - 1
        for v, m in enumerate(self.nbrs):
            if m & ~full:
                raise InvalidVertexError(f"vertex {v} has a neighbour index >= {self.n}")
            if m >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in members(m):
                if not self.nbrs[u] >> v & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        _check_capacity(n)
        nbrs = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertexError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbrs[u] |= 1 << v
            nbrs[v] |= 1 << u
        return cls(n, tuple(nbrs))

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        """The edgeless graph O_n."""
        _check_capacity(n)
        return cls(n, (0,) * n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidVertexError(f"vertex {v} not in 0..{self.n - 1}")

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.nbrs[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.nbrs]

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(members(self.nbrs[v]))

    def closed_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self.nbrs[v] | (1 << v)

    def closed_masks(self) -> list[int]:
        return [m | (1 << v) for v, m in enumerate(self.nbrs)]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.nbrs[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in members(self.nbrs[u]) if u < v]

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.nbrs) // 2

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        m = mask_of(vs)
        return all((self.nbrs[v] | (1 << v)) & m == m for v in vs)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in members(frontier):
                nxt |= self.nbrs[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == self.full_mask

    def components(self) -> list[list[int]]:
        left = self.full_mask
        out = []
        while left:
            seen = left & -left
            frontier = seen
            while frontier:
                nxt = 0
                for v in members(frontier):
                    nxt |= self.nbrs[v]
                frontier = nxt & ~seen
                seen |= nxt
            out.append(members(seen))
            left &= ~seen
        return out

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- structural operations ---------------------------------------------


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    """N[v] = N(v) together with v."""
    return frozenset(members(g.closed_mask(v)))


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Subgraph induced on ``keep``, relabelled in ascending original order."""
    kept = sorted(set(keep))
    for v in kept:
        g._check_vertex(v)
    index = {v: i for i, v in enumerate(kept)}
    nbrs = []
    for v in kept:
        nbrs.append(mask_of(index[u] for u in members(g.nbrs[v]) if u in index))
    return Graph(len(kept), tuple(nbrs))


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    """G - S; survivors keep their relative order."""
    drop = set(s)
    for v in drop:
        g._check_vertex(v)
    return induced_subgraph(g, (v for v in range(g.n) if v not in drop))


def contract_vertex(g: Graph, u: int) -> Graph:
    """G/u: make N(u) a clique, then delete u."""
    g._check_vertex(u)
    nu = g.nbrs[u]
    nbrs = list(g.nbrs)
    for v in members(nu):
        nbrs[v] |= nu & ~(1 << v)
    joined = Graph(g.n, tuple(nbrs))
    return delete_vertices(joined, [u])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    _check_capacity(g1.n + g2.n)
    shifted = tuple(m << g1.n for m in g2.nbrs)
    return Graph(g1.n + g2.n, g1.nbrs + shifted)


def join(g1: Graph, g2: Graph) -> Graph:
    """G1 + G2: the disjoint union plus every edge between the two sides."""
    _check_capacity(g1.n + g2.n)
    left = g1.full_mask
    right = g2.full_mask << g1.n
    nbrs = tuple(m | right for m in g1.nbrs) + tuple((m << g1.n) | left for m in g2.nbrs)
    return Graph(g1.n + g2.n, nbrs)


def corona(g: Graph, h: Graph) -> Graph:
    """G o H: vertex i of G is joined to every vertex of the i-th copy of H.

    The vertices of G keep indices ``0..g.n-1``; copy ``i`` of H occupies
    ``g.n + i*h.n .. g.n + (i+1)*h.n - 1``.
    """
    if g.n < 1:
        raise ValueError("corona needs a host graph with at least one vertex")
    total = g.n * (1 + h.n)
    _check_capacity(total)
    nbrs = list(g.nbrs) + [0] * (g.n * h.n)
    for i in range(g.n):
        base = g.n + i * h.n
        block = ((1 << h.n) - 1) << base
        nbrs[i] |= block
        for j, m in enumerate(h.nbrs):
            nbrs[base + j] = (m << base) | (1 << i)
    return Graph(total, tuple(nbrs))


def edge_count(g: Graph) -> int:
    return g.edge_count()


def independence_number(g: Graph) -> int:
    """Size of a largest independent set, by exhaustive subset search.

    Subsets are grown one vertex at a time: a subset containing vertex ``i``
    as its top element is independent iff the subset below it is and none of
    its members is adjacent to ``i``.
    """
    from .oracle import check_oracle_size

    check_oracle_size(g.n)
    if g.n == 0:
        return 0
    size = 1 << g.n
    idx = np.arange(size, dtype=np.uint64)
    ok = np.ones(size, dtype=bool)
    pop = np.zeros(size, dtype=np.int8)
    for i, m in enumerate(g.nbrs):
        h = 1 << i
        low = idx[:h]
        ok[h:2 * h] = ok[:h] & ((low & np.uint64(m)) == 0)
        pop[h:2 * h] = pop[:h] + 1
    return int(pop[ok].max())


def canonical_form(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Lexicographically least relabelled edge list over all permutations.

    Brute force, so only graphs on at most 8 vertices are accepted.  Two
    graphs are isomorphic iff their canonical forms are equal.
    """
    if g.n > 8:
        raise CapacityError("canonical_form is brute force and limited to 8 vertices")
    edges = g.edges()
    best = None
    for perm in itertools.permutations(range(g.n)):
        relabelled = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or relabelled < best:
            best = relabelled
    return g.n, best or ()


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)


# -- text format -------------------------------------------------------


def format_graph(g: Graph) -> str:
    """First line ``n``, then one ``u v`` line per edge."""
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise GraphFormatError("graph file is empty")
    lineno, first = rows[0]
    if len(first) != 1:
        raise GraphFormatError(f"line {lineno}: expected the vertex count alone")
    try:
        n = int(first[0])
    except ValueError:
        raise GraphFormatError(f"line {lineno}: vertex count is not an integer") from None
    if n < 0:
        raise GraphFormatError(f"line {lineno}: negative vertex count")
    edges = []
    for lineno, parts in rows[1:]:
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex") from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphFormatError(f"line {lineno}: bad edge {u} {v} for n={n}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def read_graph(fh: TextIO) -> Graph:
    return parse_graph(fh.read())


def write_graph(g: Graph, fh: TextIO) -> None:
    fh.write(format_graph(g))
