"""Constructors for the named graph families.

Vertices are emitted in definition order: ``v_1 .. v_n`` become indices
``0 .. n-1`` (the presentation order for k-paths), the k-clique of a k-star
comes first, and the hub of a wheel is the last index.  Recurrences peel
the last vertex, so this ordering matters.

Spec strings have the form ``kind:k:n`` (``kpath:3:7``); the classical
families also accept ``kind:n``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidScriptError, SpecDomainError
from .graph import Graph, join, mask_of

KINDS = (
    "complete",
    "path",
    "cycle",
    "star",
    "k_path",
    "k_cycle",
    "k_wheel",
    "k_star",
    "k_tree_script",
)
CLASSICAL = ("complete", "path", "cycle", "star")

_ALIASES = {
    "complete": "complete",
    "path": "path",
    "cycle": "cycle",
    "star": "star",
    "kpath": "k_path",
    "kcycle": "k_cycle",
    "kwheel": "k_wheel",
    "kstar": "k_star",
    "ktree": "k_tree_script",
}
_ALIASES.update({k: k for k in KINDS})
_SHORT = {v: k for k, v in _ALIASES.items() if "_" not in k}


@dataclass(frozen=True)
class FamilySpec:
    """A named family instance.

    For ``k_wheel`` the order ``n`` is that of the underlying (k, n)-cycle;
    the wheel itself has ``n + 1`` vertices.  For ``star`` the order is the
    total vertex count (centre plus ``n - 1`` leaves).  For
    ``k_tree_script`` each script entry is ``(new_vertex, clique)`` and
    ``n`` is ``k + len(script)``.
    """

    kind: str
    k: int
    n: int
    script: tuple[tuple[int, tuple[int, ...]], ...] | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SpecDomainError(f"unknown family kind {self.kind!r}")
        validate(self)

    @property
    def order(self) -> int:
        return self.n + 1 if self.kind == "k_wheel" else self.n

    def __str__(self) -> str:
        return f"{_SHORT[self.kind]}:{self.k}:{self.n}"


def validate(spec: FamilySpec) -> None:
    kind, k, n = spec.kind, spec.k, spec.n
    if k < 1:
        raise SpecDomainError(f"{kind}: k must be a positive integer, got {k}")
    if kind in CLASSICAL and k != 1:
        raise SpecDomainError(f"{kind} is a classical family; k must be 1")
    lower = {
        "complete": 1,
        "path": 1,
        "cycle": 3,
        "star": 2,
        "k_path": k,
        "k_cycle": k + 2,
        "k_wheel": k + 2,
        "k_star": k + 1,
        "k_tree_script": k,
    }[kind]
    if n < lower:
        raise SpecDomainError(f"{kind} with k={k} needs n >= {lower}, got n={n}")
    if kind == "k_tree_script":
        if spec.script is None:
            raise SpecDomainError("k_tree_script needs an attachment script")
        if n != k + len(spec.script):
            raise SpecDomainError("k_tree_script order must equal k + number of script entries")
    elif spec.script is not None:
        raise SpecDomainError(f"{kind} does not take a script")


def canonical_kind(name: str) -> str:
    """``kpath`` -> ``k_path`` and so on; full names pass through."""
    try:
        return _ALIASES[name]
    except KeyError:
        raise SpecDomainError(f"unknown family kind {name!r}") from None


def parse_spec(text: str, script: Sequence[Sequence[int]] | None = None) -> FamilySpec:
    """Parse ``kind:k:n`` (or ``kind:n`` for the classical families).

    ``ktree:k`` takes its attachment list from ``script`` (rows of ``k + 1``
    integers as read by :func:`parse_script`).
    """
    parts = text.strip().split(":")
    kind = _ALIASES.get(parts[0])
    if kind is None:
        raise SpecDomainError(f"unknown family kind {parts[0]!r}")
    try:
        nums = [int(p) for p in parts[1:]]
    except ValueError:
        raise SpecDomainError(f"malformed family spec {text!r}") from None
    if kind == "k_tree_script":
        if len(nums) != 1 or script is None:
            raise SpecDomainError("ktree specs are 'ktree:k' plus a script file")
        k = nums[0]
        entries = _script_entries(k, script)
        return FamilySpec(kind, k, k + len(entries), entries)
    if len(nums) == 1 and kind in CLASSICAL:
        return FamilySpec(kind, 1, nums[0])
    if len(nums) != 2:
        raise SpecDomainError(f"malformed family spec {text!r}; expected kind:k:n")
    return FamilySpec(kind, nums[0], nums[1])


def _script_entries(k: int, rows: Sequence[Sequence[int]]):
    entries = []
    for row in rows:
        if len(row) != k + 1:
            raise InvalidScriptError(f"script row {list(row)} should have {k + 1} integers")
        entries.append((int(row[0]), tuple(int(v) for v in row[1:])))
    return tuple(entries)


def parse_script(text: str) -> list[list[int]]:
    """Script file: one attachment per line, ``new v1 .. vk``; ``#`` comments."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            try:
                rows.append([int(t) for t in line.split()])
            except ValueError:
                raise InvalidScriptError(f"non-integer in script line {raw!r}") from None
    return rows


# -- constructors ------------------------------------------------------


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise SpecDomainError("a simple cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """K_{1,n-1} on n vertices with the centre at index 0."""
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def k_path(k: int, n: int) -> Graph:
    """(k, n)-path: v_i is adjacent to the k vertices before it."""
    return Graph.from_edges(n, [(j, i) for i in range(n) for j in range(max(0, i - k), i)])


def k_cycle(k: int, n: int) -> Graph:
    """(k, n)-path plus the edge v_1 v_n."""
    if n < k + 2:
        raise SpecDomainError(f"(k, n)-cycle needs n >= k + 2, got k={k}, n={n}")
    edges = [(j, i) for i in range(n) for j in range(max(0, i - k), i)]
    edges.append((0, n - 1))
    return Graph.from_edges(n, edges)


def k_wheel(k: int, n: int) -> Graph:
    """(k, n)-cycle joined to one hub vertex (index n)."""
    return join(k_cycle(k, n), Graph.empty(1))


def k_star(k: int, n: int) -> Graph:
    """S_{k,n-k} = K_k + O_{n-k}; the clique is vertices 0..k-1."""
    if n <= k:
        raise SpecDomainError(f"(k, n)-star needs n > k, got k={k}, n={n}")
    return join(complete_graph(k), Graph.empty(n - k))


def k_tree_from_script(k: int, script) -> Graph:
    """Start from K_k on 0..k-1 and attach each new vertex to a named k-clique."""
    n = k
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    nbrs = [((1 << k) - 1) & ~(1 << v) for v in range(k)]
    for new, clique in script:
        clique = tuple(clique)
        if new != n:
            raise InvalidScriptError(f"expected new vertex {n}, script names {new}")
        if len(clique) != k or len(set(clique)) != k:
            raise InvalidScriptError(f"vertex {new} must attach to {k} distinct vertices")
        if any(not 0 <= v < n for v in clique):
            raise InvalidScriptError(f"vertex {new} attaches to a vertex that does not exist yet")
        cm = mask_of(clique)
        if any((nbrs[v] | (1 << v)) & cm != cm for v in clique):
            raise InvalidScriptError(f"vertices {list(clique)} do not form a clique")
        for v in clique:
            nbrs[v] |= 1 << new
            edges.append((v, new))
        nbrs.append(cm)
        n += 1
    return Graph.from_edges(n, edges)


def generate(spec: FamilySpec) -> Graph:
    kind, k, n = spec.kind, spec.k, spec.n
    if kind == "complete":
        return complete_graph(n)
    if kind == "path":
        return path_graph(n)
    if kind == "cycle":
        return cycle_graph(n)
    if kind == "star":
        return star_graph(n)
    if kind == "k_path":
        return k_path(k, n)
    if kind == "k_cycle":
        return k_cycle(k, n)
    if kind == "k_wheel":
        return k_wheel(k, n)
    if kind == "k_star":
        return k_star(k, n)
    return k_tree_from_script(k, spec.script)


def verify_k_tree(g: Graph, k: int) -> bool:
    """Strip simplicial degree-k vertices until K_k remains; False if stuck."""
    if k < 1 or g.n < k:
        return False
    alive = g.full_mask
    remaining = g.n
    while remaining > k:
        for v in range(g.n):
            if not alive >> v & 1:
                continue
            nb = g.nbrs[v] & alive
            if nb.bit_count() != k:
                continue
            if all((g.nbrs[u] | (1 << u)) & nb == nb for u in range(g.n) if nb >> u & 1):
                alive &= ~(1 << v)
                remaining -= 1
                break
        else:
            return False
    return all((g.nbrs[v] | (1 << v)) & alive == alive for v in range(g.n) if alive >> v & 1)


def gnp_random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) from a private ``random.Random(seed)``."""
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def family_grid(kmax: int, nmax: int, kinds: Sequence[str] = KINDS[:-1]) -> list[FamilySpec]:
    """All well-formed instances with k <= kmax and order parameter n <= nmax."""
    specs = []
    for kind in kinds:
        ks = [1] if kind in CLASSICAL else range(1, kmax + 1)
        for k in ks:
            for n in range(1, nmax + 1):
                try:
                    specs.append(FamilySpec(kind, k, n))
                except SpecDomainError:
                    continue
    return specs
