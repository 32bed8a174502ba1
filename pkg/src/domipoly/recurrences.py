"""Closed forms and recurrences for domination polynomials.

Every function here is an independent route to D(G, x) for some family and
is meant to be compared against :func:`domination_polynomial`.  Where a
printed formula turned out to disagree with enumeration, the corrected form
is the default and the literal version is kept alongside under a
``*_printed`` name so the discrepancy stays reproducible:

* the wheel term is ``x(1+x)**n`` (the hub joins all n cycle vertices), not
  ``x(1+x)**(n-1)``;
* the leaf expansion carries an overall factor x on all three terms;
* the second p_u branch of the k-path recurrence,
  ``x((1+x)**(n-k-2) - (1+x)**(n-2k-3))``, only holds up to ``n = 3k+3``,
  which cuts into its stated range ``n <= 2k+6`` when k <= 2.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import InvalidVertexError, SpecDomainError
from .families import FamilySpec, generate, k_cycle, k_path
from .graph import Graph, contract_vertex, delete_vertices, independence_number
from .oracle import domination_polynomial, restricted_count_pu
from .polynomial import Polynomial

X = Polynomial.x()
_onex = Polynomial.one_plus_x_pow


def d_complete(n: int) -> Polynomial:
    """(1+x)**n - 1: every nonempty subset dominates K_n."""
    if n < 1:
        raise SpecDomainError("K_n needs n >= 1")
    return _onex(n) - 1


def d_star(n: int) -> Polynomial:
    """Star on n vertices (n - 1 leaves): x(1+x)**(n-1) + x**(n-1)."""
    if n < 2:
        raise SpecDomainError("a star needs at least 2 vertices")
    return X * _onex(n - 1) + Polynomial.monomial(n - 1)


_PATH_BASE = (
    Polynomial([0, 1]),
    Polynomial([0, 2, 1]),
    Polynomial([0, 1, 3, 1]),
)
_CYCLE_BASE = (
    Polynomial([0, 1]),
    Polynomial([0, 2, 1]),
    Polynomial([0, 3, 3, 1]),
)


def _tribonacci_x(base: tuple[Polynomial, ...], n: int) -> Polynomial:
    a, b, c = base
    if n <= 3:
        return base[n - 1]
    for _ in range(n - 3):
        a, b, c = b, c, X * (a + b + c)
    return c


def d_path(n: int) -> Polynomial:
    """D(P_n) from D(P_{n+1}) = x(D(P_n) + D(P_{n-1}) + D(P_{n-2}))."""
    if n < 1:
        raise SpecDomainError("P_n needs n >= 1")
    return _tribonacci_x(_PATH_BASE, n)


def d_cycle(n: int) -> Polynomial:
    """Same recurrence seeded with the formal values for C_1, C_2 and C_3."""
    if n < 3:
        raise SpecDomainError("C_n needs n >= 3")
    return _tribonacci_x(_CYCLE_BASE, n)


def d_kstar(k: int, n: int) -> Polynomial:
    """(1+x)**(n-k) ((1+x)**k - 1) + x**(n-k) for S_{k,n-k}."""
    if k < 1 or n <= k:
        raise SpecDomainError(f"(k, n)-star needs n > k >= 1, got k={k}, n={n}")
    return _onex(n - k) * (_onex(k) - 1) + Polynomial.monomial(n - k)


def _check_wheel(k: int, n: int) -> None:
    if k < 1 or n < k + 2:
        raise SpecDomainError(f"(k, n)-wheel needs n >= k + 2, got k={k}, n={n}")


def d_kwheel(k: int, n: int) -> Polynomial:
    """x(1+x)**n + D(C^k_n); the cycle part comes from enumeration."""
    _check_wheel(k, n)
    return X * _onex(n) + domination_polynomial(k_cycle(k, n))


def d_kwheel_printed(k: int, n: int) -> Polynomial:
    """The literal x(1+x)**(n-1) + D(C^k_n); disagrees with enumeration."""
    _check_wheel(k, n)
    return X * _onex(n - 1) + domination_polynomial(k_cycle(k, n))


def kpath_pu_printed(k: int, n: int) -> Polynomial | None:
    """Piecewise p_u(P^k_n) as printed; None where no formula is given (n >= 2k+7)."""
    if n < k + 2:
        raise SpecDomainError(f"p_u(P^k_n) is only used for n >= k + 2, got k={k}, n={n}")
    if n <= 2 * k + 2:
        return X * _onex(n - k - 2)
    if n <= 2 * k + 6:
        return X * (_onex(n - k - 2) - _onex(n - 2 * k - 3))
    return None


def kpath_pu(k: int, n: int) -> Polynomial:
    """p_u at the last vertex of P^k_n.

    Uses the closed branches where they are valid and falls back to
    restricted enumeration everywhere else.
    """
    if n <= min(2 * k + 6, 3 * k + 3):
        return kpath_pu_printed(k, n)
    return restricted_count_pu(k_path(k, n), n - 1)


def _kpath_table(k: int, n: int, pu) -> list[Polynomial]:
    # table[m] = D(P^k_m); unrolled iteratively
    table = [Polynomial.one()]
    for m in range(1, n + 1):
        if m <= k + 1:
            table.append(d_complete(m))
        else:
            table.append(_onex(1) * table[m - 1] + X * table[m - k - 1] - _onex(1) * pu(k, m))
    return table


@lru_cache(maxsize=None)
def d_kpath(k: int, n: int) -> Polynomial:
    """(1+x)D(P^k_{n-1}) + xD(P^k_{n-k-1}) - (1+x)p_u(P^k_n), with K_n for n <= k+1."""
    if k < 1 or n < k:
        raise SpecDomainError(f"(k, n)-path needs n >= k >= 1, got k={k}, n={n}")
    return _kpath_table(k, n, kpath_pu)[n]


def _printed_or_enumerated(k: int, m: int) -> Polynomial:
    pu = kpath_pu_printed(k, m)
    return pu if pu is not None else restricted_count_pu(k_path(k, m), m - 1)


@lru_cache(maxsize=None)
def d_kpath_printed(k: int, n: int) -> Polynomial:
    """Same recurrence with the printed p_u on its whole stated range."""
    if k < 1 or n < k:
        raise SpecDomainError(f"(k, n)-path needs n >= k >= 1, got k={k}, n={n}")
    return _kpath_table(k, n, _printed_or_enumerated)[n]


def d_union(p1: Polynomial, p2: Polynomial) -> Polynomial:
    return p1 * p2


def d_join(p1: Polynomial, n1: int, p2: Polynomial, n2: int) -> Polynomial:
    """D(G1 + G2) = ((1+x)**n1 - 1)((1+x)**n2 - 1) + D(G1) + D(G2).

    Both sides must have at least one vertex.
    """
    if n1 < 1 or n2 < 1:
        raise SpecDomainError("join formula needs two nonempty graphs")
    return (_onex(n1) - 1) * (_onex(n2) - 1) + p1 + p2


def corona_block(m: int, p_h: Polynomial) -> Polynomial:
    """x(1+x)**m + D(H): one host vertex together with its copy of H."""
    return X * _onex(m) + p_h


def d_corona(n: int, m: int, p_h: Polynomial) -> Polynomial:
    """D(G o H) = (x(1+x)**m + D(H))**n for |G| = n >= 1, |H| = m >= 1."""
    if n < 1 or m < 1:
        raise SpecDomainError("corona formula needs nonempty G and H")
    return corona_block(m, p_h) ** n


# -- single-step vertex expansions -------------------------------------


def vertex_expansion(g: Graph, u: int) -> Polynomial:
    """x D(G/u) + D(G-u) + x D(G-N[u]) - (1+x) p_u(G), subterms by enumeration."""
    if not 0 <= u < g.n:
        raise InvalidVertexError(f"vertex {u} not in 0..{g.n - 1}")
    closed = list(g.neighbors(u)) + [u]
    return (
        X * domination_polynomial(contract_vertex(g, u))
        + domination_polynomial(delete_vertices(g, [u]))
        + X * domination_polynomial(delete_vertices(g, closed))
        - _onex(1) * restricted_count_pu(g, u)
    )


def _leaf_terms(g: Graph, u: int, v: int) -> tuple[Polynomial, Polynomial, Polynomial]:
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise InvalidVertexError(f"vertices {u}, {v} not in 0..{g.n - 1}")
    if g.degree(v) != 1 or not g.has_edge(u, v):
        raise ValueError(f"vertex {v} must be a leaf hanging off {u}")
    closed = list(g.neighbors(u)) + [u]
    return (
        domination_polynomial(contract_vertex(g, u)),
        domination_polynomial(delete_vertices(g, [u, v])),
        domination_polynomial(delete_vertices(g, closed)),
    )


def leaf_expansion(g: Graph, u: int, v: int) -> Polynomial:
    """x (D(G/u) + D(G-u-v) + D(G-N[u])) for a leaf v with neighbour u."""
    a, b, c = _leaf_terms(g, u, v)
    return X * (a + b + c)


def leaf_expansion_printed(g: Graph, u: int, v: int) -> Polynomial:
    """x D(G/u) + D(G-u-v) + D(G-N[u]) exactly as printed (missing factors of x)."""
    a, b, c = _leaf_terms(g, u, v)
    return X * a + b + c


def find_leaf(g: Graph) -> tuple[int, int] | None:
    """First ``(u, v)`` with v of degree 1 and u its neighbour."""
    for v in range(g.n):
        if g.nbrs[v].bit_count() == 1:
            return g.nbrs[v].bit_length() - 1, v
    return None


def d_general_recurrence(g: Graph, u: int) -> Polynomial:
    """One expansion step at u; uses the leaf form when u carries a leaf."""
    if not 0 <= u < g.n:
        raise InvalidVertexError(f"vertex {u} not in 0..{g.n - 1}")
    for v in g.neighbors(u):
        if g.degree(v) == 1:
            return leaf_expansion(g, u, v)
    return vertex_expansion(g, u)


# -- scalar invariants -------------------------------------------------


def gamma_formula(spec: FamilySpec) -> int:
    """Closed-form domination number of a family instance."""
    kind, k, n = spec.kind, spec.k, spec.n
    if kind in ("k_path", "k_cycle", "path", "cycle"):
        return math.ceil(n / (2 * k + 1))
    if kind in ("k_wheel", "k_star", "star", "complete"):
        return 1
    raise SpecDomainError(f"no domination-number formula for {kind}")


def alpha_formula(spec: FamilySpec) -> int:
    """Closed-form independence number of a family instance."""
    kind, k, n = spec.kind, spec.k, spec.n
    if kind in ("k_path", "path"):
        return (n + k) // (k + 1)
    if kind in ("k_cycle", "cycle", "k_wheel"):
        return (n + k - 1) // (k + 1)
    if kind in ("k_star", "star"):
        return n - k
    if kind == "complete":
        return 1
    raise SpecDomainError(f"no independence-number formula for {kind}")


def minus_one_rhs(spec: FamilySpec) -> int:
    """Predicted D(G, -1) for paths, wheels and stars.

    ``(-1)**alpha`` for k-paths and k-stars (alpha by exhaustive search) and
    ``D(C^k_n, -1)`` for k-wheels.
    """
    if spec.kind in ("k_path", "path", "k_star", "star"):
        return (-1) ** independence_number(generate(spec))
    if spec.kind == "k_wheel":
        return domination_polynomial(k_cycle(spec.k, spec.n))(-1)
    raise SpecDomainError(f"no evaluation-at--1 identity for {spec.kind}")
