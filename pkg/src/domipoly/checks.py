"""Method registry and formula-versus-enumeration comparison reports.

A mismatch is a result, not an exception: it comes back as a
:class:`CheckReport` carrying the lowest-degree coefficient where the two
routes differ.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import recurrences as rec
from .errors import SpecDomainError
from .families import KINDS, FamilySpec, complete_graph, family_grid, generate, k_cycle
from .graph import Graph, corona, independence_number, induced_subgraph
from .oracle import domination_polynomial
from .polynomial import Polynomial

Target = FamilySpec | Graph


@dataclass(frozen=True)
class CheckReport:
    spec: str
    a: str
    b: str
    verdict: str
    first_diff: tuple[int, int, int] | None = None

    @property
    def ok(self) -> bool:
        return self.verdict == "match"

    def to_dict(self) -> dict:
        out = {"spec": self.spec, "a": self.a, "b": self.b, "verdict": self.verdict}
        if self.first_diff is not None:
            d, ca, cb = self.first_diff
            out["first_diff"] = {"degree": d, "a": str(ca), "b": str(cb)}
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def compare(spec: str, a: str, pa: Polynomial | int, b: str, pb: Polynomial | int) -> CheckReport:
    """Coefficient-wise comparison; ints are treated as constants."""
    if isinstance(pa, int):
        pa = Polynomial.constant(pa)
    if isinstance(pb, int):
        pb = Polynomial.constant(pb)
    if pa == pb:
        return CheckReport(spec, a, b, "match")
    for d in range(max(len(pa), len(pb))):
        if pa[d] != pb[d]:
            return CheckReport(spec, a, b, "mismatch", (d, pa[d], pb[d]))
    raise AssertionError("unequal polynomials with identical coefficients")


# -- method registry ---------------------------------------------------


def _graph(t: Target) -> Graph:
    return generate(t) if isinstance(t, FamilySpec) else t


def _is(t: Target, *kinds: str, k: int | None = None) -> bool:
    return isinstance(t, FamilySpec) and t.kind in kinds and (k is None or t.k == k)


def _join_parts(t: FamilySpec) -> tuple[Graph, Graph]:
    if t.kind in ("k_star", "star"):
        k = t.k
        return complete_graph(k), Graph.empty(t.n - k)
    return k_cycle(t.k, t.n), Graph.empty(1)


def _join(t: FamilySpec) -> Polynomial:
    g1, g2 = _join_parts(t)
    return rec.d_join(domination_polynomial(g1), g1.n, domination_polynomial(g2), g2.n)


def _union(t: Target) -> Polynomial:
    g = _graph(t)
    out = Polynomial.one()
    for comp in g.components():
        out = rec.d_union(out, domination_polynomial(induced_subgraph(g, comp)))
    return out


def _leaf(t: Target, printed: bool) -> Polynomial:
    g = _graph(t)
    u, v = rec.find_leaf(g)
    fn = rec.leaf_expansion_printed if printed else rec.leaf_expansion
    return fn(g, u, v)


def _kpath_like(t: Target) -> bool:
    return _is(t, "k_path") or _is(t, "path")


@dataclass(frozen=True)
class Method:
    name: str
    applies: Callable[[Target], bool]
    compute: Callable[[Target], Polynomial]
    printed: bool = False


_METHODS = [
    Method("oracle", lambda t: True, lambda t: domination_polynomial(_graph(t))),
    Method(
        "general_recurrence",
        lambda t: _graph(t).n >= 1,
        lambda t: rec.d_general_recurrence(_graph(t), _graph(t).n - 1),
    ),
    Method(
        "degree1_recurrence",
        lambda t: rec.find_leaf(_graph(t)) is not None,
        lambda t: _leaf(t, printed=False),
    ),
    Method("path_rec", lambda t: _is(t, "path") or _is(t, "k_path", k=1),
           lambda t: rec.d_path(t.n)),
    Method("cycle_rec", lambda t: _is(t, "cycle") or _is(t, "k_cycle", k=1),
           lambda t: rec.d_cycle(t.n)),
    Method("kpath_rec", _kpath_like, lambda t: rec.d_kpath(t.k, t.n)),
    Method("kstar_closed", lambda t: _is(t, "k_star", "star"),
           lambda t: rec.d_kstar(t.k, t.n)),
    Method("kwheel_formula", lambda t: _is(t, "k_wheel"),
           lambda t: rec.d_kwheel(t.k, t.n)),
    Method("join_formula", lambda t: _is(t, "k_star", "star", "k_wheel"), _join),
    Method("union_product", lambda t: len(_graph(t).components()) > 1, _union),
    Method(
        "complete_closed",
        lambda t: _is(t, "complete") or (_is(t, "k_path") and t.n <= t.k + 1),
        lambda t: rec.d_complete(t.n),
    ),
    Method("star_closed", lambda t: _is(t, "star") or _is(t, "k_star", k=1),
           lambda t: rec.d_star(t.n)),
    # literal transcriptions kept so their disagreement stays on record
    Method("degree1_printed", lambda t: rec.find_leaf(_graph(t)) is not None,
           lambda t: _leaf(t, printed=True), printed=True),
    Method("kpath_printed", lambda t: _kpath_like(t) and t.n >= t.k + 2,
           lambda t: rec.d_kpath_printed(t.k, t.n), printed=True),
    Method("kwheel_printed", lambda t: _is(t, "k_wheel"),
           lambda t: rec.d_kwheel_printed(t.k, t.n), printed=True),
]
METHODS = {m.name: m for m in _METHODS}
METHOD_TAGS = tuple(METHODS) + ("corona_product",)


def applicable_methods(t: Target, include_printed: bool = False) -> list[str]:
    return [m.name for m in _METHODS if (include_printed or not m.printed) and m.applies(t)]


def compute(method: str, t: Target) -> Polynomial:
    """D(G, x) of a family instance or graph by the named route."""
    m = METHODS.get(method)
    if m is None:
        raise SpecDomainError(f"unknown method {method!r}")
    if not m.applies(t):
        raise SpecDomainError(f"method {method} does not apply to {_label(t)}")
    return m.compute(t)


def _label(t: Target) -> str:
    return str(t) if isinstance(t, FamilySpec) else f"graph:{t.n}:{t.edge_count()}"


# -- individual checks -------------------------------------------------


def check_method(t: Target, method: str, oracle: Polynomial | None = None) -> CheckReport:
    ref = oracle if oracle is not None else domination_polynomial(_graph(t))
    return compare(_label(t), method, compute(method, t), "oracle", ref)


def gamma_check(spec: FamilySpec, oracle: Polynomial | None = None) -> CheckReport:
    ref = oracle if oracle is not None else domination_polynomial(generate(spec))
    return compare(str(spec), "gamma_formula", rec.gamma_formula(spec), "gamma_oracle", ref.min_degree())


def alpha_check(spec: FamilySpec) -> CheckReport:
    return compare(
        str(spec), "alpha_formula", rec.alpha_formula(spec),
        "alpha_bruteforce", independence_number(generate(spec)),
    )


def eval_minus_one_checks(spec: FamilySpec, oracle: Polynomial | None = None) -> CheckReport:
    """D(G, -1) against the predicted value for k-paths, k-wheels and k-stars."""
    ref = oracle if oracle is not None else domination_polynomial(generate(spec))
    return compare(str(spec), "eval_minus_one", ref(-1), "minus_one_rhs", rec.minus_one_rhs(spec))


def corona_check(g: Graph, h: Graph) -> CheckReport:
    lhs = domination_polynomial(corona(g, h))
    rhs = rec.d_corona(g.n, h.n, domination_polynomial(h))
    return compare(f"corona:{_label(g)}/{_label(h)}", "oracle", lhs, "corona_product", rhs)


# -- grid sweep --------------------------------------------------------

_MINUS_ONE_KINDS = ("k_path", "path", "k_star", "star", "k_wheel")


def run_grid(
    kmax: int,
    nmax: int,
    *,
    methods: Sequence[str] | None = None,
    include_printed: bool = False,
    scalars: bool = True,
    kinds: Iterable[str] = KINDS[:-1],
) -> list[CheckReport]:
    """Every applicable method against the oracle on every family instance.

    With ``scalars`` the domination-number, independence-number and
    evaluation-at--1 identities are checked as well.
    """
    reports = []
    for spec in family_grid(kmax, nmax, tuple(kinds)):
        ref = domination_polynomial(generate(spec))
        names = applicable_methods(spec, include_printed)
        if methods is not None:
            names = [m for m in names if m in methods]
        for name in names:
            if name != "oracle":
                reports.append(check_method(spec, name, ref))
        if scalars:
            reports.append(gamma_check(spec, ref))
            reports.append(alpha_check(spec))
            if spec.kind in _MINUS_ONE_KINDS:
                reports.append(eval_minus_one_checks(spec, ref))
    return sort_reports(reports)


def _spec_key(label: str):
    parts = label.split(":")
    try:
        kind_rank = list(_SHORT_ORDER).index(parts[0])
        return (kind_rank, int(parts[1]), int(parts[2]), label)
    except (ValueError, IndexError):
        return (len(_SHORT_ORDER), 0, 0, label)


_SHORT_ORDER = ("complete", "path", "cycle", "star", "kpath", "kcycle", "kwheel", "kstar", "ktree")


def sort_reports(reports: Iterable[CheckReport]) -> list[CheckReport]:
    return sorted(reports, key=lambda r: (_spec_key(r.spec), r.a, r.b))


def summary_line(reports: Sequence[CheckReport], kmax: int, nmax: int) -> str:
    bad = sum(1 for r in reports if not r.ok)
    if bad:
        return f"FINDINGS: {bad} mismatches"
    return f"PASS k≤{kmax} n≤{nmax}"
