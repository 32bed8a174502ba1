"""Acceptance suite: one test per criterion, summarised at the end of the run."""

import itertools
import json
import subprocess
import sys
import time

import pytest

from domipoly import checks
from domipoly.families import FamilySpec, family_grid, generate, gnp_random_graph
from domipoly.graph import Graph, corona
from domipoly.oracle import domination_polynomial
from domipoly.polynomial import Polynomial
from domipoly.recurrences import (
    d_corona,
    d_cycle,
    d_general_recurrence,
    d_kstar,
    d_path,
    vertex_expansion,
)
from domipoly.roots import (
    classify_real,
    corona_sequence_roots,
    kstar_sweep,
    find_roots,
    root_sets_agree,
    sweep_summary,
)

TOL = 1e-10
EPS = 1e-8


def _detail(request, text):
    request.node.user_properties.append(("detail", text))


def _recurrence_graphs():
    graphs = []
    for spec in family_grid(3, 12, ("k_path", "k_cycle", "k_wheel", "k_star")):
        graphs.append((str(spec), generate(spec)))
    for seed in range(50):
        n = 1 + seed % 10
        graphs.append((f"gnp:{n}:{seed}", gnp_random_graph(n, 0.4, seed)))
    return graphs


@pytest.mark.criterion(1, "vertex recurrence holds at every vertex")
def test_vertex_recurrence_everywhere(request):
    start = time.perf_counter()
    bad = []
    checked = 0
    for label, g in _recurrence_graphs():
        ref = domination_polynomial(g)
        for u in range(g.n):
            checked += 1
            if vertex_expansion(g, u) != ref or d_general_recurrence(g, u) != ref:
                bad.append((label, u))
    elapsed = time.perf_counter() - start
    _detail(request, f"{checked} (graph, vertex) pairs, {len(bad)} failures, {elapsed:.1f}s")
    assert not bad
    assert elapsed < 60


CLOSED_FORMS = ("kstar_closed", "kwheel_formula", "kpath_rec", "path_rec", "cycle_rec", "complete_closed")


@pytest.mark.criterion(2, "closed forms match the oracle on k<=4, n<=16")
def test_closed_forms_grid(request, tmp_path):
    start = time.perf_counter()
    reports = checks.run_grid(4, 16, methods=CLOSED_FORMS, scalars=False)
    printed = checks.run_grid(4, 16, methods=("kpath_printed", "kwheel_printed"),
                              include_printed=True, scalars=False)
    elapsed = time.perf_counter() - start
    covered = {r.a for r in reports}
    findings = [r for r in printed if not r.ok]
    out = tmp_path / "findings.jsonl"
    out.write_text("".join(r.to_json() + "\n" for r in findings))
    for r in findings:
        assert r.first_diff is not None
    bad = [r for r in reports if not r.ok]
    _detail(request, f"{len(reports)} comparisons, {len(bad)} mismatches; "
                     f"printed variants: {len(findings)} findings; {elapsed:.1f}s")
    assert covered == set(CLOSED_FORMS)
    assert not bad
    assert elapsed < 300


@pytest.mark.criterion(3, "base cases D(P_1), D(P_2), D(P_3), D(C_3)")
def test_base_cases(request):
    expected = {
        "P_1": ([0, 1], d_path(1), generate(FamilySpec("path", 1, 1))),
        "P_2": ([0, 2, 1], d_path(2), generate(FamilySpec("path", 1, 2))),
        "P_3": ([0, 1, 3, 1], d_path(3), generate(FamilySpec("path", 1, 3))),
        "C_3": ([0, 3, 3, 1], d_cycle(3), generate(FamilySpec("cycle", 1, 3))),
    }
    for name, (coeffs, rec, g) in expected.items():
        assert rec == Polynomial(coeffs), name
        assert domination_polynomial(g) == Polynomial(coeffs), name
    _detail(request, "4 exact matches")


def _scalar_reports(a_name):
    reports = checks.run_grid(4, 16, methods=(), scalars=True)
    return [r for r in reports if r.a == a_name and _well_formed(r.spec)]


def _well_formed(label):
    _, k, n = label.split(":")
    return int(k) <= int(n)


@pytest.mark.criterion(4, "domination and independence number formulas")
def test_gamma_alpha(request):
    gam = _scalar_reports("gamma_formula")
    alp = _scalar_reports("alpha_formula")
    bad = [r for r in gam + alp if not r.ok]
    _detail(request, f"{len(gam)} gamma + {len(alp)} alpha checks, {len(bad)} mismatches")
    assert gam and alp
    assert not bad


@pytest.mark.criterion(5, "evaluation at -1 identities")
def test_minus_one(request):
    reports = _scalar_reports("eval_minus_one")
    bad = [r for r in reports if not r.ok]
    _detail(request, f"{len(reports)} checks, {len(bad)} mismatches")
    assert reports
    assert not bad


def _all_graphs(max_n):
    for n in range(1, max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for r in range(len(pairs) + 1):
            for edges in itertools.combinations(pairs, r):
                yield Graph.from_edges(n, edges)


@pytest.mark.criterion(6, "corona product formula for all graphs on <=3 vertices")
def test_corona_identity(request):
    start = time.perf_counter()
    count = 0
    bad = []
    for g in _all_graphs(3):
        for h in _all_graphs(3):
            count += 1
            lhs = domination_polynomial(corona(g, h))
            if lhs != d_corona(g.n, h.n, domination_polynomial(h)):
                bad.append((g, h))
    elapsed = time.perf_counter() - start
    _detail(request, f"{count} labelled pairs, {len(bad)} mismatches, {elapsed:.1f}s")
    assert not bad
    assert elapsed < 30


@pytest.mark.criterion(7, "real-root counts of D(S_{k,n-k}) for k in {2,4}")
def test_root_location(request):
    start = time.perf_counter()
    wrong = []
    cases = 0
    for k in (2, 4):
        for n in range(k + 1, 32):
            rs = find_roots(d_kstar(k, n), TOL)
            count, reals = classify_real(rs, EPS)
            cases += 1
            if n % 2:
                ok = count == 0
            else:
                ok = count == 1 and -1 < reals[0] < 0
            if not ok:
                wrong.append((k, n, count, reals))
    elapsed = time.perf_counter() - start
    _detail(request, f"{cases} polynomials, {len(wrong)} violations, {elapsed:.1f}s")
    assert not wrong
    assert elapsed < 30


@pytest.mark.criterion(8, "root scatter sweep k=4, n=5..44")
def test_sweep(request, tmp_path):
    from domipoly.cli import main

    start = time.perf_counter()
    out = tmp_path / "sweep.csv"
    assert main(["sweep", "--k", "4", "--nmin", "5", "--nmax", "44", "-o", str(out)]) == 0
    rows = out.read_text().splitlines()
    summary = sweep_summary(kstar_sweep(4, 5, 44, TOL), EPS)
    elapsed = time.perf_counter() - start
    worst = max(r for *_, r in summary)
    pattern = all(count == (1 - n % 2) for n, count, _, _ in summary)
    expected_rows = 1 + sum(n for n in range(5, 45))
    _detail(request, f"{len(rows) - 1} points, max residual {worst:.2e}, {elapsed:.1f}s")
    assert rows[0] == "n,re,im"
    assert len(rows) == expected_rows
    assert worst <= 1e-8
    assert pattern
    assert elapsed < 120


@pytest.mark.criterion(9, "root sets invariant along the corona sequence")
def test_corona_sequence(request):
    base = Graph.empty(2)
    sizes = []
    for k, n in ((2, 6), (2, 8), (4, 9)):
        sets = corona_sequence_roots(base, k, n, 3, TOL)
        for a, b in itertools.combinations(sets, 2):
            assert root_sets_agree(a, b, 1e-6), (k, n)
        sizes.append(len(sets[-1].roots))
    _detail(request, f"depths 1-3, distinct roots per case {sizes}")


_DUMP = r"""
import json, sys
from domipoly.graph import Graph
from domipoly.recurrences import d_kstar
from domipoly.roots import corona_sequence_roots, find_roots
out = {"location": [], "corona": []}
for k in (2, 4):
    for n in range(k + 1, 32):
        out["location"].append(find_roots(d_kstar(k, n), 1e-10).to_dict())
for k, n in ((2, 6), (2, 8), (4, 9)):
    out["corona"].append([rs.to_dict() for rs in corona_sequence_roots(Graph.empty(2), k, n, 3)])
with open(sys.argv[1], "w") as fh:
    json.dump(out, fh, separators=(",", ":"))
"""


@pytest.mark.criterion(10, "repeated runs give byte-identical outputs")
def test_determinism(request, tmp_path):
    blobs = []
    for run in range(2):
        dump = tmp_path / f"roots{run}.json"
        csv = tmp_path / f"sweep{run}.csv"
        subprocess.run([sys.executable, "-c", _DUMP, str(dump)], check=True)
        subprocess.run([sys.executable, "-m", "domipoly", "sweep", "--k", "4", "--nmin", "5",
                        "--nmax", "44", "-o", str(csv)], check=True)
        blobs.append((dump.read_bytes(), csv.read_bytes()))
    assert json.loads(blobs[0][0])["location"]
    assert blobs[0] == blobs[1]
    _detail(request, f"{len(blobs[0][0]) + len(blobs[0][1])} bytes compared")
