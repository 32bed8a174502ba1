import json

import pytest

from domipoly import checks
from domipoly.errors import SpecDomainError
from domipoly.families import FamilySpec, path_graph
from domipoly.graph import Graph, disjoint_union
from domipoly.polynomial import Polynomial


def test_compare_reports_first_difference():
    r = checks.compare("x", "a", Polynomial([0, 1, 3, 1]), "b", Polynomial([0, 1, 4, 1]))
    assert not r.ok
    assert r.first_diff == (2, 3, 4)
    assert json.loads(r.to_json())["first_diff"] == {"degree": 2, "a": "3", "b": "4"}
    assert checks.compare("x", "a", 3, "b", Polynomial([3])).ok


def test_compute_rejects_inapplicable_method():
    with pytest.raises(SpecDomainError):
        checks.compute("kstar_closed", FamilySpec("k_path", 2, 6))
    with pytest.raises(SpecDomainError):
        checks.compute("no_such_method", FamilySpec("k_path", 2, 6))


def test_compute_on_arbitrary_graph():
    g = disjoint_union(path_graph(3), Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]))
    assert checks.compute("union_product", g) == checks.compute("oracle", g)
    assert checks.compute("general_recurrence", g) == checks.compute("oracle", g)


def test_applicable_methods():
    names = checks.applicable_methods(FamilySpec("k_star", 2, 4))
    assert {"oracle", "kstar_closed", "join_formula"} <= set(names)
    assert "kpath_rec" not in names
    assert "kwheel_printed" in checks.applicable_methods(FamilySpec("k_wheel", 1, 4), include_printed=True)


def test_grid_passes_without_printed_variants():
    reports = checks.run_grid(3, 12)
    assert reports
    assert all(r.ok for r in reports)
    assert checks.summary_line(reports, 3, 12) == "PASS k≤3 n≤12"


def test_printed_variants_are_findings():
    reports = checks.run_grid(2, 10, include_printed=True, scalars=False)
    bad = [r for r in reports if not r.ok]
    assert {r.a for r in bad} == {"degree1_printed", "kpath_printed", "kwheel_printed"}
    assert checks.summary_line(reports, 2, 10) == f"FINDINGS: {len(bad)} mismatches"
    wheel = next(r for r in bad if r.spec == "kwheel:1:3")
    assert wheel.first_diff[0] == 2


def test_kpath_printed_findings_confined_to_small_k():
    reports = checks.run_grid(4, 16, methods=("kpath_printed",), include_printed=True,
                              scalars=False, kinds=("k_path",))
    bad_k = {int(r.spec.split(":")[1]) for r in reports if not r.ok}
    assert bad_k == {1, 2}


def test_corona_check():
    assert checks.corona_check(path_graph(2), Graph.empty(2)).ok


def test_report_order_is_deterministic():
    a = [r.to_json() for r in checks.run_grid(2, 8)]
    b = [r.to_json() for r in checks.run_grid(2, 8)]
    assert a == b
