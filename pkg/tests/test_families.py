import pytest
from hypothesis import given
from hypothesis import strategies as st

from domipoly.errors import InvalidScriptError, SpecDomainError
from domipoly.families import (
    FamilySpec,
    complete_graph,
    cycle_graph,
    family_grid,
    generate,
    k_cycle,
    k_path,
    k_tree_from_script,
    k_wheel,
    parse_script,
    parse_spec,
    path_graph,
    verify_k_tree,
)
from domipoly.graph import is_isomorphic


def test_kpath_neighbours_follow_definition():
    g = generate(FamilySpec("k_path", 3, 7))
    for i in range(7):
        earlier = {j for j in g.neighbors(i) if j < i}
        assert earlier == set(range(max(0, i - 3), i))
        assert len(earlier) == min(i, 3)


def test_small_cases():
    assert generate(FamilySpec("k_path", 1, 5)) == path_graph(5)
    star = generate(FamilySpec("k_star", 2, 4))
    assert star.edge_count() == 5
    assert generate(FamilySpec("k_cycle", 2, 4)) == complete_graph(4)
    assert is_isomorphic(generate(FamilySpec("k_cycle", 1, 6)), cycle_graph(6))


def test_wheel_hub_is_last():
    g = k_wheel(2, 6)
    assert g.n == 7
    assert g.degree(6) == 6
    assert FamilySpec("k_wheel", 2, 6).order == 7


def test_malformed_specs():
    with pytest.raises(SpecDomainError):
        FamilySpec("k_cycle", 3, 4)
    with pytest.raises(SpecDomainError):
        FamilySpec("k_star", 3, 3)
    with pytest.raises(SpecDomainError):
        FamilySpec("k_path", 0, 3)
    with pytest.raises(SpecDomainError):
        FamilySpec("path", 2, 5)
    with pytest.raises(SpecDomainError):
        FamilySpec("octopus", 1, 5)


def test_parse_spec():
    assert parse_spec("kpath:3:7") == FamilySpec("k_path", 3, 7)
    assert parse_spec("path:5") == FamilySpec("path", 1, 5)
    assert str(parse_spec("kwheel:2:6")) == "kwheel:2:6"
    for bad in ("kpath:3", "kpath:a:7", "blob:1:2", "kcycle:3:4"):
        with pytest.raises(SpecDomainError):
            parse_spec(bad)


def test_ktree_script():
    rows = parse_script("# grow a 2-tree\n2 0 1\n3 1 2\n4 0 2\n")
    spec = parse_spec("ktree:2", rows)
    g = generate(spec)
    assert g.n == 5
    assert verify_k_tree(g, 2)
    assert g.edge_count() == 2 * 5 - 3


def test_script_errors():
    with pytest.raises(InvalidScriptError):
        k_tree_from_script(2, [(2, (0, 1)), (3, (0, 2)), (4, (1, 3))])
    with pytest.raises(InvalidScriptError):
        k_tree_from_script(2, [(3, (0, 1))])
    with pytest.raises(InvalidScriptError):
        k_tree_from_script(2, [(2, (0, 5))])
    with pytest.raises(InvalidScriptError):
        parse_script("2 0 x\n")


def test_verify_k_tree():
    assert verify_k_tree(k_path(3, 7), 3)
    assert not verify_k_tree(k_cycle(2, 6), 2)
    assert verify_k_tree(complete_graph(4), 3)
    assert not verify_k_tree(k_wheel(2, 6), 2)


@given(st.integers(1, 5), st.integers(0, 12))
def test_kpath_is_k_tree_with_expected_edge_count(k, extra):
    n = k + extra
    g = k_path(k, n)
    assert verify_k_tree(g, k)
    assert g.edge_count() == k * n - k * (k + 1) // 2


@given(st.integers(1, 4), st.lists(st.integers(0, 10**6), max_size=10))
def test_random_scripts_give_k_trees(k, picks):
    # attach each new vertex to a clique of k vertices inside an existing (k+1)-clique
    cliques = [tuple(range(k))]
    script = []
    n = k
    for p in picks:
        base = cliques[p % len(cliques)]
        script.append((n, base))
        for drop in range(k):
            cliques.append(tuple(sorted(base[:drop] + base[drop + 1:] + (n,))))
        n += 1
    g = k_tree_from_script(k, script)
    assert verify_k_tree(g, k)
    assert g.edge_count() == k * n - k * (k + 1) // 2


def test_family_grid_only_well_formed():
    specs = family_grid(3, 8)
    assert FamilySpec("k_cycle", 3, 5) in specs
    assert all(s.n >= s.k for s in specs)
    assert not any(s.kind == "k_tree_script" for s in specs)
