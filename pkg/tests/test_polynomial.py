import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from domipoly.errors import UndefinedDegreeError
from domipoly.polynomial import (
    Polynomial,
    add,
    eval_int,
    exact_div,
    gcd,
    min_degree,
    mul,
    pow,
    squarefree_decomposition,
)

coeff_lists = st.lists(st.integers(-10**6, 10**6), max_size=12)
polys = coeff_lists.map(Polynomial)
wide = st.lists(st.integers(-10**30, 10**30), min_size=17, max_size=40).map(Polynomial)

_X = sympy.Symbol("x")


def to_sympy(p):
    return sympy.Poly(list(reversed(p.coeffs)) or [0], _X)


def test_add_and_mul_examples():
    assert add(Polynomial([0, 2, 1]), Polynomial([0, 1])) == Polynomial([0, 3, 1])
    assert mul(Polynomial([1, 1]), Polynomial([1, 1])) == Polynomial([1, 2, 1])


def test_pow_gives_complete_graph_polynomial():
    assert pow(Polynomial([1, 1]), 3) - 1 == Polynomial([0, 3, 3, 1])


def test_evaluation():
    assert eval_int(Polynomial([0, 1, 3, 1]), -1) == 1
    assert eval_int(Polynomial([0, 2, 1]), -1) == -1
    assert eval_int(Polynomial([7, 2, 1]), 0) == 7


def test_eval_rejects_floats():
    with pytest.raises(TypeError):
        eval_int(Polynomial([1, 1]), 0.5)


def test_min_degree():
    assert min_degree(Polynomial([0, 3, 3, 1])) == 1
    assert min_degree(Polynomial([0, 0, 4, 4, 1])) == 2
    assert min_degree(Polynomial.monomial(7)) == 7
    with pytest.raises(UndefinedDegreeError):
        min_degree(Polynomial.zero())


def test_trailing_zeros_are_trimmed():
    p = Polynomial([1, 2, 0, 0])
    assert p.degree == 1
    assert Polynomial([0, 0]).degree == -1
    assert Polynomial([3]) == 3


def test_json_round_trip_and_format():
    p = Polynomial([0, 2, 6, 4, 1])
    assert p.to_json() == '{"coeffs":["0","2","6","4","1"]}'
    assert Polynomial.from_json(p.to_json()) == p
    big = Polynomial([10**40, -3])
    assert Polynomial.from_json(big.to_json()) == big


def test_str():
    assert str(Polynomial([0, 3, 3, 1])) == "x^3 + 3*x^2 + 3*x"
    assert str(Polynomial.zero()) == "0"


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Polynomial.zero()


@given(wide, wide)
def test_kronecker_product_matches_schoolbook(a, b):
    expected = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a.coeffs):
        for j, y in enumerate(b.coeffs):
            expected[i + j] += x * y
    assert (a * b).coeffs == tuple(expected)


@given(polys, st.integers(-50, 50))
def test_evaluation_is_a_homomorphism(p, t):
    q = p * p + p
    assert q(t) == p(t) ** 2 + p(t)


@given(polys, polys.filter(lambda p: not p.is_zero()))
def test_exact_division(a, b):
    assert exact_div(a * b, b) == a


@settings(max_examples=60)
@given(coeff_lists, coeff_lists)
def test_gcd_matches_sympy(fa, fb):
    a, b = Polynomial(fa), Polynomial(fb)
    if a.is_zero() and b.is_zero():
        return
    g = gcd(a, b)
    ref = sympy.gcd(to_sympy(a), to_sympy(b))
    expected = Polynomial([int(c) for c in reversed(ref.all_coeffs())]).primitive_part()
    assert g == expected or g == -expected
    assert g.leading_coefficient() > 0


def test_gcd_of_large_powers():
    f = Polynomial([1, 3, 0, 2])
    g = Polynomial([2, -1])
    assert gcd(f ** 30 * g, f ** 12 * g ** 2) == (f ** 12 * g).primitive_part()


@settings(max_examples=40)
@given(st.lists(st.tuples(coeff_lists.filter(lambda c: len(c) >= 2), st.integers(1, 3)), max_size=3))
def test_squarefree_decomposition_reassembles(parts):
    p = Polynomial([1])
    for coeffs, e in parts:
        f = Polynomial(coeffs)
        if f.degree >= 1:
            p = p * f ** e
    unit, factors = squarefree_decomposition(p)
    rebuilt = Polynomial.constant(unit)
    for f, e in factors:
        rebuilt = rebuilt * f ** e
        assert gcd(f, f.derivative()).degree == 0
    assert rebuilt == p
    mults = [e for _, e in factors]
    assert mults == sorted(set(mults))


def test_squarefree_against_sympy():
    p = Polynomial([1, 1]) ** 5 * Polynomial([0, 2, 1]) ** 2 * Polynomial([3, 0, 1])
    _, factors = squarefree_decomposition(p)
    mine = {e: f for f, e in factors}
    _, ref = sympy.sqf_list(to_sympy(p))
    for poly, e in ref:
        assert mine[e] == Polynomial([int(c) for c in reversed(poly.all_coeffs())])
