import math

import pytest
import sympy
from hypothesis import given, strategies as st

from torelli_calc.errors import NotCoprime, ParseError, UnsupportedKnot
from torelli_calc.knots import (alexander, double_twist, parse_knot, pretzel, render_knot,
                                seifert_genus, semigroup, torus, twist_knot, unknot,
                                v_invariant, whitehead)
from torelli_calc.laurent import LaurentPoly, second_derivative_at_one

T = sympy.Symbol("t")

TORUS_PAIRS = [(p, q) for p in range(2, 15) for q in range(p + 1, 101)
               if p * q <= 200 and math.gcd(p, q) == 1]


def sym_to_laurent(expr, shift):
    poly = sympy.Poly(sympy.expand(expr), T)
    return LaurentPoly({e[0] - shift: int(c) for e, c in poly.terms()})


def semigroup_members(p, q, limit):
    # sieve, independent of the library's membership test
    member = [False] * (limit + 1)
    member[0] = True
    for n in range(1, limit + 1):
        member[n] = (n >= p and member[n - p]) or (n >= q and member[n - q])
    return member


def torus_alexander_semigroup(p, q):
    g = (p - 1) * (q - 1) // 2
    member = semigroup_members(p, q, 2 * g)
    coeffs = {}
    for s in range(2 * g):
        if member[s]:
            coeffs[s] = coeffs.get(s, 0) + 1
            coeffs[s + 1] = coeffs.get(s + 1, 0) - 1
    coeffs[2 * g] = coeffs.get(2 * g, 0) + 1
    return LaurentPoly(coeffs).shift(-g)


def torus_alexander_sympy(p, q):
    g = (p - 1) * (q - 1) // 2
    quo = sympy.cancel((T**(p * q) - 1) * (T - 1) / ((T**p - 1) * (T**q - 1)))
    return sym_to_laurent(quo, g)


def torsion_coefficient(delta, m):
    return sum(j * delta[m + j] for j in range(1, delta.max_exp + 1))


def test_alexander_examples():
    for n in range(1, 40):
        assert alexander(double_twist(1, n)) == LaurentPoly({1: n, 0: -(2 * n - 1), -1: n})
    assert alexander(unknot()) == 1
    assert alexander(pretzel(1, 1, 3)) == LaurentPoly({1: 2, 0: -3, -1: 2})


@pytest.mark.parametrize("p,q", TORUS_PAIRS)
def test_torus_alexander_two_oracles(p, q):
    delta = alexander(torus(p, q))
    assert delta == torus_alexander_semigroup(p, q)
    assert delta == torus_alexander_sympy(p, q)


def test_pretzel_alexander_closed_form():
    odd = [-7, -5, -3, -1, 1, 3, 5, 7]
    for p in odd:
        for q in odd:
            for r in odd:
                c = (p * q + q * r + r * p + 1) // 4
                assert alexander(pretzel(p, q, r)) == LaurentPoly({1: c, 0: 1 - 2 * c, -1: c})


def test_pretzel_seifert_matrix_sympy():
    # det(V - t V^T) for V = [[1,1],[0,2]] gives 2t^2 - 3t + 2
    v = sympy.Matrix([[1, 1], [0, 2]])
    det = sympy.expand((v - T * v.T).det())
    assert sym_to_laurent(det, 1) == alexander(pretzel(1, 1, 3))


def test_double_twist_closed_form():
    for a in range(-5, 6):
        for b in range(-5, 6):
            if a and b:
                ab = a * b
                assert alexander(double_twist(a, b)) == LaurentPoly({1: ab, 0: 1 - 2 * ab, -1: ab})


def test_pretzel_is_double_twist():
    for d in range(-20, 21):
        if d == -1:
            # P(1,1,-1) is the unknot; D(1,0) is not a catalog knot
            assert alexander(pretzel(1, 1, -1)) == 1
            continue
        assert alexander(pretzel(1, 1, 1 + 2 * d)) == alexander(double_twist(1, d + 1))
    t23 = alexander(torus(2, 3))
    assert alexander(pretzel(1, 1, 1)) == alexander(double_twist(1, 1)) == t23
    assert alexander(twist_knot(5)) == alexander(double_twist(1, 5))


def test_genus_examples():
    assert seifert_genus(torus(2, 7)) == 3
    assert seifert_genus(unknot()) == 0
    assert seifert_genus(whitehead(4)) == 1
    assert seifert_genus(pretzel(1, -1, 1)) == 0
    assert seifert_genus(pretzel(1, 1, 1)) == 1


def test_semigroup_examples():
    assert semigroup(2, 3).gaps == (1,)
    assert semigroup(2, 5).gaps == (1, 3)
    assert semigroup(3, 4).gaps == (1, 2, 5)
    with pytest.raises(NotCoprime):
        semigroup(4, 6)


@pytest.mark.parametrize("p,q", TORUS_PAIRS)
def test_semigroup_properties(p, q):
    sg = semigroup(p, q)
    assert sg.genus == (p - 1) * (q - 1) // 2 == seifert_genus(torus(p, q))
    assert sg.frobenius == p * q - p - q
    member = semigroup_members(p, q, p * q)
    assert list(sg.gaps) == [n for n in range(p * q) if not member[n]]


def test_v_examples():
    assert v_invariant(torus(2, 9), 0) == 2
    assert v_invariant(unknot(), 0) == 0
    assert v_invariant(torus(2, 3), 1) == 0


@pytest.mark.parametrize("p,q", TORUS_PAIRS)
def test_v_matches_torsion_coefficients(p, q):
    # L-space knots: V_m equals the m-th torsion coefficient of Delta
    k = torus(p, q)
    delta = torus_alexander_sympy(p, q)
    g = seifert_genus(k)
    for m in range(g + 2):
        assert v_invariant(k, m) == torsion_coefficient(delta, m)


@pytest.mark.parametrize("p,q", TORUS_PAIRS)
def test_v_monotone_and_vanishing(p, q):
    k = torus(p, q)
    g = seifert_genus(k)
    vs = [v_invariant(k, m) for m in range(g + 3)]
    for a, b in zip(vs, vs[1:]):
        assert a - b in (0, 1)
    assert all(v == 0 for v in vs[g:])


def test_v_brieskorn_and_odd_torus():
    for n in range(1, 51):
        assert v_invariant(torus(2, 4 * n + 1), 0) == n
    for k in range(1, 40):
        assert v_invariant(torus(2, 2 * k + 1), 0) == -(-k // 2)


def test_v_whitehead_and_mirrors():
    for k in range(1, 6):
        assert v_invariant(whitehead(k), 0) == 1
        assert v_invariant(whitehead(k), 1) == 0
        assert v_invariant(whitehead(k).mirrored(), 0) == 0
    assert v_invariant(torus(3, 5).mirrored(), 0) == 0
    assert v_invariant(whitehead(0), 0) == v_invariant(torus(2, 3), 0)
    with pytest.raises(UnsupportedKnot):
        v_invariant(double_twist(1, 2), 0)


def test_mirror_invariance_and_even_second_derivative():
    catalog = ([unknot(), whitehead(2)] + [torus(p, q) for p, q in TORUS_PAIRS[:20]]
               + [double_twist(a, b) for a in (-2, 1, 3) for b in (-4, 2, 7)]
               + [pretzel(p, q, r) for p in (-3, 1) for q in (1, 5) for r in (-1, 3)])
    for k in catalog:
        assert alexander(k.mirrored()) == alexander(k)
        assert second_derivative_at_one(alexander(k)) % 2 == 0


def test_knot_validation():
    with pytest.raises(NotCoprime):
        torus(2, 4)
    with pytest.raises(ValueError):
        pretzel(1, 2, 3)
    with pytest.raises(ValueError):
        double_twist(0, 3)
    assert torus(5, 2) == torus(2, 5)


knots = st.one_of(
    st.just(unknot()),
    st.sampled_from([torus(p, q) for p, q in TORUS_PAIRS]),
    st.builds(double_twist, st.integers(1, 9), st.integers(-9, -1)),
    st.builds(pretzel, *[st.sampled_from([-5, -3, -1, 1, 3, 5])] * 3),
    st.builds(whitehead, st.integers(0, 6)),
)


@given(knots, st.booleans())
def test_render_parse_round_trip(k, mirror):
    k = k.mirrored() if mirror else k
    assert parse_knot(render_knot(k)) == k


def test_parse_errors():
    assert parse_knot("mT(2,3)") == torus(2, 3).mirrored()
    assert parse_knot(" Wh^{3} ") == whitehead(3)
    for bad in ("T(2,4)", "Q(1)", "P(1,2,3)", "T(2)", ""):
        with pytest.raises(ParseError):
            parse_knot(bad)
