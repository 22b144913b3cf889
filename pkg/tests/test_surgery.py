import random
from fractions import Fraction
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from torelli_calc.casson import ManifoldExpr, casson_manifold
from torelli_calc.errors import (NotBlowdownable, NotBrunnianDescriptor, PatternMismatch,
                                 ReductionStuck)
from torelli_calc.knots import torus, unknot, whitehead
from torelli_calc.random_instances import random_jlink, random_presentation
from torelli_calc.surgery import (BingPairStrand, Component, KnotCurve, MeridianOf,
                                  SurgeryPresentation, UnlinkComponent,
                                  annulus_pair_eliminate, bing_pair_rewrite, blow_down,
                                  blow_down_borromean_pair, build_brunnian, build_jlink,
                                  continued_fraction, homology_order, integer_det, integerize,
                                  is_full_brunnian, linking_matrix, presentation,
                                  reduce, reduce_brunnian, slam_dunk, expand_earring)


def H_oracle(p):
    # |det| of the matrix with rows scaled by coefficient denominators, via sympy
    ids = p.ids
    rows = []
    for a in ids:
        c = p.component(a).coeff
        rows.append([c.numerator if a == b else c.denominator * p.lk(a, b) for b in ids])
    if not rows:
        return 1
    return abs(int(sympy.Matrix(rows).det()))


def unknot_comp(cid, coeff, **kw):
    return Component(cid, KnotCurve(unknot()), Fraction(coeff), **kw)


def test_linking_matrix_examples():
    assert linking_matrix(SurgeryPresentation()) == []
    assert linking_matrix(presentation([unknot_comp("U", -1)])) == [[-1]]
    p = presentation([Component("a", KnotCurve(torus(2, 3)), Fraction(-1, 2)),
                      Component("b", KnotCurve(torus(2, 5)), 1)])
    m = linking_matrix(p)
    assert m[0][1] == m[1][0] == 0


def test_homology_examples():
    for num in range(-9, 10):
        for den in range(1, 6):
            r = Fraction(num, den)
            assert homology_order(presentation([unknot_comp("U", r)])) == abs(r.numerator)
    for n in range(-4, 5):
        for m in range(-4, 5):
            if n and m:
                p = presentation([unknot_comp("a", Fraction(1, n)), unknot_comp("b", Fraction(1, m))],
                                 {("a", "b"): 1})
                assert homology_order(p) == abs(1 - n * m)
    assert homology_order(SurgeryPresentation()) == 1


def test_integer_det_against_sympy():
    r = random.Random(5)
    for _ in range(200):
        n = r.randint(1, 6)
        m = [[r.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert integer_det(m) == int(sympy.Matrix(m).det())


def test_homology_against_oracle():
    r = random.Random(11)
    for _ in range(300):
        p = random_presentation(r)
        assert homology_order(p) == H_oracle(p)


def test_integerize_examples():
    for s in range(-3, 4):
        for n in (-3, 2, 5):
            p = presentation([Component("K", KnotCurve(torus(2, 3)), s - Fraction(1, n),
                                        surface_framing=s)])
            q = integerize(p)
            assert q.component("K").coeff == s
            e = q.component("K.e1")
            assert e.coeff == n and e.curve == MeridianOf("K")
            assert q.lk("K", "K.e1") == 1
        for n in (1, -1):
            p = presentation([unknot_comp("K", s - n, surface_framing=s)])
            assert integerize(p) == p
    p = presentation([unknot_comp("a", 2), unknot_comp("b", -1)], {("a", "b"): 3})
    assert integerize(p) == p
    q = integerize(presentation([unknot_comp("U", Fraction(-1, 3))]))
    assert all(c.coeff.denominator == 1 for c in q.components)
    assert homology_order(q) == 1


def test_continued_fraction_values():
    for num in range(-30, 31):
        for den in range(1, 8):
            r = Fraction(num, den)
            cf = continued_fraction(r)
            val = Fraction(cf[-1])
            for a in reversed(cf[:-1]):
                val = a - 1 / val
            assert val == r


def test_blow_down_examples():
    assert len(blow_down(presentation([unknot_comp("U", 1)]), "U")) == 0
    p = presentation([Component("K", KnotCurve(torus(2, 3)), 3), unknot_comp("U", 1)],
                     {("K", "U"): 1})
    assert blow_down(p, "U").component("K").coeff == 2
    with pytest.raises(NotBlowdownable):
        blow_down(p, "K")
    with pytest.raises(NotBlowdownable):
        blow_down(presentation([unknot_comp("U", 2)]), "U")


def test_integerize_blow_down_round_trip():
    for s in range(-4, 5):
        for n in (1, -1):
            # a +-1 earring is blown down directly
            for knot in (unknot(), torus(2, 5)):
                p = presentation([Component("K", KnotCurve(knot), s, surface_framing=s),
                                  unknot_comp("K.e1", n)], {("K", "K.e1"): 1})
                assert blow_down(p, "K.e1").component("K").coeff == s - Fraction(1, n)
        for n in (2, -3, 7):
            r = s - Fraction(1, n)
            p = presentation([Component("K", KnotCurve(torus(2, 3)), r, surface_framing=s)])
            assert slam_dunk(integerize(p), "K.e1") == p


def _with_outsider(p, coeff, link):
    """Add a component linking both strands of every annulus pair equally."""
    comps = list(p.components) + [unknot_comp("X", coeff)]
    lk = dict(p.linking)
    for a, b in p.annulus_pairs:
        v = link.get(a, 0)
        if v:
            lk[tuple(sorted((a, "X")))] = v
            lk[tuple(sorted((b, "X")))] = v
    return SurgeryPresentation(tuple(comps), lk, annulus_pairs=p.annulus_pairs)


def test_annulus_examples():
    j = build_jlink([[0, 0], [0, 0]], [0, 2], [7, -3])
    assert len(j) == 8
    rest = annulus_pair_eliminate(j, ("J1.a", "J1.b"))
    assert rest.ids == ["J2.a", "J2.a.e", "J2.b", "J2.b.e"]
    assert rest == j.sublink(rest.ids)
    j = build_jlink([[0, 2, -1], [2, 0, 3], [-1, 3, 0]], [1, -2, 4], [2, 3, -5])
    q = j
    for pr in j.annulus_pairs:
        q = annulus_pair_eliminate(q, pr)
    assert len(q) == 0
    bad = build_jlink([[0]], [2], [3])
    comps = tuple(c if c.id != "J1.b.e" else Component(c.id, c.curve, 3) for c in bad.components)
    with pytest.raises(PatternMismatch):
        annulus_pair_eliminate(bad._with(comps), ("J1.a", "J1.b"))


def test_annulus_requires_equal_outside_linking():
    j = build_jlink([[0]], [1], [2])
    comps = list(j.components) + [unknot_comp("X", 5)]
    lk = dict(j.linking)
    lk[("J1.a", "X")] = 1
    p = SurgeryPresentation(tuple(comps), lk, annulus_pairs=j.annulus_pairs)
    with pytest.raises(PatternMismatch):
        annulus_pair_eliminate(p, ("J1.a", "J1.b"))


def test_jlink_examples():
    assert len(build_jlink([], [], [])) == 0
    assert homology_order(build_jlink([[0]], [3], [5])) == 1


def test_annulus_elimination_keeps_homology():
    r = random.Random(3)
    for _ in range(500):
        j, _params = random_jlink(r)
        coeff = Fraction(r.randint(-9, 9), r.randint(1, 4))
        link = {a: r.randint(-3, 3) for a, _ in j.annulus_pairs}
        p = _with_outsider(j, coeff, link)
        h = homology_order(p)
        assert h == abs(coeff.numerator)
        q = p
        for pr in p.annulus_pairs:
            q = annulus_pair_eliminate(q, pr)
            assert homology_order(q) == h
        assert q.ids == ["X"] and q.component("X").coeff == coeff


def test_jlink_reduces_to_sphere():
    for k in range(1, 4):
        for ells in ([0] * k, [5, -5, 3][:k], [-1, 2, 4][:k]):
            for ns in ([1] * k, [-5, 5, 2][:k], [3, -4, -1][:k]):
                etas = [[0 if i == j else (i + 1) * (j + 1) % 5 - 2 for j in range(k)]
                        for i in range(k)]
                p = build_jlink(etas, ells, ns)
                assert homology_order(p) == 1
                assert reduce(p).is_sphere()


@settings(max_examples=600, deadline=None)
@given(st.integers(0, 10**9))
def test_rewrites_keep_homology(seed):
    r = random.Random(seed)
    p = random_presentation(r)
    h = homology_order(p)
    assert h == H_oracle(p)
    q = integerize(p)
    assert homology_order(q) == h
    b = blow_down(p, "U")
    assert homology_order(b) == h
    for m in (linking_matrix(q), linking_matrix(b)):
        assert all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(len(m)))
    merids = [c.id for c in q.components if isinstance(c.curve, MeridianOf)
              and q.component(c.curve.component).coeff.denominator == 1
              and not q.meridians_of(c.id) and c.coeff]
    for mid in merids:
        assert homology_order(slam_dunk(q, mid)) == h


def test_meridian_validation():
    with pytest.raises(ValueError):
        presentation([unknot_comp("K", 1), Component("m", MeridianOf("K"), 2)], {("K", "m"): 2})
    with pytest.raises(ValueError):
        presentation([Component("m", MeridianOf("K"), 2)])


def test_brunnian_examples():
    l4 = build_brunnian(4)
    assert len(l4) == 4 and not l4.linking
    assert homology_order(l4) == 1
    assert len(build_brunnian(10)) == 10
    assert reduce_brunnian(l4) == ManifoldExpr.surgery(whitehead(1), 1)
    l5 = build_brunnian(5)
    for sub in combinations(l5.ids, 3):
        assert reduce_brunnian(l5.sublink(sub)).is_sphere()
    l3 = reduce_brunnian(build_brunnian(3))
    assert l3 == ManifoldExpr.surgery(torus(2, 3), 1)
    assert casson_manifold(l3) == 1


def test_brunnian_full_link_family():
    for n in range(3, 13):
        link = build_brunnian(n)
        assert is_full_brunnian(link)
        expected = whitehead(n - 3) if n > 3 else torus(2, 3)
        log = []
        assert reduce(link, log) == ManifoldExpr.surgery(expected, 1)
        assert log[0].startswith("blow down")
        for cid in link.ids:
            assert not is_full_brunnian(link.without(cid))


def test_bing_rewrite_steps_keep_homology():
    q = blow_down_borromean_pair(build_brunnian(6))
    assert q.component("S1").curve == BingPairStrand(KnotCurve(torus(2, 3)), 1)
    while len(q) > 1:
        a, b = [c.id for c in q.components][-2:]
        q2 = bing_pair_rewrite(q, a, b) if _pair(q, a, b) else None
        if q2 is None:
            break
        assert homology_order(q2) == homology_order(q) == 1
        q = q2
    assert len(q) == 1


def _pair(q, a, b):
    try:
        bing_pair_rewrite(q, a, b)
        return True
    except PatternMismatch:
        return False


def test_bing_rewrite_rejects():
    q = blow_down_borromean_pair(build_brunnian(5))
    reframed = q._with(tuple(c if c.id != "S1" else Component("S1", c.curve, 2)
                             for c in q.components))
    with pytest.raises(PatternMismatch):
        bing_pair_rewrite(reframed, "S1", "S2")
    with pytest.raises(PatternMismatch):
        bing_pair_rewrite(q, "S1", "S3")


def test_not_brunnian():
    p = presentation([Component("x", KnotCurve(torus(2, 3)), 1)])
    with pytest.raises(NotBrunnianDescriptor):
        reduce_brunnian(p)
    l4 = build_brunnian(4)
    b1 = l4.sublink(["B1"])
    bad = b1._with((Component("B1", b1.components[0].curve, 3),))
    with pytest.raises(NotBrunnianDescriptor):
        reduce_brunnian(bad)


def test_reduce_reads_off_and_gets_stuck():
    p = presentation([Component("K", KnotCurve(torus(2, 5)), Fraction(-1, 3))])
    assert reduce(p) == ManifoldExpr.surgery(torus(2, 5), -3)
    p = presentation([Component("K", KnotCurve(torus(2, 3)), 2)])
    with pytest.raises(ReductionStuck) as exc:
        reduce(p)
    assert exc.value.remaining is not None
    two = presentation([Component("a", KnotCurve(torus(2, 3)), 1),
                        Component("b", KnotCurve(torus(2, 5)), -1)])
    with pytest.raises(ReductionStuck):
        reduce(two)
    split = SurgeryPresentation(two.components, split=True)
    assert casson_manifold(reduce(split)) == 1 - 3
    u = presentation([Component("u", UnlinkComponent(), Fraction(1, 4)),
                      Component("k", KnotCurve(torus(2, 3)), 1)])
    assert reduce(u) == ManifoldExpr.surgery(torus(2, 3), 1)


def test_presentation_validation():
    with pytest.raises(ValueError):
        presentation([unknot_comp("a", 1), unknot_comp("a", 2)])
    with pytest.raises(ValueError):
        SurgeryPresentation((unknot_comp("a", 1),), {("a", "a"): 1})
    with pytest.raises(ValueError):
        SurgeryPresentation((unknot_comp("a", 1),), {("a", "b"): 1})
    with pytest.raises(TypeError):
        Component("a", UnlinkComponent(), 0.5)


def test_expand_earring():
    for s in (-2, 0, 3):
        for n in (-4, -1, 1, 5):
            p = presentation([Component("A", KnotCurve(torus(2, 3)), s - Fraction(1, n), s),
                              unknot_comp("B", 7)], {("A", "B"): 2})
            q = expand_earring(p, "A")
            assert q.component("A").coeff == s and q.component("A.e1").coeff == n
            assert homology_order(q) == homology_order(p) == H_oracle(p)
            assert slam_dunk(q, "A.e1") == p
    p = presentation([Component("A", KnotCurve(torus(2, 3)), Fraction(2, 3), 0)])
    with pytest.raises(PatternMismatch):
        expand_earring(p, "A")
    with pytest.raises(PatternMismatch):
        expand_earring(presentation([unknot_comp("A", 1)]), "A")
