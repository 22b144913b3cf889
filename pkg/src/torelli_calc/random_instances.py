"""Seeded random words and presentations for property checks."""

import random
from fractions import Fraction
from itertools import combinations

from .knots import double_twist, pretzel, seifert_genus, torus, unknot, whitehead
from .surgery import (Component, KnotCurve, MeridianOf, UnlinkComponent, _key,
                      build_jlink, presentation)
from .torelli import BPMap, BPRealization, SepRealization, SepTwist, TorelliWord

SEED_ENV = "TORELLI_CALC_SEED"


def rng(seed=None):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_knot(r, max_genus=None):
    """A catalog knot, optionally of genus at most ``max_genus``."""
    while True:
        kind = r.choice("UTDPW")
        if kind == "U":
            k = unknot()
        elif kind == "T":
            p = r.choice([2, 3])
            q = r.choice([q for q in range(p + 1, 12) if q % p])
            k = torus(p, q)
        elif kind == "D":
            k = double_twist(r.choice([-3, -2, -1, 1, 2, 3]), r.randint(-6, 6) or 1)
        elif kind == "P":
            k = pretzel(*(r.choice([-5, -3, -1, 1, 3, 5]) for _ in range(3)))
        else:
            k = whitehead(r.randint(1, 3))
        if r.random() < 0.3:
            k = k.mirrored()
        if max_genus is None or seifert_genus(k) <= max_genus:
            return k


def random_torelli_word(r, max_letters=5, max_power=5, genus=None):
    """A realized word mixing separating twists and bounding pair maps.

    Returns ``(word, etas)`` where etas are random mutual linking numbers
    between bounding pair letters.
    """
    genus = genus or r.randint(2, 8)
    cap = genus // 2
    letters = []
    for _ in range(r.randint(1, max_letters)):
        m = r.randint(1, cap)
        power = r.choice([n for n in range(-max_power, max_power + 1) if n])
        if r.random() < 0.5:
            gen = SepTwist(m, SepRealization(random_knot(r, m), 0))
        else:
            ell = r.randint(-4, 4)
            gen = BPMap(m, BPRealization((random_knot(r), random_knot(r)), ell, ell))
        letters.append((gen, power))
    bp = [i for i, (g, _) in enumerate(letters, 1) if isinstance(g, BPMap)]
    etas = {(i, j): r.randint(-3, 3) for i, j in combinations(bp, 2)}
    return TorelliWord(genus, tuple(letters)), etas


def random_split_sep_word(r, max_letters=3, genus=None):
    """Separating twists with power +-1 on knots d can evaluate, to be
    assembled with ``split=True`` (a connected-sum realization)."""
    genus = genus or r.randint(2, 8)
    cap = genus // 2
    letters = []
    for _ in range(r.randint(1, max_letters)):
        m = r.randint(1, cap)
        knot = r.choice([torus(2, 2 * j + 1) for j in range(1, m + 1)] + [whitehead(1)] * (m >= 1))
        if r.random() < 0.3:
            knot = knot.mirrored()
        letters.append((SepTwist(m, SepRealization(knot, 0)), r.choice([1, -1])))
    return TorelliWord(genus, tuple(letters))


def random_coefficient(r, max_num=7, max_den=4):
    q = r.randint(1, max_den)
    p = r.randint(-max_num, max_num)
    return Fraction(p, q)


def random_presentation(r, size=None, blowdownable=True):
    """A random framed/rational link with one unknotted +-1 component
    (when ``blowdownable``) and some meridians."""
    size = size or r.randint(1, 5)
    comps, lk = [], {}
    for i in range(size):
        coeff = random_coefficient(r)
        curve = KnotCurve(random_knot(r)) if r.random() < 0.6 else UnlinkComponent()
        comps.append(Component("C%d" % i, curve, coeff))
    ids = [c.id for c in comps]
    for a, b in combinations(ids, 2):
        if r.random() < 0.5:
            v = r.randint(-3, 3)
            if v:
                lk[_key(a, b)] = v
    if blowdownable:
        comps.append(Component("U", KnotCurve(unknot()), r.choice([1, -1])))
        for a in ids:
            v = r.randint(-2, 2)
            if v:
                lk[_key(a, "U")] = v
    for a in list(ids):
        if r.random() < 0.3:
            mid = a + ".m"
            comps.append(Component(mid, MeridianOf(a), r.choice([-3, -2, -1, 1, 2, 3])))
            lk[_key(a, mid)] = r.choice([1, -1])
    return presentation(comps, lk)


def random_jlink(r, max_k=3, max_ell=5, max_n=5):
    k = r.randint(1, max_k)
    ells = [r.randint(-max_ell, max_ell) for _ in range(k)]
    ns = [r.choice([n for n in range(-max_n, max_n + 1) if n]) for _ in range(k)]
    etas = [[0] * k for _ in range(k)]
    for i, j in combinations(range(k), 2):
        etas[i][j] = etas[j][i] = r.randint(-3, 3)
    return build_jlink(etas, ells, ns), (etas, ells, ns)
