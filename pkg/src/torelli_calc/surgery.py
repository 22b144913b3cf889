"""Symbolic framed / rational surgery presentations and the moves on them.

Links are never embedded.  Each component carries a construction tag
(:class:`CurveSpec` subclasses), an exact coefficient and its linking
numbers; moves fire on tags plus linking data and always return a new
presentation.  Orientations of the two strands of a cable or a bounding
pair are *parallel* (homologous), so a ``(2, 2l)`` cable pair is stored
with linking number ``l``.
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations
import math

from .casson import ManifoldExpr
from .errors import (NotBlowdownable, NotBrunnianDescriptor, PatternMismatch,
                     ReductionStuck)
from .knots import KnotSpec, UNKNOT, torus, unknot, whitehead


# -- curve tags -----------------------------------------------------------

class CurveSpec:
    unknotted = False


@dataclass(frozen=True)
class KnotCurve(CurveSpec):
    knot: KnotSpec

    @property
    def unknotted(self):
        return self.knot.kind == UNKNOT


@dataclass(frozen=True)
class MeridianOf(CurveSpec):
    component: str
    unknotted = True


@dataclass(frozen=True)
class CableStrand(CurveSpec):
    """One strand of the (2, 2*ell) cable of ``knot``."""

    knot: KnotSpec
    ell: int
    strand: int

    def __post_init__(self):
        if self.strand not in (1, 2):
            raise ValueError("cable strand index must be 1 or 2")

    @property
    def unknotted(self):
        return self.knot.kind == UNKNOT


@dataclass(frozen=True)
class BingPairStrand(CurveSpec):
    of: CurveSpec
    strand: int
    unknotted = True

    def __post_init__(self):
        if self.strand not in (1, 2):
            raise ValueError("Bing strand index must be 1 or 2")


@dataclass(frozen=True)
class UnlinkComponent(CurveSpec):
    """An unknot split from everything else in the presentation."""

    unknotted = True


@dataclass(frozen=True)
class BorromeanComponent(CurveSpec):
    index: int
    unknotted = True


@dataclass(frozen=True)
class WhiteheadSatellite(CurveSpec):
    """Positive-clasped untwisted Whitehead double of ``of``."""

    of: CurveSpec


# -- presentations --------------------------------------------------------

def as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("coefficients must be exact (int, Fraction or 'p/q'), got %r" % (x,))


@dataclass(frozen=True)
class Component:
    id: str
    curve: CurveSpec
    coeff: Fraction
    surface_framing: int = None

    def __post_init__(self):
        object.__setattr__(self, "coeff", as_fraction(self.coeff))


def _key(a, b):
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class SurgeryPresentation:
    """Ordered framed components over a base homology sphere.

    ``linking`` maps sorted id pairs to nonzero integers; missing pairs
    have linking number zero.  ``split`` declares the components to be
    geometrically split from one another (a connected-sum position).
    """

    components: tuple = ()
    linking: dict = field(default_factory=dict)
    base: ManifoldExpr = field(default_factory=ManifoldExpr)
    annulus_pairs: tuple = ()
    split: bool = False

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        ids = [c.id for c in comps]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate component ids")
        idset = set(ids)
        lk = {}
        for pair, v in dict(self.linking).items():
            a, b = pair
            if a == b:
                raise ValueError("self-linking belongs in the coefficient, not linking")
            if a not in idset or b not in idset:
                raise ValueError("linking refers to unknown component %r" % ((a, b),))
            if int(v) != v:
                raise ValueError("linking numbers must be integers")
            k = _key(a, b)
            if k in lk and lk[k] != int(v):
                raise ValueError("asymmetric linking data for %r" % (k,))
            if v:
                lk[k] = int(v)
        object.__setattr__(self, "linking", lk)
        pairs = tuple(tuple(p) for p in self.annulus_pairs)
        for a, b in pairs:
            if a not in idset or b not in idset:
                raise ValueError("annulus pair refers to unknown component")
        object.__setattr__(self, "annulus_pairs", pairs)
        for c in comps:
            if isinstance(c.curve, MeridianOf):
                parent = c.curve.component
                if parent not in idset:
                    raise ValueError("%s is a meridian of missing component %s" % (c.id, parent))
                row = self.row(c.id)
                if abs(row.get(parent, 0)) != 1 or len(row) != 1:
                    raise ValueError("meridian %s must link %s exactly +-1 and nothing else"
                                     % (c.id, parent))

    # lookups
    @property
    def ids(self):
        return [c.id for c in self.components]

    def __len__(self):
        return len(self.components)

    def component(self, cid):
        for c in self.components:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def lk(self, a, b):
        if a == b:
            return self.component(a).coeff
        return self.linking.get(_key(a, b), 0)

    def row(self, cid):
        out = {}
        for (a, b), v in self.linking.items():
            if a == cid:
                out[b] = v
            elif b == cid:
                out[a] = v
        return out

    def meridians_of(self, cid):
        return [c.id for c in self.components
                if isinstance(c.curve, MeridianOf) and c.curve.component == cid]

    # functional updates
    def _with(self, components=None, linking=None, annulus_pairs=None, **kw):
        return SurgeryPresentation(
            components=self.components if components is None else components,
            linking=self.linking if linking is None else linking,
            base=kw.get("base", self.base),
            annulus_pairs=self.annulus_pairs if annulus_pairs is None else annulus_pairs,
            split=kw.get("split", self.split),
        )

    def without(self, *cids):
        drop = set(cids)
        comps = tuple(c for c in self.components if c.id not in drop)
        lk = {k: v for k, v in self.linking.items() if not (set(k) & drop)}
        pairs = tuple(p for p in self.annulus_pairs if not (set(p) & drop))
        return self._with(comps, lk, pairs)

    def sublink(self, cids):
        keep = set(cids)
        return self.without(*[c for c in self.ids if c not in keep])


def presentation(components, linking=None, **kw):
    """Convenience constructor; ``linking`` may use unordered pairs."""
    lk = {}
    for (a, b), v in (linking or {}).items():
        lk[_key(a, b)] = v
    return SurgeryPresentation(tuple(components), lk, **kw)


# -- linear algebra ---------------------------------------------------------

def integer_det(m):
    """Fraction-free Bareiss elimination; exact for integer matrices."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def linking_matrix(p):
    """Symmetric matrix of Fractions: coefficients on the diagonal."""
    ids = p.ids
    return [[p.lk(a, b) if a != b else p.component(a).coeff for b in ids] for a in ids]


def homology_order(p):
    """|H_1| of the surgered manifold, 0 when it is infinite."""
    ids = p.ids
    rows = []
    for a in ids:
        r = p.component(a).coeff
        rows.append([r.numerator if a == b else r.denominator * p.lk(a, b) for b in ids])
    return abs(integer_det(rows))


# -- integerize / slam dunk / blow down --------------------------------------

def continued_fraction(r, hint=None):
    """Integers [a0, a1, ...] with r = a0 - 1/(a1 - 1/(a2 - ...)).

    When ``r = hint - 1/n`` for an integer n the two-term form
    ``[hint, n]`` is used; otherwise a one-earring form is preferred and
    the full ceiling expansion is the fallback.
    """
    r = as_fraction(r)
    if r.denominator == 1:
        return [r.numerator]
    candidates = ([hint] if hint is not None else []) + [math.ceil(r), math.floor(r)]
    for s in candidates:
        inv = 1 / (s - r) if s != r else None
        if inv is not None and inv.denominator == 1:
            return [s, inv.numerator]
    out = []
    while r.denominator != 1:
        a = math.ceil(r)
        out.append(a)
        r = 1 / (a - r)
    out.append(r.numerator)
    return out


def integerize(p, ids=None):
    """Replace each rational coefficient (of the components ``ids``, by
    default all of them) by an integral earring chain."""
    comps, lk = [], dict(p.linking)
    for c in p.components:
        if ids is not None and c.id not in ids:
            comps.append(c)
            continue
        cf = continued_fraction(c.coeff, c.surface_framing)
        comps.append(replace(c, coeff=Fraction(cf[0])))
        prev = c.id
        for i, a in enumerate(cf[1:], 1):
            mid = "%s.e%d" % (c.id, i)
            comps.append(Component(mid, MeridianOf(prev), Fraction(a)))
            lk[_key(prev, mid)] = 1
            prev = mid
    return p._with(tuple(comps), lk)


def expand_earring(p, cid):
    """Write coefficient ``s - 1/n`` as framing ``s`` plus an earring ``n``,
    where ``s`` is the surface framing; works for integral coefficients too."""
    c = p.component(cid)
    s = c.surface_framing
    if s is None or c.coeff == s:
        raise PatternMismatch("%s has no surface framing to expand around" % cid)
    inv = 1 / (s - c.coeff)
    if inv.denominator != 1:
        raise PatternMismatch("%s: coefficient %s is not %d - 1/n" % (cid, c.coeff, s))
    mid = "%s.e1" % cid
    comps = []
    for x in p.components:
        comps.append(replace(x, coeff=Fraction(s)) if x.id == cid else x)
        if x.id == cid:
            comps.append(Component(mid, MeridianOf(cid), inv))
    lk = dict(p.linking)
    lk[_key(cid, mid)] = 1
    return p._with(tuple(comps), lk)


def slam_dunk(p, mid):
    """Absorb meridian ``mid`` (coefficient r) into its integer-framed parent."""
    c = p.component(mid)
    if not isinstance(c.curve, MeridianOf):
        raise PatternMismatch("%s is not a meridian" % mid)
    parent = p.component(c.curve.component)
    reasons = []
    if parent.coeff.denominator != 1:
        reasons.append("parent %s has non-integral coefficient %s" % (parent.id, parent.coeff))
    if c.coeff == 0:
        reasons.append("meridian %s has coefficient 0" % mid)
    if p.meridians_of(mid):
        reasons.append("meridian %s carries its own meridians" % mid)
    if reasons:
        raise PatternMismatch(reasons)
    new_coeff = parent.coeff - 1 / c.coeff
    q = p.without(mid)
    comps = tuple(replace(x, coeff=new_coeff) if x.id == parent.id else x for x in q.components)
    return q._with(comps)


def blow_down(p, cid):
    """Blow down an unknotted +-1 component.

    Other coefficients drop by eps*lk^2 and linking numbers by
    eps*lk_j*lk_k.  Curve tags of the surviving components are kept as
    labels; meridians of the removed component become plain unknots.
    """
    c = p.component(cid)
    if not c.curve.unknotted:
        raise NotBlowdownable("%s is not tagged unknotted" % cid)
    if c.coeff not in (1, -1):
        raise NotBlowdownable("%s has coefficient %s, not +-1" % (cid, c.coeff))
    eps = int(c.coeff)
    row = p.row(cid)
    rest = [x for x in p.components if x.id != cid]
    comps = []
    for x in rest:
        x2 = x
        a = row.get(x.id, 0)
        if a:
            x2 = replace(x2, coeff=x.coeff - eps * a * a)
        if isinstance(x.curve, MeridianOf) and x.curve.component == cid:
            x2 = replace(x2, curve=KnotCurve(unknot()))
        comps.append(x2)
    lk = {k: v for k, v in p.linking.items() if cid not in k}
    for x, y in combinations([x.id for x in rest], 2):
        a, b = row.get(x, 0), row.get(y, 0)
        if a and b:
            k = _key(x, y)
            v = lk.get(k, 0) - eps * a * b
            if v:
                lk[k] = v
            else:
                lk.pop(k, None)
    pairs = tuple(pr for pr in p.annulus_pairs if cid not in pr)
    return p._with(tuple(comps), lk, pairs)


# -- annulus pairs and J-links -------------------------------------------------

def annulus_pair_eliminate(p, pair):
    """Remove an annulus-cobounding pair together with its two earrings.

    Pattern: the pair is tagged, both strands have integer coefficient
    ``l`` equal to their (parallel) linking number, each strand has
    exactly one earring, the earrings are ``n`` and ``-n``, and every
    other component links the two strands equally.  Surgery on these
    four components gives back the base manifold and leaves the rest of
    the framed link unchanged.
    """
    a, b = pair
    reasons = []
    if tuple(pair) not in p.annulus_pairs and (b, a) not in p.annulus_pairs:
        reasons.append("%s and %s are not tagged as cobounding an annulus" % (a, b))
    ca, cb = p.component(a), p.component(b)
    ell = p.lk(a, b)
    for c in (ca, cb):
        if c.coeff != ell:
            reasons.append("%s has coefficient %s, expected linking number %s" % (c.id, c.coeff, ell))
    ea, eb = p.meridians_of(a), p.meridians_of(b)
    if len(ea) != 1 or len(eb) != 1:
        reasons.append("each strand needs exactly one earring (found %d, %d)" % (len(ea), len(eb)))
    else:
        na, nb = p.component(ea[0]).coeff, p.component(eb[0]).coeff
        if na != -nb or na.denominator != 1:
            reasons.append("earring coefficients %s, %s are not of the form n, -n" % (na, nb))
    block = {a, b} | set(ea) | set(eb)
    for x in p.ids:
        if x in block:
            continue
        if p.lk(a, x) != p.lk(b, x):
            reasons.append("%s links the strands unequally (%d vs %d)" % (x, p.lk(a, x), p.lk(b, x)))
    if reasons:
        raise PatternMismatch(reasons)
    return p.without(*block)


def build_jlink(etas, ells, ns):
    """Cables with earrings over an unlinked-by-default base link.

    Block i is the (2, 2*ells[i]) cable of an unknot K_i (strands framed
    ells[i]) with earrings ns[i] and -ns[i]; strands of blocks i != j
    link etas[i][j] times.
    """
    k = len(ells)
    if len(ns) != k or len(etas) != k or any(len(r) != k for r in etas):
        raise ValueError("dimension mismatch between etas, ells and ns")
    for i in range(k):
        for j in range(k):
            if etas[i][j] != etas[j][i]:
                raise ValueError("etas must be symmetric")
    comps, lk, pairs = [], {}, []
    for i in range(k):
        ell, n = int(ells[i]), int(ns[i])
        a, b = "J%d.a" % (i + 1), "J%d.b" % (i + 1)
        comps += [Component(a, CableStrand(unknot(), ell, 1), ell),
                  Component(a + ".e", MeridianOf(a), n),
                  Component(b, CableStrand(unknot(), ell, 2), ell),
                  Component(b + ".e", MeridianOf(b), -n)]
        lk[_key(a, a + ".e")] = 1
        lk[_key(b, b + ".e")] = 1
        if ell:
            lk[_key(a, b)] = ell
        pairs.append((a, b))
    for i, j in combinations(range(k), 2):
        eta = int(etas[i][j])
        if eta:
            for x in ("J%d.a" % (i + 1), "J%d.b" % (i + 1)):
                for y in ("J%d.a" % (j + 1), "J%d.b" % (j + 1)):
                    lk[_key(x, y)] = eta
    return SurgeryPresentation(tuple(comps), lk, annulus_pairs=tuple(pairs))


# -- Brunnian links from iterated Bing doubling ---------------------------------

def build_brunnian(n):
    """Borromean rings with one component Bing doubled n-3 times, all +1."""
    if n < 3:
        raise ValueError("a Brunnian link of this family needs n >= 3")
    comps = [Component("B1", BorromeanComponent(1), 1),
             Component("B2", BorromeanComponent(2), 1)]
    core = BorromeanComponent(3)
    for level in range(1, n - 2):
        comps.append(Component("S%d" % level, BingPairStrand(core, 1), 1))
        core = BingPairStrand(core, 2)
    comps.append(Component("S%d" % (n - 2) if n > 3 else "B3", core, 1))
    return SurgeryPresentation(tuple(comps))


def _root(curve):
    depth = 0
    while isinstance(curve, (BingPairStrand, WhiteheadSatellite)):
        curve = curve.of
        depth += 1
    return curve, depth


def _brunnian_complete(curves, node):
    if node in curves:
        return True
    if not any(_below(c, node) for c in curves):
        return False
    return (_brunnian_complete(curves, BingPairStrand(node, 1))
            and _brunnian_complete(curves, BingPairStrand(node, 2)))


def _check_brunnian(p):
    curves = set()
    for c in p.components:
        root, _ = _root(c.curve)
        ok_root = isinstance(root, BorromeanComponent) and (
            root.index in (1, 2) and c.curve == root or root.index == 3)
        if not ok_root or any(isinstance(x, WhiteheadSatellite) for x in _chain(c.curve)):
            raise NotBrunnianDescriptor("%s is not a component of an iterated Bing double "
                                        "of the Borromean rings" % c.id)
        if c.curve in curves:
            raise NotBrunnianDescriptor("duplicate curve %s" % c.id)
        curves.add(c.curve)
    # no curve may sit below another one present in the link
    for c in curves:
        node = c
        while isinstance(node, BingPairStrand):
            node = node.of
            if node in curves:
                raise NotBrunnianDescriptor("curve and its Bing double both present")
    if p.linking:
        raise NotBrunnianDescriptor("components of this family have zero linking")
    return curves


def _below(curve, node):
    while isinstance(curve, (BingPairStrand, WhiteheadSatellite)):
        curve = curve.of
        if curve == node:
            return True
    return False


def _chain(curve):
    while isinstance(curve, (BingPairStrand, WhiteheadSatellite)):
        yield curve
        curve = curve.of


def is_full_brunnian(p):
    curves = _check_brunnian(p)
    return (BorromeanComponent(1) in curves and BorromeanComponent(2) in curves
            and _brunnian_complete(curves, BorromeanComponent(3)))


def _reroot(curve, old, new):
    if curve == old:
        return new
    if isinstance(curve, BingPairStrand):
        return BingPairStrand(_reroot(curve.of, old, new), curve.strand)
    if isinstance(curve, WhiteheadSatellite):
        return WhiteheadSatellite(_reroot(curve.of, old, new))
    return curve


def blow_down_borromean_pair(p):
    """Blow down the +1 components B1, B2; the third ring becomes T(2,3)."""
    ids = {c.curve: c.id for c in p.components}
    b1, b2 = ids.get(BorromeanComponent(1)), ids.get(BorromeanComponent(2))
    if b1 is None or b2 is None:
        raise PatternMismatch("both Borromean partners must be present")
    for b in (b1, b2):
        if p.component(b).coeff != 1:
            raise PatternMismatch("only (+1, +1) Borromean blow-downs are supported")
    q = blow_down(blow_down(p, b1), b2)
    trefoil = KnotCurve(torus(2, 3))
    comps = tuple(replace(c, curve=_reroot(c.curve, BorromeanComponent(3), trefoil))
                  for c in q.components)
    return q._with(comps)


def _strip_whitehead(curve):
    depth = 0
    while isinstance(curve, WhiteheadSatellite):
        curve = curve.of
        depth += 1
    return curve, depth


def bing_pair_rewrite(p, a, b):
    """(+1,+1) surgery on a Bing pair -> +1 surgery on a Whitehead double.

    One strand must be a bare Bing strand; it is blown down and the
    other strand (possibly already wrapped in Whitehead satellites)
    gains one more Whitehead layer around the common companion.
    """
    ca, cb = p.component(a), p.component(b)
    reasons = []
    if ca.coeff != 1 or cb.coeff != 1:
        reasons.append("Bing pair rewrite needs coefficients (+1, +1)")
    if p.row(a) or p.row(b):
        reasons.append("Bing strands must have zero linking with every component")
    bare, other = (ca, cb) if isinstance(ca.curve, BingPairStrand) else (cb, ca)
    inner, depth = _strip_whitehead(other.curve)
    if not (isinstance(bare.curve, BingPairStrand) and isinstance(inner, BingPairStrand)
            and inner.of == bare.curve.of and inner.strand != bare.curve.strand):
        reasons.append("%s and %s are not the two strands of one Bing double" % (a, b))
    if reasons:
        raise PatternMismatch(reasons)
    q = blow_down(p, bare.id)
    new_curve = bare.curve.of
    for _ in range(depth + 1):
        new_curve = WhiteheadSatellite(new_curve)
    comps = tuple(replace(c, curve=new_curve) if c.id == other.id else c for c in q.components)
    return q._with(comps)


def _find_bing_pair(p):
    for x, y in combinations(p.components, 2):
        for bare, other in ((x, y), (y, x)):
            inner, _ = _strip_whitehead(other.curve)
            if (isinstance(bare.curve, BingPairStrand) and isinstance(inner, BingPairStrand)
                    and inner.of == bare.curve.of and inner.strand != bare.curve.strand):
                return bare.id, other.id
    return None


def _curve_to_knot(curve):
    inner, depth = _strip_whitehead(curve)
    if isinstance(inner, KnotCurve) and inner.knot == torus(2, 3):
        return torus(2, 3) if depth == 0 else whitehead(depth)
    return None


def reduce_brunnian(p, log=None):
    """Identify the surgered manifold of L_n or of any of its sublinks.

    Proper sublinks are unlinks, so surgery with coefficients 1/n gives
    back the base.  The full link is reduced by the explicit moves
    (Borromean blow-down, then Bing-pair rewrites innermost first).
    """
    full = is_full_brunnian(p)
    if not full:
        for c in p.components:
            if c.coeff.numerator not in (1, -1):
                raise NotBrunnianDescriptor(
                    "%s: coefficient %s on an unlink component is not a homology sphere "
                    "surgery" % (c.id, c.coeff))
        if log is not None:
            log.append("proper sublink of a Brunnian link: unlink, surgery gives the base")
        return p.base
    q = blow_down_borromean_pair(p)
    if log is not None:
        log.append("blow down B1, B2: the remaining core becomes T(2,3)")
    while len(q) > 1:
        pair = _find_bing_pair(q)
        if pair is None:
            raise ReductionStuck("no Bing pair found", q)
        q = bing_pair_rewrite(q, *pair)
        if log is not None:
            log.append("Bing pair (%s, %s) -> Whitehead double" % pair)
    (last,) = q.components
    knot = _curve_to_knot(last.curve)
    if knot is None or last.coeff != 1:
        raise ReductionStuck("unexpected end state %r" % (last,), q)
    return p.base.connected_sum(ManifoldExpr.surgery(knot, 1))


# -- reduce driver ---------------------------------------------------------------

def _is_brunnian_family(p):
    return p.components and all(
        isinstance(_root(c.curve)[0], BorromeanComponent) for c in p.components)


def reduce(p, log=None):
    """Apply the fixed strategy and return the resulting ManifoldExpr.

    Order: slam-dunk meridians not belonging to annulus pairs, eliminate
    annulus pairs, rewrite Brunnian/Bing structures, drop split unknots
    with coefficient 1/n, then read off what is left.
    """
    if log is None:
        log = []
    q = p
    if _is_brunnian_family(q):
        return reduce_brunnian(q, log)
    paired = {x for pr in q.annulus_pairs for x in pr}
    progress = True
    while progress:
        progress = False
        for c in q.components:
            if (isinstance(c.curve, MeridianOf) and c.curve.component not in paired
                    and not q.meridians_of(c.id)
                    and q.component(c.curve.component).coeff.denominator == 1):
                q = slam_dunk(q, c.id)
                log.append("slam dunk %s" % c.id)
                progress = True
                break
    for pr in list(q.annulus_pairs):
        for x in pr:
            if not q.meridians_of(x) and q.component(x).surface_framing is not None:
                q = expand_earring(q, x)
                log.append("earring on %s" % x)
        q = annulus_pair_eliminate(q, pr)
        log.append("annulus pair %s, %s eliminated" % pr)
    result = q.base
    for c in q.components:
        unknotted_split = isinstance(c.curve, UnlinkComponent) or (
            q.split and isinstance(c.curve, KnotCurve) and c.curve.unknotted)
        if unknotted_split and c.coeff.numerator in (1, -1) and not q.row(c.id):
            q = q.without(c.id)
            log.append("drop split unknot %s with coefficient %s" % (c.id, c.coeff))
    surgeries = []
    for c in q.components:
        if not isinstance(c.curve, KnotCurve) or c.coeff.numerator not in (1, -1):
            raise ReductionStuck("component %s (%s, coefficient %s) cannot be read off"
                                 % (c.id, type(c.curve).__name__, c.coeff), q)
        surgeries.append(ManifoldExpr.surgery(c.curve.knot, c.coeff.numerator * c.coeff.denominator))
    if len(surgeries) > 1 and not (q.split and not q.linking):
        raise ReductionStuck("%d knotted components remain and are not declared split"
                             % len(surgeries), q)
    return result.connected_sum(*surgeries) if surgeries else result
