"""Words in separating twists and bounding pair maps, their surgery
presentations, and the d-invariant bounds in terms of word length.

Sign convention: a positive twist is left-handed, so the n-th power of
a twist along a curve with surface framing s is surgery with
coefficient ``s - 1/n`` on that curve.
"""

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .casson import ManifoldExpr
from .dfloer import DValue, d_manifold
from .errors import LetterNotInA, NonTorelliLetter, ParseError, UnrealizedGenerator
from .knots import KnotSpec, parse_knot, render_knot, seifert_genus, torus
from .surgery import (CableStrand, Component, CurveSpec, KnotCurve, SurgeryPresentation, _key,
                      reduce)


# -- generators -------------------------------------------------------------

@dataclass(frozen=True)
class SepRealization:
    """A separating curve isotopic to ``knot``.

    The curve bounds a subsurface of S, which is a Seifert surface, so
    its surface framing is the Seifert framing: ``s`` must be 0.
    """

    knot: KnotSpec
    s: int = 0

    def __post_init__(self):
        if self.s != 0:
            raise ValueError("a separating curve has surface framing 0, got %d" % self.s)


@dataclass(frozen=True)
class BPRealization:
    """Two disjoint curves, oriented to be homologous in S.

    Their common surface framing ``s`` equals their linking number
    ``ell`` in this orientation.
    """

    curves: tuple
    s: int
    ell: int

    def __post_init__(self):
        curves = tuple(KnotCurve(c) if isinstance(c, KnotSpec) else c for c in self.curves)
        if len(curves) != 2 or not all(isinstance(c, CurveSpec) for c in curves):
            raise ValueError("a bounding pair is realized by two curves")
        object.__setattr__(self, "curves", curves)
        if self.s != self.ell:
            raise ValueError("bounding pair curves must have surface framing equal to their "
                             "linking number (s=%d, ell=%d)" % (self.s, self.ell))

    @property
    def is_cable_pair(self):
        """Both strands of one (2, 2 ell) cable: they cobound an annulus."""
        a, b = self.curves
        return (isinstance(a, CableStrand) and isinstance(b, CableStrand)
                and a.knot == b.knot and a.ell == b.ell == self.ell
                and {a.strand, b.strand} == {1, 2})


def cable_pair(knot, ell):
    """Bounding pair realization by the two strands of the (2, 2 ell) cable."""
    return BPRealization((CableStrand(knot, ell, 1), CableStrand(knot, ell, 2)), ell, ell)


@dataclass(frozen=True)
class NonSepRealization:
    knot: KnotSpec
    s: int = 0


@dataclass(frozen=True)
class SepTwist:
    m: int
    realization: SepRealization = None
    label: str = None

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("genus datum m must be >= 1")
        r = self.realization
        if r is not None and seifert_genus(r.knot) > self.m:
            raise ValueError("%s has genus %d > m = %d, it cannot bound the smaller side"
                             % (render_knot(r.knot), seifert_genus(r.knot), self.m))


@dataclass(frozen=True)
class BPMap:
    m: int
    realization: BPRealization = None
    label: str = None

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("genus datum m must be >= 1")


@dataclass(frozen=True)
class NonSepTwist:
    """A Dehn twist on a non-separating curve; not in the Torelli group."""

    realization: NonSepRealization
    label: str = None


@dataclass(frozen=True)
class Conjugate:
    """The formal conjugate ``f g f^-1`` of a generator ``g``."""

    generator: object
    by: str

    @property
    def m(self):
        return self.generator.m

    @property
    def base(self):
        g = self.generator
        while isinstance(g, Conjugate):
            g = g.generator
        return g


def is_torelli(gen):
    if isinstance(gen, Conjugate):
        return is_torelli(gen.base)
    return isinstance(gen, (SepTwist, BPMap))


# -- words --------------------------------------------------------------------

@dataclass(frozen=True)
class TorelliWord:
    genus: int
    letters: tuple = ()

    def __post_init__(self):
        letters = tuple((g, int(n)) for g, n in self.letters if n)
        object.__setattr__(self, "letters", letters)
        cap = self.genus // 2
        for g, _ in letters:
            if is_torelli(g) and g.m > cap:
                raise ValueError("generator with m=%d does not fit on a genus %d surface"
                                 % (g.m, self.genus))

    def __len__(self):
        return len(self.letters)


def free_reduce(letters):
    stack = []
    for g, n in letters:
        if stack and stack[-1][0] == g:
            total = stack[-1][1] + n
            stack.pop()
            if total:
                stack.append((g, total))
        elif n:
            stack.append((g, n))
    return stack


def word_norm(w):
    """Sum of |powers| after merging adjacent equal generators."""
    return sum(abs(n) for _, n in free_reduce(w.letters))


def conjugate_word(w, by="f"):
    return TorelliWord(w.genus, tuple((Conjugate(g, by), n) for g, n in w.letters))


def conjugate_invariance_check(w, by="f"):
    """Conjugating every letter by one mapping class keeps m and length."""
    cw = conjugate_word(w, by)
    m_ok = all(getattr(g, "m", None) == getattr(cg, "m", None)
               for (g, _), (cg, _) in zip(w.letters, cw.letters))
    norm_ok = word_norm(w) == word_norm(cw)
    return {"letters": len(w), "norm": word_norm(w), "m_preserved": m_ok,
            "norm_preserved": norm_ok, "ok": m_ok and norm_ok}


def assemble(w, base=None, etas=None, allow_nontorelli=False, split=False):
    """Surgery presentation of the Torelli surgery along ``w``.

    Letter i lives on the level S x {1/i}.  ``etas`` maps pairs of
    bounding-pair letter indices (1-based) to the common linking number
    of their curves; separating curves link nothing.
    """
    base = ManifoldExpr() if base is None else base
    etas = {_key(*k): int(v) for k, v in (etas or {}).items()}
    comps, lk, bp_ids, pairs = [], {}, {}, []
    for i, (gen, n) in enumerate(w.letters, 1):
        g = gen.base if isinstance(gen, Conjugate) else gen
        if isinstance(gen, Conjugate):
            raise UnrealizedGenerator("letter %d is a formal conjugate without a curve" % i)
        if isinstance(g, NonSepTwist) and not allow_nontorelli:
            raise NonTorelliLetter("letter %d is a non-separating twist" % i)
        r = g.realization
        if r is None:
            raise UnrealizedGenerator("letter %d has no geometric realization" % i)
        if isinstance(g, BPMap):
            a, b = "L%d.1" % i, "L%d.2" % i
            comps.append(Component(a, r.curves[0], r.s - Fraction(1, n), r.s))
            comps.append(Component(b, r.curves[1], r.s + Fraction(1, n), r.s))
            if r.ell:
                lk[(a, b)] = r.ell
            bp_ids[i] = (a, b)
            if r.is_cable_pair:
                pairs.append((a, b))
        else:
            comps.append(Component("L%d" % i, KnotCurve(r.knot), r.s - Fraction(1, n), r.s))
    for (i, j), eta in etas.items():
        if i not in bp_ids or j not in bp_ids:
            if eta:
                raise ValueError("linking %r given for letters that are not both bounding pairs"
                                 % ((i, j),))
            continue
        if eta:
            for x in bp_ids[i]:
                for y in bp_ids[j]:
                    lk[_key(x, y)] = eta
    return SurgeryPresentation(tuple(comps), lk, base=base, annulus_pairs=tuple(pairs),
                               split=split)


def realized_manifold(w, **kw):
    """Assemble and reduce; only works when the link can be read off."""
    return reduce(assemble(w, **kw))


# -- bounds ---------------------------------------------------------------------

def _ceil_div(a, b):
    return -(-a // b)


@dataclass(frozen=True)
class DefectBound:
    bound: int
    refined: tuple = None


def generator_defect_bound(gen):
    """Bound on |d(Y) - d(Y_gen)|: 2 ceil(m/2).

    For a separating twist the one-sided interval [0, m + (m mod 2)] for
    d(Y_gen) - d(Y) (positive twist) is also returned.
    """
    if not is_torelli(gen):
        raise NonTorelliLetter("no uniform bound exists for non-separating twists")
    m = gen.m
    bound = 2 * _ceil_div(m, 2)
    base = gen.base if isinstance(gen, Conjugate) else gen
    refined = (0, m + m % 2) if isinstance(base, SepTwist) else None
    return DefectBound(bound, refined)


def refined_interval(gen, power):
    """Interval for d(Y_gen^power) - d(Y), power = +-1, separating twists."""
    lo, hi = generator_defect_bound(gen).refined
    if power == 1:
        return (lo, hi)
    if power == -1:
        return (-hi, -lo)
    raise ValueError("refined interval only for powers +-1")


def word_bound(w, A):
    A = list(A)
    for g, _ in w.letters:
        if g not in A:
            raise LetterNotInA("letter %r is not in the generating set" % (g,))
    norm = word_norm(w)
    if norm == 0:
        return 0
    k_A = max(g.m for g in A)
    return 2 * _ceil_div(k_A, 2) * norm


def letter_cap(genus):
    """Largest per-letter d change over all Torelli generators of this genus."""
    return 2 * _ceil_div(genus // 2, 2)


def norm_lower_bound_from_d(d, genus):
    """Certified lower bound on the infinite-generator word length."""
    if genus < 2:
        raise ValueError("genus must be >= 2")
    return _ceil_div(abs(int(d)), letter_cap(genus))


def surgery_bound(n, genus_K):
    return 2 * abs(n) * _ceil_div(genus_K, 2)


def bfp_bound(norm, C):
    return Fraction(C) * norm * norm


@dataclass(frozen=True)
class NonsepExample:
    k: int
    generator: NonSepTwist
    meridional_wraps: int
    surface_framing_before: int
    manifold: ManifoldExpr
    d: DValue
    word_norm: int


def nonsep_example(k):
    """A single negative non-separating twist producing S^3_1(T(2,4k+1)).

    The (2,4k+1) curve on a genus one piece has surface framing 8k+2;
    an arc wrapping -(8k+2) times around the complementary handle brings
    the surface framing to 0.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    knot = torus(2, 4 * k + 1)
    gen = NonSepTwist(NonSepRealization(knot, 0), label="C_%d" % k)
    w = TorelliWord(2, ((gen, -1),))
    mfd = realized_manifold(w, allow_nontorelli=True)
    return NonsepExample(k, gen, -(8 * k + 2), 8 * k + 2, mfd, d_manifold(mfd), word_norm(w))


# -- word grammar ---------------------------------------------------------------
#   word   := letter ('*' letter)*  |  '1'
#   letter := name '(' args ')' ['^' int]
#   sep(m) | sep(m; K[, s]) | bp(m) | bp(m; K1, K2, s, l) | bp(m; cable(K), l)
#   | nonsep(K[, s])

_HEAD = re.compile(r"\s*(sep|bp|nonsep)\s*\(")
_POWER = re.compile(r"\s*(?:\^\s*([({]?)\s*([+-]?\d+)\s*([)}]?))?\s*")


def _match_letter(chunk):
    """(name, args, power) for ``name(args)^power`` with nested parentheses."""
    m = _HEAD.match(chunk)
    if not m:
        return None
    depth, i = 1, m.end()
    while i < len(chunk) and depth:
        depth += {"(": 1, ")": -1}.get(chunk[i], 0)
        i += 1
    if depth:
        return None
    tail = _POWER.fullmatch(chunk[i:])
    if not tail or (tail.group(1) and not tail.group(3)) or (tail.group(3) and not tail.group(1)):
        return None
    power = int(tail.group(2)) if tail.group(2) else 1
    return m.group(1), chunk[m.end():i - 1], power


def _split_args(s):
    out, depth, cur = [], 0, ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur.strip())
            cur = ""
        else:
            cur += ch
    if cur.strip():
        out.append(cur.strip())
    return out


def parse_letter(name, args):
    if name == "nonsep":
        parts = _split_args(args)
        if not 1 <= len(parts) <= 2:
            raise ParseError("nonsep(K[, s]) expected, got %r" % args)
        s = int(parts[1]) if len(parts) == 2 else 0
        return NonSepTwist(NonSepRealization(parse_knot(parts[0]), s))
    head, _, tail = args.partition(";")
    try:
        m = int(head)
    except ValueError:
        raise ParseError("genus datum must be an integer, got %r" % head) from None
    parts = _split_args(tail) if tail.strip() else []
    try:
        if name == "sep":
            if not parts:
                return SepTwist(m)
            if len(parts) > 2:
                raise ParseError("sep(m; K[, s]) expected")
            s = int(parts[1]) if len(parts) == 2 else 0
            return SepTwist(m, SepRealization(parse_knot(parts[0]), s))
        if not parts:
            return BPMap(m)
        cab = re.fullmatch(r"cable\((.*)\)", parts[0])
        if cab and len(parts) == 2:
            return BPMap(m, cable_pair(parse_knot(cab.group(1)), int(parts[1])))
        if len(parts) != 4:
            raise ParseError("bp(m; K1, K2, s, l) expected")
        return BPMap(m, BPRealization((parse_knot(parts[0]), parse_knot(parts[1])),
                                      int(parts[2]), int(parts[3])))
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_word(text, genus=None):
    s = text.strip()
    letters = []
    if s not in ("", "1"):
        for chunk in _split_top_star(s):
            m = _match_letter(chunk)
            if not m:
                raise ParseError("cannot parse letter %r" % chunk)
            name, args, power = m
            letters.append((parse_letter(name, args), power))
    if genus is None:
        ms = [g.m for g, _ in letters if is_torelli(g)]
        genus = max([2] + [2 * x for x in ms])
    try:
        return TorelliWord(genus, tuple(letters))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _split_top_star(s):
    out, depth, cur = [], 0, ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "*" and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return out


def render_letter(gen, n):
    if isinstance(gen, SepTwist):
        r = gen.realization
        body = "sep(%d%s)" % (gen.m, "" if r is None else "; %s, %d" % (render_knot(r.knot), r.s))
    elif isinstance(gen, BPMap):
        r = gen.realization
        if r is None:
            body = "bp(%d)" % gen.m
        elif r.is_cable_pair:
            body = "bp(%d; cable(%s), %d)" % (gen.m, render_knot(r.curves[0].knot), r.ell)
        else:
            k1, k2 = (render_knot(c.knot) if isinstance(c, KnotCurve) else repr(c)
                      for c in r.curves)
            body = "bp(%d; %s, %s, %d, %d)" % (gen.m, k1, k2, r.s, r.ell)
    elif isinstance(gen, NonSepTwist):
        r = gen.realization
        body = "nonsep(%s, %d)" % (render_knot(r.knot), r.s)
    else:
        body = repr(gen)
    return body if n == 1 else "%s^%d" % (body, n)


def render_word(w):
    if not w.letters:
        return "1"
    return " * ".join(render_letter(g, n) for g, n in w.letters)
