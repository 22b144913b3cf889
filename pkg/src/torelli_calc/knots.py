"""Catalog of the knot families used throughout the package.

A :class:`KnotSpec` is a symbolic description (family, parameters,
mirror flag).  Alexander polynomials come from Seifert matrices or the
torus-knot quotient formula; ``V_m`` values come from numerical
semigroups for torus knots and from a short catalog otherwise.

Whitehead iterates
------------------
``Wh^k`` is the k-fold positive-clasped Whitehead double of the right
handed trefoil, with ``Wh^0 = T(2,3)``.  For k >= 1 the Alexander
polynomial is 1 and the genus is 1.  Its tau invariant equals 1 for
every k, and ``0 <= V_0 <= ceil(g4/2)`` with slice genus 1, while
``V_0 >= 1`` is forced because ``V_0 = 0`` would make ``d(S^3_1)``
vanish; this squeezes ``V_0 = 1``.  ``V_m = 0`` for ``m >= 1 = g``.
"""

import math
import re
from dataclasses import dataclass

from .errors import NotCoprime, ParseError, UnsupportedKnot
from .laurent import LaurentPoly, symmetrize_normalize

UNKNOT = "U"
TORUS = "T"
DOUBLE_TWIST = "D"
PRETZEL = "P"
WHITEHEAD = "Wh"


@dataclass(frozen=True)
class KnotSpec:
    kind: str
    params: tuple = ()
    mirror: bool = False

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(x) for x in self.params))
        kind, params = self.kind, self.params
        if kind == UNKNOT:
            if params:
                raise ValueError("the unknot takes no parameters")
        elif kind == TORUS:
            if len(params) != 2:
                raise ValueError("T(p,q) takes two parameters")
            p, q = params
            if not 2 <= p < q:
                raise ValueError("T(p,q) requires 2 <= p < q, got %r" % (params,))
            if math.gcd(p, q) != 1:
                raise NotCoprime("T(%d,%d): parameters are not coprime" % (p, q))
        elif kind == DOUBLE_TWIST:
            if len(params) != 2 or 0 in params:
                raise ValueError("D(a,b) takes two nonzero integers")
        elif kind == PRETZEL:
            if len(params) != 3 or any(x % 2 == 0 for x in params):
                raise ValueError("P(p,q,r) takes three odd integers")
        elif kind == WHITEHEAD:
            if len(params) != 1 or params[0] < 0:
                raise ValueError("Wh^k requires k >= 0")
        else:
            raise ValueError("unknown knot family %r" % (kind,))

    def mirrored(self):
        if self.kind == UNKNOT:
            return self
        return KnotSpec(self.kind, self.params, not self.mirror)

    def __str__(self):
        return render_knot(self)


def unknot():
    return KnotSpec(UNKNOT)


def torus(p, q):
    p, q = sorted((int(p), int(q)))
    return KnotSpec(TORUS, (p, q))


def double_twist(a, b):
    return KnotSpec(DOUBLE_TWIST, (a, b))


def twist_knot(n):
    """The genus one knot with Alexander polynomial n t - (2n-1) + n t^-1."""
    return double_twist(1, n)


def pretzel(p, q, r):
    return KnotSpec(PRETZEL, (p, q, r))


def whitehead(k):
    return KnotSpec(WHITEHEAD, (k,))


def _underlying(k):
    """Replace Wh^0 by the trefoil it denotes, keeping the mirror flag."""
    if k.kind == WHITEHEAD and k.params[0] == 0:
        t = torus(2, 3)
        return t.mirrored() if k.mirror else t
    return k


# -- Seifert matrices and Alexander polynomials --------------------------

def seifert_matrix(k):
    """A Seifert matrix for the genus one families, or None."""
    if k.kind == DOUBLE_TWIST:
        a, b = k.params
        return [[a, 1], [0, b]]
    if k.kind == PRETZEL:
        p, q, r = k.params
        return [[(p + q) // 2, (q + 1) // 2], [(q - 1) // 2, (q + r) // 2]]
    return None


def _poly_det(m):
    n = len(m)
    if n == 0:
        return LaurentPoly.constant(1)
    if n == 1:
        return m[0][0]
    total = LaurentPoly()
    for j in range(n):
        if m[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _poly_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def alexander_from_seifert(v):
    """det(V - t V^T), symmetrized and normalized."""
    n = len(v)
    t = LaurentPoly.monomial(1)
    m = [[LaurentPoly.constant(v[i][j]) - t * v[j][i] for j in range(n)]
         for i in range(n)]
    return symmetrize_normalize(_poly_det(m))


def torus_alexander(p, q):
    t = LaurentPoly.monomial
    one = LaurentPoly.constant(1)
    num = (t(p * q) - one) * (t(1) - one)
    den = (t(p) - one) * (t(q) - one)
    return symmetrize_normalize(num.exact_div(den))


def alexander(k):
    """Symmetric Alexander polynomial with value 1 at t = 1.

    Mirroring does not change it.
    """
    k = _underlying(k)
    if k.kind == UNKNOT or k.kind == WHITEHEAD:
        return LaurentPoly.constant(1)
    if k.kind == TORUS:
        return torus_alexander(*k.params)
    return alexander_from_seifert(seifert_matrix(k))


def seifert_genus(k):
    k = _underlying(k)
    if k.kind == UNKNOT:
        return 0
    if k.kind == TORUS:
        p, q = k.params
        return (p - 1) * (q - 1) // 2
    if k.kind == PRETZEL:
        # P(1,-1,r) and its permutations are unknotted
        p, q, r = k.params
        for a, b in ((p, q), (q, r), (p, r)):
            if abs(a) == 1 and a == -b:
                return 0
        return 1
    return 1


# -- numerical semigroups -------------------------------------------------

@dataclass(frozen=True)
class SemigroupData:
    generators: tuple
    gaps: tuple

    @property
    def genus(self):
        return len(self.gaps)

    @property
    def frobenius(self):
        return self.gaps[-1] if self.gaps else -1


def _in_semigroup(n, p, q, q_inv):
    # n = a p + b q with 0 <= b < p is forced: b = n q^-1 mod p
    b = n * q_inv % p
    return b * q <= n


def semigroup(p, q):
    """Gaps of the semigroup generated by p and q."""
    p, q = int(p), int(q)
    if p < 2 or q < 2:
        raise ValueError("semigroup generators must be >= 2")
    if math.gcd(p, q) != 1:
        raise NotCoprime("%d and %d are not coprime" % (p, q))
    bound = p * q - p - q
    q_inv = pow(q, -1, p)
    gaps = tuple(n for n in range(1, bound + 1) if not _in_semigroup(n, p, q, q_inv))
    return SemigroupData((p, q), gaps)


def v_invariant(k, m):
    """``V_m`` for positive torus knots, Whitehead iterates, the unknot
    and mirrors of these (whose V_m all vanish)."""
    if m < 0:
        raise ValueError("m must be non-negative")
    k = _underlying(k)
    if k.kind == UNKNOT:
        return 0
    if k.kind == TORUS:
        if k.mirror:
            return 0
        g = seifert_genus(k)
        return sum(1 for gap in semigroup(*k.params).gaps if gap >= g + m)
    if k.kind == WHITEHEAD:
        if k.mirror:
            return 0
        return 1 if m == 0 else 0
    raise UnsupportedKnot("no V_m rule for %s" % render_knot(k))


# -- text grammar ---------------------------------------------------------

_KNOT_RE = re.compile(
    r"""^(?P<m>m)?(?:
        (?P<u>U)
      | T\(\s*(?P<tp>-?\d+)\s*,\s*(?P<tq>-?\d+)\s*\)
      | D\(\s*(?P<da>-?\d+)\s*,\s*(?P<db>-?\d+)\s*\)
      | P\(\s*(?P<pp>-?\d+)\s*,\s*(?P<pq>-?\d+)\s*,\s*(?P<pr>-?\d+)\s*\)
      | Wh\^\s*\{?(?P<wk>\d+)\}?
    )$""",
    re.VERBOSE,
)


def parse_knot(text):
    """Parse ``U``, ``T(p,q)``, ``D(a,b)``, ``P(p,q,r)``, ``Wh^k`` with an
    optional ``m`` prefix for the mirror."""
    m = _KNOT_RE.match(text.strip())
    if not m:
        raise ParseError("cannot parse knot %r" % (text,))
    try:
        if m.group("u"):
            k = unknot()
        elif m.group("tp") is not None:
            k = torus(int(m.group("tp")), int(m.group("tq")))
        elif m.group("da") is not None:
            k = double_twist(int(m.group("da")), int(m.group("db")))
        elif m.group("pp") is not None:
            k = pretzel(int(m.group("pp")), int(m.group("pq")), int(m.group("pr")))
        else:
            k = whitehead(int(m.group("wk")))
    except ValueError as exc:
        raise ParseError("invalid knot %r: %s" % (text, exc)) from exc
    return k.mirrored() if m.group("m") else k


def render_knot(k):
    if k.kind == UNKNOT:
        body = "U"
    elif k.kind == WHITEHEAD:
        body = "Wh^%d" % k.params[0]
    else:
        body = "%s(%s)" % (k.kind, ",".join(str(x) for x in k.params))
    return ("m" if k.mirror else "") + body
