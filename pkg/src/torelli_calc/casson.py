"""Casson invariant of integral homology spheres given as surgery data.

Only surgeries with coefficient ``1/n`` on catalog knots in ``S^3`` and
their connected sums / orientation reversals are handled; that is every
homology sphere the rest of the package produces.
"""

import re
from dataclasses import dataclass

from .errors import ParityViolation, ParseError
from .knots import KnotSpec, alexander, parse_knot, render_knot
from .laurent import second_derivative_at_one


@dataclass(frozen=True)
class Surgery:
    """``S^3_{1/n}(knot)``; ``n`` is a nonzero integer (sign included)."""

    knot: KnotSpec
    n: int

    def __post_init__(self):
        if int(self.n) != self.n or self.n == 0:
            raise ValueError("surgery coefficient must be 1/n with n a nonzero integer")
        object.__setattr__(self, "n", int(self.n))

    @property
    def sign(self):
        return 1 if self.n > 0 else -1

    def __str__(self):
        return "S3_{%s}(%s)" % (_coeff_text(self.n), render_knot(self.knot))


def _coeff_text(n):
    if n == 1:
        return "1"
    if n == -1:
        return "-1"
    return "%s1/%d" % ("-" if n < 0 else "", abs(n))


@dataclass(frozen=True)
class ManifoldExpr:
    """A connected sum of surgeries, optionally orientation reversed.

    The empty sum is ``S^3``.  Summands may themselves be expressions.
    """

    summands: tuple = ()
    reversed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(self.summands))
        for s in self.summands:
            if not isinstance(s, (Surgery, ManifoldExpr)):
                raise TypeError("summand must be Surgery or ManifoldExpr, got %r" % (s,))

    @classmethod
    def sphere(cls):
        return cls()

    @classmethod
    def surgery(cls, knot, n):
        return cls((Surgery(knot, n),))

    def connected_sum(self, *others):
        parts = [self] + list(others)
        flat = []
        for p in parts:
            if isinstance(p, ManifoldExpr) and not p.reversed:
                flat.extend(p.summands)
            else:
                flat.append(p)
        return ManifoldExpr(tuple(flat))

    __matmul__ = connected_sum

    def reverse(self):
        return ManifoldExpr(self.summands, not self.reversed)

    def pieces(self):
        """Yield (Surgery, orientation sign) pairs with reversals pushed in."""
        outer = -1 if self.reversed else 1
        for s in self.summands:
            if isinstance(s, Surgery):
                yield s, outer
            else:
                for piece, sign in s.pieces():
                    yield piece, outer * sign

    def is_sphere(self):
        return not any(True for _ in self.pieces())

    def __str__(self):
        return render_manifold(self)


def casson_surgery(k, n):
    """lambda(S^3_{1/n}(k)) = n * Delta''(1) / 2; n = 0 means no surgery."""
    if int(n) != n:
        raise ValueError("n must be an integer (the coefficient is 1/n)")
    n = int(n)
    if n == 0:
        return 0
    d2 = second_derivative_at_one(alexander(k))
    if d2 % 2:
        raise ParityViolation("Delta''(1) = %d is odd for %s" % (d2, render_knot(k)))
    return n * (d2 // 2)


def casson_manifold(e):
    if isinstance(e, Surgery):
        return casson_surgery(e.knot, e.n)
    return sum(sign * casson_surgery(s.knot, s.n) for s, sign in e.pieces())


def casson_defect(lab, la, lb):
    """lambda(Y_ab) - lambda(Y_a) - lambda(Y_b)."""
    return lab - la - lb


# -- text grammar ---------------------------------------------------------
#   expr    := summand ('#' summand)*
#   summand := ['-'] ( 'S3' | 'S3_{' coeff '}(' knot ')' | '(' expr ')' )
#   coeff   := ['-'] ( '1' | '1/' n )

_SURG_RE = re.compile(r"S3_\{\s*(-?)\s*1(?:\s*/\s*(\d+))?\s*\}\(")


def _split_top(text, sep):
    depth, start, out = 0, 0, []
    for i, ch in enumerate(text):
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        elif ch == sep and depth == 0:
            out.append(text[start:i])
            start = i + 1
    out.append(text[start:])
    return out


def parse_manifold(text):
    s = text.strip()
    if not s:
        raise ParseError("empty manifold expression")
    parts = _split_top(s, "#")
    summands = [_parse_summand(p.strip(), text) for p in parts]
    if len(summands) == 1 and isinstance(summands[0], ManifoldExpr):
        return summands[0]
    return ManifoldExpr(tuple(summands))


def _parse_summand(s, whole):
    if not s:
        raise ParseError("empty summand in %r" % (whole,))
    if s.startswith("-"):
        inner = _parse_summand(s[1:].strip(), whole)
        if isinstance(inner, Surgery):
            inner = ManifoldExpr((inner,))
        return inner.reverse()
    if s == "S3":
        return ManifoldExpr()
    if s.startswith("(") and s.endswith(")"):
        return parse_manifold(s[1:-1])
    m = _SURG_RE.match(s)
    if m and s.endswith(")"):
        n = int(m.group(2) or 1)
        if n == 0:
            raise ParseError("1/0 is not a homology sphere surgery")
        if m.group(1):
            n = -n
        return Surgery(parse_knot(s[m.end():-1]), n)
    raise ParseError("cannot parse summand %r in %r" % (s, whole))


def render_manifold(e):
    if isinstance(e, Surgery):
        return str(e)
    if not e.summands:
        body = "S3"
    else:
        texts = []
        for s in e.summands:
            t = render_manifold(s)
            if isinstance(s, ManifoldExpr) and len(s.summands) > 1 and not s.reversed:
                t = "(" + t + ")"
            texts.append(t)
        body = " # ".join(texts)
    if e.reversed:
        return "-(" + body + ")"
    return body
