"""Integer Laurent polynomials in one variable ``t``.

Coefficients are Python ints, so everything is exact.  Values are
immutable and hashable; arithmetic returns new instances.
"""

import re
from fractions import Fraction

from .errors import NotNormalizable, ParseError


class LaurentPoly:
    """A finite sum ``sum a_j t^j`` with integer coefficients.

    The coefficient map never stores zeros, so two polynomials are equal
    exactly when their ``coeffs`` dicts are equal.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for e, c in dict(coeffs).items():
                if int(c) != c:
                    raise TypeError("coefficients must be integers, got %r" % (c,))
                c = int(c)
                if c:
                    clean[int(e)] = c
        self._coeffs = clean
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent, c=1):
        return cls({exponent: c})

    @classmethod
    def from_list(cls, coefficients, low=0):
        """Coefficients listed from exponent ``low`` upwards."""
        return cls({low + i: c for i, c in enumerate(coefficients)})

    # -- basic accessors ----------------------------------------------
    @property
    def coeffs(self):
        return dict(self._coeffs)

    def __getitem__(self, exponent):
        return self._coeffs.get(exponent, 0)

    def is_zero(self):
        return not self._coeffs

    @property
    def min_exp(self):
        return min(self._coeffs) if self._coeffs else None

    @property
    def max_exp(self):
        return max(self._coeffs) if self._coeffs else None

    def support(self):
        return sorted(self._coeffs)

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are only defined for monomials")
        result = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k):
        """Multiply by ``t^k``."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def conjugate(self):
        """Substitute ``t -> t^-1``."""
        return LaurentPoly({-e: c for e, c in self._coeffs.items()})

    def divmod(self, divisor):
        """Long division by a divisor whose top coefficient is a unit.

        Both operands are first shifted to honest polynomials; the
        quotient is shifted back so that ``self == q * divisor + r``.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead = divisor[divisor.max_exp]
        if lead not in (1, -1):
            raise ValueError("divisor must have leading coefficient +-1")
        if self.is_zero():
            return LaurentPoly(), LaurentPoly()
        offset = self.min_exp - divisor.min_exp
        num = self.shift(-self.min_exp)._coeffs.copy()
        den = divisor.shift(-divisor.min_exp)._coeffs
        ddeg = max(den)
        quotient = {}
        while num and max(num) >= ddeg:
            top = max(num)
            q = num[top] * lead
            k = top - ddeg
            quotient[k] = q
            for e, c in den.items():
                v = num.get(e + k, 0) - q * c
                if v:
                    num[e + k] = v
                else:
                    num.pop(e + k, None)
        q = LaurentPoly(quotient).shift(offset)
        return q, self - q * divisor

    def exact_div(self, divisor):
        q, r = self.divmod(divisor)
        if not r.is_zero():
            raise ValueError("%s does not divide %s" % (divisor, self))
        return q

    # -- evaluation ---------------------------------------------------
    def __call__(self, t):
        if t == 0 and self._coeffs and self.min_exp < 0:
            raise ZeroDivisionError("Laurent polynomial has a pole at 0")
        total = 0
        for e, c in self._coeffs.items():
            total += c * (Fraction(t) ** e if e < 0 else t ** e)
        if isinstance(total, Fraction) and total.denominator == 1:
            return total.numerator
        return total

    def is_symmetric(self):
        return self == self.conjugate()

    # -- comparison / hashing -----------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __repr__(self):
        return "LaurentPoly(%r)" % (dict(sorted(self._coeffs.items())),)

    def __str__(self):
        return render(self)


def add(p, q):
    return p + q


def mul(p, q):
    return p * q


def symmetrize_normalize(p):
    """Return the unique ``+-t^k * p`` that is symmetric and equals 1 at t=1.

    Raises NotNormalizable when no unit multiple has both properties.
    """
    if p.is_zero():
        raise NotNormalizable("the zero polynomial cannot be normalized")
    value = p(1)
    if value not in (1, -1):
        raise NotNormalizable("p(1) = %s, which is not a unit" % value)
    width = p.max_exp + p.min_exp
    if width % 2:
        raise NotNormalizable("exponent span of %s has no integer centre" % p)
    q = p.shift(-width // 2)
    if value == -1:
        q = -q
    if not q.is_symmetric():
        raise NotNormalizable("%s is not symmetric up to a unit" % p)
    return q


def second_derivative_at_one(p):
    """Exact value of the second formal derivative at t = 1."""
    return sum(e * (e - 1) * c for e, c in p.coeffs.items())


# -- text format ---------------------------------------------------------

def _monomial_text(e):
    if e == 0:
        return ""
    if e == 1:
        return "t"
    return "t^%d" % e


def render(p):
    """Render with exponents descending, e.g. ``2*t - 3 + 2*t^-1``."""
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p.coeffs, reverse=True):
        c = p[e]
        mono = _monomial_text(e)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = "%d*%s" % (mag, mono)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<coef>\d+)\s*(?:\*?\s*(?P<t1>t)(?:\s*\^\s*(?P<e1>[({]?\s*[+-]?\d+\s*[)}]?))?)?
        | (?P<t2>t)(?:\s*\^\s*(?P<e2>[({]?\s*[+-]?\d+\s*[)}]?))?
        )\s*""",
    re.VERBOSE,
)


def parse(text):
    """Parse the grammar produced by :func:`render`.

    Accepts ``3*t^2``, ``3t^2``, ``t^-1``, ``t^{-1}``, ``-t`` and integer
    constants joined by ``+``/``-``.
    """
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial")
    pos = 0
    out = {}
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (m.group("coef") is None and m.group("t2") is None):
            raise ParseError("cannot parse polynomial %r near position %d" % (text, pos))
        if not first and m.group("sign") is None:
            raise ParseError("missing operator in %r near position %d" % (text, pos))
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coef") is not None:
            coef = int(m.group("coef"))
            if m.group("t1"):
                exp_s = m.group("e1")
                exp = 1 if exp_s is None else int(exp_s.strip("(){} "))
            else:
                exp = 0
        else:
            coef = 1
            exp_s = m.group("e2")
            exp = 1 if exp_s is None else int(exp_s.strip("(){} "))
        out[exp] = out.get(exp, 0) + sign * coef
        pos = m.end()
        first = False
    return LaurentPoly(out)
