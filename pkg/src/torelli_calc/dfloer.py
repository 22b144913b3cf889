"""Heegaard Floer correction terms of the homology spheres we can build.

The engine rests on two rules for a knot K in S^3 and n >= 1:

    d(S^3_{+1/n}(K)) = -2 V_0(K)
    d(S^3_{-1/n}(K)) = +2 V_0(mirror K)

together with additivity under connected sum and a sign change under
orientation reversal.  ``V_0`` comes from :func:`knots.v_invariant`.
"""

from dataclasses import dataclass

from .casson import ManifoldExpr, Surgery
from .errors import MismatchWithGapOracle, OddDValue
from .knots import KnotSpec, torus, v_invariant


class DValue(int):
    """An int that refuses to be odd."""

    def __new__(cls, value):
        if int(value) != value:
            raise OddDValue("d-invariant must be an integer, got %r" % (value,))
        value = int(value)
        if value % 2:
            raise OddDValue("d-invariant must be even, got %d" % value)
        return super().__new__(cls, value)

    def __repr__(self):
        return "DValue(%d)" % int(self)

    def __str__(self):
        return str(int(self))


def d_surgery(k, sign, n=1):
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if n < 1:
        raise ValueError("n must be a positive integer")
    if sign == 1:
        return DValue(-2 * v_invariant(k, 0))
    return DValue(2 * v_invariant(k.mirrored(), 0))


def d_manifold(e):
    if isinstance(e, Surgery):
        return d_surgery(e.knot, e.sign, abs(e.n))
    total = 0
    for s, sign in e.pieces():
        total += sign * d_surgery(s.knot, s.sign, abs(s.n))
    return DValue(total)


def chi_hf_red(lam, d):
    """Euler characteristic of HF_red from lambda = chi - d/2."""
    d = DValue(d)
    return lam + d // 2


@dataclass(frozen=True)
class BrieskornRecord:
    n: int
    knot: KnotSpec
    coefficient: int
    d: DValue

    @property
    def manifold(self):
        return ManifoldExpr.surgery(self.knot, self.coefficient)


def brieskorn_family(n):
    """+1 surgery on T(2,4n+1), i.e. Sigma(2,4n+1,8n+1), with d = -2n.

    The tabulated value is checked against the semigroup computation.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    knot = torus(2, 4 * n + 1)
    computed = d_surgery(knot, 1, 1)
    if computed != -2 * n:
        raise MismatchWithGapOracle(
            "d(S^3_1(T(2,%d))) computed as %d, expected %d" % (4 * n + 1, computed, -2 * n))
    return BrieskornRecord(n, knot, 1, DValue(-2 * n))
