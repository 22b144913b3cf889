"""Framed and rational surgery presentations and the rewrites that keep the manifold."""
from fractions import Fraction

from torelli_calc import (Component, blow_down, build_brunnian, build_jlink, formats,
                          homology_order, integerize, linking_matrix, reduce, reduce_brunnian,
                          torus, unknot)
from torelli_calc.surgery import KnotCurve, presentation

# a rational coefficient and a +1 unknot linked with it
p = presentation([Component("K", KnotCurve(torus(2, 3)), Fraction(-7, 3)),
                  Component("U", KnotCurve(unknot()), 1)], {("K", "U"): 2})
print("linking matrix:", [[str(x) for x in row] for row in linking_matrix(p)])
print("|H_1| =", homology_order(p))

# integerize trades -7/3 for a chain of integer-framed meridians
q = integerize(p)
print("after integerize:", [(c.id, str(c.coeff)) for c in q.components],
      "|H_1| =", homology_order(q))

# blowing down U changes the framing of K by -lk^2 and keeps |H_1|
b = blow_down(p, "U")
print("after blow down:", [(c.id, str(c.coeff)) for c in b.components],
      "|H_1| =", homology_order(b))

# a J-link: pairs of parallel curves with opposite coefficients and earrings
j = build_jlink([[0, 2], [2, 0]], [1, -3], [4, -2])
print("J-link with %d components reduces to" % len(j), reduce(j))

# a Brunnian chain: proper sublinks give S3, the whole link a Whitehead double
L = build_brunnian(5)
print("L_5 reduces to", reduce_brunnian(L))
print("L_5 minus one component:", reduce_brunnian(L.sublink(L.ids[1:])))

# presentations serialize to canonical JSON
print(formats.dumps(p))
