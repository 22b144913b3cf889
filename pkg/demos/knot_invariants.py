"""Alexander polynomials, Casson invariants and d-invariants of surgeries."""
from torelli_calc import (alexander, casson_surgery, d_surgery, parse_knot, semigroup,
                          seifert_genus, torus, twist_knot, v_invariant)

# Casson is normalized so that +1 surgery on the right trefoil gives 1
trefoil = torus(2, 3)
print("Delta(T(2,3)) =", alexander(trefoil))
print("lambda(S3_1(T(2,3))) =", casson_surgery(trefoil, 1))

# genus one twist knots: lambda grows linearly while the genus stays 1
for n in (1, 2, 5, 50):
    k = twist_knot(n)
    print("K_%d: Delta = %s, genus %d, lambda(S3_1) = %d"
          % (n, alexander(k), seifert_genus(k), casson_surgery(k, 1)))

# 1/n surgeries scale lambda by n
for n in (1, 2, -3):
    print("lambda(S3_{1/%d}(T(2,5))) = %s" % (n, casson_surgery(torus(2, 5), n)))

# V_m from the gaps of the semigroup <p, q>
k = parse_knot("T(3,7)")
data = semigroup(3, 7)
print("gaps of <3,7>:", data.gaps)
print("V_m(T(3,7)), m = 0..6:", [v_invariant(k, m) for m in range(7)])

# d(S3_{+1}(T(2,4n+1))) = -2n; the mirror knot has V_0 = 0
for n in (1, 2, 10):
    print("d(S3_1(T(2,%d))) = %d" % (4 * n + 1, d_surgery(torus(2, 4 * n + 1), 1)))
print("d(S3_1(mT(2,5))) =", d_surgery(parse_knot("mT(2,5)"), 1))
