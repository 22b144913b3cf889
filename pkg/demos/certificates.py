"""Checkable certificates for the four structural statements."""
from torelli_calc import certify

# homology spheres arbitrarily far from the identity in the Torelli word metric
c = certify.cayley_diameter(2, 100)
print(c.summary())

# one Torelli letter, arbitrarily large Casson invariant
print(certify.casson_unbounded(12).summary())

# conjugate letters with different Casson defects: no Morita-type formula
c = certify.no_morita(-3)
print(c.summary())
print("defects (psi side, eta side):", c.defects)

# d is not of finite type: the alternating sum over sublinks of L_n is +-2
c = certify.not_finite_type(6)
print(c.summary())
print("alternating sum:", c.alternating_sum)

# certificates serialize deterministically
print(certify.no_morita(1).to_json()[:200], "...")
