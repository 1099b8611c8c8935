"""
The Casimir element and the center
==================================
"""
from awdelta import A, B, C, alpha, beta, gamma, casimir, is_central, to_omega_basis
from awdelta.delta import casimir_power, casimir_variants, filtration_degree, DeltaElement
from awdelta.qfield import q_power

om = casimir()
print("Om =", om)

# six different-looking expressions, one element
vs = casimir_variants()
print(sum(v == om for v in vs), "of", len(vs), "expressions agree")

print("central:", is_central(om), "| A central:", is_central(A))

# the top-degree part of Om^l is q^(l^2) A^l B^l C^l
for ell in (1, 2, 3):
    w = casimir_power(ell)
    lead = DeltaElement.monomial(ell, ell, ell, coeff=q_power(ell * ell))
    print(f"l={ell}: deg Om^l = {filtration_degree(w)}, deg(Om^l - lead) = {filtration_degree(w - lead)}")

# ABC rewritten through Om
print("ABC =", to_omega_basis(A * B * C))

# products of Om with the Greek letters stay central
z = om * om * alpha * gamma
print("Om^2 al ga central:", is_central(z))
