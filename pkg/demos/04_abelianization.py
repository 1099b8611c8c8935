"""
Abelianization and membership
=============================

Sending A, B, C to commuting variables Ab, Bb, Cb decides whether an
element lies in the commutator ideal, or in one of the subalgebras
generated by two of A, B, C.
"""
from awdelta import A, B, C, alpha, casimir, commutator, gamma
from awdelta.morphism import (
    abelianize, in_commutator_ideal, in_subalgebra, rho, sigma, triple_intersection_check,
)

print("al ->", abelianize(alpha))
print("Om ->", abelianize(casimir()))

x = commutator(A, B) * C
print("[A,B] C in ideal:", in_commutator_ideal(x))
print("ga in <A,B>:", in_subalgebra(gamma, "AB"), "| abelianized:", abelianize(gamma))

y = A * A * B - B * A
print("y in <A,B>:", in_subalgebra(y, "AB"))
print("rho(y) in <B,C>:", in_subalgebra(rho(y), "BC"))
print("sigma(y) in <A,B>:", in_subalgebra(sigma(y), "AB"))

print("[A,B] C + 5 in all three:", triple_intersection_check(x + 5 * (A ** 0)))
