"""
The q-Onsager algebra
=====================

A and B satisfy the two tridiagonal relations.  The elements xi1 and xi2
commute after X -> A, Y -> B, but a four-dimensional module shows that
xi1 X xi2 - xi2 X xi1 is not zero before the map.
"""
from awdelta import A, B, gamma
from awdelta.onsager import (
    check_tridiagonal, kernel_element_delta, vidar_module, xi1_delta, xi2_delta,
    xi_commutator_entry, xi_commutator_matrix, xi_commute_in_delta,
)
from awdelta.qfield import Q, q_power

print("tridiagonal relations hold for A, B:", check_tridiagonal(A, B))
qm = Q - q_power(-1)
print("xi2 = -(q - q^-1)^2 xi1 ga:", xi2_delta() == -(xi1_delta() * gamma).scale(qm * qm))
print("[xi1, xi2] = 0:", xi_commute_in_delta())

X, Y = vidar_module()
print("module satisfies the relations:", check_tridiagonal(X, Y))
print("xi1 X xi2 - xi2 X xi1 =\n" + str(xi_commutator_matrix("X")))
print("(4,3) entry:", xi_commutator_entry())
print("image in Delta is zero:", kernel_element_delta(A).is_zero())
