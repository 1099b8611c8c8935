"""
The modular group action and the 2x2 Laurent matrices
=====================================================

rho permutes A -> B -> C -> A; sigma swaps A and B.  Both come from
conjugation by p and s inside Lambda = Mat2 over Q(q)[lam, lam^-1].
"""
from awdelta import A, B, C, casimir, gamma
from awdelta.lambda_rep import faithfulness_probe, named_matrices, pi, psl2z_on_lambda
from awdelta.morphism import psl2z_word, rho, sigma

print("sigma(C) =", sigma(C))
print("rho^3(C) == C:", rho(rho(rho(C))) == C)
print("rs applied to C:", psl2z_word("rs", C))
print("Om fixed by rho, sigma:", rho(casimir()) == casimir(), sigma(casimir()) == casimir())

M = named_matrices()
print("A =\n" + str(M["A"]))
print("A B C = I:", M["A"] * M["B"] * M["C"] == M["I"])
print("p^3 = -I:", M["p"] ** 3 == -M["I"])

# pi intertwines the two actions
x = A * B + gamma
print("pi(rho x) == p pi(x) p^-1:", pi(rho(x)) == psl2z_on_lambda("r", pi(x)))

print(faithfulness_probe(8))
