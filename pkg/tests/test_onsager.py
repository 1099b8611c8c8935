import random
from fractions import Fraction

import pytest

from awdelta.delta import A, B, DeltaElement, commutator, gamma
from awdelta.onsager import (
    MatN, check_tridiagonal, kernel_element_delta, nested_bracket_check, nested_bracket_forms,
    theta, vartheta, vidar_module, xi1_delta, xi2_delta, xi_commutator_entry,
    xi_commutator_matrix, xi_commute_in_delta,
)
from awdelta.morphism import abelianize
from awdelta.qfield import ONE, ZERO, Q, RatFuncQ, q_power

qi = q_power(-1)


def _rand(rng, n, symbolic):
    if symbolic:
        return MatN([[RatFuncQ.laurent({rng.randint(-1, 1): rng.randint(-2, 2)}) for _ in range(n)]
                     for _ in range(n)])
    return MatN([[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)])


def test_module_entries():
    X, Y = vidar_module()
    assert X[1, 0] == ONE and Y[0, 2] == Q
    assert Y[0, 1] == vartheta() == (q_power(4) - q_power(-4)) * (q_power(2) - q_power(-2)) * (Q - qi) ** 2
    assert [X[i, i] for i in range(4)] == [theta(0), theta(1), theta(1), theta(2)]
    assert theta(0) == 2


def test_tridiagonal():
    X, Y = vidar_module()
    assert check_tridiagonal(X, Y)
    assert check_tridiagonal(X, X)
    assert check_tridiagonal(A, B)
    with pytest.raises(ValueError):
        check_tridiagonal(X, MatN([[ONE]]))


def test_xi_in_delta():
    assert xi1_delta() == commutator(A, B)
    assert (xi2_delta() + (xi1_delta() * gamma).scale((Q - qi) ** 2)).is_zero()
    assert abelianize(xi1_delta()).is_zero()
    assert xi_commute_in_delta()


def test_module_commutator_entry():
    assert xi_commutator_entry() == -q_power(2)
    assert not xi_commutator_matrix("X").is_zero()
    assert not xi_commutator_matrix("Y").is_zero()


def test_kernel_elements_vanish_in_delta():
    assert kernel_element_delta(A).is_zero()
    assert kernel_element_delta(B).is_zero()


def test_nested_brackets_trivial_case():
    X, _ = vidar_module()
    raw, expansion, nested = nested_bracket_forms(X, X)
    assert raw.is_zero() and expansion.is_zero() and nested.is_zero()


def test_nested_brackets_random():
    rng = random.Random(11)
    for k in range(10):
        assert nested_bracket_check(_rand(rng, 3, False), _rand(rng, 3, False), 2)
        assert nested_bracket_check(_rand(rng, 2, True), _rand(rng, 2, True))


def test_nested_brackets_in_delta():
    assert nested_bracket_check(A, B)


def test_matn_validation():
    with pytest.raises(ValueError):
        MatN([[1, 2, 3]])
    with pytest.raises(ValueError):
        MatN([[ONE]]) * MatN([[ONE, ZERO], [ZERO, ONE]])
    with pytest.raises(ValueError):
        nested_bracket_check(MatN([[ONE]]), MatN([[ONE, ZERO], [ZERO, ONE]]))
