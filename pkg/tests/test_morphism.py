import pytest
from hypothesis import given, settings

from awdelta.delta import A, B, C, DeltaElement, alpha, beta, casimir, commutator, gamma, one
from awdelta.morphism import (
    AB_BAR, BB_BAR, CB_BAR, CommPoly, abelianize, in_commutator_ideal,
    in_commutator_ideal_plus_1, in_kernel_to_s3, in_subalgebra, klein_flip, klein_images,
    parse_automorphism_word, permutation_of_word, psl2z_word, rho, rho_images, sigma,
    sigma_images, specialize_aw, triple_intersection_check,
)
from awdelta.qfield import Q, q_power

from .strategies import elements

qi = q_power(-1)
mono = DeltaElement.monomial


def test_rho_sigma_on_generators():
    assert (rho(A), rho(B), rho(C)) == (B, C, A)
    assert (rho(alpha), rho(beta), rho(gamma)) == (beta, gamma, alpha)
    assert (sigma(A), sigma(B)) == (B, A)
    assert (sigma(alpha), sigma(beta), sigma(gamma)) == (beta, alpha, gamma)
    assert sigma(C) == -(A * B).scale(Q) - C.scale(q_power(2)) + gamma.scale(Q)


def test_images_satisfy_relations():
    assert rho_images().check_relations()
    assert sigma_images().check_relations()
    for f in "ABC":
        assert klein_images(f).check_relations()


def test_words():
    assert parse_automorphism_word("r s R") == "rsR"
    with pytest.raises(ValueError):
        parse_automorphism_word("rx")
    assert psl2z_word("rs", A) == rho(sigma(A))
    assert psl2z_word("R", A) == C
    assert psl2z_word("", C) == C


def test_casimir_fixed():
    om = casimir()
    assert rho(om) == om and sigma(om) == om


def test_klein_group():
    x = casimir() * A + B * C * alpha + gamma
    fa = lambda v: klein_flip("A", v)  # noqa: E731
    fb = lambda v: klein_flip("B", v)  # noqa: E731
    fc = lambda v: klein_flip("C", v)  # noqa: E731
    assert fa(fa(x)) == x
    assert fa(fb(x)) == fb(fa(x)) == fc(x)
    assert fa(A) == A and fa(B) == -B and fa(beta) == -beta and fa(alpha) == alpha


def test_specialize_aw():
    z = DeltaElement()
    assert specialize_aw(alpha, 0, 0, 0) == z
    expected = mono(1, 1, 1, coeff=Q) + mono(2, coeff=q_power(2)) + mono(0, 2, coeff=q_power(-2)) + mono(0, 0, 2, coeff=q_power(2))
    assert specialize_aw(casimir(), 0, 0, 0) == expected
    assert specialize_aw(gamma * A, 0, 0, Q + qi) == A.scale(Q + qi)


def test_abelianize_formulas():
    qp = CommPoly.const(Q + qi)
    assert abelianize(alpha) == qp * AB_BAR + BB_BAR * CB_BAR
    assert abelianize(casimir()) == -(qp * AB_BAR * BB_BAR * CB_BAR) - AB_BAR ** 2 - BB_BAR ** 2 - CB_BAR ** 2
    assert abelianize(commutator(A, B)).is_zero()


def test_abelianize_rho_commutes():
    assert abelianize(rho(A)) == BB_BAR
    assert abelianize(rho(alpha)) == abelianize(alpha).permute(permutation_of_word("r"))


def test_membership_examples():
    ab = commutator(A, B)
    assert in_commutator_ideal(ab)
    assert not in_commutator_ideal(one) and in_commutator_ideal_plus_1(one)
    assert not in_commutator_ideal(A) and not in_commutator_ideal_plus_1(A)
    assert in_subalgebra(A * B, "AB")
    assert not in_subalgebra(gamma, "AB")
    assert in_subalgebra(DeltaElement(), "BC")
    x = ab * C + DeltaElement.scalar(5)
    assert triple_intersection_check(x) and in_commutator_ideal_plus_1(x)
    assert not triple_intersection_check(A)


def test_s3_kernel():
    assert permutation_of_word("r") == (1, 2, 0)
    assert in_kernel_to_s3("rrr") and in_kernel_to_s3("ss") and not in_kernel_to_s3("rs")
    # rs acts as a transposition of the three bars
    assert in_kernel_to_s3("rsrs") and not in_kernel_to_s3("rs")


@settings(max_examples=20)
@given(elements(3, 2), elements(3, 2))
def test_automorphisms_multiplicative(x, y):
    assert rho(x * y) == rho(x) * rho(y)
    assert sigma(x * y) == sigma(x) * sigma(y)


@settings(max_examples=30)
@given(elements(3))
def test_orders(x):
    assert rho(rho(rho(x))) == x
    assert sigma(sigma(x)) == x


@given(elements(3))
def test_abelianize_is_multiplicative(x):
    assert abelianize(x * A) == abelianize(x) * AB_BAR


@given(elements(1, 2), elements(1, 2))
def test_ideal_elements_pass_triple_check(u, v):
    x = u * commutator(A, C) * v + DeltaElement.scalar(Q)
    assert in_commutator_ideal_plus_1(x) and triple_intersection_check(x)
