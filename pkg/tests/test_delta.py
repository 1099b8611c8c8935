from hypothesis import given, settings

from awdelta.delta import (
    A, B, C, NEG_INF, DeltaElement, OmegaElement, PBWMonomial, alpha, beta, casimir,
    casimir_power, casimir_variants, coefficient_of, commutator, filtration_degree,
    from_omega_basis, gamma, generators, is_central, monomials_up_to, one, to_omega_basis,
    verify_presentation_identities,
)
from awdelta.qfield import ONE, ZERO, Q, q_power
from awdelta.verify import abc_in_omega_basis

from .strategies import elements

qi = q_power(-1)
q2m = q_power(2) - q_power(-2)
qm = Q - qi
mono = DeltaElement.monomial


def test_generators_are_monomials():
    g = generators()
    assert set(g) == {"A", "B", "C", "alpha", "beta", "gamma", "one"}
    assert g["beta"] == mono(0, 0, 0, 0, 1)
    assert g["one"].is_scalar() and g["one"].scalar_part() == ONE


def test_commutator_AB():
    expected = mono(1, 1, coeff=1 - q_power(2)) - mono(0, 0, 1, coeff=Q * q2m) + mono(0, 0, 0, 0, 0, 1, coeff=Q * qm)
    assert commutator(A, B) == expected


def test_casimir_coefficients():
    om = casimir()
    assert coefficient_of(om, PBWMonomial(1, 1, 1)) == Q
    assert coefficient_of(om, PBWMonomial(1, 0, 0, 1)) == -Q
    assert coefficient_of(om, PBWMonomial(0, 2)) == q_power(-2)
    assert len(om.terms) == 7
    assert coefficient_of(A, B) == ZERO


def test_casimir_variants_agree():
    vs = casimir_variants()
    assert len(vs) == 6
    assert all(v == vs[0] for v in vs)


def test_casimir_central_and_powers():
    om = casimir()
    assert is_central(om)
    assert not is_central(A)
    assert casimir_power(2) == om * om
    assert is_central(casimir_power(3) * alpha ** 2 * beta * gamma ** 5)


def test_cba_coefficient():
    from awdelta.rewrite import reduce
    assert coefficient_of(reduce("CBA"), PBWMonomial(2)) == Q * q2m


def test_filtration_examples():
    assert filtration_degree(casimir()) == 3
    assert filtration_degree(A * B.scale(Q) - (B * A).scale(qi)) == 1
    assert filtration_degree(one) == 0
    assert filtration_degree(DeltaElement()) == NEG_INF


def test_presentation_identities():
    res = verify_presentation_identities()
    assert len(res) == 8 and all(res.values())


def test_omega_basis_examples():
    assert to_omega_basis(mono(1, 1, 1)) == abc_in_omega_basis()
    assert to_omega_basis(mono(2, 1)) == OmegaElement({(2, 1): ONE})
    om2 = OmegaElement({(0, 0, 0, 2): ONE})
    assert to_omega_basis(from_omega_basis(om2)) == om2
    assert from_omega_basis(OmegaElement({(0, 0, 0, 1): ONE})) == casimir()
    om_al = from_omega_basis(OmegaElement({(0, 0, 0, 1, 1): ONE}))
    shifted = DeltaElement({(m.i, m.j, m.k, m.r + 1, m.s, m.t): c for m, c in casimir().terms.items()})
    assert om_al == shifted


def test_omega_monomial_requires_a_zero_exponent():
    import pytest
    with pytest.raises(ValueError):
        OmegaElement({(1, 1, 1): ONE})


def test_render_and_json():
    x = B * A
    assert str(x) == "(-q^2 + 1) * ga + (q^3 - q^-1) * C + q^2 * A B"
    assert DeltaElement.from_json(x.to_json()) == x
    assert str(DeltaElement()) == "0"


def test_monomial_count():
    assert sum(1 for _ in monomials_up_to(4)) == 210


@settings(max_examples=25)
@given(elements(2, 2), elements(2, 2), elements(2, 2))
def test_associativity(x, y, z):
    assert (x * y) * z == x * (y * z)


@settings(max_examples=25)
@given(elements(2, 2), elements(2, 2), elements(1, 2))
def test_jacobi(x, y, z):
    j = commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) + commutator(z, commutator(x, y))
    assert j.is_zero()


@given(elements(3), elements(3))
def test_filtration_multiplicative(x, y):
    assert filtration_degree(x * y) <= filtration_degree(x) + filtration_degree(y)


@settings(max_examples=25)
@given(elements(4))
def test_omega_round_trip(x):
    assert from_omega_basis(to_omega_basis(x)) == x


@given(elements(2))
def test_greek_letters_central(x):
    for g in (alpha, beta, gamma):
        assert g * x == x * g
