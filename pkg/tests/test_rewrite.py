import random

from hypothesis import given

from awdelta.delta import DeltaElement
from awdelta.freeword import Letter, parse_word
from awdelta.qfield import ONE, Q, q_power
from awdelta.rewrite import (
    RawElement, ReductionRule, check_ambiguities, derive_noncommutative_rules,
    normal_form_terms, reduce, rule_for, rule_set,
)

from .strategies import laurent, words

import pytest

qi = q_power(-1)
q2m = q_power(2) - q_power(-2)
qm = Q - qi
mono = DeltaElement.monomial


def test_rule_count_and_shapes():
    rules = rule_set()
    assert len(rules) == 15
    assert len({r.lhs for r in rules}) == 15
    assert len(rule_for(parse_word("BA")).rhs) == 3
    assert rule_for(parse_word("gaA")).rhs == ((parse_word("Aga"), ONE),)


def test_ba_rule():
    expected = mono(1, 1, coeff=q_power(2)) + mono(0, 0, 1, coeff=Q * q2m) - mono(0, 0, 0, 0, 0, 1, coeff=Q * qm)
    assert reduce("BA") == expected


def test_ca_rule():
    expected = (mono(1, 0, 1, coeff=q_power(-2)) + mono(0, 1, coeff=qi * (q_power(-2) - q_power(2)))
                - mono(0, 0, 0, 0, 1, coeff=qi * (qi - Q)))
    assert reduce("CA") == expected


def test_cba_normal_form():
    expected = (mono(1, 1, 1, coeff=q_power(2)) + mono(2, coeff=Q * q2m) - mono(0, 2, coeff=Q * q2m)
                + mono(0, 0, 2, coeff=Q * q2m) - mono(1, 0, 0, 1, coeff=Q * qm)
                + mono(0, 1, 0, 0, 1, coeff=Q * qm) - mono(0, 0, 1, 0, 0, 1, coeff=Q * qm))
    assert reduce("CBA") == expected


def test_irreducible_word_unchanged():
    assert normal_form_terms("ABC") == {parse_word("ABC"): ONE}


def test_rule_validation():
    with pytest.raises(ValueError):
        ReductionRule(parse_word("AB"), ())
    with pytest.raises(ValueError):
        ReductionRule(parse_word("BA"), ((parse_word("CC"), ONE),))


def test_ambiguities_resolve():
    rep = check_ambiguities()
    assert rep.resolvable
    assert rep.inclusions == []
    assert len(rep.overlaps) == 20
    assert [o.word for o in rep.nontrivial] == [parse_word("CBA")]
    gba = next(o for o in rep.overlaps if o.word == parse_word("gaBA"))
    assert gba.agree


def test_rules_rederived_from_relations():
    derived = derive_noncommutative_rules()
    for lhs, terms in derived.items():
        assert terms == dict(rule_for(lhs).rhs)


def test_random_long_words_confluent():
    rng = random.Random(7)
    for _ in range(200):
        w = tuple(Letter(rng.randrange(6)) for _ in range(rng.randint(0, 8)))
        assert normal_form_terms(w, "leftmost") == normal_form_terms(w, "rightmost")


@given(words, words, laurent)
def test_linearity(w1, w2, a):
    e = RawElement.from_word(w1, a) + RawElement.from_word(w2)
    assert reduce(e) == reduce(w1).scale(a) + reduce(w2)


@given(words)
def test_length_never_grows(w):
    assert all(len(v) <= len(w) for v in normal_form_terms(w))
    assert all(list(v) == sorted(v) for v in normal_form_terms(w))
