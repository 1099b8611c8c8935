"""
Normal forms and the reduction system
=====================================

Every element of the algebra has a unique expression in the ordered
monomials A^i B^j C^k al^r be^s ga^t.  This walk-through reduces a few words,
looks at the one interesting overlap, and checks that the choice of
reduction site never matters.
"""
from awdelta import A, B, C, parse_element
from awdelta.rewrite import check_ambiguities, normal_form_terms, reduce, rule_set

# the three rules that carry the relations come first
for rule in rule_set()[:3]:
    print(rule)

print("BA  =", reduce("BA"))
print("CBA =", reduce("CBA"))

# the same thing, typed in as an expression
x = parse_element("C B A")
assert x == C * B * A

report = check_ambiguities()
print(report.summary())
for o in report.nontrivial:
    print("nontrivial overlap:", o)

# leftmost and rightmost reduction agree on a longer word
w = "gaCBAbeCA"
assert normal_form_terms(w, "leftmost") == normal_form_terms(w, "rightmost")
print(w, "->", len(normal_form_terms(w)), "terms either way")
