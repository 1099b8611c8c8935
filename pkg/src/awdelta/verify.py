"""Named verification suites.

Each ``check_*`` function decides one acceptance criterion exactly and
returns a :class:`CheckResult`.  Randomized checks draw from a
``random.Random`` seeded by the caller, so a given seed reproduces the same
report byte for byte.
"""
from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Sequence

import sympy

from . import delta as D
from .delta import (
    A, B, C, DeltaElement, OmegaElement, PBWMonomial, alpha, beta, casimir, casimir_power,
    casimir_variants, coefficient_of, commutator, filtration_degree, from_omega_basis, gamma,
    is_central, monomials_up_to, multiply, one, to_omega_basis, verify_presentation_identities,
)
from .freeword import Letter
from .lambda_rep import (
    IDENTITY, LaurentL, LaurentMat2, MU, faithfulness_probe, mat_inverse, named_matrices, nu,
    pi, pi_generators, verify_commuting_diagram,
)
from .morphism import (
    AB_BAR, BB_BAR, CB_BAR, CommPoly, abelianize, in_commutator_ideal_plus_1, in_subalgebra,
    rho, sigma, triple_intersection_check,
)
from .onsager import (
    MatN, check_tridiagonal, kernel_element_delta, nested_bracket_check, xi1_delta, xi2_delta,
    xi_commutator_entry, xi_commutator_matrix, xi_commute_in_delta,
)
from .qfield import ONE, ZERO, RatFuncQ, q_power, specialize_q
from .rewrite import RawElement, check_ambiguities, normal_form_terms

__all__ = [
    "CheckResult",
    "CRITERIA",
    "SUITES",
    "run_suite",
    "random_coeff",
    "random_element",
    "random_raw",
]


@dataclass
class CheckResult:
    criterion: int
    name: str
    ok: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.ok else 'FAIL'}] {self.criterion:2d} {self.name}: {self.detail}"

    def to_dict(self) -> dict:
        return asdict(self)


# ---------------------------------------------------------------------------
# random elements
# ---------------------------------------------------------------------------

def random_coeff(rng: random.Random) -> RatFuncQ:
    """A small nonzero Laurent polynomial in ``q``."""
    while True:
        terms = {rng.randint(-2, 2): rng.randint(-3, 3) for _ in range(rng.randint(1, 2))}
        c = RatFuncQ.laurent(terms)
        if c:
            return c


def random_raw(rng: random.Random, max_len: int, nterms: int = 2) -> RawElement:
    """Combination of random (usually unreduced) words in all six letters."""
    terms = {}
    for _ in range(nterms):
        w = tuple(Letter(rng.randrange(6)) for _ in range(rng.randint(0, max_len)))
        terms[w] = random_coeff(rng)
    return RawElement(terms)


def random_element(rng: random.Random, max_degree: int, nterms: int = 3,
                   letters: Sequence[int] = range(6)) -> DeltaElement:
    """Combination of random PBW monomials of degree at most ``max_degree``."""
    letters = list(letters)
    out = DeltaElement()
    for _ in range(nterms):
        exps = [0] * 6
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.choice(letters)] += 1
        out = out + DeltaElement.monomial(*exps, coeff=random_coeff(rng))
    return out


def _random_word_element(rng: random.Random, gens: Sequence[DeltaElement], max_len: int,
                         nterms: int = 2) -> DeltaElement:
    out = DeltaElement()
    for _ in range(nterms):
        w = one
        for _ in range(rng.randint(0, max_len)):
            w = multiply(w, rng.choice(gens))
        out = out + w.scale(random_coeff(rng))
    return out


def _q(e: int, c=1) -> RatFuncQ:
    return q_power(e, c)


# ---------------------------------------------------------------------------
# criteria
# ---------------------------------------------------------------------------

def check_diamond(rng=None, max_degree: int = 4) -> CheckResult:
    report = check_ambiguities()
    cba = next(o for o in report.overlaps if o.word == (Letter.C, Letter.B, Letter.A))
    value = DeltaElement.from_words(cba.left_first).scale(_q(-1))
    q2m, qm = _q(2) - _q(-2), _q(1) - _q(-1)
    mono = DeltaElement.monomial
    expected = (mono(1, 1, 1, coeff=_q(1)) + mono(2, coeff=q2m) - mono(0, 2, coeff=q2m)
                + mono(0, 0, 2, coeff=q2m) - mono(1, 0, 0, 1, coeff=qm)
                + mono(0, 1, 0, 0, 1, coeff=qm) - mono(0, 0, 1, 0, 0, 1, coeff=qm))
    ok = (report.resolvable and cba.agree and value == expected and len(value.terms) == 7
          and [o.word for o in report.nontrivial] == [cba.word])
    return CheckResult(1, "diamond confluence",
                       ok, f"{report.summary()}; CBA matches the 7-term identity: "
                           f"{'yes' if value == expected else 'no'}")


def check_pbw_uniqueness(rng: random.Random, max_degree: int = 4, n: int = 500) -> CheckResult:
    bad = 0
    for _ in range(n):
        e = random_raw(rng, max_degree)
        if normal_form_terms(e, "leftmost") != normal_form_terms(e, "rightmost"):
            bad += 1
    return CheckResult(2, "PBW uniqueness", bad == 0,
                       f"{n - bad}/{n} random elements agree under leftmost and rightmost reduction")


def casimir_summary() -> str:
    vs = casimir_variants()
    equal = sum(v == vs[0] for v in vs)
    om = casimir()
    central = is_central(om)
    return f"{equal}/{len(vs)} variants equal; central: {'yes' if central else 'no'}"


def check_casimir(rng=None, max_degree: int = 4) -> CheckResult:
    vs = casimir_variants()
    om = casimir()
    ok = (all(v == vs[0] for v in vs)
          and all(commutator(om, g).is_zero() for g in (A, B, C))
          and rho(om) == om and sigma(om) == om)
    return CheckResult(3, "Casimir", ok, casimir_summary() + "; fixed by rho and sigma: "
                       + ("yes" if rho(om) == om and sigma(om) == om else "no"))


def check_presentation(rng=None, max_degree: int = 4) -> CheckResult:
    res = verify_presentation_identities()
    failed = [k for k, v in res.items() if not v]
    return CheckResult(4, "alternate presentation", not failed,
                       f"{len(res) - len(failed)}/{len(res)} identities hold"
                       + (f" (failed: {', '.join(failed)})" if failed else ""))


def check_psl2z(rng: random.Random, max_degree: int = 4, pairs: int = 100) -> CheckResult:
    monos = [DeltaElement.monomial(*m) for m in monomials_up_to(max_degree)]
    rho3 = sum(rho(rho(rho(x))) == x for x in monos)
    sig2 = sum(sigma(sigma(x)) == x for x in monos)
    mult = 0
    for _ in range(pairs):
        x, y = random_element(rng, 3, 2), random_element(rng, 3, 2)
        xy = x * y
        mult += rho(xy) == rho(x) * rho(y) and sigma(xy) == sigma(x) * sigma(y)
    n = len(monos)
    ok = rho3 == n and sig2 == n and mult == pairs
    return CheckResult(5, "PSL2(Z) action", ok,
                       f"rho^3 = 1 on {rho3}/{n}, sigma^2 = 1 on {sig2}/{n} monomials; "
                       f"multiplicative on {mult}/{pairs} pairs")


def lambda_table() -> Dict[str, bool]:
    """The 3x3 multiplication table of the named matrices, cell by cell."""
    m = named_matrices()
    a, b, c, i = m["A"], m["B"], m["C"], m["I"]
    mu = LaurentMat2.scalar(MU)
    mu2 = LaurentMat2.scalar(MU * MU)
    expected = {
        "AA": mu * a - i, "AB": mu * i - c, "AC": mu * a + b + mu * c - mu2,
        "BA": mu * b + c + mu * a - mu2, "BB": mu * b - i, "BC": mu * i - a,
        "CA": mu * i - b, "CB": mu * c + a + mu * b - mu2, "CC": mu * c - i,
    }
    return {k: m[k[0]] * m[k[1]] == v for k, v in expected.items()}


def check_lambda(rng: random.Random, max_degree: int = 3, pairs: int = 100) -> CheckResult:
    m = named_matrices()
    a, b, c, p, s, i = (m[k] for k in "ABCpsI")
    lam = LaurentL.lam(1)
    basics = {
        "ABC = I": a * b * c == i,
        "X + X^-1 = mu I": all(x + mat_inverse(x) == LaurentMat2.scalar(MU) for x in (a, b, c)),
        "p^3 = -I": p ** 3 == -i,
        "s^2 = lam I": s * s == LaurentMat2.scalar(lam),
        "det p = 1": p.det() == LaurentL.const(ONE),
        "det s = -lam": s.det() == -lam,
    }
    table = lambda_table()
    hom = 0
    for _ in range(pairs):
        x, y = random_element(rng, max_degree, 2), random_element(rng, max_degree, 2)
        hom += pi(x * y) == pi(x) * pi(y)
    nu_i = LaurentMat2.scalar(nu())
    greek = all(pi(g) == nu_i for g in (alpha, beta, gamma)) and pi(one) == IDENTITY
    diagram = all(verify_commuting_diagram(w, g)
                  for w in ("r", "s") for g in (A, B, C, alpha, beta, gamma))
    ok = all(basics.values()) and all(table.values()) and hom == pairs and greek and diagram
    return CheckResult(6, "Lambda representation", ok,
                       f"{sum(basics.values())}/{len(basics)} matrix identities; "
                       f"table {sum(table.values())}/9 cells; homomorphism on {hom}/{pairs} pairs; "
                       f"greek -> nu I: {'yes' if greek else 'no'}; "
                       f"commuting diagram: {'yes' if diagram else 'no'}")


def check_faithfulness(rng=None, max_degree: int = 8) -> CheckResult:
    rep = faithfulness_probe(8)
    return CheckResult(7, "faithfulness probe", rep.ok and rep.checked > 0, str(rep))


def commutator_estimates(n: int = 3) -> List[tuple]:
    """Triples ``(i, j, k)`` where an estimate for ``[X, A^i B^j C^k]`` fails."""
    bad = []
    for i in range(n + 1):
        for j in range(n + 1):
            for k in range(n + 1):
                m = DeltaElement.monomial(i, j, k)
                cases = (
                    (A, _q(0) - _q(2 * j - 2 * k), (i + 1, j, k)),
                    (B, _q(2 * i) - _q(2 * k), (i, j + 1, k)),
                    (C, _q(2 * j - 2 * i) - _q(0), (i, j, k + 1)),
                )
                for g, coeff, lead in cases:
                    rest = commutator(g, m) - DeltaElement.monomial(*lead, coeff=coeff)
                    if filtration_degree(rest) > i + j + k:
                        bad.append((str(g), i, j, k))
    return bad


def check_filtration(rng=None, max_degree: int = 4) -> CheckResult:
    deg_ok = 0
    for ell in (1, 2, 3):
        w = casimir_power(ell)
        lead = DeltaElement.monomial(ell, ell, ell, coeff=_q(ell * ell))
        deg_ok += filtration_degree(w) == 3 * ell and filtration_degree(w - lead) <= 3 * ell - 1
    bad = commutator_estimates(3)
    return CheckResult(8, "filtration", deg_ok == 3 and not bad,
                       f"Omega^l degree bounds for l = 1..3: {deg_ok}/3; "
                       f"commutator estimates failing: {len(bad)} of 192")


def abc_in_omega_basis() -> OmegaElement:
    """``ABC`` written through ``Omega``, by rearranging the Casimir formula."""
    return OmegaElement({
        (0, 0, 0, 1): _q(-1), (2, 0, 0, 0): -_q(1), (0, 2, 0, 0): -_q(-3),
        (0, 0, 2, 0): -_q(1), (1, 0, 0, 0, 1): ONE, (0, 1, 0, 0, 0, 1): _q(-2),
        (0, 0, 1, 0, 0, 0, 1): ONE,
    })


def check_omega_basis(rng: random.Random, max_degree: int = 5, n: int = 100) -> CheckResult:
    good = 0
    for _ in range(n):
        x = random_element(rng, max_degree, 3)
        good += from_omega_basis(to_omega_basis(x)) == x
    abc = to_omega_basis(DeltaElement.monomial(1, 1, 1)) == abc_in_omega_basis()
    return CheckResult(9, "Omega basis", good == n and abc,
                       f"round trip on {good}/{n} random elements; "
                       f"ABC example: {'yes' if abc else 'no'}")


def _independent(vectors: List[DeltaElement]) -> bool:
    """Linear independence over Q(q), certified by full rank at ``q = 2``."""
    monos = sorted({m for v in vectors for m in v.terms})
    index = {m: j for j, m in enumerate(monos)}
    rows = [[0] * len(monos) for _ in vectors]
    for r, v in zip(rows, vectors):
        for m, c in v.terms.items():
            r[index[m]] = sympy.Rational(specialize_q(c, Fraction(2)))
    return sympy.Matrix(rows).rank() == len(vectors)


def center_elements(total: int = 3) -> List[DeltaElement]:
    out = []
    for ell in range(total + 1):
        for r in range(total + 1 - ell):
            for s in range(total + 1 - ell - r):
                for t in range(total + 1 - ell - r - s):
                    out.append(casimir_power(ell) * DeltaElement.monomial(0, 0, 0, r, s, t))
    return out


def check_center(rng=None, max_degree: int = 4) -> CheckResult:
    elems = center_elements(3)
    central = sum(is_central(x) for x in elems)
    indep = _independent(elems)
    return CheckResult(10, "center", central == len(elems) and indep,
                       f"{central}/{len(elems)} central; linearly independent: "
                       f"{'yes' if indep else 'no'}")


def _random_matrix(rng: random.Random, n: int) -> MatN:
    return MatN([[random_coeff(rng) if rng.random() < 0.7 else ZERO for _ in range(n)]
                 for _ in range(n)])


def check_onsager(rng: random.Random, max_degree: int = 4, pairs: int = 50) -> CheckResult:
    qm = _q(1) - _q(-1)
    tri = check_tridiagonal(A, B)
    xi_rel = xi2_delta() == -(xi1_delta() * gamma).scale(qm * qm)
    comm = xi_commute_in_delta()
    nested = sum(nested_bracket_check(_random_matrix(rng, 2 + k % 2), _random_matrix(rng, 2 + k % 2))
                 for k in range(pairs))
    entry = xi_commutator_entry()
    entry_ok = entry == -_q(2)
    kernel = (kernel_element_delta(A).is_zero() and kernel_element_delta(B).is_zero()
              and not xi_commutator_matrix("Y").is_zero())
    ok = tri and xi_rel and comm and nested == pairs and entry_ok and kernel
    yn = lambda b: "yes" if b else "no"  # noqa: E731
    return CheckResult(11, "q-Onsager", ok,
                       f"tridiagonal in Delta: {yn(tri)}; xi2 = -(q-q^-1)^2 xi1 ga: {yn(xi_rel)}; "
                       f"[xi1, xi2] = 0: {yn(comm)}; nested brackets on {nested}/{pairs} pairs; "
                       f"(4,3) entry = {entry}; kernel elements: {yn(kernel)}")


# rho and sigma carry each two-generator subalgebra to another one
SUBALGEBRA_TABLE = {
    ("r", "AB"): "BC", ("r", "BC"): "AC", ("r", "AC"): "AB",
    ("s", "AB"): "AB", ("s", "BC"): "AC", ("s", "AC"): "BC",
}


def check_ideal(rng: random.Random, max_degree: int = 4, n: int = 500,
                samples: int = 50) -> CheckResult:
    qp = CommPoly.const(_q(1) + _q(-1))
    al_ok = abelianize(alpha) == qp * AB_BAR + BB_BAR * CB_BAR
    om_expected = -(qp * AB_BAR * BB_BAR * CB_BAR) - AB_BAR ** 2 - BB_BAR ** 2 - CB_BAR ** 2
    om_ok = abelianize(casimir()) == om_expected

    gens = (A, B, C)
    agree = 0
    for k in range(n):
        kind = k % 3
        if kind == 0:
            x = random_element(rng, max_degree, 3)
        elif kind == 1:
            u = random_element(rng, 1, 1)
            v = random_element(rng, 1, 1)
            g, h = rng.sample(gens, 2)
            x = u * commutator(g, h) * v + DeltaElement.scalar(random_coeff(rng))
        else:
            pair = rng.choice(("AB", "BC", "AC"))
            x = _random_word_element(rng, [getattr(D, ch) for ch in pair], max_degree)
        agree += triple_intersection_check(x) == in_commutator_ideal_plus_1(x)

    table_ok = 0
    for (g, src), dst in SUBALGEBRA_TABLE.items():
        maps = rho if g == "r" else sigma
        srcgens = [getattr(D, ch) for ch in src]
        table_ok += all(in_subalgebra(maps(_random_word_element(rng, srcgens, 3)), dst)
                        for _ in range(samples))
    ok = al_ok and om_ok and agree == n and table_ok == len(SUBALGEBRA_TABLE)
    return CheckResult(12, "ideal and abelianization", ok,
                       f"alpha bar: {'yes' if al_ok else 'no'}; Omega bar: {'yes' if om_ok else 'no'}; "
                       f"triple intersection agrees on {agree}/{n}; "
                       f"subalgebra table {table_ok}/{len(SUBALGEBRA_TABLE)} rows")


def check_cli(rng: random.Random, max_degree: int = 4, n: int = 200) -> CheckResult:
    """Round trip through text, and byte-stable JSON for a fixed seed.

    ``verify all`` itself is exercised from the test suite, which runs the
    command in a subprocess; calling it from here would recurse.
    """
    from .cli import run_command
    from .expr import parse_element

    trips = sum(parse_element(str(x)) == x
                for x in (random_element(rng, max_degree, 3) for _ in range(n)))
    seed = rng.randrange(2 ** 31)
    expr = str(random_element(random.Random(seed), 3, 3))
    outs = [run_command(["--json", "--seed", str(seed), "normalize", expr]) for _ in range(2)]
    stable = outs[0] == outs[1] and outs[0][0] == 0
    return CheckResult(13, "CLI", trips == n and stable,
                       f"parse/render round trip on {trips}/{n}; JSON byte-stable: "
                       f"{'yes' if stable else 'no'}")


CRITERIA: Dict[int, Callable[..., CheckResult]] = {
    1: check_diamond,
    2: check_pbw_uniqueness,
    3: check_casimir,
    4: check_presentation,
    5: check_psl2z,
    6: check_lambda,
    7: check_faithfulness,
    8: check_filtration,
    9: check_omega_basis,
    10: check_center,
    11: check_onsager,
    12: check_ideal,
    13: check_cli,
}

# default degree cap per criterion, used when --max-degree is not given
_DEFAULT_DEGREE = {2: 4, 5: 4, 6: 3, 9: 5, 12: 4, 13: 4}

SUITES: Dict[str, List[int]] = {
    "diamond": [1, 2],
    "casimir": [3],
    "presentation": [4],
    "psl2z": [5],
    "pi": [6, 7],
    "filtration": [8, 9],
    "center": [10],
    "onsager": [11],
    "ideal": [12],
    "cli": [13],
    "all": list(range(1, 14)),
}


def run_criterion(n: int, seed: int = 0, max_degree: int | None = None) -> CheckResult:
    # every criterion gets its own stream so suites give the same answers
    # whether run alone or as part of "all"
    rng = random.Random(f"{seed}:{n}")
    deg = _DEFAULT_DEGREE.get(n, 4) if max_degree is None else min(max_degree, _DEFAULT_DEGREE.get(n, 4))
    try:
        return CRITERIA[n](rng, deg)
    except Exception as exc:  # a crash is a failed check, reported as such
        return CheckResult(n, CRITERIA[n].__name__, False, f"error: {type(exc).__name__}: {exc}")


def run_suite(name: str, seed: int = 0, max_degree: int | None = None) -> List[CheckResult]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return [run_criterion(n, seed, max_degree) for n in SUITES[name]]
