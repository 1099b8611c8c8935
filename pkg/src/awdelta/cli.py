"""Command-line front end.

    awdelta [--json] [--q-at R] [--max-degree N] [--seed N] COMMAND ...

Exit status: 0 success or true, 1 false, 2 usage or parse error,
3 a verification failed.
"""
from __future__ import annotations

import argparse
import io
import json
import sys
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction
from typing import List, Sequence, Tuple

from .delta import DeltaElement, commutator, filtration_degree, is_central, to_omega_basis
from .expr import ParseError, parse_element
from .lambda_rep import pi
from .morphism import (
    abelianize, in_commutator_ideal, in_commutator_ideal_plus_1, in_subalgebra, psl2z_word,
)
from .qfield import PoleError, RatFuncQ, specialize_q

__all__ = ["main", "run_command", "build_parser"]

OK, FALSE, USAGE, VERIFY_FAILED = 0, 1, 2, 3

BAR = {"Ab": "Ā", "Bb": "B̄", "Cb": "C̄"}
PAIR_BARS = {"AB": {"Ab", "Bb"}, "BC": {"Bb", "Cb"}, "AC": {"Ab", "Cb"}}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="awdelta", description="Exact computations in the universal Askey-Wilson algebra.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--q-at", metavar="RATIONAL", help="specialize q in the printed result (advisory)")
    p.add_argument("--max-degree", type=int, metavar="N", help="degree cap for randomized suites")
    p.add_argument("--seed", type=int, default=0, metavar="N", help="seed for randomized suites")
    sub = p.add_subparsers(dest="cmd", metavar="COMMAND")
    sub.required = True

    def cmd(name, *args, help=None):
        s = sub.add_parser(name, help=help)
        for a in args:
            s.add_argument(a)
        return s

    cmd("normalize", "expr", help="print the normal form")
    cmd("commutator", "x", "y", help="[x, y] = xy - yx")
    cmd("auto", "word", "expr", help="apply a word in r, R, s (rightmost acts first)")
    cmd("abelianize", "expr", help="image in Q(q)[Ab, Bb, Cb]")
    cmd("pi", "expr", help="image in 2x2 Laurent matrices")
    cmd("degree", "expr", help="filtration degree")
    cmd("omega-basis", "expr", help="coordinates in the Omega basis")
    s = sub.add_parser("member", help="membership predicates")
    s.add_argument("target", choices=["AB", "BC", "AC", "ideal", "ideal1"])
    s.add_argument("expr")
    cmd("central", "expr", help="is the element central")
    from .verify import SUITES

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("suite", choices=list(SUITES))
    return p


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _specialize(x: DeltaElement, q0: Fraction) -> DeltaElement:
    return DeltaElement({m: RatFuncQ.const(specialize_q(c, q0)) for m, c in x.terms.items()})


def _element_out(x: DeltaElement, args) -> str:
    if args.q_at is not None:
        x = _specialize(x, args.q0)
    return _dump(x.to_json()) if args.json else str(x)


def _commpoly_json(p) -> dict:
    return {"terms": [{"mono": list(m), "coeff": c.to_json()} for m, c in sorted(p.terms.items())]}


def _predicate(ok: bool, reason: str, args) -> Tuple[int, str]:
    if args.json:
        return (OK if ok else FALSE), _dump({"result": ok, "reason": "" if ok else reason})
    return (OK if ok else FALSE), ("yes" if ok else f"no: {reason}")


def _member(args) -> Tuple[int, str]:
    x = parse_element(args.expr)
    t = args.target
    if t == "ideal":
        return _predicate(in_commutator_ideal(x), "abelianization is nonzero", args)
    if t == "ideal1":
        return _predicate(in_commutator_ideal_plus_1(x), "abelianization is not a constant", args)
    extra = sorted(abelianize(x).variables() - PAIR_BARS[t])
    reason = "abelianization involves " + ", ".join(BAR[v] for v in extra)
    return _predicate(in_subalgebra(x, t), reason, args)


def _verify(args) -> Tuple[int, str]:
    from .verify import run_suite

    results = run_suite(args.suite, seed=args.seed, max_degree=args.max_degree)
    ok = all(r.ok for r in results)
    if args.json:
        text = _dump({"suite": args.suite, "seed": args.seed, "ok": ok,
                      "checks": [r.to_dict() for r in results]})
    elif args.suite == "casimir":
        from .verify import casimir_summary

        text = casimir_summary()
    else:
        text = "\n".join(r.line() for r in results)
        text += f"\n{sum(r.ok for r in results)}/{len(results)} criteria passed"
    return (OK if ok else VERIFY_FAILED), text


def _dispatch(args) -> Tuple[int, str]:
    c = args.cmd
    if c == "normalize":
        return OK, _element_out(parse_element(args.expr), args)
    if c == "commutator":
        return OK, _element_out(commutator(parse_element(args.x), parse_element(args.y)), args)
    if c == "auto":
        return OK, _element_out(psl2z_word(args.word, parse_element(args.expr)), args)
    if c == "abelianize":
        p = abelianize(parse_element(args.expr))
        return OK, _dump(_commpoly_json(p)) if args.json else str(p)
    if c == "pi":
        m = pi(parse_element(args.expr))
        return OK, _dump(m.to_json()) if args.json else str(m)
    if c == "degree":
        d = filtration_degree(parse_element(args.expr))
        d = "-inf" if d == float("-inf") else int(d)
        return OK, _dump({"degree": d}) if args.json else str(d)
    if c == "omega-basis":
        w = to_omega_basis(parse_element(args.expr))
        if args.json:
            return OK, _dump({"terms": [{"mono": list(m), "coeff": v.to_json()}
                                        for m, v in w.sorted_terms()]})
        return OK, str(w)
    if c == "member":
        return _member(args)
    if c == "central":
        return _predicate(is_central(parse_element(args.expr)), "fails to commute with a generator", args)
    return _verify(args)


def run_command(argv: Sequence[str]) -> Tuple[int, str, str]:
    """Run one invocation in-process; returns ``(status, stdout, stderr)``."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        status = main(argv)
    return status, out.getvalue(), err.getvalue()


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        args.q0 = None
        if args.q_at is not None:
            try:
                args.q0 = Fraction(args.q_at)
            except (ValueError, ZeroDivisionError):
                raise UsageError(f"--q-at expects a rational number, got {args.q_at!r}")
        status, text = _dispatch(args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return USAGE
    except ParseError as e:
        print(e, file=sys.stderr)
        return USAGE
    except (ValueError, ZeroDivisionError, PoleError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE
    except SystemExit as e:  # --help
        return OK if e.code in (0, None) else USAGE
    print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
