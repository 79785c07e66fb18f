"""Command-line front end: one subcommand per algorithm.

Every number crosses the boundary as decimal text (rationals as "p/q").
--json (or EUCLID_KIT_JSON=1) wraps the result in a single envelope object
{"command", "inputs", "result", and optionally "trace"}. Exit codes: 0 on
success, 1 on a domain error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from euclid_kit import anthyphairesis, continued_fractions, euclidean_domain
from euclid_kit import exact_arith, linear_diophantine, power_rationality, verify
from euclid_kit.errors import DomainError


def _int_arg(text: str) -> int:
    try:
        return exact_arith.parse_integer(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _rational_arg(text: str) -> Fraction:
    try:
        return exact_arith.parse_rational(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _fmt(r: Fraction) -> str:
    return exact_arith.format_rational(r)


def _poly_json(p: euclidean_domain.Polynomial) -> dict:
    return {"coefficients": p.to_coeff_list(), "human": str(p)}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="euclid-kit",
        description="Exact arithmetic: gcd algorithms, Bezout coefficients, "
        "linear Diophantine equations, continued fractions, polynomial gcd.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="emit a JSON envelope")
        return p

    p = add("gcd", "greatest common divisor of two non-zero integers")
    p.add_argument("x", type=_int_arg)
    p.add_argument("y", type=_int_arg)
    p.add_argument("--method", choices=["subtract", "divide", "generic"],
                   default="subtract")
    p.add_argument("--trace", action="store_true",
                   help="show the reciprocal-subtraction steps")

    p = add("bezout", "certificate g, m, n with a*m + b*n = g")
    p.add_argument("a", type=_int_arg)
    p.add_argument("b", type=_int_arg)
    p.add_argument("--canonical", action="store_true",
                   help="reduce m into [0, |b|/g)")

    p = add("euclid-form", "non-negative m, n with |m*x - n*y| = gcd(x, y)")
    p.add_argument("x", type=_int_arg)
    p.add_argument("y", type=_int_arg)

    p = add("inverse", "m in [1, b] with a*m = 1 (mod b)")
    p.add_argument("a", type=_int_arg)
    p.add_argument("b", type=_int_arg)
    p.add_argument("--method", choices=["scan", "euclid"], default="euclid")

    p = add("solve", "all integer solutions of a*x + b*y = c")
    p.add_argument("a", type=_int_arg)
    p.add_argument("b", type=_int_arg)
    p.add_argument("c", type=_int_arg)

    p = add("box", "brute-force solutions of a*x + b*y = c with |x| <= bound")
    p.add_argument("a", type=_int_arg)
    p.add_argument("b", type=_int_arg)
    p.add_argument("c", type=_int_arg)
    p.add_argument("bound", type=_int_arg)

    p = add("ideal", "check {a*s + b*t} matches the multiples of g in a window")
    p.add_argument("a", type=_int_arg)
    p.add_argument("b", type=_int_arg)
    p.add_argument("n", type=_int_arg)

    p = add("cf", "continued-fraction quotients of a positive rational")
    p.add_argument("r", type=_rational_arg, metavar="p/q")

    p = add("value", "exact value of a continued fraction")
    p.add_argument("quotients", type=_int_arg, nargs="+")

    p = add("convergents", "convergents of the expansion of a positive rational")
    p.add_argument("r", type=_rational_arg, metavar="p/q")

    p = add("lagrange", "solve a*s - b*r = +-1 by truncating the expansion of a/b")
    p.add_argument("a", type=_int_arg)
    p.add_argument("b", type=_int_arg)

    p = add("approx", "quotients certain for every value in [lo, hi]")
    p.add_argument("--lo", type=_rational_arg, required=True)
    p.add_argument("--hi", type=_rational_arg, required=True)
    p.add_argument("--max-terms", type=_int_arg, default=20)

    p = add("polygcd", "monic gcd of two rational polynomials")
    p.add_argument("p", help='coefficients ascending, e.g. "-1,0,0,1" for x^3 - 1')
    p.add_argument("q")

    p = add("polybezout", "u, v with u*p + v*q = gcd(p, q) over the rationals")
    p.add_argument("p")
    p.add_argument("q")

    p = add("kthpower", "integer k-th root of n, or a certificate none exists")
    p.add_argument("n", type=_int_arg)
    p.add_argument("k", type=_int_arg)

    p = add("verify", "run the randomized cross-algorithm property suite")
    p.add_argument("--seed", type=_int_arg, default=1)
    p.add_argument("--trials", type=_int_arg, default=200)

    return parser


def _run_gcd(args) -> tuple[dict, dict, list | None, str]:
    if args.x == 0 or args.y == 0:
        raise DomainError("inputs must be non-zero")
    x, y = abs(args.x), abs(args.y)
    if args.method == "subtract":
        g = anthyphairesis.gcd_anthyphairesis(x, y)
    elif args.method == "divide":
        g = anthyphairesis.gcd_division(x, y)
    else:
        g = euclidean_domain.generic_gcd(x, y)
    inputs = {"x": args.x, "y": args.y, "method": args.method}
    trace = None
    text_lines = []
    if args.trace:
        tr = anthyphairesis.subtract_trace(x, y)
        trace = tr.to_records()
        text_lines.extend(tr.render().splitlines()[:-1])
    text_lines.append(f"gcd = {g}")
    return inputs, {"g": g}, trace, "\n".join(text_lines)


def _run_command(args) -> tuple[dict, dict, list | None, str]:
    """Dispatch once parsed; returns (inputs, result, trace, text)."""
    cmd = args.command
    if cmd == "gcd":
        return _run_gcd(args)

    if cmd == "bezout":
        cert = linear_diophantine.extended_gcd(args.a, args.b)
        if args.canonical:
            cert = linear_diophantine.canonicalize(cert)
        result = {"a": cert.a, "b": cert.b, "g": cert.g, "m": cert.m, "n": cert.n}
        text = f"gcd({cert.a}, {cert.b}) = {cert.g} = {cert.a}*({cert.m}) + {cert.b}*({cert.n})"
        return {"a": args.a, "b": args.b, "canonical": args.canonical}, result, None, text

    if cmd == "euclid-form":
        form = linear_diophantine.euclid_form(args.x, args.y)
        g = form.sign * (form.m * form.x - form.n * form.y)
        result = {"x": form.x, "y": form.y, "m": form.m, "n": form.n,
                  "sign": form.sign, "g": g}
        text = f"|{form.m}*{form.x} - {form.n}*{form.y}| = {g} (sign {form.sign:+d})"
        return {"x": args.x, "y": args.y}, result, None, text

    if cmd == "inverse":
        m = linear_diophantine.gauss_inverse(args.a, args.b, method=args.method)
        inputs = {"a": args.a, "b": args.b, "method": args.method}
        return inputs, {"inverse": m, "modulus": args.b}, None, f"inverse = {m}"

    if cmd == "solve":
        family = linear_diophantine.solve_linear(args.a, args.b, args.c)
        inputs = {"a": args.a, "b": args.b, "c": args.c}
        if family is None:
            g = linear_diophantine.extended_gcd(args.a, args.b).g
            result = {"solvable": False}
            return inputs, result, None, f"no solution: {g} does not divide {args.c}"
        result = {"solvable": True, "x0": family.x0, "y0": family.y0,
                  "dx": family.dx, "dy": family.dy}
        text = (f"x = {family.x0} + {family.dx}*k, "
                f"y = {family.y0} + {family.dy}*k  (k in Z)")
        return inputs, result, None, text

    if cmd == "box":
        sols = linear_diophantine.all_solutions_in_box(args.a, args.b, args.c, args.bound)
        inputs = {"a": args.a, "b": args.b, "c": args.c, "bound": args.bound}
        text = "\n".join(f"({x}, {y})" for x, y in sols) or "(none)"
        return inputs, {"solutions": [[x, y] for x, y in sols]}, None, text

    if cmd == "ideal":
        equal = linear_diophantine.ideal_equality_check(args.a, args.b, args.n)
        g = anthyphairesis.gcd_division(abs(args.a), abs(args.b))
        inputs = {"a": args.a, "b": args.b, "n": args.n}
        text = (f"{'equal' if equal else 'DIFFERENT'}: combinations of {args.a} and "
                f"{args.b} within [-{args.n}, {args.n}] are the multiples of {g}")
        return inputs, {"equal": equal, "g": g}, None, text

    if cmd == "cf":
        cf = continued_fractions.cf_from_rational(args.r)
        result = {"quotients": list(cf.quotients), "value": _fmt(continued_fractions.cf_value(cf))}
        return {"r": _fmt(args.r)}, result, None, str(list(cf.quotients))

    if cmd == "value":
        cf = continued_fractions.ContinuedFraction(tuple(args.quotients))
        value = continued_fractions.cf_value(cf)
        result = {"quotients": list(cf.quotients), "value": _fmt(value)}
        return {"quotients": args.quotients}, result, None, _fmt(value)

    if cmd == "convergents":
        cf = continued_fractions.cf_from_rational(args.r)
        convs = continued_fractions.convergents(cf)
        result = {"convergents": [{"n": c.n, "p": c.p, "q": c.q} for c in convs]}
        text = "\n".join(f"{c.n}: {c.p}/{c.q}" for c in convs)
        return {"r": _fmt(args.r)}, result, None, text

    if cmd == "lagrange":
        r, s, sign = continued_fractions.lagrange_solution(args.a, args.b)
        result = {"r": r, "s": s, "sign": sign}
        text = f"r = {r}, s = {s}: {args.a}*{s} - {args.b}*{r} = {sign:+d}"
        return {"a": args.a, "b": args.b}, result, None, text

    if cmd == "approx":
        qs = continued_fractions.interval_quotients(args.lo, args.hi, args.max_terms)
        inputs = {"lo": _fmt(args.lo), "hi": _fmt(args.hi), "max_terms": args.max_terms}
        return inputs, {"quotients": list(qs)}, None, str(list(qs))

    if cmd == "polygcd":
        a = euclidean_domain.Polynomial.from_string(args.p)
        b = euclidean_domain.Polynomial.from_string(args.q)
        g = euclidean_domain.poly_gcd(a, b)
        return ({"p": args.p, "q": args.q}, {"gcd": _poly_json(g)}, None, str(g))

    if cmd == "polybezout":
        a = euclidean_domain.Polynomial.from_string(args.p)
        b = euclidean_domain.Polynomial.from_string(args.q)
        g, u, v = euclidean_domain.generic_extended_gcd(
            a, b, euclidean_domain.RATIONAL_POLYNOMIALS
        )
        result = {"g": _poly_json(g), "u": _poly_json(u), "v": _poly_json(v)}
        text = f"g = {g}\nu = {u}\nv = {v}"
        return {"p": args.p, "q": args.q}, result, None, text

    if cmd == "kthpower":
        root = power_rationality.rational_kth_root(args.n, args.k)
        result = {"n": args.n, "k": args.k, "root": root, "is_power": root is not None}
        if root is None:
            text = f"{args.n}^(1/{args.k}) is irrational (no integer root)"
        else:
            text = f"{args.n} = {root}^{args.k}"
        return {"n": args.n, "k": args.k}, result, None, text

    if cmd == "verify":
        report = verify.run_verify(args.seed, args.trials)
        result = {
            "seed": report.seed, "trials": report.trials, "backend": report.backend,
            "ok": report.ok,
            "properties": [
                {"name": r.name, "trials": r.trials, "failures": r.failures,
                 "counterexample": r.counterexample}
                for r in report.results
            ],
        }
        return ({"seed": args.seed, "trials": args.trials}, result, None, report.render())

    raise AssertionError(f"unhandled command {cmd!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    json_mode = args.json or os.environ.get("EUCLID_KIT_JSON") == "1"
    try:
        inputs, result, trace, text = _run_command(args)
    except DomainError as exc:
        message = f"domain: {exc}"
        if json_mode:
            print(json.dumps({"command": args.command, "error": message}))
        print(message, file=sys.stderr)
        return 1
    if json_mode:
        envelope = {"command": args.command, "inputs": inputs, "result": result}
        if trace is not None:
            envelope["trace"] = trace
        print(json.dumps(envelope))
    else:
        print(text)
    if args.command == "verify" and not result["ok"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
