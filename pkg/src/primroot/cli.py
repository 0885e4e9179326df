"""Command-line front end: ``primroot <subcommand> ...``.

Exit status is 0 on success, 1 when a verification comes back false and 2 on
usage or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .fieldcore import MODULUS_BOUND, FieldElement, require_prime
from .order import all_powers
from .orderconstruct import witness_with_order_q_n
from .polycong import non_trivial_pfield_polynomial_p, pfield_polynomial_roots
from .proot import decompose_with_witnesses, is_primitive_root
from .selftest import PROPERTIES

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def natural(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    if value >= MODULUS_BOUND:
        raise argparse.ArgumentTypeError(f"{value} exceeds the bound 2**31")
    return value


def integer(text: str) -> int:
    try:
        return int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}") from None


def _prime(p: int) -> int:
    try:
        return require_prime(p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _element(a: int, p: int) -> FieldElement:
    if a >= p:
        raise UsageError(f"{a} is not a residue mod {p}")
    return FieldElement(a, p)


def cmd_find(args) -> tuple[dict, str, int]:
    p = _prime(args.p)
    res = decompose_with_witnesses(p)
    data = {
        "p": p,
        "root": res.root.residue,
        "order": p - 1,
        "factors": [{"q": f.q, "n": f.n} for f in res.factors],
        "witnesses": [w.residue for w in res.witnesses],
    }
    factors = "*".join(f"{f.q}^{f.n}" for f in res.factors) or "1"
    text = (
        f"primitive root of {p}: {data['root']}\n"
        f"order: {p - 1} = {factors}\n"
        f"witnesses: {', '.join(map(str, data['witnesses'])) or '(none)'}"
    )
    return data, text, EXIT_OK


def cmd_verify(args) -> tuple[dict, str, int]:
    p = _prime(args.p)
    g = _element(args.g, p)
    ok = is_primitive_root(g, p)
    data = {"p": p, "g": g.residue, "primitive_root": ok}
    text = f"{g.residue} is {'a' if ok else 'not a'} primitive root of {p}"
    return data, text, EXIT_OK if ok else EXIT_FALSE


def cmd_order(args) -> tuple[dict, str, int]:
    p = _prime(args.p)
    a = _element(args.a, p)
    if a.residue == 0:
        raise UsageError("0 has no multiplicative order")
    trace = all_powers(a).residues()
    data = {"p": p, "a": a.residue, "order": len(trace), "trace": trace}
    text = f"order of {a.residue} mod {p}: {len(trace)}\ntrace: {' '.join(map(str, trace))}"
    return data, text, EXIT_OK


def cmd_witness(args) -> tuple[dict, str, int]:
    p = _prime(args.p)
    q = _prime(args.q)
    if (p - 1) % q**args.n:
        raise UsageError(f"{q}^{args.n} does not divide p - 1 = {p - 1}")
    w = witness_with_order_q_n(q, args.n, p)
    o = len(all_powers(w))
    data = {"p": p, "q": q, "n": args.n, "witness": w.residue, "order": o}
    text = f"least element of order {q}^{args.n} mod {p}: {w.residue} (order {o})"
    return data, text, EXIT_OK


def cmd_roots(args) -> tuple[dict, str, int]:
    p = _prime(args.p)
    coeffs = args.coeffs
    if not non_trivial_pfield_polynomial_p(coeffs, p):
        raise UsageError("leading coefficient vanishes mod p")
    roots = pfield_polynomial_roots(coeffs, p)
    data = {"p": p, "coeffs": coeffs, "roots": roots, "count": len(roots)}
    text = f"roots mod {p}: {{{', '.join(map(str, roots))}}}\ncount: {len(roots)}"
    return data, text, EXIT_OK


def cmd_selftest(args) -> tuple[dict, str, int]:
    if args.bound < 2:
        raise UsageError("--bound must be at least 2")
    results = []
    for name, check in PROPERTIES.items():
        results.append({"name": name, "pass": bool(check(args.bound))})
    passed = all(r["pass"] for r in results)
    data = {"bound": args.bound, "properties": results, "pass": passed}
    lines = [f"{'PASS' if r['pass'] else 'FAIL'}  {r['name']}" for r in results]
    lines.append(f"{sum(r['pass'] for r in results)}/{len(results)} properties passed")
    return data, "\n".join(lines), EXIT_OK if passed else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="primroot", description="Primitive roots and order computations modulo a prime."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("find", parents=[common], help="construct a primitive root of p")
    s.add_argument("p", type=natural)
    s.set_defaults(func=cmd_find)

    s = sub.add_parser("verify", parents=[common], help="check whether g is a primitive root of p")
    s.add_argument("g", type=natural)
    s.add_argument("p", type=natural)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("order", parents=[common], help="order and power trace of a mod p")
    s.add_argument("a", type=natural)
    s.add_argument("p", type=natural)
    s.set_defaults(func=cmd_order)

    s = sub.add_parser("witness", parents=[common], help="least element of order q^n mod p")
    s.add_argument("q", type=natural)
    s.add_argument("n", type=natural)
    s.add_argument("p", type=natural)
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("roots", parents=[common], help="roots of c0 + c1*x + ... mod p")
    s.add_argument("p", type=natural)
    s.add_argument("coeffs", type=integer, nargs="+", metavar="c")
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("selftest", parents=[common], help="sweep every invariant up to a bound")
    s.add_argument("--bound", type=natural, default=211)
    s.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        data, text, status = args.func(args)
    except UsageError as exc:
        print(f"primroot {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        print(json.dumps(data))
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
