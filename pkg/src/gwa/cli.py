"""Command line front end: ``gwa <command> ...``.

Exit status is 0 for success or a true verdict, 1 for a false verdict and
2 for usage, input or algebra errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import checks
from .algebra import GwaPresentation, tensor_power, validate_presentation
from .automorphism import RingAutomorphism
from .coefficients import parse_rational
from .errors import GwaError
from .parsing import parse_element, parse_poly, parse_ratfunc, parse_skew, tokenize
from .polynomial import PolyRing
from .reflection import enumerate_group, invariant_lattice, reynolds
from .serialization import load_presentation
from .skew import SkewRing, embed, evaluate, symmetric_wgroup, trivial_wgroup


class UsageError(Exception):
    pass


def _emit(args, lines, payload):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def _report_lines(report: checks.CheckReport, extra=()):
    lines = list(extra)
    lines.append(f"check    : {report.check}")
    lines.append(f"verdict  : {'true' if report.verdict else 'false'}")
    if report.bounded:
        lines.append(f"bounded  : yes (bound {report.bound})")
    for w in report.witnesses:
        lines.append("witness  : " + ", ".join(f"{k}={_plain(v)}" for k, v in w.items()))
    return lines


def _plain(v):
    if isinstance(v, list):
        return "[" + ",".join(str(x) for x in v) + "]"
    return str(v)


def _finish(args, report: checks.CheckReport, extra=()):
    _emit(args, _report_lines(report, extra), report.to_json())
    return 0 if report.verdict else 1


def _algebra(args, n=None) -> GwaPresentation:
    if not args.algebra:
        raise UsageError("--algebra is required")
    A = load_presentation(args.algebra)
    if n is not None and n != A.rank:
        if A.rank != 1:
            raise UsageError(f"--n {n} needs a rank-1 algebra, got rank {A.rank}")
        A = tensor_power(A, n)
    return A


def _exprs(args, count=None):
    exprs = args.expr or []
    if not exprs:
        raise UsageError("--expr is required")
    if count is not None and len(exprs) < count:
        raise UsageError(f"at least {count} --expr values are required")
    return exprs


# commands


def cmd_normalize(args):
    A = _algebra(args)
    x = parse_element(_exprs(args)[0], A)
    _emit(args, [str(x)], {"result": str(x)})
    return 0


def cmd_mul(args):
    A = _algebra(args)
    exprs = _exprs(args, 2)
    x = parse_element(exprs[0], A)
    for src in exprs[1:]:
        x = x * parse_element(src, A)
    _emit(args, [str(x)], {"result": str(x)})
    return 0


def _skew_operand(args, A):
    if args.skew:
        return parse_skew(args.skew, SkewRing.of(A))
    return embed(parse_element(_exprs(args)[0], A))


def cmd_eval(args):
    A = _algebra(args)
    X = _skew_operand(args, A)
    if not args.at:
        raise UsageError("--at is required")
    value = evaluate(X, parse_ratfunc(args.at, A.base))
    _emit(args, [str(value)], {"operator": str(X), "at": args.at, "result": str(value)})
    return 0


def cmd_embed(args):
    A = _algebra(args)
    X = embed(parse_element(_exprs(args)[0], A))
    _emit(args, [str(X)], {"result": str(X)})
    return 0


def _univariate_ring(src: str, laurent: bool, var: str | None) -> PolyRing:
    if var is None:
        names = sorted(set(_names(src)) - {"z"})
        if len(names) > 1:
            raise UsageError(f"--a must be univariate, found {', '.join(names)}")
        var = names[0] if names else "h"
    return PolyRing([var], [laurent])


def _names(src):
    return [t.text for t in tokenize(src) if t.kind == "name"]


def cmd_check_simple(args):
    if not args.a:
        raise UsageError("--a is required")
    if args.type == "classical":
        ring = _univariate_ring(args.a, False, args.var)
        report = checks.check_simple_classical(parse_poly(args.a, ring))
    else:
        if args.lam is None:
            raise UsageError("--lambda is required for --type quantum")
        ring = _univariate_ring(args.a, True, args.var)
        report = checks.check_simple_quantum(parse_poly(args.a, ring), parse_rational(args.lam))
    return _finish(args, report, [f"a        : {parse_poly(args.a, ring)}"])


def _seed_mode(args):
    return args.m is not None or args.p is not None or args.n is not None


def _seed_generators(args):
    seed = _algebra(args)
    if seed.rank != 1:
        raise UsageError("seed mode needs a rank-1 algebra")
    m = args.m if args.m is not None else 1
    p = args.p if args.p is not None else 1
    n = args.n if args.n is not None else 2
    A, _, gens = checks.fixed_ring_generators(seed, m, p, n)
    return A, (m, p, n), gens


def cmd_check_galois_gen(args):
    if _seed_mode(args):
        A, (m, p, n), gens = _seed_generators(args)
        report = checks.check_galois_generation([embed(x) for x in gens], n, invariant_lattice(m, p, n))
        extra = [f"group    : G({m},{p},{n})"] + [f"generator: {x}" for x in gens]
        return _finish(args, report, extra)
    A = _algebra(args)
    gens = [embed(parse_element(src, A)) for src in _exprs(args)]
    return _finish(args, checks.check_galois_generation(gens, A.rank))


def cmd_check_principal(args):
    if _seed_mode(args):
        A, (m, p, n), gens = _seed_generators(args)
        skew = [embed(x) for x in gens]
        gamma = checks.symmetric_gamma_generators(A)
        report = checks.check_principal(skew, gamma, checks.symmetric_membership(A), args.deg_bound)
        extra = [f"group    : G({m},{p},{n})"] + [f"generator: {x}" for x in gens]
        return _finish(args, report, extra)
    A = _algebra(args)
    ring = SkewRing.of(A)
    ops = [embed(parse_element(src, A)) for src in (args.expr or [])]
    ops += [parse_skew(src, ring) for src in (args.skew_list or [])]
    if not ops:
        raise UsageError("give --expr or --skew operators, or --m/--p/--n")
    if args.symmetric:
        if A.blocks is None:
            raise UsageError("--symmetric needs a tensor-power algebra")
        gamma = checks.symmetric_gamma_generators(A)
        member = checks.symmetric_membership(A)
    else:
        gamma = [parse_poly(src, A.base) for src in args.gamma] if args.gamma else A.base.gens()
        member = checks.polynomial_membership(A.base)
    report = checks.check_principal(ops, gamma, member, args.deg_bound)
    return _finish(args, report)


def cmd_fixed_ring(args):
    A = _algebra(args)
    if args.m is None:
        raise UsageError("--m is required")
    B, report = checks.jw_fixed_ring(A, args.m)
    relations = checks.relation_suite(B)
    images = [str(p) for p in B.sigma[0].forward]
    sigma_text = images[0] if len(images) == 1 else ", ".join(f"{v} -> {img}" for v, img in zip(B.base.variables, images))
    d = report.details
    lines = [
        f"a_m = {B.a[0]}",
        f"sigma_m = {sigma_text}",
        f"relations of (Xp1)^m, (Xm1)^m: {'ok' if report.verdict else 'FAILED'}",
        f"relation suite of the new presentation: {'ok' if relations.verdict else 'FAILED'}",
        f"literal product of sigma^-1(a): {d['literal_product_sigma_inverse']} "
        f"({'matches' if d['literal_product_matches'] else 'differs'})",
    ]
    verdict = report.verdict and relations.verdict
    payload = report.to_json()
    payload["verdict"] = verdict
    payload["details"]["relation_suite"] = relations.verdict
    _emit(args, lines, payload)
    return 0 if verdict else 1


def _parse_point(text: str):
    try:
        return tuple(parse_rational(x) for x in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad point {text!r}: {exc}") from None


def _classical(n: int) -> GwaPresentation:
    ring = PolyRing(["h"])
    h = ring.gen("h")
    return tensor_power(validate_presentation(ring, [h], [RingAutomorphism(ring, [h - 1], [h + 1])]), n)


def cmd_orbit_set(args):
    if not args.point or len(args.point) != 2:
        raise UsageError("give --point twice (M and N)")
    M, N = (_parse_point(p) for p in args.point)
    if len(M) != len(N):
        raise UsageError("points have different lengths")
    A = _algebra(args) if args.algebra else _classical(len(M))
    ring = SkewRing.of(A)
    W = symmetric_wgroup(A) if args.group == "sym" else trivial_wgroup(ring)
    result, report = checks.orbit_set(M, N, W)
    extra = ["S = {" + ", ".join("(" + ",".join(str(c) for c in mu) + ")" for mu in result) + "}"]
    if "bound" in report.details:
        extra.append(f"size {report.details['size']} <= bound {report.details['bound']}")
    payload = report.to_json()
    payload["details"]["set"] = [list(mu) for mu in result]
    lines = _report_lines(report, extra)
    _emit(args, lines, payload)
    return 0 if report.verdict else 1


def cmd_reynolds(args):
    m = args.m if args.m is not None else 1
    p = args.p if args.p is not None else 1
    A = _algebra(args, args.n)
    if A.blocks is None:
        raise UsageError("reynolds needs a tensor-power algebra")
    x = parse_element(_exprs(args)[0], A)
    r = reynolds(enumerate_group(m, p, A.rank), x)
    _emit(args, [str(r)], {"group": [m, p, A.rank], "result": str(r)})
    return 0


COMMANDS = {
    "normalize": (cmd_normalize, "print the normal form of an element"),
    "mul": (cmd_mul, "multiply two or more elements"),
    "eval": (cmd_eval, "evaluate the skew-ring image of an element at a rational function"),
    "embed": (cmd_embed, "print the skew-ring image of an element"),
    "check-simple": (cmd_check_simple, "decide simplicity of a rank-1 GWA"),
    "check-galois-gen": (cmd_check_galois_gen, "check monoid generation by supports"),
    "check-principal": (cmd_check_principal, "bounded principal Galois order certificate"),
    "fixed-ring": (cmd_fixed_ring, "presentation of the invariants of the cyclic action"),
    "orbit-set": (cmd_orbit_set, "orbit set of two points and its size bound"),
    "reynolds": (cmd_reynolds, "average an element over G(m,p,n)"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gwa", description="Exact computations in generalized Weyl algebras.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name, (func, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="print a JSON report")
        if name not in ("check-simple",):
            p.add_argument("--algebra", help="path to an algebra JSON file")
        if name in ("normalize", "mul", "eval", "embed", "check-galois-gen", "check-principal", "reynolds"):
            p.add_argument("--expr", action="append", help="element expression (repeatable)")
        if name in ("check-galois-gen", "check-principal", "fixed-ring", "reynolds"):
            p.add_argument("--m", type=int)
        if name in ("check-galois-gen", "check-principal", "reynolds"):
            p.add_argument("--p", type=int)
            p.add_argument("--n", type=int)
    cmd = sub.choices
    cmd["eval"].add_argument("--skew", help="skew-ring expression such as 'h*m[1]'")
    cmd["eval"].add_argument("--at", help="rational function to evaluate at")
    cmd["check-simple"].add_argument("--type", choices=["classical", "quantum"], default="classical")
    cmd["check-simple"].add_argument("--a", help="defining polynomial")
    cmd["check-simple"].add_argument("--lambda", dest="lam", help="scaling factor for --type quantum")
    cmd["check-simple"].add_argument("--var", help="variable name (inferred when omitted)")
    cmd["check-principal"].add_argument("--skew", dest="skew_list", action="append", help="skew-ring operator (repeatable)")
    cmd["check-principal"].add_argument("--gamma", action="append", help="generator of Gamma (repeatable)")
    cmd["check-principal"].add_argument("--symmetric", action="store_true", help="Gamma = symmetric part of the base ring")
    cmd["check-principal"].add_argument("--deg-bound", type=int, default=4)
    cmd["orbit-set"].add_argument("--point", action="append", help="comma-separated rational coordinates (twice)")
    cmd["orbit-set"].add_argument("--group", choices=["sym", "trivial"], default="sym")
    return parser


def run_command(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"gwa {args.command}: {exc}", file=sys.stderr)
        return 2
    except GwaError as exc:
        print(f"gwa {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"gwa {args.command}: {exc}", file=sys.stderr)
        return 2


def main(argv=None):
    sys.exit(run_command(argv))


if __name__ == "__main__":
    main()
