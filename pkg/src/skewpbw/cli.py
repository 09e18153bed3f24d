"""Command line front end.

Exit status: 0 on success, 1 when a validation fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys

from .commutant import center_direct, centralizer_kernel, centralizer_sep_basis
from .errors import ParseError, PresentationError, UnsupportedMethod
from .funalg import AlgebraElement, is_cyclic_group, per_set, residue_sep_rules, sep_set
from .multiindex import MultiIndex, monomials_up_to
from .pbw_core import associativity_check
from .serialize import (
    basis_document,
    dumps,
    element_to_dict,
    graded_document,
    load_presentation,
    parse_element,
)
from .verify import run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _sep_rules(p):
    if not (p.is_quasi_commutative and is_cyclic_group(list(p.taus))):
        return None
    rules = []
    for labels, points in residue_sep_rules(list(p.taus)):
        pts = ",".join(str(w) for w in sorted(points))
        rules.append(f"f_{{{','.join(labels)}}} = 0 on {{{pts}}}")
    return rules


def _emit(args, doc, text_lines):
    if args.format == "json":
        sys.stdout.write(dumps(doc))
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _leibniz_failures(p):
    """Check delta(e_a e_b) = sigma(e_a) delta(e_b) + delta(e_a) e_b on indicators."""
    bad = []
    for i, delta in enumerate(p.deltas):
        for a in range(p.m):
            ea = AlgebraElement.indicator(p.m, a)
            for b in range(p.m):
                eb = AlgebraElement.indicator(p.m, b)
                if delta(ea * eb) != p.sigma(i, ea) * delta(eb) + delta(ea) * eb:
                    bad.append((i + 1, a, b))
    return bad


def cmd_check(args):
    checks = []
    try:
        p = load_presentation(args.presentation)
    except PresentationError as exc:
        checks.append({"name": "presentation", "passed": False, "detail": str(exc)})
        p = None
    if p is not None:
        checks.append({"name": "c invertible", "passed": True, "detail": ""})
        leib = _leibniz_failures(p)
        checks.append({
            "name": "twisted Leibniz rule",
            "passed": not leib,
            "detail": "" if not leib else f"fails at (generator, a, b) {leib[:5]}",
        })
        bad = associativity_check(p, depth=args.max_deg, seed=args.seed)
        detail = "" if bad is None else "counterexample (u, v, w) = (" + ", ".join(str(e) for e in bad) + ")"
        checks.append({"name": "associativity", "passed": bad is None, "detail": detail})
    ok = all(c["passed"] for c in checks)
    lines = [f"[{'PASS' if c['passed'] else 'FAIL'}] {c['name']}" + (f": {c['detail']}" if c["detail"] else "")
             for c in checks]
    if p is not None:
        lines.insert(0, f"presentation: n={p.n}, |Omega|={p.m}, "
                        f"{'quasi-commutative' if p.is_quasi_commutative else 'general'}")
    _emit(args, {"passed": ok, "checks": checks}, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_mul(args):
    p = load_presentation(args.presentation, strict=args.strict)
    a = parse_element(p, args.a)
    b = parse_element(p, args.b)
    prod = a * b
    if args.format == "json":
        sys.stdout.write(dumps(element_to_dict(prod)))
    else:
        sys.stdout.write(str(prod) + "\n")
    return EXIT_OK


def cmd_centralizer(args):
    p = load_presentation(args.presentation, strict=args.strict)
    method = args.method or ("sep" if p.is_quasi_commutative else "kernel")
    if method == "sep":
        gb = centralizer_sep_basis(p, args.max_deg)
        doc = graded_document(gb)
        dim = sum(len(v) for v in gb.spaces.values())
        lines = [f"centralizer (sep), degree <= {args.max_deg}: dimension {dim}"]
        lines += [f"  V_{a} = span{{{', '.join('e_' + str(w) for w in sorted(per_set(p.taus, a)))}}}"
                  for a in monomials_up_to(p.n, args.max_deg)]
    elif method == "kernel":
        basis = centralizer_kernel(p, args.max_deg)
        doc = basis_document(basis)
        dim = len(basis)
        lines = [f"centralizer (kernel), degree <= {args.max_deg}: dimension {dim}"]
        lines += [f"  {f}" for f in basis]
    else:
        raise UnsupportedMethod(f"method {method!r} does not compute the centralizer")
    full = dim == len(monomials_up_to(p.n, args.max_deg)) * p.m
    doc["full_space"] = full
    if full:
        lines.append("the centralizer is the full space of elements of this degree")
    rules = _sep_rules(p)
    if rules is not None:
        doc["rule"] = "f_alpha = 0 on Sep^alpha(Omega)"
        doc["rules"] = rules
        lines.append("rule: f_alpha = 0 on Sep^alpha(Omega)")
        lines += [f"  {r}" for r in rules] or ["  (no constraints)"]
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_center(args):
    p = load_presentation(args.presentation, strict=args.strict)
    if args.method not in (None, "direct"):
        raise UnsupportedMethod(f"the center is computed by the direct method, not {args.method!r}")
    basis = center_direct(p, args.max_deg)
    doc = basis_document(basis, "direct")
    lines = [f"center (direct), degree <= {args.max_deg}: dimension {len(basis)}"]
    lines += [f"  {f}" for f in basis]
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_sep(args):
    p = load_presentation(args.presentation, strict=args.strict)
    if args.alpha is not None:
        alpha = MultiIndex.parse(args.alpha)
        if len(alpha) != p.n:
            raise ParseError(f"alpha has length {len(alpha)}, expected {p.n}")
        alphas = [alpha]
    else:
        alphas = monomials_up_to(p.n, args.max_deg)
    entries = [{"alpha": str(a), "sep": sorted(sep_set(p.taus, a)), "per": sorted(per_set(p.taus, a))}
               for a in alphas]
    doc = {"sets": entries}
    lines = [f"Sep^{e['alpha']} = {{{', '.join(map(str, e['sep']))}}}" for e in entries]
    rules = _sep_rules(p)
    if rules is not None:
        doc["rules"] = rules
        lines += [f"  {r}" for r in rules]
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_verify(args):
    results = run_all(seed=args.seed, count=args.count, max_degree=args.max_deg)
    doc = {
        "seed": args.seed,
        "results": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
    }
    lines = [r.line() for r in results]
    for r in results:
        if r.notes:
            lines.append(f"research note ({r.name}): {len(r.notes)} findings, e.g. {r.notes[0]}")
    _emit(args, doc, lines)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-deg", type=int, help="degree bound D (default 3, or 4 for verify)")
    common.add_argument("--method", choices=["sep", "kernel", "direct"])
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--strict", action="store_true", help="run the associativity check on load")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="skewpbw", description="Skew PBW extensions over Q^Omega")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="validate a presentation")
    p.add_argument("presentation")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("mul", parents=[common], help="normal form of a product")
    p.add_argument("presentation")
    p.add_argument("a", help='element literal, e.g. \'{"(0,1)": ["1","1"]}\'')
    p.add_argument("b")
    p.set_defaults(func=cmd_mul)

    for name, func in (("centralizer", cmd_centralizer), ("center", cmd_center)):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("presentation")
        p.set_defaults(func=func)

    p = sub.add_parser("sep", parents=[common], help="Sep/Per sets")
    p.add_argument("presentation")
    p.add_argument("--alpha", help='exponent such as "(0,1)"; default: all with degree <= --max-deg')
    p.set_defaults(func=cmd_sep)

    p = sub.add_parser("verify", parents=[common], help="run the randomized property suite")
    p.add_argument("--count", type=int, default=50, help="random presentations per family")
    p.set_defaults(func=cmd_verify, default_deg=4)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_deg is None:
        args.max_deg = getattr(args, "default_deg", 3)
    if args.max_deg < 0:
        parser.error("--max-deg must be non-negative")
    try:
        return args.func(args)
    except (ParseError, UnsupportedMethod) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PresentationError as exc:
        print(f"invalid presentation: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
