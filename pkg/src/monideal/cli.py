"""Command-line front end.

Exit codes: 0 success / verified, 1 counterexample found (structured payload
on stdout), 2 usage or input error, 3 resource limit hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import __version__
from .core import (
    MonomialIdeal,
    Ring,
    colon,
    colon_ideal,
    frobenius_power,
    intersect,
    power,
    radical,
    saturate,
)
from .decomposition import (
    check_localization,
    irreducible_decompose,
    primary_decompose,
    strict_threshold,
    tight_closure,
    verify_growth_frobenius,
    verify_growth_ordinary,
)
from .errors import MonidealError, ResourceLimitError
from .regularity import betti_table, regularity, linear_regularity_bound, verify_regularity_bound

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False)


def _emit(args, doc):
    if getattr(args, "emit", None):
        with open(args.emit, "w", encoding="utf-8") as fh:
            fh.write(_dump(doc) + "\n")


def _ring(args) -> Ring:
    return Ring.from_names(args.ring, args.char)


def _ideal(args, text) -> MonomialIdeal:
    return _ring(args).parse_ideal(text)


def _finish(args, out, doc, ok=True) -> int:
    """Print human text (or the document on failure) and write --emit."""
    _emit(args, doc)
    if not ok:
        print(_dump(doc), file=out)
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def cmd_decompose(args, out):
    I = _ideal(args, args.ideal)
    dec = irreducible_decompose(I)
    print(dec, file=out)
    ring = I.ring
    return _finish(args, out, {
        "kind": "irreducible-decomposition", "ideal": str(I),
        "components": [{"index_monomial": ring.format_monomial(c.index_monomial),
                        "ideal": str(c.ideal)} for c in dec.components]})


def cmd_primary(args, out):
    I = _ideal(args, args.ideal)
    comps = primary_decompose(I)
    for Q in comps:
        print(f"({Q.ideal})  radical=({', '.join(Q.radical_names())})", file=out)
    return _finish(args, out, {
        "kind": "primary-decomposition", "ideal": str(I),
        "components": [{"ideal": str(Q.ideal), "radical": Q.radical_names()} for Q in comps]})


def _simple(kind):
    def run(args, out):
        ring = _ring(args)
        I = ring.parse_ideal(args.ideal)
        if kind == "power":
            res = power(I, args.n)
        elif kind == "frob":
            res = frobenius_power(I, args.q)
        elif kind == "radical":
            res = radical(I)
        elif kind == "intersect":
            res = intersect(I, ring.parse_ideal(args.other))
        elif kind == "colon":
            other = ring.parse_ideal(args.other)
            res = colon(I, other.gens[0]) if len(other.gens) == 1 else colon_ideal(I, other)
        elif kind == "saturate":
            res = saturate(I, ring.parse_monomial(args.other))
        print(res, file=out)
        return _finish(args, out, {"kind": kind, "ideal": str(I), "result": str(res)})
    return run


def cmd_tc(args, out):
    I, J = _ideal(args, args.I), _ideal(args, args.J)
    res = tight_closure(I, J)
    print(res, file=out)
    return _finish(args, out, {"kind": "tight-closure", "I": str(I), "J": str(J),
                               "closure": str(res)})


def cmd_check_localization(args, out):
    ring = _ring(args)
    I, J = ring.parse_ideal(args.I), ring.parse_ideal(args.J)
    res = check_localization(I, J, ring.parse_monomial(args.u))
    doc = res.to_dict()
    if res.ok:
        print(f"{res.lhs}\nverified", file=out)
    return _finish(args, out, doc, res.ok)


def cmd_bound_growth(args, out):
    I, J = _ideal(args, args.I), _ideal(args, args.J)
    if (args.n is None) == (args.q is None):
        raise UsageError("give exactly one of --n or --q")
    if args.n is not None:
        cert = verify_growth_ordinary(I, J, args.n, strict=args.strict)
    else:
        cert = verify_growth_frobenius(I, J, args.q, strict=args.strict)
    doc = cert.to_dict()
    if args.strict:
        mode = cert.mode
        values = list(range(1, args.scan + 1)) if mode == "ordinary" else \
            [cert.n_or_q ** k for k in range(1, 4)] if cert.n_or_q > 1 else [1]
        doc["strict_threshold"] = strict_threshold(I, J, values, mode)
        doc["strict_scan"] = values
    if cert.ok or args.strict:
        print(cert.render(), file=out)
        if args.strict:
            print(f"strict bound holds from {doc['strict_threshold']} over {doc['strict_scan']}",
                  file=out)
    # the strict variant only claims large n or q, so its violations are data
    return _finish(args, out, doc, cert.ok or args.strict)


def cmd_reg(args, out):
    I = _ideal(args, args.ideal)
    r = regularity(I, args.char)
    print(r, file=out)
    return _finish(args, out, {"kind": "regularity", "ideal": str(I), "regularity": r,
                               "field": args.char})


def cmd_betti(args, out):
    I = _ideal(args, args.ideal)
    table = betti_table(I, args.char)
    for (i, deg), r in table.graded().items():
        print(f"beta_{{{i},{deg}}} = {r}", file=out)
    print(f"reg = {table.regularity()}", file=out)
    return _finish(args, out, table.to_dict())


def cmd_reg_bound(args, out):
    ideals = [_ideal(args, t) for t in args.ideals]
    report = linear_regularity_bound(ideals, args.char)
    print(report.render(), file=out)
    return _finish(args, out, report.to_dict())


def cmd_verify_reg(args, out):
    ideals = [_ideal(args, t) for t in args.ideals]
    res = verify_regularity_bound(ideals, args.n_max, args.char)
    doc = res.to_dict()
    if res.ok:
        print(res.render(), file=out)
    return _finish(args, out, doc, res.ok)


def cmd_katzman(args, out):
    from .katzman import build_instance, verify_katzman

    p = args.p if args.p is not None else args.char
    if not p:
        raise UsageError("katzman needs a prime --p (or --char)")
    cert = verify_katzman(build_instance(p, args.e, seed=args.seed, max_q=args.max_q,
                                         budget=args.spair_budget))
    doc = cert.to_dict()
    if cert.ok:
        print(cert.render(), file=out)
    return _finish(args, out, doc, cert.ok)


def cmd_selftest(args, out, err):
    from .selftest import run_suites

    if args.budget == 0:
        print("warning: zero budget, no cases run", file=err)
    results = run_suites(args.seed, args.budget)
    failed = [r for r in results if r.failed]
    for r in results:
        print(f"{r.name}: {r.passed} passed, {r.failed} failed", file=out)
    doc = {"kind": "selftest", "seed": args.seed, "budget": args.budget,
           "suites": [{"name": r.name, "passed": r.passed, "failed": r.failed,
                       "counterexample": r.counterexample} for r in results]}
    return _finish(args, out, doc, not failed)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="monideal", description="Monomial ideal computations and verifiers.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, handler, ring=True, help=None):
        sp = sub.add_parser(name, help=help)
        if ring:
            sp.add_argument("--ring", required=True, help="comma separated variable names")
        sp.add_argument("--char", type=int, default=0,
                        help="characteristic (0, or a prime p for F_p coefficients)")
        sp.add_argument("--emit", help="write the structured JSON document to this path")
        sp.set_defaults(handler=handler)
        return sp

    add("decompose", cmd_decompose, help="minimal irreducible decomposition").add_argument("ideal")
    add("primary", cmd_primary, help="primary decomposition").add_argument("ideal")
    sp = add("power", _simple("power"), help="ordinary power I^n")
    sp.add_argument("ideal")
    sp.add_argument("--n", type=int, required=True)
    sp = add("frob", _simple("frob"), help="Frobenius power I^[q]")
    sp.add_argument("ideal")
    sp.add_argument("--q", type=int, required=True)
    for name in ("colon", "intersect", "saturate"):
        sp = add(name, _simple(name))
        sp.add_argument("ideal")
        sp.add_argument("other")
    add("radical", _simple("radical")).add_argument("ideal")
    sp = add("tc", cmd_tc, help="tight closure of I in S/J")
    sp.add_argument("--I", required=True)
    sp.add_argument("--J", default="0")
    sp = add("check-localization", cmd_check_localization)
    sp.add_argument("--I", required=True)
    sp.add_argument("--J", default="0")
    sp.add_argument("--u", required=True)
    sp = add("bound-growth", cmd_bound_growth, help="linear growth certificate")
    sp.add_argument("--I", required=True)
    sp.add_argument("--J", default="0")
    sp.add_argument("--n", type=int)
    sp.add_argument("--q", type=int)
    sp.add_argument("--strict", action="store_true",
                    help="take l from I alone and report where that bound starts to hold")
    sp.add_argument("--scan", type=int, default=6, help="largest n scanned in strict mode")
    add("reg", cmd_reg, help="Castelnuovo-Mumford regularity").add_argument("ideal")
    add("betti", cmd_betti, help="graded Betti numbers").add_argument("ideal")
    add("reg-bound", cmd_reg_bound, help="linear regularity bound B").add_argument(
        "ideals", nargs="+")
    sp = add("verify-reg", cmd_verify_reg, help="check reg(sum I_j^n) <= n*B")
    sp.add_argument("ideals", nargs="+")
    sp.add_argument("--n-max", type=int, default=3)
    sp = add("katzman", cmd_katzman, ring=False, help="certify Katzman's decomposition")
    sp.add_argument("--p", type=int)
    sp.add_argument("--e", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-q", type=int, default=32)
    sp.add_argument("--spair-budget", type=int, default=None)
    sp = add("selftest", None, ring=False, help="randomized property suites")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--budget", type=int, default=25, help="cases per suite")
    return parser


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("missing subcommand")
        if args.command == "selftest":
            return cmd_selftest(args, out, err)
        return args.handler(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc} {exc.stats}", file=err)
        return EXIT_RESOURCE
    except MonidealError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
