"""Command-line front end.

Subcommands: qfun, eig, nlambda, tableaux, expand, verify.  Exit codes:
0 success, 1 verification failure, 2 invalid input.
"""

import argparse
import json
import sys

from qcap.capelli import capelli_eigenvalue
from qcap.partitions import (
    StrictPartition,
    count_shifted_tableaux,
    n_lambda,
    precedes_key,
)
from qcap.polyring import MultiPoly
from qcap.qfunctions import expand_in_basis, factorial_schur_q, schur_q
from qcap.scalars import format_rational


class InputError(ValueError):
    pass


def _partition(text):
    try:
        return StrictPartition.parse(text)
    except ValueError as ex:
        raise InputError(str(ex))


def cmd_qfun(args):
    lam = _partition(args.lam)
    if lam.length > args.n:
        raise InputError("partition longer than variable count")
    poly = factorial_schur_q(lam, args.n) if args.factorial else schur_q(lam, args.n)
    if args.format == "json":
        print(poly.to_json())
    else:
        print(poly.to_text())
    return 0


def cmd_eig(args):
    lam = _partition(args.lam)
    mu = _partition(args.mu)
    if lam.length > args.n or mu.length > args.n:
        raise InputError("partition longer than variable count")
    print(format_rational(capelli_eigenvalue(lam, mu, args.n)))
    return 0


def cmd_nlambda(args):
    print(format_rational(n_lambda(_partition(args.lam))))
    return 0


def cmd_tableaux(args):
    print(count_shifted_tableaux(_partition(args.lam)))
    return 0


def cmd_expand(args):
    try:
        poly = MultiPoly.from_json(sys.stdin.read())
    except (ValueError, KeyError, json.JSONDecodeError) as ex:
        raise InputError("malformed polynomial JSON: %s" % ex)
    if poly.n != args.n:
        raise InputError("polynomial has %d variables, expected %d" % (poly.n, args.n))
    try:
        coeffs = expand_in_basis(poly, args.basis, args.n)
    except ValueError as ex:
        raise InputError(str(ex))
    out = {
        str(nu): format_rational(c)
        for nu, c in sorted(coeffs.items(), key=lambda item: precedes_key(item[0]))
    }
    print(json.dumps(out))
    return 0


def cmd_verify(args):
    from qcap.repsim.components import SizeGuardError, _check_guard
    from qcap.repsim.report import build_report, report_passed

    if args.max_degree < 0:
        raise InputError("max degree must be >= 0")
    try:
        _check_guard(args.n, args.max_degree)
        report = build_report(args.n, args.max_degree)
    except SizeGuardError as ex:
        raise InputError(str(ex))
    if args.format == "text":
        for c in report["checks"]:
            tag = "ok" if c["pass"] else "FAIL"
            print("%-4s %-24s lambda=%-8s mu=%-8s expected=%s measured=%s"
                  % (tag, c["name"], c["lambda"] or "-", c["mu"] or "-",
                     c["expected"], c["measured"]))
        print("conventions:", json.dumps(report["conventions"]))
    else:
        print(json.dumps(report))
    return 0 if report_passed(report) else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qcap",
        description="Exact Schur Q-functions and Capelli spectra for q(n).",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("qfun", help="print a (factorial) Schur Q-function")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--factorial", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=cmd_qfun)

    p = sub.add_parser("eig", help="print the Capelli eigenvalue c_lambda(mu)")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_eig)

    p = sub.add_parser("nlambda", help="closed-form shifted tableau count")
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(fn=cmd_nlambda)

    p = sub.add_parser("tableaux", help="count shifted standard tableaux")
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(fn=cmd_tableaux)

    p = sub.add_parser("expand", help="expand polynomial JSON from stdin in a Q basis")
    p.add_argument("--basis", choices=("Q", "Qstar"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=cmd_expand)

    p = sub.add_parser("verify", help="run measured-vs-predicted verification")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-degree", dest="max_degree", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="json")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", 1) < 1:
        print("error: n must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except InputError as ex:
        print("error: %s" % ex, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
