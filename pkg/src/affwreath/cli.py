# -*- coding: utf-8 -*-
"""
Command line interface.

Exit codes: 0 when every requested check passes, 1 when a check fails
(the first counterexample is printed), 2 for usage and input errors.
"""
import argparse
import logging
import sys
from collections import OrderedDict

from . import dispatchers  # noqa: F401
from .awpa import affine_wreath
from .cyclotomic import (
    cyclo_nakayama_check,
    cyclotomic_quotient,
    gram_matrix,
)
from .exceptions import (
    AffWreathError,
    DegenerateGram,
    DegenerateTrace,
    GradingViolation,
    NakayamaInfiniteOrder,
    NakayamaNotDiagonalizable,
    NoUnit,
    NotAssociative,
)
from .frobenius import check_double_dual, dual_basis
from .functions import to_json
from .parsing import parse_element
from .specfile import load_algebra, load_quotient_params
from .structure import center, graded_dimension, jucys_murphy
from .suite import run_suite

log = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

# raised when a mathematical check fails rather than on bad input
CHECK_FAILURES = (
    DegenerateGram,
    DegenerateTrace,
    GradingViolation,
    NakayamaInfiniteOrder,
    NakayamaNotDiagonalizable,
    NoUnit,
    NotAssociative,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):

    def error(self, message):
        raise _UsageError("{}: {}".format(self.prog, message))


def _common():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="print machine-readable JSON")
    common.add_argument("--verbose", action="store_true",
                        help="log at DEBUG level on stderr")
    return common


def _algebra_args(parser, with_n=True):
    parser.add_argument("--algebra", default="trivial",
                        help="builtin name (with :key=value,...) or spec file")
    if with_n:
        parser.add_argument("--n", type=int, required=True)


def build_parser():
    common = _common()
    parser = _Parser(prog="affwreath",
                     description="Exact arithmetic in affine wreath product "
                                 "algebras and their cyclotomic quotients.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    algebra = sub.add_parser("algebra", parents=[common])
    algebra.add_argument("action", choices=["verify"])
    algebra.add_argument("spec")

    mul = sub.add_parser("mul", parents=[common])
    _algebra_args(mul)
    mul.add_argument("left")
    mul.add_argument("right")

    nf = sub.add_parser("nf", parents=[common])
    _algebra_args(nf)
    nf.add_argument("element")

    grdim = sub.add_parser("grdim", parents=[common])
    _algebra_args(grdim)
    grdim.add_argument("--cutoff", type=int, default=4)

    duals = sub.add_parser("dual-basis", parents=[common])
    _algebra_args(duals, with_n=False)

    nakayama = sub.add_parser("nakayama", parents=[common])
    _algebra_args(nakayama, with_n=False)

    cent = sub.add_parser("center", parents=[common])
    _algebra_args(cent)
    cent.add_argument("--degree", type=int, required=True)

    jm = sub.add_parser("jm", parents=[common])
    _algebra_args(jm)
    jm.add_argument("--k", type=int, required=True)

    suite = sub.add_parser("suite", parents=[common])
    _algebra_args(suite)
    suite.add_argument("--seed", type=int, default=0)
    suite.add_argument("--instances", type=int, default=None)
    suite.add_argument("--params", default=None,
                       help="spec file with a cyclotomic section")
    suite.add_argument("--only", action="append", default=None,
                       help="run only the named check (repeatable)")

    cyclo = sub.add_parser("cyclotomic", parents=[common])
    cyclo.add_argument("action", choices=["gram", "nakayama", "basis"])
    cyclo.add_argument("--params", required=True,
                       help="spec file with a cyclotomic section")
    cyclo.add_argument("--n", type=int, required=True)
    cyclo.add_argument("--seed", type=int, default=0)
    return parser


# commands; each returns (exit code, payload, text lines)


def cmd_algebra(args):
    F, _ = load_algebra(args.spec)
    double = check_double_dual(F)
    payload = OrderedDict([
        ("name", F.name),
        ("dim", F.dim),
        ("conductor", F.conductor),
        ("theta", F.theta),
        ("delta", F.delta),
        ("symmetric", F.is_symmetric()),
        ("double_dual", double),
    ])
    lines = ["{}: {}".format(k, v) for k, v in payload.items()]
    return (EXIT_OK if double else EXIT_FAILED), payload, lines


def _algebra(args):
    F, _ = load_algebra(args.algebra)
    return affine_wreath(F, args.n)


def cmd_mul(args):
    A = _algebra(args)
    product = parse_element(A, args.left) * parse_element(A, args.right)
    return EXIT_OK, {"product": product}, [str(product)]


def cmd_nf(args):
    a = parse_element(_algebra(args), args.element)
    return EXIT_OK, {"normal_form": a}, [str(a)]


def cmd_grdim(args):
    report = graded_dimension(_algebra(args), args.cutoff)
    payload = OrderedDict([
        ("by_polynomial_layer", report.by_polynomial_layer),
        ("counts", list(report.counts)),
        ("expected", list(report.expected)),
        ("matches", report.matches),
    ])
    lines = ["counts:   {}".format(" ".join(map(str, report.counts))),
             "expected: {}".format(" ".join(map(str, report.expected)))]
    if not report.matches:
        lines.append("FAIL: monomial counts differ from the closed form")
    return (EXIT_OK if report.matches else EXIT_FAILED), payload, lines


def cmd_dual_basis(args):
    F, _ = load_algebra(args.algebra)
    duals = OrderedDict((str(b), str(d)) for b, d in zip(F.basis(),
                                                         dual_basis(F)))
    lines = ["{}^vee = {}".format(b, d) for b, d in duals.items()]
    return EXIT_OK, duals, lines


def cmd_nakayama(args):
    F, _ = load_algebra(args.algebra)
    images = OrderedDict((str(b), str(b.psi())) for b in F.basis())
    payload = OrderedDict([("theta", F.theta), ("psi", images)])
    lines = ["theta = {}".format(F.theta)]
    lines.extend("psi({}) = {}".format(b, v) for b, v in images.items())
    return EXIT_OK, payload, lines


def cmd_center(args):
    basis = center(_algebra(args), args.degree)
    return EXIT_OK, {"center": basis}, [str(z) for z in basis]


def cmd_jm(args):
    J = jucys_murphy(_algebra(args), args.k)
    return EXIT_OK, {"jm": J}, [str(J)]


def cmd_suite(args):
    if args.params:
        F, params = load_quotient_params(args.params)
        if args.algebra != "trivial":
            log.warning("--params given; ignoring --algebra %s", args.algebra)
    else:
        F, _ = load_algebra(args.algebra)
        params = None
    report = run_suite(F, args.n, seed=args.seed, instances=args.instances,
                       params=params, only=args.only)
    return (EXIT_OK if report.passed else EXIT_FAILED), report, report.lines()


def cmd_cyclotomic(args):
    F, params = load_quotient_params(args.params)
    Q = cyclotomic_quotient(params, args.n)
    if args.action == "gram":
        gram = gram_matrix(params, args.n)
        payload = OrderedDict([("size", gram.size), ("rank", gram.rank),
                               ("invertible", gram.invertible)])
        lines = ["Gram matrix {0}x{0}, rank {1}".format(gram.size, gram.rank)]
        ok = gram.invertible
    elif args.action == "nakayama":
        verdict = cyclo_nakayama_check(params, args.n, seed=args.seed)
        payload = verdict
        lines = ["nu({}) = {}".format(k, v) for k, v in verdict.images.items()]
        lines.append("symmetric: {}".format(verdict.symmetric))
        ok = verdict.holds
        if not ok:
            lines.append("FAIL: tr(ab) != tr(b nu(a)) for a, b = {}".format(
                verdict.counterexample))
    else:
        basis = Q.basis()
        payload = OrderedDict([("dimension", Q.dimension),
                               ("basis", basis)])
        lines = ["dimension {}".format(Q.dimension)] + [str(b)
                                                         for b in basis]
        ok = True
    return (EXIT_OK if ok else EXIT_FAILED), payload, lines


COMMANDS = {
    "algebra": cmd_algebra,
    "mul": cmd_mul,
    "nf": cmd_nf,
    "grdim": cmd_grdim,
    "dual-basis": cmd_dual_basis,
    "nakayama": cmd_nakayama,
    "center": cmd_center,
    "jm": cmd_jm,
    "suite": cmd_suite,
    "cyclotomic": cmd_cyclotomic,
}


def run(argv, stdout=None, stderr=None):
    """Run one command; returns the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(str(e), file=stderr)
        return EXIT_USAGE
    if not args.command:
        print(parser.format_usage().rstrip(), file=stderr)
        return EXIT_USAGE

    logging.basicConfig(stream=stderr,
                        level=logging.DEBUG if args.verbose
                        else logging.WARNING)
    try:
        code, payload, lines = COMMANDS[args.command](args)
    except CHECK_FAILURES as e:
        print("FAIL: {}".format(e), file=stdout)
        return EXIT_FAILED
    except AffWreathError as e:
        print("error: {}".format(e), file=stderr)
        return EXIT_USAGE

    if args.json:
        print(to_json(payload), file=stdout)
    else:
        for line in lines:
            print(line, file=stdout)
    return code


def main():
    sys.exit(run(sys.argv[1:]))
