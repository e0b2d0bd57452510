"""Command-line front end.

Exit codes: 0 success, 1 failed verification, 2 malformed input,
3 budget exceeded, 4 unsupported ring/operation, 5 transform and brute force
disagree.
"""

from __future__ import annotations

import argparse
import json
import sys

from .code import DEFAULT_BUDGET, alpha_distribution, composition_distribution, dual_brute, joint_statistics
from .code import profile_distribution
from .enumerators import (
    hamming_enumerator,
    joint_enumerator,
    joint_macwilliams,
    lee_enumerator,
    lee_macwilliams,
    macwilliams_hamming,
    split_enumerator,
    split_macwilliams,
)
from .errors import (
    BudgetExceededError,
    ConfigurationError,
    DomainError,
    IntegralityError,
    ParseError,
    UnsupportedOperationError,
)
from .specfile import load_spec
from .verify import run_suite

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_UNSUPPORTED = 4
EXIT_MISMATCH = 5

_DIRECT = {"hamming": hamming_enumerator, "split": split_enumerator, "lee": lee_enumerator}


def _require_kind(code, kind):
    if kind == "lee" and not code.ring.is_rk:
        raise UnsupportedOperationError(f"Lee enumerators need an R_k ring, not {code.ring.spec}")


def _transform(code, kind, t):
    ring, b = code.ring, code.b
    if kind == "hamming":
        return macwilliams_hamming(alpha_distribution(code), code.size, b, ring.size, t)
    if kind == "split":
        return split_macwilliams(profile_distribution(code), code.size, b, ring.size, t)
    return lee_macwilliams(composition_distribution(code), code.size, ring, t)


def _payload(poly, **meta):
    out = dict(meta)
    out["terms"] = poly.to_json_obj()
    out["value_at_ones"] = str(poly.value_at_ones())
    return out


def _emit(args, results, meta):
    """``results`` is a list of (label, poly); labels are printed only when there are several."""
    if args.format == "json":
        if len(results) == 1:
            obj = _payload(results[0][1], **meta)
        else:
            obj = dict(meta)
            for label, poly in results:
                obj[label] = _payload(poly)
            obj["agree"] = all(p == results[0][1] for _, p in results)
        print(json.dumps(obj, sort_keys=True))
    else:
        if len(results) == 1:
            print(results[0][1].to_text())
        else:
            for label, poly in results:
                print(f"{label}: {poly.to_text()}")


def _load(args, count=None):
    spec = load_spec(args.file)
    codes = spec.build_all(budget=args.budget)
    if count is not None and len(codes) < count:
        raise ParseError(f"{args.file} declares {len(codes)} code(s), {count} needed")
    for c in codes:
        c.codewords  # enumerate now so budget errors surface here
    return codes


def cmd_enum(args):
    code = _load(args)[0]
    _require_kind(code, args.kind)
    poly = _DIRECT[args.kind](code, args.t)
    _emit(args, [("direct", poly)], {"kind": args.kind, "t": args.t})
    return EXIT_OK


def cmd_dual_enum(args):
    code = _load(args)[0]
    _require_kind(code, args.kind)
    results = []
    if args.method in ("transform", "both"):
        results.append(("transform", _transform(code, args.kind, args.t)))
    if args.method in ("brute", "both"):
        dual = dual_brute(code, args.budget)
        results.append(("brute", _DIRECT[args.kind](dual, args.t)))
    _emit(args, results, {"kind": args.kind, "t": args.t, "method": args.method})
    if len(results) == 2 and results[0][1] != results[1][1]:
        print("spotty: transform and brute-force results differ", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_joint(args):
    C, D = _load(args, count=2)[:2]
    meta = {"variant": args.variant, "t": args.t}
    if args.variant == "plain":
        _emit(args, [("direct", joint_enumerator(C, D, args.t, budget=args.budget))], meta)
        return EXIT_OK
    meta["method"] = args.method
    results = []
    if args.method in ("transform", "both"):
        stats = joint_statistics(C, D, budget=args.budget)
        results.append(("transform", joint_macwilliams(args.variant, stats, C.size, D.size, C.b, C.ring.size, args.t)))
    if args.method in ("brute", "both"):
        left = dual_brute(C, args.budget) if args.variant in ("dual_c", "dual_both") else C
        right = dual_brute(D, args.budget) if args.variant in ("dual_d", "dual_both") else D
        results.append(("brute", joint_enumerator(left, right, args.t, budget=args.budget)))
    _emit(args, results, meta)
    if len(results) == 2 and results[0][1] != results[1][1]:
        print("spotty: transform and brute-force results differ", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args):
    report = run_suite(args.suite, seed=args.seed, budget=args.budget, count=args.count)
    out = open(args.report, "w", encoding="utf-8") if args.report else sys.stdout
    try:
        report.write_jsonl(out, failures_only=args.failures_only)
    finally:
        if args.report:
            out.close()
    print(report.summary(), file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return v


def _seed(text):
    try:
        v = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--t", type=_positive_int, default=1, help="spotty parameter, 1 <= t <= b (default 1)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--budget", type=_positive_int, default=DEFAULT_BUDGET,
                        help="max vectors enumerated (default 2^24)")
    method = argparse.ArgumentParser(add_help=False)
    method.add_argument("--method", choices=("transform", "brute", "both"), default="transform")

    parser = argparse.ArgumentParser(prog="spotty", description="m-spotty weight enumerators and their MacWilliams transforms")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enum", parents=[common], help="enumerator of the code itself")
    p.add_argument("file")
    p.add_argument("--kind", choices=("hamming", "lee", "split"), default="hamming")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("dual-enum", parents=[common, method], help="enumerator of the dual code")
    p.add_argument("file")
    p.add_argument("--kind", choices=("hamming", "lee", "split"), default="hamming")
    p.set_defaults(func=cmd_dual_enum)

    p = sub.add_parser("joint", parents=[common, method], help="joint enumerator of a pair of codes")
    p.add_argument("file")
    p.add_argument("--variant", choices=("plain", "dual_c", "dual_d", "dual_both"), default="plain")
    p.set_defaults(func=cmd_joint)

    p = sub.add_parser("verify", help="run oracle and lemma suites")
    p.add_argument("--suite", choices=("lemmas", "kernels", "identities", "all"), default="all")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--budget", type=_positive_int, default=DEFAULT_BUDGET)
    p.add_argument("--count", type=_positive_int, default=200, help="random identity instances (default 200)")
    p.add_argument("--report", help="write the JSON-lines report here instead of stdout")
    p.add_argument("--failures-only", action="store_true", help="only emit failing assertions")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ConfigurationError, DomainError) as exc:
        code, msg = EXIT_PARSE, exc
    except BudgetExceededError as exc:
        code, msg = EXIT_BUDGET, exc
    except UnsupportedOperationError as exc:
        code, msg = EXIT_UNSUPPORTED, exc
    except IntegralityError as exc:
        code, msg = EXIT_VERIFY_FAILED, exc
    print(f"spotty: error: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
