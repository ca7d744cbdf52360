"""Command-line entry point ``qsteen``."""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .cache import cache_get_or_compute, cache_key, resolve_cache_path
from .equivariant import QuotientDescriptor, ZeroThroughOrder, reduce_with_witness
from .errors import ConfigError, QSteenError
from .jobs import JobConfig, eq_from_json, export, run_job


def _add_common(p, space=True):
    if space:
        p.add_argument("--space", default="oline", choices=["oline", "tstar-sphere"])
    p.add_argument("-m", type=int)
    p.add_argument("-k", type=int)
    p.add_argument("-n", type=int)
    p.add_argument("--hmax", type=int, default=32, help="truncation order in h")
    p.add_argument("--imax", type=int, default=5)
    p.add_argument("--format", default="markdown", choices=["json", "markdown"])
    p.add_argument("--cache", default=None, help="cache directory (QSTEEN_CACHE overrides)")


def build_parser():
    parser = argparse.ArgumentParser(prog="qsteen", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("report", "full report for one space"),
        ("qs", "quantum Steenrod squares QS(x^0) .. QS(x^{m+1})"),
        ("ps", "symplectic squares on the SH basis"),
        ("solve-req", "solve for the components r_i of r_eq"),
    ]:
        _add_common(sub.add_parser(name, help=help_))
    loop = sub.add_parser("loop", help="PS prefixes on SH*(T*S^n)")
    _add_common(loop, space=False)
    cm = sub.add_parser("check-membership", help="decide membership in QS(x^m + T) Lambda[[h]]")
    cm.add_argument("file", help="element JSON, or - for stdin")
    cm.add_argument("--hmax", type=int, default=32)
    sub.add_parser("check", help="run the built-in invariant suite")
    return parser


SECTION_FOR = {
    "qs": ("qs",),
    "ps": ("ps", "membership"),
    "solve-req": ("solver",),
    "report": None,
    "loop": None,
}


def _config(args) -> JobConfig:
    space = "tstar-sphere" if args.command == "loop" else args.space
    return JobConfig(
        space=space,
        m=args.m,
        k=args.k,
        n=args.n,
        truncation_order=args.hmax,
        output_format=args.format,
        cache_path=args.cache,
        imax=args.imax,
        sections=SECTION_FOR[args.command],
    )


def run_config(cfg: JobConfig) -> bytes:
    cfg.validate()
    key = cache_key(cfg.key_fields())
    return cache_get_or_compute(
        key,
        lambda: export(run_job(cfg), cfg.output_format),
        resolve_cache_path(cfg.cache_path),
    )


def _check_membership(args) -> int:
    raw = sys.stdin.read() if args.file == "-" else open(args.file).read()
    f = eq_from_json(json.loads(raw))
    q = QuotientDescriptor(f.ring, args.hmax)
    red = reduce_with_witness(f, q)
    if red.normal_form.is_zero():
        out = {
            "verdict": "ZeroThroughOrder",
            "order": ZeroThroughOrder(args.hmax).order,
            "multipliers": {str(j): sorted(mu.exponents) for j, mu in sorted(red.multipliers.items())},
        }
    else:
        out = {"verdict": "NonMember", "h_degree": red.normal_form.valuation()}
    print(json.dumps(out, sort_keys=True))
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        if args.command == "check":
            from .checks import run_checks

            results = run_checks()
            for name, ok in results:
                print(f"{'PASS' if ok else 'FAIL'}  {name}")
            return 0 if all(ok for _, ok in results) else 1
        if args.command == "check-membership":
            return _check_membership(args)
        sys.stdout.buffer.write(run_config(_config(args)))
        sys.stdout.flush()
        return 0
    except ConfigError as exc:
        for field, msg in sorted(exc.errors.items()):
            print(f"config error: {field}: {msg}", file=sys.stderr)
        return 2
    except QSteenError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
