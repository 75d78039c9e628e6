"""Command-line interface.

Subcommands: count, enumerate, dist, genfun, map, fib, verify.  Every
subcommand takes ``--format text|json``; output is byte-deterministic
(``verify --stamp`` is the one opt-in exception).

Exit codes: 0 success (for ``verify``: every identity resolved), 1
verification failure, 2 usage error, 3 size cap exceeded, 4 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from datetime import datetime, timezone
from math import comb
from typing import Optional, Sequence

from . import __version__
from .classes import CLASS_IDS, A_CLASSES, count, generate
from .bijections import phi, phi_inverse, rho, rho_inverse
from .errors import DomainError, SizeLimitError
from .fib import fib_number, parse_tiling
from .genfun import genfun_closed, genfun_oracle, genfun_recurrence
from .perms import format_permutation, parse_permutation
from .stats import (
    STATS,
    VARIANTS,
    distribution_oracle,
    fib_distribution_formula,
    fib_distribution_stated,
    inv_distribution_formula,
    joint_distribution_formula,
)
from .verify import (
    IDENTITY_IDS,
    render_markdown,
    render_text,
    run_verification,
    to_json_doc,
)

__all__ = ["main", "build_parser"]


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text!r} is not a positive integer")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text!r} is negative")
    return value


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibperm",
        description="Exact enumeration, bijections, statistics, and identity "
        "verification for four Fibonacci-counted avoidance classes.",
    )
    parser.add_argument(
        "--version", action="version", version=f"fibperm {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format", choices=("text", "json"), default="text",
            help="output format (default text)",
        )

    p_count = sub.add_parser("count", help="closed-form member counts")
    p_count.add_argument("--class", dest="class_id", choices=CLASS_IDS, required=True)
    p_count.add_argument("--n-max", type=_positive_int, required=True)
    add_format(p_count)
    p_count.set_defaults(func=cmd_count)

    p_enum = sub.add_parser("enumerate", help="list all members of one length")
    p_enum.add_argument("--class", dest="class_id", choices=CLASS_IDS, required=True)
    p_enum.add_argument("--n", type=_nonneg_int, required=True)
    add_format(p_enum)
    p_enum.set_defaults(func=cmd_enumerate)

    p_dist = sub.add_parser("dist", help="statistic distributions")
    p_dist.add_argument("--class", dest="class_id", choices=CLASS_IDS, required=True)
    p_dist.add_argument("--n", type=_positive_int, required=True)
    p_dist.add_argument("--stat", choices=STATS, required=True)
    p_dist.add_argument(
        "--source", choices=("oracle", "formula"), default="oracle",
        help="enumerate members (oracle) or evaluate the closed form",
    )
    p_dist.add_argument(
        "--variant", choices=VARIANTS, default="corrected",
        help="formula variant (closed forms only; 'paper' is the form as "
        "originally stated)",
    )
    add_format(p_dist)
    p_dist.set_defaults(func=cmd_dist)

    p_gen = sub.add_parser("genfun", help="generating polynomial G_n(v, q)")
    p_gen.add_argument("--class", dest="class_id", choices=CLASS_IDS, required=True)
    p_gen.add_argument("--n", type=_positive_int, required=True)
    p_gen.add_argument(
        "--method", choices=("oracle", "closed", "recurrence"), default="oracle"
    )
    p_gen.add_argument(
        "--variant", choices=VARIANTS, default="corrected",
        help="summation-formula variant (--method closed only)",
    )
    add_format(p_gen)
    p_gen.set_defaults(func=cmd_genfun)

    p_map = sub.add_parser("map", help="apply a tiling bijection")
    p_map.add_argument("--bijection", choices=("phi", "rho"), required=True)
    p_map.add_argument("--class", dest="class_id", choices=CLASS_IDS, required=True)
    p_map.add_argument("--perm", help="member, space-separated (or compact digits)")
    p_map.add_argument("--tiling", help="tiling word over m/d (inverse direction)")
    p_map.add_argument(
        "--inverse", action="store_true", help="decode a tiling word instead"
    )
    add_format(p_map)
    p_map.set_defaults(func=cmd_map)

    p_fib = sub.add_parser("fib", help="Fibonacci numbers, F(0) = F(1) = 1")
    p_fib.add_argument("--n", type=_nonneg_int, required=True)
    add_format(p_fib)
    p_fib.set_defaults(func=cmd_fib)

    p_verify = sub.add_parser("verify", help="run the identity checks")
    p_verify.add_argument(
        "--identity", default="all", choices=("all",) + IDENTITY_IDS,
        help="one identity id, or 'all' (default)",
    )
    p_verify.add_argument("--n-max", type=_positive_int, default=9)
    p_verify.add_argument("--m-max", type=_positive_int, default=None)
    p_verify.add_argument(
        "--variants", choices=("both", "paper", "corrected"), default="both"
    )
    p_verify.add_argument(
        "--report", metavar="PATH",
        help="write a markdown report here plus a .json twin",
    )
    p_verify.add_argument("--jobs", type=_positive_int, default=1)
    p_verify.add_argument(
        "--stamp", action="store_true",
        help="include a UTC timestamp in the report (off by default so "
        "output is byte-deterministic)",
    )
    add_format(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def cmd_count(args) -> int:
    rows = [(n, count(args.class_id, n)) for n in range(1, args.n_max + 1)]
    if args.format == "json":
        _emit_json(
            {
                "class": args.class_id,
                "rows": [{"n": n, "count": c} for n, c in rows],
            }
        )
    else:
        for n, c in rows:
            print(f"{n} {c}")
    return 0


def cmd_enumerate(args) -> int:
    members = generate(args.class_id, args.n)
    if args.format == "json":
        _emit_json(
            {
                "class": args.class_id,
                "n": args.n,
                "members": [list(p) for p in members],
            }
        )
    else:
        for p in members:
            print(format_permutation(p))
    return 0


def _formula_distribution(class_id: str, n: int, stat: str, variant: str) -> dict:
    # nonzero values of the closed form, keyed like the oracle
    out: dict = {}
    if stat == "inv":
        for k in range(0, comb(n, 2) + 1):
            value = inv_distribution_formula(class_id, n, k)
            if value:
                out[k] = value
    elif stat == "fib":
        for k in range(0, n + 1):
            if variant == "paper":
                value = fib_distribution_stated(n, k)
            else:
                value = fib_distribution_formula(class_id, n, k)
            if value:
                out[k] = value
    else:
        for k in range(0, n + 1):
            for j in range(0, comb(n, 2) + 1):
                value = joint_distribution_formula(class_id, n, k, j, variant)
                if value:
                    out[(k, j)] = value
    return out


def cmd_dist(args) -> int:
    if args.source == "oracle":
        dist = distribution_oracle(args.class_id, args.n, args.stat)
        variant: Optional[str] = None
    else:
        dist = _formula_distribution(args.class_id, args.n, args.stat, args.variant)
        variant = args.variant
    if args.format == "json":
        if args.stat == "joint":
            entries = [
                {"fib": k, "inv": j, "count": c} for (k, j), c in sorted(dist.items())
            ]
        else:
            entries = [{"k": k, "count": c} for k, c in sorted(dist.items())]
        _emit_json(
            {
                "class": args.class_id,
                "n": args.n,
                "stat": args.stat,
                "source": args.source,
                "variant": variant,
                "distribution": entries,
            }
        )
    else:
        for key, c in sorted(dist.items()):
            if args.stat == "joint":
                print(f"{key[0]} {key[1]} {c}")
            else:
                print(f"{key} {c}")
    return 0


def cmd_genfun(args) -> int:
    if args.method == "oracle":
        poly = genfun_oracle(args.class_id, args.n)
        variant: Optional[str] = None
    elif args.method == "recurrence":
        poly = genfun_recurrence(args.class_id, args.n)
        variant = None
    else:
        poly = genfun_closed(args.class_id, args.n, args.variant)
        variant = args.variant
    if args.format == "json":
        _emit_json(
            {
                "class": args.class_id,
                "n": args.n,
                "method": args.method,
                "variant": variant,
                "polynomial": str(poly),
                "terms": [
                    {"v": v_exp, "q": q_exp, "coeff": c}
                    for (v_exp, q_exp), c in poly.terms()
                ],
            }
        )
    else:
        print(poly)
    return 0


def cmd_map(args) -> int:
    a_type = args.class_id in A_CLASSES
    if (args.bijection == "phi") != a_type:
        which = "A1/A2" if args.bijection == "phi" else "B1/B2"
        print(
            f"error: {args.bijection} applies to {which}, not {args.class_id}",
            file=sys.stderr,
        )
        return 2
    forward = phi if a_type else rho
    inverse = phi_inverse if a_type else rho_inverse
    if args.inverse:
        if args.tiling is None or args.perm is not None:
            print("error: --inverse needs --tiling (and no --perm)", file=sys.stderr)
            return 2
        word = parse_tiling(args.tiling)
        perm = inverse(args.class_id, word)
    else:
        if args.perm is None or args.tiling is not None:
            print("error: forward mapping needs --perm (and no --tiling)", file=sys.stderr)
            return 2
        perm = parse_permutation(args.perm)
        word = forward(args.class_id, perm)
    if args.format == "json":
        _emit_json(
            {
                "bijection": args.bijection,
                "class": args.class_id,
                "direction": "inverse" if args.inverse else "forward",
                "perm": list(perm),
                "tiling": word,
            }
        )
    else:
        print(format_permutation(perm) if args.inverse else word)
    return 0


def cmd_fib(args) -> int:
    value = fib_number(args.n)
    if args.format == "json":
        _emit_json({"n": args.n, "fib": value})
    else:
        print(value)
    return 0


def cmd_verify(args) -> int:
    variants = VARIANTS if args.variants == "both" else (args.variants,)
    identity_ids = None if args.identity == "all" else [args.identity]
    result = run_verification(
        identity_ids,
        n_max=args.n_max,
        m_max=args.m_max,
        variants=variants,
        jobs=args.jobs,
    )
    stamp = (
        datetime.now(timezone.utc).isoformat(timespec="seconds")
        if args.stamp
        else None
    )
    if args.report:
        base, ext = os.path.splitext(args.report)
        md_path = base + ".md" if ext == ".json" else args.report
        json_path = args.report if ext == ".json" else base + ".json"
        with open(md_path, "w", encoding="utf-8") as handle:
            handle.write(render_markdown(result, stamp=stamp))
        with open(json_path, "w", encoding="utf-8") as handle:
            json.dump(to_json_doc(result, stamp=stamp), handle, indent=2)
            handle.write("\n")
    if args.format == "json":
        _emit_json(to_json_doc(result, stamp=stamp))
    else:
        if stamp:
            print(f"stamp: {stamp}")
        print(render_text(result), end="")
    return 0 if result.resolved else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
