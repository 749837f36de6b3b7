"""Command-line front end: width oracles and certificate generators, JSON out.

Subcommands: pw, qh, decompose, nilprod.  Exit codes: 0 success, 2 input
error, 3 resource cap exceeded, 4 internal invariant breach (a failed
construction identity, which must be loud).  Verification flags in every
report are recomputed at emission time.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import re
import sys
import time

from .decompose import InvariantViolation, decompose, s3_wreath_context
from .finite_groups import DEFAULT_CAP, CapExceeded, group_from_spec
from .free_words import format_monoid_word, is_word_palindrome
from .nilprod import bound_report, nilprod2_multi
from .pal_width import palindromic_width
from .wreath import (
    WreathGroup,
    certify_cw_lower_bound,
    delta,
    format_wreath_element,
    parse_wreath_element,
)

CAP_ENV_VAR = "GROUPWIDTHS_CAP"

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAP = 3
EXIT_INVARIANT = 4


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _emit(report: dict, pretty: bool) -> None:
    json.dump(report, sys.stdout, indent=2 if pretty else None, sort_keys=True)
    sys.stdout.write("\n")


def _read_json(path: str):
    with open(path, "rb") as fh:
        raw = fh.read()
    return json.loads(raw.decode("utf-8")), raw


def cmd_pw(args: argparse.Namespace) -> dict:
    spec, raw = _read_json(args.group_spec)
    G = group_from_spec(spec, cap=args.cap)
    report = palindromic_width(G, args.notion)
    result = report.to_json(include_lengths=args.lengths)
    verification = {
        "identity_length_zero": report.lengths[G.identity] == 0,
        "lengths_within_width": all(k <= report.width for k in report.lengths.values()),
        "palindromes_have_length_le_1": all(report.lengths[p] <= 1 for p in report.palindromes),
    }
    return {
        "command": "pw",
        "input_digest": _digest(raw),
        "input": {"group": G.name, "order": G.order, "notion": args.notion},
        "result": result,
        "verification": verification,
    }


def _wreath_group_for(args: argparse.Namespace) -> WreathGroup:
    if args.top is not None:
        spec, _ = _read_json(args.top)
        K = group_from_spec(spec, cap=args.cap)
    else:
        K = s3_wreath_context().group.top
    rank = args.rank
    if rank is None:
        indices = [int(m) for m in re.findall(r"x(\d+)", args.element)]
        rank = max([2] + indices)
    return WreathGroup(rank, K)


def cmd_qh(args: argparse.Namespace) -> dict:
    W = _wreath_group_for(args)
    g = parse_wreath_element(W, args.element)
    d = delta(g)
    cert = certify_cw_lower_bound(g)
    l = W.size
    verification = {"delta_recomputed": delta(g) == d}
    if cert is not None:
        verification["certificate_inequality"] = abs(cert.delta) > 3 * l * (
            6 * (cert.lower_bound - 1) - 1
        )
    result = {
        "element": format_wreath_element(g),
        "delta": d,
        "top_order": l,
        "certificate": None
        if cert is None
        else {"delta": cert.delta, "commutator_length_at_least": cert.lower_bound},
    }
    return {
        "command": "qh",
        "input_digest": _digest(args.element.encode("utf-8")),
        "input": {"rank": W.rank, "top": W.top.name},
        "result": result,
        "verification": verification,
    }


def cmd_decompose(args: argparse.Namespace) -> dict:
    ctx = s3_wreath_context()
    g = parse_wreath_element(ctx.group, args.element)
    cert = decompose(g, ctx)
    result = {
        "target": format_wreath_element(cert.target),
        "factor_count": cert.factor_count,
        "bound": 20,
        "factors": [
            {"word": format_monoid_word(f), "palindrome": is_word_palindrome(f)}
            for f in cert.factors
        ],
    }
    return {
        "command": "decompose",
        "input_digest": _digest(args.element.encode("utf-8")),
        "input": {"rank": 2, "top": "S3"},
        "result": result,
        "verification": cert.verification(ctx),
    }


def cmd_nilprod(args: argparse.Namespace) -> dict:
    specs, raw = _read_json(args.specs)
    if isinstance(specs, dict):
        specs = specs.get("factors", [specs])
    moduli = []
    for s in specs:
        if not isinstance(s, dict) or "moduli" not in s:
            raise ValueError('each factor spec must be {"moduli": [m1, m2, ...]}')
        moduli.append([int(m) for m in s["moduli"]])
    np_group = nilprod2_multi(moduli, cap=args.cap)
    report = bound_report(np_group, include_exact=not args.no_exact)
    verification = {"bounds_ordered": report.lower <= report.upper, "sandwich": report.holds()}
    return {
        "command": "nilprod",
        "input_digest": _digest(raw),
        "input": {"factors": moduli, "order": np_group.order},
        "result": report.to_json(),
        "verification": verification,
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupwidths",
        description="palindromic/commutator width oracles and certificates",
    )
    parser.add_argument("--pretty", action="store_true", help="indent the JSON report")
    default_cap = int(os.environ.get(CAP_ENV_VAR, DEFAULT_CAP))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pw", help="exact palindromic width of a finite group")
    p.add_argument("group_spec", help="path to a group spec JSON file")
    p.add_argument("--notion", choices=("word", "group"), default="word")
    p.add_argument("--lengths", action="store_true", help="include per-element lengths")
    p.add_argument("--cap", type=int, default=default_cap)
    p.set_defaults(func=cmd_pw)

    p = sub.add_parser("qh", help="delta value and commutator-length certificate")
    p.add_argument("element", help='wreath element text "[w1; ...; wl] k"')
    p.add_argument("--top", default=None, help="group spec JSON for the top group (default S3)")
    p.add_argument("--rank", type=int, default=None, help="free rank (default: inferred, >= 2)")
    p.add_argument("--cap", type=int, default=default_cap)
    p.set_defaults(func=cmd_qh)

    p = sub.add_parser("decompose", help="palindrome decomposition in F2 wr S3")
    p.add_argument("element", help='wreath element text "[w1; ...; w6] k"')
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("nilprod", help="width bounds for a 2-nilpotent product")
    p.add_argument("specs", help='path to JSON [{"moduli": [...]}, ...]')
    p.add_argument("--no-exact", action="store_true", help="skip the exact width oracle")
    p.add_argument("--cap", type=int, default=default_cap)
    p.set_defaults(func=cmd_nilprod)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        report = args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InvariantViolation as exc:
        print(f"invariant breach: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report["wall_time_s"] = round(time.perf_counter() - start, 6)
    _emit(report, args.pretty)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
