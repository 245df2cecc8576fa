"""Command-line interface: classify a reduction, verify its intersection
condition, count polytope faces, and survey primes in batch."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .builder import K_INF, StarParams, reduced_generators
from .cgroup import verify_cgroup
from .classify import classify_rank4, table3_lookup
from .matgroup import DEFAULT_CAP, OverCapError, bsgs_group, enumerate_group
from .polytope import face_counts
from .ring import (
    CompositeError,
    ParseError,
    PrimeClass,
    UnitError,
    classify_prime,
    parse_golden,
    primes_up_to_norm,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_INPUT = 3
EXIT_OVERCAP = 4

MAX_SURVEY_NORM = 200
BSGS_MAX_Q = 64

_RANK3_NAMES = ("G02&G03=<r1>", "G02&G23=<r1>", "G03&G23=<r1>")
_RANK4_NAMES = ("G0&G2=G02", "G0&G3=G03", "G2&G3=G23")


class UsageError(Exception):
    """Bad flag combination or value; maps to exit code 2."""


def _parse_k(text: str, extra: tuple[str, ...] = ()):
    if text in ("3", "4", "5", "6"):
        return int(text)
    if text in extra:
        return K_INF if text == "inf" else text
    allowed = ", ".join(("3", "4", "5", "6") + extra)
    raise UsageError(f"--k must be one of {allowed}; got {text!r}")


def _cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get("STARCOX_CAP")
    return int(env) if env else DEFAULT_CAP


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="starcox",
        description="Reductions of the rank-4 star Coxeter groups [5,3;k] modulo "
        "primes of the golden ring: classification, C-group verification, "
        "polytope counts, and batch surveys.",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("classify", help="orthogonal type and predicted order")
    c.add_argument("--k", required=True)
    c.add_argument("--prime", required=True)
    c.add_argument("--scale", type=int, choices=(1, 2), default=1)
    c.add_argument("--format", choices=("text", "json"), default="text")

    v = sub.add_parser("verify", help="intersection-condition verification")
    v.add_argument("--k", required=True)
    v.add_argument("--prime", required=True)
    v.add_argument("--cap", type=int, default=None)
    v.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("polytope", help="face counts of one ringing")
    p.add_argument("--k", required=True)
    p.add_argument("--prime", required=True)
    p.add_argument("--ring", type=int, choices=(0, 2), required=True)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="json")

    s = sub.add_parser("survey", help="one JSON-lines row per (k, prime)")
    s.add_argument("--k", default="all")
    s.add_argument("--max-norm", type=int, default=61)
    s.add_argument("--out", default=None)
    s.add_argument("--cap", type=int, default=None)
    return ap


def _classification_json(k, prime_text: str, p, c) -> dict:
    return {
        "k": "inf" if k == K_INF else k,
        "prime": prime_text,
        "class": p.klass.value,
        "q": p.q,
        "epsilon": c.epsilon,
        "delta": c.delta,
        "smooth": c.smooth,
        "classification": c.display,
        "order": c.predicted_order,
    }


def cmd_classify(args) -> int:
    k = _parse_k(args.k)
    p = classify_prime(parse_golden(args.prime))
    c = classify_rank4(StarParams(k, p, args.scale))
    if args.format == "json":
        print(json.dumps(_classification_json(k, args.prime, p, c)))
        return EXIT_OK
    print(f"prime {p.value}  class {p.klass.value}  q {p.q}")
    print(f"epsilon {c.epsilon}  delta {c.delta}  smooth {str(c.smooth).lower()}")
    print(f"{c.display}, order {c.predicted_order}")
    return EXIT_OK


def cmd_verify(args) -> int:
    k = _parse_k(args.k, extra=("inf",))
    p = classify_prime(parse_golden(args.prime))
    try:
        params = StarParams(k, p)
    except ValueError as e:
        raise UsageError(str(e)) from e
    rep = verify_cgroup(params, cap=_cap(args))
    if args.format == "json":
        out = {
            "k": "inf" if k == K_INF else k,
            "prime": args.prime,
            "class": p.klass.value,
            "q": p.q,
            "rank3": list(rep.rank3_checks),
            "rank4": list(rep.rank4_checks),
            "orders": rep.subgroup_orders,
            "cgroup": rep.is_cgroup,
        }
        if rep.witness_note:
            out["witnessNote"] = rep.witness_note
        print(json.dumps(out))
    else:
        print(f"prime {p.value}  class {p.klass.value}  q {p.q}")
        for name, ok in zip(_RANK3_NAMES + _RANK4_NAMES, rep.rank3_checks + rep.rank4_checks):
            print(f"{name} {str(ok).lower()}")
        if rep.subgroup_orders:
            print("orders " + " ".join(f"{n}={v}" for n, v in sorted(rep.subgroup_orders.items())))
        if rep.witness_note:
            print(f"witness: {rep.witness_note}")
        print(f"cgroup {str(rep.is_cgroup).lower()}")
    return EXIT_OK if rep.is_cgroup else EXIT_VERIFY


def cmd_polytope(args) -> int:
    k = _parse_k(args.k)
    p = classify_prime(parse_golden(args.prime))
    stats = face_counts(StarParams(k, p), args.ring)
    if args.format == "json":
        print(json.dumps(stats.to_json()))
    else:
        print(stats.to_text())
    return EXIT_OK


def _survey_row(k: int, p, cap: int, fails: dict) -> dict:
    params = StarParams(k, p)
    c = classify_rank4(params)
    if p.klass is not PrimeClass.EVEN and table3_lookup(params) != c:
        fails["pathDisagreements"] += 1
    ctx, gens, _ = reduced_generators(params)
    verified: int | str
    if c.predicted_order <= cap:
        n = enumerate_group(ctx, gens, cap=cap).order
        verified = n
    elif p.q <= BSGS_MAX_Q:
        n = bsgs_group(ctx, gens).order
        verified = "bsgs"
    else:
        n, verified = c.predicted_order, "skipped"
    if n != c.predicted_order:
        fails["orderMismatches"] += 1
    if not verify_cgroup(params, cap=cap).is_cgroup:
        fails["cgroupFailures"] += 1
        cgroup = False
    else:
        cgroup = True
    return {
        "k": k,
        "prime": str(p.value),
        "class": p.klass.value,
        "q": p.q,
        "classification": c.display,
        "order": c.predicted_order,
        "verified": verified,
        "cgroup": cgroup,
        "smooth": c.smooth,
    }


def cmd_survey(args) -> int:
    k = _parse_k(args.k, extra=("all",))
    if k == K_INF:
        raise UsageError("survey covers finite k only")
    ks = [3, 4, 5, 6] if k == "all" else [k]
    if args.max_norm > MAX_SURVEY_NORM:
        raise UsageError(f"--max-norm is bounded by {MAX_SURVEY_NORM}")
    cap = _cap(args)
    fails = {"cgroupFailures": 0, "orderMismatches": 0, "pathDisagreements": 0}
    lines = []
    for kk in ks:
        for p in primes_up_to_norm(args.max_norm):
            lines.append(json.dumps(_survey_row(kk, p, cap, fails)))
    lines.append(json.dumps({"summary": {"rows": len(lines), **fails}}))
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if not any(fails.values()) else EXIT_VERIFY


def _join_prime_flag(argv: list[str]) -> list[str]:
    """Fold `--prime <value>` into one token so negative values parse."""
    out, i = [], 0
    while i < len(argv):
        if argv[i] == "--prime" and i + 1 < len(argv):
            out.append(f"--prime={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    args = _build_parser().parse_args(_join_prime_flag(list(argv)))
    handler = {
        "classify": cmd_classify,
        "verify": cmd_verify,
        "polytope": cmd_polytope,
        "survey": cmd_survey,
    }[args.cmd]
    try:
        return handler(args)
    except (UsageError, ParseError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (UnitError, CompositeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except OverCapError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_OVERCAP


if __name__ == "__main__":
    sys.exit(main())
