"""Command-line surface for the library.

Lens spaces are written ``p,q`` and invariant lists in the same notation the
library parses, e.g. ``M(0;(35,-2),(14,1))``.  Every fibration printed by a
subcommand reparses to an equal value.  ``--json`` switches to a structured
envelope ``{"command", "input", "result", ...}`` with deterministic key
order; the exit code is 0 exactly when the status is ok, 1 on domain errors
and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import classify as classify_mod
from . import construct as construct_mod
from . import pi1 as pi1_mod
from .errors import DomainError, InvalidRangeError
from .exact_arith import refresh_int_limit
from .recognize import lens_normalize, recognize
from .seifert import (
    CanonicalForm,
    euler_number,
    isomorphism_type,
    normalize,
    parse,
    unparse,
    validate,
)


def _int_pair(text: str, what: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise InvalidRangeError(f"{what} must be two comma-separated integers, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise InvalidRangeError(f"{what} must be integers, got {text!r}") from exc


def _rational_json(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def _canonical_json(cf: CanonicalForm) -> dict:
    return {
        "genus": cf.genus,
        "b": cf.b,
        "pairs": [[a, b] for a, b in cf.pairs],
        "fibration": unparse(cf.expand()),
    }


def _fibration_json(f) -> dict:
    return {"genus": f.genus, "pairs": [[a, b] for a, b in f.pairs], "text": unparse(f)}


def _trace_json(trace: construct_mod.ConstructionTrace) -> dict:
    return {
        "u": trace.u,
        "alpha": trace.alpha,
        "alpha1": trace.alpha1,
        "alpha2": trace.alpha2,
        "alpha1_prime": trace.alpha1_prime,
        "beta1": trace.beta1,
        "beta1_prime": trace.beta1_prime,
        "beta2": trace.beta2,
        "r": trace.choice.r,
        "s": trace.choice.s,
    }


def _print_trace(trace: construct_mod.ConstructionTrace) -> None:
    print(
        f"trace u={trace.u} alpha={trace.alpha} alpha1={trace.alpha1} "
        f"alpha2={trace.alpha2} alpha1'={trace.alpha1_prime} "
        f"beta1={trace.beta1} beta1'={trace.beta1_prime} beta2={trace.beta2} "
        f"r={trace.choice.r} s={trace.choice.s}"
    )


def _cmd_construct(args) -> tuple[dict, dict]:
    lens = lens_normalize(*_int_pair(args.lens, "--lens"))
    a10, a20 = _int_pair(args.weights, "--weights")
    fib, trace = construct_mod.construct_fibration(lens, a10, a20)
    cf = normalize(fib)
    back = recognize(fib)
    if not args.json:
        print(f"fibration {unparse(fib)}")
        print(f"canonical {unparse(cf.expand())}")
        print(f"lens {back}")
        _print_trace(trace)
    result = {
        "fibration": _fibration_json(fib),
        "canonical": _canonical_json(cf),
        "lens": {"p": back.p, "q": back.q},
    }
    return {"lens": [lens.p, lens.q], "weights": [a10, a20]}, {
        "result": result,
        "trace": _trace_json(trace),
    }


def _cmd_recognize(args) -> tuple[dict, dict]:
    fib = parse(args.fibration)
    lens = recognize(fib)
    if not args.json:
        print(str(lens))
    return {"fibration": unparse(fib)}, {"result": {"p": lens.p, "q": lens.q}}


def _cmd_normalize(args) -> tuple[dict, dict]:
    fib = parse(args.fibration)
    cf = normalize(fib)
    euler = euler_number(fib)
    if not args.json:
        print(f"canonical genus={cf.genus} b={cf.b} "
              f"pairs={','.join(map(str, cf.pairs)) or '-'}")
        print(f"fibration {unparse(cf.expand())}")
        print(f"euler {euler}")
    result = dict(_canonical_json(cf), euler=_rational_json(euler))
    return {"fibration": unparse(fib)}, {"result": result}


def _cmd_iso(args) -> tuple[dict, dict]:
    f1 = parse(args.first)
    f2 = parse(args.second)
    t = isomorphism_type(f1, f2)
    if not args.json:
        print(t.value)
    return {"first": unparse(f1), "second": unparse(f2)}, {"result": t.value}


def _cmd_classify(args) -> tuple[dict, dict]:
    lens = lens_normalize(*_int_pair(args.lens, "--lens"))
    m1, m2 = _int_pair(args.pair, "--pair")
    report = classify_mod.classify_pair(lens, m1, m2)
    if not args.json:
        print(f"case {report.prediction.tag.value}")
        print(f"classes {len(report.classes)}")
        for i, entry in enumerate(report.classes):
            print(
                f"class {i}: {unparse(entry.canonical.expand())} "
                f"weights=({entry.weights[0]},{entry.weights[1]}) "
                f"base={entry.orbifold}"
            )
        pairs = " ".join(f"({i},{j})" for i, j in report.reversing_pairs) or "-"
        print(f"reversing pairs {pairs}")
    result = {
        "case": report.prediction.tag.value,
        "class_count": len(report.classes),
        "classes": [
            {
                "canonical": _canonical_json(e.canonical),
                "weights": list(e.weights),
                "representative": unparse(e.representative),
                "base_orbifold": str(e.orbifold),
            }
            for e in report.classes
        ],
        "reversing_pairs": [list(p) for p in report.reversing_pairs],
        "predicates": {
            "flip_gives_reversing": report.prediction.flip_gives_reversing,
            "exchange_gives_oriented": report.prediction.exchange_gives_oriented,
            "exchange_flip_gives_reversing":
                report.prediction.exchange_flip_gives_reversing,
        },
    }
    return {"lens": [lens.p, lens.q], "pair": [m1, m2]}, {"result": result}


def _cmd_enumerate(args) -> tuple[dict, dict]:
    lens = lens_normalize(*_int_pair(args.lens, "--lens"))
    forms = classify_mod.enumerate_fibrations(lens, args.max_mult)
    if not args.json:
        for cf in forms:
            print(unparse(cf.expand()))
    result = [_canonical_json(cf) for cf in forms]
    return {"lens": [lens.p, lens.q], "max_mult": args.max_mult}, {"result": result}


def _cmd_model(args) -> tuple[dict, dict]:
    lens = lens_normalize(*_int_pair(args.lens, "--lens"))
    k1, k2 = _int_pair(args.weights, "--weights")
    fib = construct_mod.model_fibration(lens, construct_mod.ModelWeights(k1, k2))
    cf = normalize(fib)
    back = recognize(fib)
    if not args.json:
        print(f"fibration {unparse(fib)}")
        print(f"canonical {unparse(cf.expand())}")
        print(f"lens {back}")
    result = {
        "fibration": _fibration_json(fib),
        "canonical": _canonical_json(cf),
        "lens": {"p": back.p, "q": back.q},
    }
    return {"lens": [lens.p, lens.q], "weights": [k1, k2]}, {"result": result}


def _cmd_isotropy(args) -> tuple[dict, dict]:
    lens = lens_normalize(*_int_pair(args.lens, "--lens"))
    k1, k2 = _int_pair(args.weights, "--weights")
    weights = construct_mod.ModelWeights(k1, k2)
    u = construct_mod.isotropy_order(lens, weights)
    if not args.json:
        print(u)
    return {"lens": [lens.p, lens.q], "weights": [k1, k2]}, {"result": {"u": u}}


def _cmd_pi1(args) -> tuple[dict, dict]:
    fib = parse(args.fibration)
    pres = pi1_mod.presentation(fib)
    orb = pi1_mod.base_orbifold(fib)
    if not args.json:
        print(str(pres))
        print(f"base {orb}")
    result = {
        "generators": list(pres.generators),
        "relators": [pi1_mod.render_word(w) for w in pres.relators],
        "base_orbifold": {
            "surface": orb.surface,
            "genus": orb.genus,
            "cone_orders": list(orb.cone_orders),
        },
    }
    return {"fibration": unparse(fib)}, {"result": result}


def _cmd_homology(args) -> tuple[dict, dict]:
    fib = parse(args.fibration)
    factors = pi1_mod.first_homology(fib)
    if not args.json:
        print(" ".join(map(str, factors)) if factors else "trivial")
    return {"fibration": unparse(fib)}, {"result": {"invariant_factors": list(factors)}}


def _cmd_parse_check(args) -> tuple[dict, dict]:
    fib = parse(args.fibration)
    validate(fib)
    if not args.json:
        print("ok")
    return {"fibration": args.fibration}, {"result": {"fibration": unparse(fib)}}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lensfib",
        description="Seifert fibrations of lens spaces, in exact arithmetic.",
    )
    parser.add_argument("--json", action="store_true", help="structured output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a fibration with given weights")
    p.add_argument("--lens", required=True, metavar="P,Q")
    p.add_argument("--weights", required=True, metavar="A1,A2")
    p.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("recognize", help="oriented lens type of a fibration")
    p.add_argument("fibration")
    p.set_defaults(handler=_cmd_recognize)

    p = sub.add_parser("normalize", help="canonical form of an invariant list")
    p.add_argument("fibration")
    p.set_defaults(handler=_cmd_normalize)

    p = sub.add_parser("iso", help="compare two fibrations up to isomorphism")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(handler=_cmd_iso)

    p = sub.add_parser("classify", help="classes for an unordered weight pair")
    p.add_argument("--lens", required=True, metavar="P,Q")
    p.add_argument("--pair", required=True, metavar="M1,M2")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("enumerate", help="all classes with bounded multiplicities")
    p.add_argument("--lens", required=True, metavar="P,Q")
    p.add_argument("--max-mult", required=True, type=int, dest="max_mult")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("model", help="invariants of a weighted circle action")
    p.add_argument("--lens", required=True, metavar="P,Q")
    p.add_argument("--weights", required=True, metavar="K1,K2")
    p.set_defaults(handler=_cmd_model)

    p = sub.add_parser("isotropy", help="fibre-preserving deck transformations")
    p.add_argument("--lens", required=True, metavar="P,Q")
    p.add_argument("--weights", required=True, metavar="K1,K2")
    p.set_defaults(handler=_cmd_isotropy)

    p = sub.add_parser("pi1", help="fundamental-group presentation")
    p.add_argument("fibration")
    p.set_defaults(handler=_cmd_pi1)

    p = sub.add_parser("homology", help="first-homology invariant factors")
    p.add_argument("fibration")
    p.set_defaults(handler=_cmd_homology)

    p = sub.add_parser("parse-check", help="validate invariant-list text")
    p.add_argument("fibration")
    p.set_defaults(handler=_cmd_parse_check)

    return parser


def run(argv: list[str]) -> int:
    refresh_int_limit()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        echo, payload = args.handler(args)
    except DomainError as exc:
        if args.json:
            envelope = {"command": args.command, "status": "error", "error": str(exc)}
            print(json.dumps(envelope))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        envelope = {"command": args.command, "input": echo, "status": "ok"}
        envelope.update(payload)
        print(json.dumps(envelope))
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
