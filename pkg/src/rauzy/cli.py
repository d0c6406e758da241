"""Command-line entry point: ``rauzy <subcommand> ...``."""
from __future__ import annotations

import argparse
import json
import sys

from . import exact
from .builder import ClassKey, KINDS, NoSuchClass, build_self_inverse
from .classes import ClassCapExceeded, DEFAULT_CAP, rauzy_class, same_class, standardize
from .iet import IET, InductionTieError
from .invariants import Signature, class_key, invariants
from .lagrangian import lagrangian_report
from .measures import (
    MeasureConfig,
    block_profile_of,
    build_gamma_cycle,
    iterate_measure_run,
    ratio_sequences,
    rho_sequences,
)
from .paths import RauzyPath, parse_moves
from .perm import Permutation, PermutationError

SCHEMA = "1"


def _perm(text):
    try:
        return Permutation.parse(text)
    except PermutationError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _moves(text):
    try:
        return parse_moves(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _emit(obj):
    print(json.dumps({"schema": SCHEMA, **obj}))


def cmd_induce(args):
    p = args.perm
    for _ in range(args.steps):
        p = p.rauzy_induce(args.type)
    if args.json:
        _emit({"permutation": str(p), "two_row": p.two_row()})
    else:
        print(p)


def cmd_class(args):
    cls = rauzy_class(args.perm, cap=args.cap)
    if args.dot:
        sys.stdout.write(cls.to_dot())
    elif args.size:
        print(len(cls))
    else:
        _emit(cls.to_json())


def cmd_invariants(args):
    inv = invariants(args.perm)
    _emit({
        "signature": list(inv.signature.degrees),
        "genus": inv.genus,
        "kind": inv.kind,
        "spin": inv.spin,
        "reduced": [str(r) for r in inv.reduced],
    })


def cmd_standardize(args):
    q, path = standardize(args.perm)
    _emit({"standard": str(q), "path": path.to_string()})


def cmd_same_class(args):
    _emit({"same_class": same_class(args.p, args.q, mode=args.mode), "mode": args.mode or "auto"})


def cmd_build(args):
    degrees = [int(t) for t in args.signature.split(",") if t.strip()]
    if not degrees:
        raise NoSuchClass("empty signature")
    key = ClassKey(Signature(degrees[0], tuple(degrees[1:])), args.kind)
    p = build_self_inverse(key).canonical()
    if args.json:
        _emit({
            "permutation": str(p),
            "self_inverse": p.is_self_inverse(),
            "standard": p.is_standard(),
            "key_matches": class_key(p) == key,
        })
    else:
        print(p)


def cmd_lagrangian(args):
    _emit(lagrangian_report(args.perm).to_json())


def cmd_theta(args):
    path = RauzyPath(args.perm, args.path)
    m = path.theta()
    _emit({
        "matrix": [[int(x) for x in row] for row in m],
        "end": str(path.end),
        "length": len(path),
        "det": exact.det(m),
    })


def cmd_gamma(args):
    prof = block_profile_of(args.perm)
    path = build_gamma_cycle(prof, args.a, args.b, args.c)
    if args.dot:
        sys.stdout.write(_loop_dot(path))
    else:
        _emit({"moves": path.to_string(), "length": len(path), "loop": path.is_loop()})


def _loop_dot(path):
    lines = ["digraph gamma {\n"]
    names = {}
    for p, e, n, _, _, q in path.run_endpoints():
        for x in (p, q):
            if x not in names:
                names[x] = f"n{len(names)}"
                lines.append(f'  {names[x]} [label="{x}"];\n')
        label = str(e) if n == 1 else f"{e}^{n}"
        lines.append(f'  {names[p]} -> {names[q]} [label="{label}"];\n')
    lines.append("}\n")
    return "".join(lines)


def cmd_measures(args):
    prof = block_profile_of(args.perm)
    if args.sequences == "rho":
        seq = rho_sequences(args.rho, args.rounds)
    else:
        seq = ratio_sequences(args.rounds)
    run = iterate_measure_run(prof, seq, args.rounds, MeasureConfig(tol=args.tol))
    _emit({
        "genus": prof.genus,
        "rounds": [r.to_json() for r in run.reports],
    })


def cmd_keane(args):
    t = IET.parse(args.perm, args.lengths)
    hit = t.keane_violation(args.horizon)
    if hit is None:
        _emit({"violation": None})
    else:
        _emit({"violation": {"alpha": hit[0], "beta": hit[1], "iterations": hit[2]}})


def build_parser():
    ap = argparse.ArgumentParser(prog="rauzy", description="Rauzy classes and interval exchanges.")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("induce", help="apply Rauzy moves")
    s.add_argument("perm", type=_perm)
    s.add_argument("--type", type=int, choices=(0, 1), required=True)
    s.add_argument("--steps", type=int, default=1)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_induce)

    s = sub.add_parser("class", help="enumerate a Rauzy class")
    s.add_argument("perm", type=_perm)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--dot", action="store_true")
    g.add_argument("--size", action="store_true")
    s.add_argument("--cap", type=int, default=DEFAULT_CAP)
    s.set_defaults(func=cmd_class)

    s = sub.add_parser("invariants", help="signature, genus and component type")
    s.add_argument("perm", type=_perm)
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("standardize", help="path to a standard permutation")
    s.add_argument("perm", type=_perm)
    s.set_defaults(func=cmd_standardize)

    s = sub.add_parser("same-class", help="compare two permutations")
    s.add_argument("p", type=_perm)
    s.add_argument("q", type=_perm)
    s.add_argument("--mode", choices=("bfs", "invariant"))
    s.set_defaults(func=cmd_same_class)

    s = sub.add_parser("build", help="self-inverse representative of a class")
    s.add_argument("--signature", required=True)
    s.add_argument("--kind", choices=KINDS, required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("lagrangian", help="vertical cycles and the Lagrangian test")
    s.add_argument("perm", type=_perm)
    s.set_defaults(func=cmd_lagrangian)

    s = sub.add_parser("theta", help="matrix of a path")
    s.add_argument("perm", type=_perm)
    s.add_argument("--path", type=_moves, required=True)
    s.set_defaults(func=cmd_theta)

    s = sub.add_parser("gamma", help="loop built from the block profile")
    s.add_argument("perm", type=_perm)
    s.add_argument("--a", type=int, required=True)
    s.add_argument("--b", type=int, required=True)
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_gamma)

    s = sub.add_parser("measures", help="column clustering of iterated loops")
    s.add_argument("perm", type=_perm)
    s.add_argument("--rho", default="3")
    s.add_argument("--rounds", type=int, default=8)
    s.add_argument("--tol", type=float, default=1e-6)
    s.add_argument("--sequences", choices=("rho", "ratio"), default="rho")
    s.add_argument("--json", action="store_true", help="accepted for symmetry; output is JSON")
    s.set_defaults(func=cmd_measures)

    s = sub.add_parser("keane", help="search for endpoint connections")
    s.add_argument("perm", type=_perm)
    s.add_argument("--lengths", required=True)
    s.add_argument("--horizon", type=int, required=True)
    s.set_defaults(func=cmd_keane)
    return ap


DOMAIN_ERRORS = (ValueError, ClassCapExceeded, ArithmeticError)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except DOMAIN_ERRORS as exc:
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)}})
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
