"""Rounds needed to resolve genus-many column clusters for built representatives."""
import argparse

from rauzy import ClassKey, Signature, build_self_inverse
from rauzy.measures import MeasureConfig, block_profile_of, iterate_measure_run, rho_sequences

DEFAULT_KEYS = ["(2;{2,2}):even", "(8):even", "(8):odd", "(4;{4}):even", "(3;{3,2}):none"]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("keys", nargs="*", default=DEFAULT_KEYS, help="signature:kind")
    ap.add_argument("--rho", default="3")
    ap.add_argument("--rounds", type=int, default=16)
    ap.add_argument("--tol", type=float, default=1e-6)
    args = ap.parse_args()

    for text in args.keys:
        sig, kind = text.rsplit(":", 1)
        p = build_self_inverse(ClassKey(Signature.parse(sig), kind))
        prof = block_profile_of(p)
        run = iterate_measure_run(prof, rho_sequences(args.rho, args.rounds), args.rounds,
                                  MeasureConfig(tol=args.tol))
        first = next((r for r in run.reports if r.resolved), None)
        counts = " ".join(str(r.count) for r in run.reports)
        where = f"round {first.round}, {first.count} clusters" if first else "unresolved"
        print(f"{text:<18} {p.canonical()!s:<32} g={prof.genus}  {where:<24} counts: {counts}")


if __name__ == "__main__":
    main()
