"""Column clustering for the loop on (6,3,2,5,4,1) with a_i = 3c_i, c_i = 3a_(i-1)."""
import argparse

from rauzy import Permutation
from rauzy.measures import MeasureConfig, block_profile_of, iterate_measure_run, ratio_sequences


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rounds", type=int, default=14)
    ap.add_argument("--tol", type=float, default=1e-6)
    args = ap.parse_args()

    prof = block_profile_of(Permutation.parse("(6,3,2,5,4,1)"))
    run = iterate_measure_run(prof, ratio_sequences(args.rounds), args.rounds, MeasureConfig(tol=args.tol))
    print(f"{'round':>5} {'a':>12} {'c':>12} {'diameter':>10} {'separation':>11} resolved clusters")
    for r in run.reports:
        a, _, c = run.sequences[r.round - 1] if r.round else ("", "", "")
        print(f"{r.round:>5} {a:>12} {c:>12} {r.diameter:>10.3g} {r.separation:>11.3g} "
              f"{str(r.resolved):>8} {r.clusters}")


if __name__ == "__main__":
    main()
