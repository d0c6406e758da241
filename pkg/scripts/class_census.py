"""Enumerate every Rauzy class on up to N letters and check the class key separates them."""
import argparse
import itertools
import time

from rauzy import build_self_inverse, class_key, rauzy_class
from rauzy.perm import Permutation, is_irreducible_one_line


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-d", type=int, default=7)
    ap.add_argument("--sample", type=int, default=0,
                    help="check the key on this many vertices per class (0 = all)")
    args = ap.parse_args()

    for d in range(2, args.max_d + 1):
        start, seen, keys = time.perf_counter(), set(), {}
        for w in itertools.permutations(range(1, d + 1)):
            if w in seen or not is_irreducible_one_line(w):
                continue
            cls = rauzy_class(w)
            seen.update(cls.vertices)
            verts = cls.permutations()
            if args.sample:
                verts = verts[:: max(1, len(verts) // args.sample)]
            found = {class_key(q) for q in verts}
            if len(found) != 1:
                raise SystemExit(f"key not constant on class of {Permutation.from_one_line(w)}")
            key = found.pop()
            if key in keys:
                raise SystemExit(f"two classes share key {key}")
            rep = build_self_inverse(key)
            if rep.one_line() not in cls.vertices:
                raise SystemExit(f"built representative for {key} lies outside its class")
            keys[key] = len(cls)
        took = time.perf_counter() - start
        print(f"d={d}: {len(keys)} classes, {len(seen)} permutations ({took:.1f}s)")
        for key, size in sorted(keys.items(), key=lambda kv: str(kv[0])):
            print(f"    {key!s:<28} {size}")


if __name__ == "__main__":
    main()
