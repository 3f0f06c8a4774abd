"""Compare the closed-form invariants with the determinantal oracle and time it."""

import argparse
import time

from symqh.relations import verify_oracle


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--gmax", type=int, default=8)
    ap.add_argument("--slack", type=int, default=3, help="u+v+w <= d + slack")
    args = ap.parse_args()
    t = time.perf_counter()
    rep = verify_oracle(args.gmax, slack=args.slack)
    dt = time.perf_counter() - t
    print(f"points={rep.points} gw1 mismatches={len(rep.gw1_mismatches)} "
          f"gw2 mismatches={len(rep.gw2_mismatches)} time={dt:.2f}s")
    for bad in (rep.gw1_mismatches + rep.gw2_mismatches)[:10]:
        print("  mismatch (g, d, u, v, w) =", bad)
    raise SystemExit(0 if rep.passed else 1)


if __name__ == "__main__":
    main()
