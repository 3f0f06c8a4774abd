"""ASCII map of the regimes over the (g, d) plane.

Legend: C all classical, L q-linear only, 2 q and q^2 complete,
S the d = g-1 series, ? unknown tail.
"""

import argparse

from symqh import Ambient
from symqh.gw import regime

SYMBOL = {"all classical": "C", "q-linear only": "L", "q and q^2 complete": "2",
          "d = g-1 series": "S", "unknown tail": "?"}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--gmax", type=int, default=24)
    args = ap.parse_args()
    print("d\\g " + "".join(f"{g % 10}" for g in range(args.gmax + 1)))
    for d in range(args.gmax, 0, -1):
        row = "".join(SYMBOL[regime(Ambient(g, d)).regime] if d <= g + 1 else " "
                      for g in range(args.gmax + 1))
        print(f"{d:>3} {row}")


if __name__ == "__main__":
    main()
