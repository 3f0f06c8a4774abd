"""Quantum powers of eta on one Sigma_d, order by order."""

import argparse

from symqh import Ambient, CohClass
from symqh.cli import default_qmax
from symqh.quantum import qpow


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--g", type=int, required=True)
    ap.add_argument("--d", type=int, required=True)
    ap.add_argument("--qmax", type=int)
    args = ap.parse_args()
    amb = Ambient(args.g, args.d)
    N = args.qmax or default_qmax(amb)
    eta = CohClass.eta(amb)
    for n in range(amb.d + 2):
        print(f"et^*{n} = {qpow(eta, n, N).render()}")


if __name__ == "__main__":
    main()
