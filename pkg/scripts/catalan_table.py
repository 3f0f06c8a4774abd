"""Print <et, et, et>_1 on Sigma_d of a genus 2d-2 curve next to the Catalan numbers."""

from math import comb

from symqh import Ambient
from symqh.gw import gw1


def main():
    print(f"{'d':>3} {'g':>3} {'gw1(1,1,1)':>12} {'catalan':>10}")
    for d in range(2, 13):
        g = 2 * d - 2
        print(f"{d:>3} {g:>3} {str(gw1(1, 1, 1, Ambient(g, d))):>12} {comb(2 * d - 2, d - 1) // d:>10}")


if __name__ == "__main__":
    main()
