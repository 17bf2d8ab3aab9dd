#!/usr/bin/env python3
"""Survey builders against the exact oracle on every admissible
power-of-cycle instance with n <= 12.

For each instance the table lists the exact total chromatic number, the
builder's color count, and the gap.  The builder should always land
within one color of the optimum (and exactly at Delta+1 on even n).

Usage:
    python3 scripts/small_instance_survey.py [--max-n 12]
"""

import argparse

from circulant_coloring import (
    color_power_cycle_even,
    color_power_cycle_odd,
    exact_total_chromatic,
    power_of_cycle,
)


def admissible(n, k):
    for i in range(1, k + 2):
        q = k + i
        if q % 2 == 1 and n % q == 0:
            return i
    return None


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=12)
    args = ap.parse_args()

    print("%4s %3s %3s %8s %8s %4s" % ("n", "k", "i", "oracle", "builder", "gap"))
    for n in range(4, args.max_n + 1):
        for k in range(1, (n - 1) // 2 + 1):
            i = admissible(n, k)
            if i is None:
                continue
            g = power_of_cycle(n, k)
            exact = exact_total_chromatic(g).value
            if n % 2 == 0:
                rep = color_power_cycle_even(n, k, i)
            else:
                rep = color_power_cycle_odd(n, k, i)
            print("%4d %3d %3d %8d %8d %4d"
                  % (n, k, i, exact, rep.colors_used, rep.colors_used - exact))


if __name__ == "__main__":
    main()
