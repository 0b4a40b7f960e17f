"""Survey generator counts, degree ranges, spreads, and level flags
for every built-in poset.  Output is deterministic plain text.

Usage: python3 scripts/spread_survey.py
"""

from hibi import (
    analytic_spread,
    degree_range,
    enumerate_N,
    generators,
    is_anticanonical_level,
    is_gorenstein,
    is_level,
    is_pure,
)
from hibi.corpus import all_builtins


def flag(value):
    return "yes" if value else "no"


def main():
    header = (
        f"{'poset':<10} {'size':>4} {'pure':>5} {'level':>6} {'a-level':>8} "
        f"{'gor':>4} {'spr(+1)':>8} {'spr(-1)':>8} {'#gen(1)':>8} {'#gen(-1)':>9} "
        f"{'deg(1)':>10} {'deg(-1)':>10}"
    )
    print(header)
    print("-" * len(header))
    for name, p in all_builtins():
        lo_p, hi_p, _ = degree_range(p, 1)
        lo_m, hi_m, _ = degree_range(p, -1)
        print(
            f"{name:<10} {len(p.elements):>4} {flag(is_pure(p)):>5} "
            f"{flag(is_level(p)):>6} {flag(is_anticanonical_level(p)):>8} "
            f"{flag(is_gorenstein(p)):>4} "
            f"{analytic_spread(p, 1):>8} {analytic_spread(p, -1):>8} "
            f"{len(generators(p, 1)):>8} {len(generators(p, -1)):>9} "
            f"{f'[{lo_p},{hi_p}]':>10} {f'[{lo_m},{hi_m}]':>10}"
        )

    print()
    print("reduced sequence families (eps = -1):")
    for name, p in all_builtins():
        seqs = enumerate_N(p, -1)
        shown = ", ".join("(" + ", ".join(s.items) + ")" for s in seqs)
        print(f"  {name:<10} {len(seqs)} sequence(s): {shown}")


if __name__ == "__main__":
    main()
