#!/usr/bin/env python3
"""Sweep the witness elements q_j of F_n wr K and print the certified
commutator-length lower bounds.

The delta value grows linearly in j while any product of m commutators is
capped at 3*l*(6m-1), so the certified bound climbs without limit: no
finite commutator width is possible.
"""

import argparse

from groupwidths.finite_groups import cyclic, dihedral, sym3_fink
from groupwidths.wreath import WreathGroup, certify_cw_lower_bound, delta, q_sequence

TOPS = {
    "s3": sym3_fink,
    "c2": lambda: cyclic(2),
    "d4": lambda: dihedral(4),
}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--top", choices=sorted(TOPS), default="s3")
    parser.add_argument("--rank", type=int, default=2)
    parser.add_argument("--max-j", type=int, default=1000)
    parser.add_argument("--step", type=int, default=0, help="print every STEP rows (default: only bound jumps)")
    args = parser.parse_args()

    W = WreathGroup(args.rank, TOPS[args.top]())
    l = W.size
    print(f"# F_{args.rank} wr {W.top.name}   (l = {l}, cap for m commutators: 3*{l}*(6m-1))")
    print(f"{'j':>6} {'delta':>8} {'cl >=':>6}")
    previous = 0
    for j in range(1, args.max_j + 1):
        cert = certify_cw_lower_bound(q_sequence(W, j))
        bound = 1 if cert is None else cert.lower_bound
        show = bound != previous or (args.step and j % args.step == 0)
        if show:
            print(f"{j:>6} {delta(q_sequence(W, j)):>8} {bound:>6}")
        previous = bound
    print(f"# certified commutator length reaches {previous} by j = {args.max_j}")


if __name__ == "__main__":
    main()
