"""Look for non-unimodal I(G*) among random skeletons with alpha(G) >= 5.

Nothing is asserted: no window is known for these skeletons.  Any
non-unimodal corona is printed with its edge list.

Usage:
    python scripts/explore_high_alpha.py --seed 1 [--n-max 16] [--draws 20000]
"""
import argparse
import random
from collections import Counter
from itertools import combinations

from indpoly import graph as gc
from indpoly.calculus import forward_transform
from indpoly.count import indpoly_recursive
from indpoly.poly import unimodality


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, required=True)
    ap.add_argument("--n-max", type=int, default=16)
    ap.add_argument("--draws", type=int, default=20000)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    by_alpha = Counter()
    offset = Counter()
    bad = 0
    for _ in range(args.draws):
        n = rng.randint(5, args.n_max)
        p = rng.choice((0.5, 0.3, 0.2))
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        s = indpoly_recursive(gc.Graph(n, edges))
        if s.degree < 5:
            continue
        by_alpha[s.degree] += 1
        mode = unimodality(forward_transform(s, n))
        offset[mode.mode_set[-1] - (n + 1) // 2] += 1
        if not mode.unimodal:
            bad += 1
            print(f"non-unimodal: n={n} alpha={s.degree} edges={edges}")
    print(f"seed={args.seed} skeletons with alpha>=5 by alpha: {dict(sorted(by_alpha.items()))}")
    print(f"largest maximiser minus (n+1)//2: {dict(sorted(offset.items()))}")
    print(f"non-unimodal: {bad}")


if __name__ == "__main__":
    main()
