"""Certify a random corpus and tabulate per-record outcomes.

    python3 scripts/sweep_bounds.py --count 600 --seed 1
"""
import argparse
from collections import Counter

from hyperq import CertifyConfig, SolverConfig, certify
from hyperq.corpora import random_corpus


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=300)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-n", type=int, default=14)
    ap.add_argument("--ks", type=int, nargs="+", default=[2, 3, 4, 5])
    args = ap.parse_args()

    corpus = random_corpus(args.count, args.seed, tuple(args.ks), args.max_n)
    applicable, violated, equal = Counter(), Counter(), Counter()
    worst: dict[str, float] = {}
    for H in corpus:
        for b in certify(H, SolverConfig(), CertifyConfig()).bounds:
            if not b.applicable:
                continue
            applicable[b.id] += 1
            worst[b.id] = min(worst.get(b.id, float("inf")), b.slack)
            violated[b.id] += b.holds is False
            equal[b.id] += b.equality_note is not None

    print(f"{'id':10} {'applic':>7} {'viol':>5} {'equal':>6} {'worst slack':>12}")
    for bid in applicable:
        print(f"{bid:10} {applicable[bid]:7d} {violated[bid]:5d} {equal[bid]:6d} {worst[bid]:12.3e}")


if __name__ == "__main__":
    main()
