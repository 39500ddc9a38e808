#!/usr/bin/env python3
"""Sweep seeded random generator sets and confront every generator-level
checker with the closure oracle; print an agreement table and timings.

Example:
    python3 scripts/oracle_sweep.py --degrees 3 4 5 --count 500 --seed 1
"""

import argparse
import random
import sys
import time
from collections import Counter

from pbsg import (
    PropertyName,
    close,
    enumerate_identities,
    oracle_check,
    oracle_identities,
    run_generator_check,
)
from pbsg.checkers import GENERATOR_CHECKABLE
from pbsg.sampling import random_generator_set


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--degrees", type=int, nargs="+", default=[3, 4, 5])
    parser.add_argument("--count", type=int, default=500, help="sets per degree")
    parser.add_argument("--max-k", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--limit", type=int, default=200_000)
    args = parser.parse_args(argv)

    props = sorted(GENERATOR_CHECKABLE, key=lambda p: p.value)
    agree = Counter()
    disagree = Counter()
    holds = Counter()
    closure_sizes = []
    start = time.perf_counter()

    for n in args.degrees:
        rng = random.Random(args.seed + n)
        for _ in range(args.count):
            gens = random_generator_set(rng, n, rng.randint(1, args.max_k))
            clo = close(gens, args.limit)
            closure_sizes.append(len(clo))
            ids = oracle_identities(clo)
            oracle_truth = {
                PropertyName.LEFT_IDENTITY: bool(ids.left),
                PropertyName.RIGHT_IDENTITY: bool(ids.right),
                PropertyName.TWO_SIDED_IDENTITY: bool(ids.two_sided),
            }
            summary = enumerate_identities(gens)
            expected = (
                ids.left[0] if ids.left else None,
                ids.right[0] if ids.right else None,
                ids.two_sided[0] if ids.two_sided else None,
            )
            if (summary.left, summary.right, summary.two_sided) != expected:
                disagree["identity-element"] += 1
            for prop in props:
                fast = run_generator_check(gens, prop).holds
                want = oracle_truth.get(prop)
                if want is None:
                    want = oracle_check(clo, prop)
                (agree if fast == want else disagree)[prop.value] += 1
                holds[prop.value] += fast == want == True  # noqa: E712

    elapsed = time.perf_counter() - start
    total = len(args.degrees) * args.count
    print(f"{total} generator sets, degrees {args.degrees}, "
          f"closure sizes {min(closure_sizes)}..{max(closure_sizes)}, {elapsed:.1f}s")
    print(f"{'property':24} {'agree':>7} {'disagree':>9} {'holds':>7}")
    for prop in props:
        print(f"{prop.value:24} {agree[prop.value]:7} {disagree[prop.value]:9} "
              f"{holds[prop.value]:7}")
    if disagree:
        print("DISAGREEMENTS FOUND", dict(disagree))
        return 1
    print("all checkers agree with the oracle")
    return 0


if __name__ == "__main__":
    sys.exit(main())
