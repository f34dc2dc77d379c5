"""Time the four constructions and summarize speed relative to the closed form.

Groups pairs by pq decade and reports the median time ratio method/closed.

    python scripts/bench_summary.py --max-pq 2000 --reps 3
"""

import argparse
import math
import statistics
from collections import defaultdict

from cyclopq.cli import bench_rows
from cyclopq.cyclotomic import METHODS


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-pq", type=int, default=2000)
    ap.add_argument("--reps", type=int, default=3)
    args = ap.parse_args()

    times = defaultdict(dict)
    for p, q, method, ns, _ in bench_rows(args.max_pq, args.reps):
        times[(p, q)][method] = ns

    buckets = defaultdict(lambda: defaultdict(list))
    for (p, q), by_m in times.items():
        bucket = 10 ** int(math.log10(p * q))
        for m in METHODS:
            buckets[bucket][m].append(by_m[m] / by_m["closed"])

    print(f"{'pq >=':>8} {'pairs':>6} " + " ".join(f"{m:>9}" for m in METHODS))
    for bucket in sorted(buckets):
        row = buckets[bucket]
        n = len(row["closed"])
        print(f"{bucket:>8} {n:>6} " + " ".join(f"{statistics.median(row[m]):>9.2f}" for m in METHODS))


if __name__ == "__main__":
    main()
