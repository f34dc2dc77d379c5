"""Run the verification sweep and write one CSV row per prime pair.

    python scripts/sweep_report.py --max-pq 3000 --jobs 4 > sweep.csv
"""

import argparse
import csv
import sys
import time

from cyclopq.cyclotomic import VerificationReport, sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-pq", type=int, default=3000)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    t0 = time.perf_counter()
    reports = sweep(args.max_pq, jobs=args.jobs)
    elapsed = time.perf_counter() - t0

    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["p", "q", "lambda", "mu", "r", "s", "terms", *VerificationReport.CHECKS, "failures"])
    for rep in reports:
        prm = rep.params
        w.writerow(
            [rep.pair.p, rep.pair.q, prm.lam, prm.mu, prm.r, prm.s, rep.term_count]
            + [int(getattr(rep, c)) for c in VerificationReport.CHECKS]
            + [" | ".join(rep.failures)]
        )
    n_fail = sum(not r.passed for r in reports)
    print(f"{len(reports)} pairs, {n_fail} failing, {elapsed:.1f}s", file=sys.stderr)
    return 1 if n_fail else 0


if __name__ == "__main__":
    sys.exit(main())
