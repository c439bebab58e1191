#!/usr/bin/env python3
"""Exhaustive desk-scale check of the d-distinct identities.

Writes one JSON line per (n, d, pi) plus a summary line, and prints a
per-d table of left/right counts.

    python scripts/run_verification.py --n-max 40 --d-max 4 --jobs 4 -o results.jsonl
"""

import argparse
import sys
from collections import defaultdict

from bressoud.verification import verify_range


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=30)
    ap.add_argument("--d-max", type=int, default=5)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("-o", "--output", help="JSON-lines file (default: none)")
    args = ap.parse_args()

    res = verify_range(args.n_max, args.d_max, jobs=args.jobs)
    if args.output:
        with open(args.output, "w") as fh:
            for line in res.json_lines():
                fh.write(line + "\n")

    counts = defaultdict(dict)
    for r in res.reports:
        counts[r.d][r.n] = r.count_left
    print("n    " + "".join(f"d={d:<8}" for d in sorted(counts)))
    for n in range(args.n_max + 1):
        print(f"{n:<5}" + "".join(f"{counts[d][n]:<10}" for d in sorted(counts)))
    s = res.summary()
    print(f"\n{s['passed']}/{s['checks']} checks passed in {s['seconds']}s")
    return 0 if res.passed else 1


if __name__ == "__main__":
    sys.exit(main())
