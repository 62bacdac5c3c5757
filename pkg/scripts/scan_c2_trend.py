#!/usr/bin/env python3
"""Order-2 correlation measure of the Hall sequence across a prime range.

Emits one CSV row per prime p = 1 (mod 6): the exact C_2, the normalization
sqrt(p) ln p, their ratio, and the (14/3)^k k sqrt(p) ln p kernel.  The ratio
column is the trend to eyeball; the kernel comparison is a sanity margin, not
a claim about the absolute constant.
"""

import argparse
import csv
import math
import sys
import time

from cycloseq.bounds import theorem1_kernel
from cycloseq.errors import BudgetExceeded
from cycloseq.measures import correlation_measure_exact
from cycloseq.ntheory import SexticParams, is_prime
from cycloseq.seqgen import hall_sequence


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--upto", type=int, default=499)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--g-policy", default="smallest", choices=("smallest", "three-in-c1"))
    ap.add_argument("--budget", type=int, default=10**9)
    ap.add_argument("--out", default="-", help="output CSV path, - for stdout")
    args = ap.parse_args()

    primes = [p for p in range(7, args.upto + 1) if is_prime(p) and p % 6 == 1]
    stream = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    w = csv.writer(stream)
    w.writerow(["p", "g", f"C_{args.k}", "sqrt_p_ln_p", "ratio", "theorem1_kernel",
                "within_kernel", "seconds"])
    max_ratio = 0.0
    for p in primes:
        params = SexticParams.create(p, g_policy=args.g_policy)
        seq = hall_sequence(params, p)
        t0 = time.monotonic()
        try:
            value = correlation_measure_exact(seq, args.k, budget=args.budget).value
        except BudgetExceeded as e:
            print(f"p={p}: {e}", file=sys.stderr)
            continue
        dt = time.monotonic() - t0
        norm = math.sqrt(p) * math.log(p)
        kernel = theorem1_kernel(args.k, p)
        max_ratio = max(max_ratio, value / norm)
        w.writerow([p, params.g, value, f"{norm:.4f}", f"{value / norm:.4f}",
                    f"{kernel:.4f}", value <= kernel, f"{dt:.3f}"])
    print(f"max ratio over range: {max_ratio:.4f}", file=sys.stderr)
    if stream is not sys.stdout:
        stream.close()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
