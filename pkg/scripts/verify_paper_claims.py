#!/usr/bin/env python3
"""Run every verification suite at full desk scale and summarize.

Exit code is nonzero if any asserted check fails.  This is the long-form
companion to `pytest tests/test_acceptance.py`: same substance, CLI route.
"""

from cycloseq.cli import main as cli

SUITE_ARGS = [
    ["verify", "--suite", "diffset", "--primes", "31,43,127", "--g-policy", "three-in-c1"],
    ["verify", "--suite", "cross-construction", "--primes", "upto:499"],
    ["verify", "--suite", "index-representation", "--primes", "upto:499"],
    ["verify", "--suite", "moc-le-lc", "--primes", "upto:101", "--N", "2p"],
    ["verify", "--suite", "iw17", "--primes", "upto:101"],
    ["verify", "--suite", "bw06", "--primes", "upto:101"],
    ["verify", "--suite", "weil", "--primes", "13,31", "--kmax", "2", "--queries", "200"],
]


def main() -> int:
    worst = 0
    for argv in SUITE_ARGS:
        print(f"$ cycloseq {' '.join(argv)}")
        code = cli(argv)
        print()
        worst = max(worst, code)
    print("ALL SUITES PASSED" if worst == 0 else f"FAILURES (exit {worst})")
    return worst


if __name__ == "__main__":
    raise SystemExit(main())
