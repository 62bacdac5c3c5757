"""Command-line front end: generate | measure | verify | scan | baseline.

Exit codes: 0 success, 2 parameter error, 3 budget exceeded, 4 verification
failure.  Records are emitted as JSON (default) or CSV; `measure` results are
served from a JSONL cache keyed by (label, measure, params) unless --no-cache.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from itertools import combinations, product

import numpy as np

from . import bounds, charsum, measures, ntheory, seqgen
from .errors import (
    BudgetExceeded,
    CapExceeded,
    CycloseqError,
    NoSuchRoot,
    ParameterError,
)
from .records import MeasureRecord, RecordCache

EXIT_OK = 0
EXIT_PARAM = 2
EXIT_BUDGET = 3
EXIT_VERIFY = 4

SUITES = (
    "cross-construction",
    "iw17",
    "bw06",
    "moc-le-lc",
    "diffset",
    "weil",
    "index-representation",
)


def _parse_primes(spec: str, need=None) -> list[int]:
    """'13,31,43' or 'upto:B'; `need` filters eligibility (e.g. p = 1 mod 6)."""
    if spec.startswith("upto:"):
        bound = int(spec[len("upto:") :])
        ps = [p for p in range(3, bound + 1) if ntheory.is_prime(p)]
    else:
        ps = []
        for tok in spec.split(","):
            tok = tok.strip()
            if not tok:
                continue
            p = int(tok)
            if not ntheory.is_prime(p):
                raise ParameterError(f"{p} is not prime")
            ps.append(p)
    if need is not None:
        ps = [p for p in ps if need(p)]
    return ps


def _resolve_g(p: int, g_arg: str):
    if g_arg == "smallest":
        return ntheory.find_primitive_root(p)
    if g_arg == "three-in-c1":
        return ntheory.find_primitive_root(p, ntheory.THREE_IN_C1)
    try:
        g = int(g_arg)
    except ValueError:
        raise ParameterError(f"--g must be smallest, three-in-c1, or an integer; got {g_arg!r}")
    return g


def _parse_classes(spec: str) -> list[int]:
    return [int(x) for x in spec.split(",") if x.strip() != ""]


def _build_sequence(args) -> seqgen.BitSequence:
    length = args.length
    if args.construction == "hall":
        params = ntheory.SexticParams.create(args.p, g=_resolve_g(args.p, args.g))
        return seqgen.hall_sequence(params, length or args.p)
    if args.construction == "legendre":
        return seqgen.legendre_sequence(args.p, length or args.p)
    if args.construction == "dhl":
        return seqgen.dhl_sequence(args.p, _resolve_g(args.p, args.g), length or args.p)
    if args.construction == "cyclotomic":
        if args.m is None or args.classes is None:
            raise ParameterError("cyclotomic needs --m and --classes")
        params = ntheory.PrimeParams.create(args.p, g=_resolve_g(args.p, args.g))
        return seqgen.cyclotomic_sequence(
            params, args.m, _parse_classes(args.classes), length or args.p
        )
    raise ParameterError(f"unknown construction {args.construction!r}")


def _load_sequence(args) -> seqgen.BitSequence:
    if args.input:
        seq = seqgen.read_sequence(args.input)
        if args.period:
            seq = seqgen.BitSequence.create(seq.bits, period=args.period, label=seq.label)
        return seq
    if not args.construction or not args.p:
        raise ParameterError("need --input FILE or --construction/--p")
    return _build_sequence(args)


# ---------------------------------------------------------------------------
# subcommands


def cmd_generate(args) -> int:
    seq = _build_sequence(args)
    out = args.output or f"{args.construction}-p{args.p}.seq"
    seqgen.write_sequence(seq, out)
    print(seq.label)
    return EXIT_OK


def cmd_measure(args) -> int:
    seq = _load_sequence(args)

    if args.ck is not None:
        if args.sampled:
            params = {"k": args.ck, "samples": args.sampled, "seed": args.seed}
        else:
            params = {"k": args.ck, "budget": args.budget}
        measure = "Ck"
    elif args.autocorr is not None:
        params = {"t": args.autocorr if args.autocorr == "all" else int(args.autocorr)}
        measure = "autocorr"
    elif args.lc_profile:
        params = {}
        measure = "lc_profile"
    elif args.moc_profile:
        params = {}
        measure = "moc_profile"
    elif args.two_adic:
        params = {}
        measure = "two_adic"
    else:
        raise ParameterError(
            "pick one of --ck / --autocorr / --lc-profile / --moc-profile / --two-adic"
        )

    cache = RecordCache(args.cache)
    probe = MeasureRecord(sequence_label=seq.label, measure=measure, params=params, value=None)
    if not args.no_cache:
        hit = cache.get(probe.cache_key)
        if hit is not None:
            MeasureRecord.from_dict(hit).write(fmt=args.format)
            return EXIT_OK

    witness = None
    if measure == "Ck":
        if args.sampled:
            rep = measures.correlation_measure_sampled(seq, args.ck, args.sampled, args.seed)
        else:
            rep = measures.correlation_measure_exact(seq, args.ck, budget=args.budget)
        value = rep.value
        witness = {"D": list(rep.witness_D), "M": rep.witness_M, "exhaustive": rep.exhaustive}
    elif measure == "autocorr":
        if args.autocorr == "all":
            T = seq.period
            if T is None:
                raise ParameterError("--autocorr all needs a periodic sequence")
            value = {str(t): measures.periodic_autocorrelation(seq, t) for t in range(1, T)}
        else:
            value = measures.periodic_autocorrelation(seq, params["t"])
    elif measure == "lc_profile":
        value = list(measures.berlekamp_massey_profile(seq).values)
    elif measure == "moc_profile":
        value = list(measures.max_order_complexity_profile(seq).values)
    else:  # two_adic
        rep = measures.two_adic_complexity(seq)
        value = {
            "S2": rep.numerator,
            "modulus": rep.modulus,
            "gcd": rep.gcd_value,
            "complexity": rep.complexity,
            "maximal": rep.is_maximal,
        }

    record = MeasureRecord(
        sequence_label=seq.label, measure=measure, params=params, value=value, witness=witness
    )
    if not args.no_cache:
        cache.append(record)
    record.write(fmt=args.format)
    return EXIT_OK


def _sextic_instances(primes, policies):
    """(p, policy, params) for each prime and satisfiable policy."""
    for p in primes:
        for policy in policies:
            try:
                yield p, policy, ntheory.SexticParams.create(p, g_policy=policy)
            except NoSuchRoot:
                yield p, policy, None


def _policies(arg: str) -> list[str]:
    if arg == "both":
        return ["smallest", "three-in-c1"]
    return [arg]


def _suite_instances(args):
    """Per-construction sequences at the suite's prefix length."""
    out = []
    for p in _parse_primes(args.primes):
        n = 2 * p if args.N == "2p" else p
        if p % 6 == 1:
            params = ntheory.SexticParams.create(p, g_policy="smallest")
            out.append((f"hall p={p}", seqgen.hall_sequence(params, n)))
        out.append((f"legendre p={p}", seqgen.legendre_sequence(p, n)))
        if p % 4 == 1:
            g = ntheory.find_primitive_root(p)
            out.append((f"dhl p={p}", seqgen.dhl_sequence(p, g, n)))
    return out


def cmd_verify(args) -> int:
    checks = []  # (name, status, detail); status in pass/fail/n-a/report

    if args.suite == "cross-construction":
        primes = _parse_primes(args.primes, need=lambda p: p % 6 == 1)
        for p, policy, params in _sextic_instances(primes, _policies(args.g_policy)):
            name = f"cross-construction p={p} policy={policy}"
            if params is None:
                checks.append((name, "n/a", "NoSuchRoot"))
                continue
            a = seqgen.hall_sequence(params, p)
            b = seqgen.hall_sequence_via_characters(params, p)
            ok = bool(np.array_equal(a.bits, b.bits))
            checks.append((name, "pass" if ok else "fail", f"g={params.g}"))

    elif args.suite == "index-representation":
        primes = _parse_primes(args.primes, need=lambda p: p % 6 == 1)
        for p, policy, params in _sextic_instances(primes, _policies(args.g_policy)):
            name = f"index-representation p={p} policy={policy}"
            if params is None:
                checks.append((name, "n/a", "NoSuchRoot"))
                continue
            ok = seqgen.check_index_representation(params)
            checks.append((name, "pass" if ok else "fail", f"g={params.g}"))

    elif args.suite == "diffset":
        primes = _parse_primes(args.primes, need=lambda p: p % 6 == 1)
        for p, policy, params in _sextic_instances(primes, _policies(args.g_policy)):
            name = f"diffset p={p} policy={policy}"
            if params is None:
                checks.append((name, "n/a", "NoSuchRoot"))
                continue
            rep = bounds.difference_set_check(params)
            if not rep.verdicts_agree:
                checks.append((name, "fail", "verdicts disagree"))
            elif rep.hall_form_u is not None and rep.three_in_c1:
                ok = rep.two_level_ideal and rep.lambda_value == (p - 3) // 4
                checks.append(
                    (name, "pass" if ok else "fail", f"u={rep.hall_form_u} lambda={rep.lambda_value}")
                )
            else:
                checks.append(
                    (name, "report", f"two_level={rep.two_level_ideal} (p not 4u^2+27 or 3 not in C1)")
                )

    elif args.suite in ("iw17", "bw06"):
        fn = bounds.check_iw17 if args.suite == "iw17" else bounds.check_bw06
        for name, seq in _suite_instances(args):
            ev = fn(seq, seq.length, k_cap=args.kmax, budget=args.budget)
            status = {True: "pass", False: "fail", None: "n/a"}[ev.satisfied]
            checks.append((f"{args.suite} {name}", status, ev.inputs.get("mode", "")))

    elif args.suite == "moc-le-lc":
        for name, seq in _suite_instances(args):
            moc = measures.max_order_complexity_profile(seq)
            lc = measures.berlekamp_massey_profile(seq)
            ok = all(m <= l for m, l in zip(moc.values, lc.values))
            checks.append((f"moc-le-lc {name}", "pass" if ok else "fail", f"N={seq.length}"))

    elif args.suite == "weil":
        primes = _parse_primes(args.primes, need=lambda p: p % 6 == 1)
        rng = np.random.default_rng(args.seed)
        for p in primes:
            params = ntheory.SexticParams.create(p, g_policy="smallest")
            bad = 0
            total = 0
            for k in range(1, args.kmax + 1):
                for shifts in combinations(range(p), k):
                    for ms in product(range(1, 6), repeat=k):
                        q = charsum.CharSumQuery(
                            params=params, exponents=ms, shifts=shifts, window=p
                        )
                        total += 1
                        if not charsum.weil_check(q).satisfied:
                            bad += 1
            checks.append(
                (f"weil complete p={p} k<={args.kmax}", "pass" if bad == 0 else "fail",
                 f"{total - bad}/{total} within (k-1)sqrt(p)+k"),
            )
            sat = 0
            for _ in range(args.queries):
                k = int(rng.integers(1, args.kmax + 1))
                shifts = tuple(sorted(int(d) for d in rng.choice(p, size=k, replace=False)))
                ms = tuple(int(m) for m in rng.integers(1, 6, size=k))
                window = int(rng.integers(2, p + 1))
                q = charsum.CharSumQuery(params=params, exponents=ms, shifts=shifts, window=window)
                if charsum.weil_check(q).satisfied:
                    sat += 1
            checks.append(
                (f"weil incomplete p={p} ({args.queries} random)", "report",
                 f"{sat}/{args.queries} within k*sqrt(p)*(1+ln p)"),
            )
    else:
        raise ParameterError(f"unknown suite {args.suite!r}; pick from {', '.join(SUITES)}")

    failed = 0
    for name, status, detail in checks:
        print(f"[{status.upper():6s}] {name}  {detail}")
        failed += status == "fail"
    n_pass = sum(1 for c in checks if c[1] == "pass")
    print(f"suite={args.suite}: {n_pass} passed, {failed} failed, "
          f"{sum(1 for c in checks if c[1] == 'n/a')} n/a, "
          f"{sum(1 for c in checks if c[1] == 'report')} reported")
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_scan(args) -> int:
    primes = _parse_primes(args.primes, need=lambda p: p % 6 == 1)
    rows = []
    for p in primes:
        try:
            params = ntheory.SexticParams.create(p, g_policy=args.g_policy)
        except NoSuchRoot:
            rows.append({"p": p, "g": "", "C_k": "", "sqrt_p_ln_p": "", "ratio": "",
                         "theorem1_kernel": "", "within_kernel": "", "status": "no-such-root"})
            continue
        seq = seqgen.hall_sequence(params, p)
        kernel = bounds.theorem1_kernel(args.ck, p)
        norm = math.sqrt(p) * math.log(p)
        try:
            rep = measures.correlation_measure_exact(seq, args.ck, budget=args.budget)
        except BudgetExceeded:
            rows.append({"p": p, "g": params.g, "C_k": "", "sqrt_p_ln_p": f"{norm:.6g}",
                         "ratio": "", "theorem1_kernel": f"{kernel:.6g}",
                         "within_kernel": "", "status": "budget-exceeded"})
            continue
        rows.append({
            "p": p,
            "g": params.g,
            "C_k": rep.value,
            "sqrt_p_ln_p": f"{norm:.6g}",
            "ratio": f"{rep.value / norm:.6g}",
            "theorem1_kernel": f"{kernel:.6g}",
            "within_kernel": rep.value <= kernel,
            "status": "ok",
        })
    header = ["p", "g", "C_k", "sqrt_p_ln_p", "ratio", "theorem1_kernel", "within_kernel", "status"]
    if args.format == "csv":
        w = csv.DictWriter(sys.stdout, fieldnames=header)
        w.writeheader()
        w.writerows(rows)
    else:
        import json

        for row in rows:
            print(json.dumps(row, sort_keys=True))
    return EXIT_OK


def cmd_baseline(args) -> int:
    stats = bounds.random_baseline(args.n, args.k, args.trials, args.seed, budget=args.budget)
    record = MeasureRecord(
        sequence_label=f"random(N={args.n})",
        measure="Ck",
        params={"mode": "baseline", "k": args.k, "N": args.n, "trials": args.trials,
                "seed": args.seed},
        value={
            "mean_ratio": stats.mean_ratio,
            "max_ratio": stats.max_ratio,
            "quartiles": list(stats.quartiles),
            "values": list(stats.values),
        },
    )
    record.write(fmt=args.format)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument plumbing


def _make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=measures.DEFAULT_BUDGET)
    common.add_argument("--cache", default="cycloseq-cache.jsonl")
    common.add_argument("--no-cache", action="store_true")

    ap = argparse.ArgumentParser(prog="cycloseq", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", parents=[common], help="construct a sequence file")
    g.add_argument("--construction", required=True,
                   choices=("hall", "legendre", "dhl", "cyclotomic"))
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--g", default="smallest")
    g.add_argument("--m", type=int)
    g.add_argument("--classes")
    g.add_argument("--length", type=int)
    g.add_argument("--output")
    g.set_defaults(fn=cmd_generate)

    m = sub.add_parser("measure", parents=[common], help="compute one measure")
    m.add_argument("--input")
    m.add_argument("--period", type=int)
    m.add_argument("--construction", choices=("hall", "legendre", "dhl", "cyclotomic"))
    m.add_argument("--p", type=int)
    m.add_argument("--g", default="smallest")
    m.add_argument("--m", type=int)
    m.add_argument("--classes")
    m.add_argument("--length", type=int)
    m.add_argument("--ck", type=int)
    m.add_argument("--sampled", type=int)
    m.add_argument("--autocorr")
    m.add_argument("--lc-profile", action="store_true")
    m.add_argument("--moc-profile", action="store_true")
    m.add_argument("--two-adic", action="store_true")
    m.set_defaults(fn=cmd_measure)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("--suite", required=True, choices=SUITES)
    v.add_argument("--primes", required=True)
    v.add_argument("--g-policy", default="both", choices=("smallest", "three-in-c1", "both"))
    v.add_argument("--kmax", type=int, default=bounds.DEFAULT_K_CAP)
    v.add_argument("--queries", type=int, default=200)
    v.add_argument("--N", default="p", choices=("p", "2p"))
    v.set_defaults(fn=cmd_verify)

    s = sub.add_parser("scan", parents=[common], help="C_k vs kernel over a prime range")
    s.add_argument("--ck", type=int, required=True)
    s.add_argument("--primes", required=True)
    s.add_argument("--g-policy", default="smallest", choices=("smallest", "three-in-c1"))
    s.set_defaults(fn=cmd_scan)

    b = sub.add_parser("baseline", parents=[common], help="C_k statistics over random words")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--trials", type=int, default=100)
    b.set_defaults(fn=cmd_baseline)

    return ap


def main(argv=None) -> int:
    ap = _make_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (BudgetExceeded, CapExceeded) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except ParameterError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARAM
    except CycloseqError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARAM


if __name__ == "__main__":
    raise SystemExit(main())
