"""Command line interface: ``lrs <command> [options]``.

Exit status is 0 on success, 2 for invalid input and 1 if an internal
invariant fails (which would be a bug).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, bm, rational, synthesis, verify
from .domain import Domain, PrimeField, parse_domain
from .errors import (
    BudgetExceededError,
    DomainError,
    InvariantError,
    RejectedInputError,
    UnsupportedOperationError,
)
from .laurent import Seq
from .prng import SplitMix64
from .reports import BenchReport, BMReport, MinPolyReport, ProfileReport, VerifyReport

DEFAULT_SEED = 0x5EED


def _read_seq(args, D: Domain) -> Seq:
    if args.seq is not None:
        return Seq.parse(D, args.seq)
    if args.file is not None and args.file != "-":
        with open(args.file, encoding="utf-8") as fh:
            return Seq.parse(D, fh.read())
    return Seq.parse(D, sys.stdin.read())


def _table(header: list[str], rows: list[list[str]], left_from: int) -> str:
    """Plain text table; columns from ``left_from`` on are left aligned."""
    widths = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(header)]

    def line(cells):
        return " | ".join(c.ljust(w) if i >= left_from else c.rjust(w)
                          for i, (c, w) in enumerate(zip(cells, widths))).rstrip()

    sep = "-+-".join("-" * w for w in widths)
    return "\n".join([line(header), sep, *(line(r) for r in rows)])


def _emit(args, report, text: str) -> None:
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(text)


def cmd_minpoly(args) -> int:
    D = parse_domain(args.domain)
    eps = D.parse(args.epsilon)
    s = _read_seq(args, D)
    state, trace = synthesis.run_min_poly(s, eps, monic=args.monic)
    mu = synthesis.primitive_part(state.mu) if args.primitive else state.mu
    nums = rational.numerator_trace(s, eps) if args.with_numerator else None
    if nums is not None:
        for a in nums:
            rational.check_approx(a, s)
    report = MinPolyReport(
        domain=D.spec,
        epsilon=D.format(eps),
        seq=[D.format(a) for a in s.elems],
        mu=mu,
        mu_prime=state.mu_prime,
        lc=state.lc,
        trace=trace if args.trace else None,
        numerators=nums,
    )
    lines = []
    if args.trace:
        rows = [[str(r.j), str(r.e_prev), D.format(r.delta), r.mu.to_text(), r.mu_prime.to_text()] for r in trace]
        lines.append(_table(["j", "e_{j-1}", "Delta_j", "mu^(j)", "mu'^(j)"], rows, 3))
    if nums is not None:
        lines.extend(f"j={a.j}: mu = {a.mu.to_text()}, nu = {a.nu.to_text()}" for a in nums)
    lines.append(f"mu = {mu.to_text()}")
    lines.append(f"L = {state.lc}")
    _emit(args, report, "\n".join(lines))
    return 0


def cmd_bm(args) -> int:
    D = parse_domain(args.domain)
    eps = D.parse(args.epsilon)
    s = _read_seq(args, D)
    rho, L, trace = bm.bm_synthesize(s, eps, monic=args.monic)
    report = BMReport(D.spec, D.format(eps), [D.format(a) for a in s.elems], rho, L, trace if args.trace else None)
    lines = []
    if args.trace:
        rows = [
            [str(r.j), str(r.e_prev), D.format(r.delta), str(r.p), r.rho.to_text(True), r.rho_prime.to_text(True)]
            for r in trace
        ]
        lines.append(_table(["j", "e_{j-1}", "Delta", "p_{j-1}", "rho^(j)", "rho'^(j)"], rows, 4))
    lines.append(f"rho = {rho.to_text(ascending=True)}, L = {L}")
    _emit(args, report, "\n".join(lines))
    return 0


def cmd_profile(args) -> int:
    D = parse_domain(args.domain)
    eps = D.parse(args.epsilon)
    s = _read_seq(args, D)
    prof = synthesis.lc_profile(s, eps)
    jumps = sorted(synthesis.jump_points(s, eps))
    total, bound, _ = analysis.lc_sum_check(s, eps)
    plcp = analysis.is_plcp(s, eps)
    report = ProfileReport(D.spec, D.format(eps), [D.format(a) for a in s.elems], prof, jumps, total, bound, plcp)
    text = "\n".join(
        [
            f"profile = {','.join(map(str, prof))}",
            f"jumps = {','.join(map(str, jumps))}",
            f"sum L = {total}, bound = {bound}",
            f"plcp = {'yes' if plcp else 'no'}",
        ]
    )
    _emit(args, report, text)
    return 0


def cmd_enumerate(args) -> int:
    table = analysis.enumerate_counts(args.q, args.n)
    bad = table.mismatches()
    if args.json:
        out = table.to_json()
        out["expected"] = {str(l): analysis.expected_count(args.q, args.n, l) for l in range(args.n + 1)}
        out["average_lc"] = analysis.average_lc(table)
        print(json.dumps(out, indent=2))
    else:
        rows = [[str(l), str(table.counts.get(l, 0)), str(analysis.expected_count(args.q, args.n, l))]
                for l in range(args.n + 1)]
        print(f"q = {args.q}, n = {args.n}, total = {table.total()}")
        print(_table(["L", "count", "closed form"], rows, 3))
        print(f"average L = {analysis.average_lc(table):.6f}")
    if bad:
        print(f"census mismatch: {bad}", file=sys.stderr)
        return 1
    return 0


def cmd_verify(args) -> int:
    D = parse_domain(args.domain)
    suites = verify.SUITES if args.suite == "all" else (args.suite,)
    seqs = verify.sequences_for(D, args.max_n, args.trials, args.seed)
    if args.epsilon is not None:
        epsilons = (D.parse(args.epsilon),)
    else:
        epsilons = verify.default_epsilons(D)
    reports = verify.run_suites(seqs, epsilons, suites)
    report = VerifyReport(D.spec, args.max_n, len(seqs), {k: r.to_json() for k, r in reports.items()})
    text = "\n".join(
        [f"domain = {D.spec}, max_n = {args.max_n}, sequences = {len(seqs)}, seed = {args.seed}"]
        + [f"{r.name}: {r.checked - r.failed_runs}/{r.checked} passed"
           + ("" if r.ok else f" ({len(r.failures)} violations, first: {r.failures[0]})")
           for r in reports.values()]
    )
    _emit(args, report, text)
    return 0 if report.ok else 1


def cmd_bench(args) -> int:
    D = parse_domain(args.domain)
    eps = D.parse(args.epsilon)
    rng = SplitMix64(args.seed)
    counts = []
    for _ in range(args.trials):
        if isinstance(D, PrimeField):
            vals = [rng.below(D.p) for _ in range(args.n)]
        else:
            vals = [rng.randint(-args.bound, args.bound) for _ in range(args.n)]
        counts.append(analysis.count_mults(Seq(D, vals), eps, args.algo, args.monic))
    bound = analysis.mult_bound(args.n, args.monic)
    mults = [c.mults for c in counts] or [0]
    report = BenchReport(
        algo=args.algo,
        domain=D.spec,
        epsilon=D.format(eps),
        n=args.n,
        trials=args.trials,
        seed=args.seed,
        monic=args.monic,
        mults_min=min(mults),
        mults_mean=sum(mults) / len(mults),
        mults_max=max(mults),
        raw_mults_max=max((c.raw_mults for c in counts), default=0),
        divs_max=max((c.divs for c in counts), default=0),
        bound=bound,
        over_bound=sum(m > bound for m in mults),
    )
    text = "\n".join(
        [
            f"algo = {args.algo}, domain = {D.spec}, n = {args.n}, trials = {args.trials}, seed = {args.seed}",
            f"mults: min {report.mults_min}, mean {report.mults_mean:.2f}, max {report.mults_max} "
            f"(bound {bound}, {report.over_bound} over)",
            f"raw mults max {report.raw_mults_max}, divs max {report.divs_max}",
        ]
    )
    _emit(args, report, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lrs", description="Minimal polynomials and Berlekamp-Massey synthesis")
    sub = parser.add_subparsers(dest="command", required=True)

    def seq_cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--domain", default="int", help="'int' or 'gf:<p>' (default int)")
        p.add_argument("--epsilon", default="0", help="relative scalar (default 0)")
        src = p.add_mutually_exclusive_group()
        src.add_argument("--seq", help="comma separated terms s_1,...,s_n")
        src.add_argument("--file", help="file of terms ('-' for stdin)")
        p.add_argument("--json", action="store_true")
        return p

    p = seq_cmd("minpoly", "iterative minimal polynomial")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--with-numerator", action="store_true")
    p.add_argument("--monic", action="store_true", help="divide by Delta' at each update (fields)")
    p.add_argument("--primitive", action="store_true", help="report the primitive part (int)")
    p.set_defaults(func=cmd_minpoly)

    p = seq_cmd("bm", "division-free Berlekamp-Massey")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--monic", action="store_true")
    p.set_defaults(func=cmd_bm)

    p = seq_cmd("profile", "linear complexity profile")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("enumerate", help="census of linear complexities over GF(q)^n")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run cross-check suites")
    p.add_argument("--suite", choices=("all", *verify.SUITES), default="all")
    p.add_argument("--domain", default="gf:2")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--epsilon", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="multiplication counts on random sequences")
    p.add_argument("--algo", choices=("minpoly", "bm"), default="minpoly")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--domain", default="int")
    p.add_argument("--epsilon", default="0")
    p.add_argument("--bound", type=int, default=9, help="integer entries drawn from [-bound, bound]")
    p.add_argument("--monic", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 1
    except (DomainError, RejectedInputError, BudgetExceededError, UnsupportedOperationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
