"""Cross-check suites over sets of sequences.

Each suite runs one family of identities on a sequence and records every
violation as a message.  The suites are what ``lrs verify`` runs and what
the acceptance tests drive over the exhaustive and random sets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from . import analysis, bm, oracle, rational, synthesis
from .domain import Domain, PrimeField
from .laurent import Poly, Seq, is_annihilator, reciprocal
from .prng import SplitMix64

SUITES = ("synthesis", "bm", "rational", "oracle", "analysis")


@dataclass
class SuiteReport:
    name: str
    checked: int = 0
    failed_runs: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"suite": self.name, "checked": self.checked, "failed": self.failed_runs,
                "failures": self.failures[:20]}


def exhaustive_seqs(domain: PrimeField, max_n: int, min_n: int = 0) -> Iterator[Seq]:
    for n in range(min_n, max_n + 1):
        for vals in itertools.product(range(domain.p), repeat=n):
            yield Seq(domain, vals)


def random_seqs(domain: Domain, count: int, max_n: int, rng: SplitMix64, bound: int = 9) -> Iterator[Seq]:
    """``count`` sequences of length ``1..max_n``; integer entries in ``[-bound, bound]``."""
    for _ in range(count):
        n = rng.randint(1, max_n)
        if isinstance(domain, PrimeField):
            vals = [rng.below(domain.p) for _ in range(n)]
        else:
            vals = [rng.randint(-bound, bound) for _ in range(n)]
        yield Seq(domain, vals)


def default_epsilons(domain: Domain) -> tuple[int, ...]:
    if isinstance(domain, PrimeField) and domain.p == 2:
        return (0, 1)
    return (0, 1, domain.neg(domain.one))


class _Failures(list):
    def expect(self, cond: bool, msg: str) -> None:
        if not cond:
            self.append(msg)


def check_synthesis(s: Seq, eps: int) -> list[str]:
    """Per-step laws of the iterative algorithm, and agreement with the recursion."""
    D = s.domain
    out = _Failures()
    tag = f"s={s.to_text()} eps={D.format(eps)}"
    state = synthesis.SynthState.initial(D, eps)
    deltas = [D.one]  # Delta_0 = 1
    lcs = {-1: 0, 0: 0}
    jp = -1
    rec = synthesis._recursion(s, eps, s.n)
    for j in range(1, s.n + 1):
        delta = synthesis.discrepancy(state, s)
        new = synthesis.min_poly_step(state, s)
        deltas.append(delta)
        e0, L0 = state.e, state.lc
        if D.is_zero(delta):
            out.expect(new.e == e0 + 1, f"{tag} j={j}: e-law (Delta=0)")
            out.expect(new.lc == L0, f"{tag} j={j}: L changed with Delta=0")
        else:
            out.expect(new.e == 1 - abs(e0), f"{tag} j={j}: e-law")
            out.expect(new.lc == max(e0, 0) + L0, f"{tag} j={j}: degree law")
            if e0 > 0:
                jp = j - 1
        lcs[j] = new.lc
        out.expect(new.e == j + 1 - 2 * new.lc, f"{tag} j={j}: e != j+1-2L")
        out.expect(new.mu.degree == new.lc, f"{tag} j={j}: deg mu != L")
        out.expect(new.delta_prime == deltas[jp + 1], f"{tag} j={j}: Delta' != Delta_(j'+1)")
        out.expect(not D.is_zero(new.delta_prime), f"{tag} j={j}: Delta' = 0")
        out.expect(new.lc == jp + 1 - lcs[jp], f"{tag} j={j}: L_j != j'+1-L_j'")
        out.expect(rec.index(j) == jp, f"{tag} j={j}: index function {rec.index(j)} != {jp}")
        out.expect(rec.mu(j) == new.mu, f"{tag} j={j}: recursive mu differs")
        out.expect(jp <= j - 1, f"{tag} j={j}: j' > j-1")
        out.expect(is_annihilator(new.mu, s.prefix(j)), f"{tag} j={j}: mu does not annihilate")
        state = new
    out.expect(synthesis.min_poly_recursive(s, eps) == state.mu, f"{tag}: recursive != iterative")
    return out


def check_bm(s: Seq, eps: int) -> list[str]:
    """Duality with the minimal polynomial run, step by step, and the p-law."""
    D = s.domain
    out = _Failures()
    tag = f"s={s.to_text()} eps={D.format(eps)}"
    _, mp_trace = synthesis.run_min_poly(s, eps)
    rho, L, bm_trace = bm.bm_synthesize(s, eps)
    for a, b in zip(mp_trace, bm_trace):
        out.expect(b.rho == reciprocal(a.mu), f"{tag} j={a.j}: rho != mu*")
        out.expect(b.rho_prime == reciprocal(a.mu_prime), f"{tag} j={a.j}: rho' != mu'*")
        out.expect(b.delta == a.delta and b.e_prev == a.e_prev, f"{tag} j={a.j}: Delta/e differ")
        out.expect(b.lc == a.lc, f"{tag} j={a.j}: L differs")
        out.expect(b.j_prime == a.j_prime, f"{tag} j={a.j}: p(j) != j-j'")
        out.expect(b.p == a.p, f"{tag} j={a.j}: p(j-1) differs")
    if s.n:
        out.expect(bm_trace[0].p == 1, f"{tag}: p(0) != 1")
    mu = bm.pair_to_min_poly(rho, L)
    out.expect(L == (mp_trace[-1].lc if mp_trace else 0), f"{tag}: L != deg(min_poly)")
    out.expect(mu.degree == L and is_annihilator(mu, s), f"{tag}: x^(L-deg)rho* not minimal")
    out.expect(bm.is_reciprocal_pair(rho, L, s), f"{tag}: (rho, L) not a reciprocal pair")
    if D.is_field and s.n:
        mono, _ = synthesis.min_poly(s, eps, monic=True)
        rho_m, L_m, _ = bm.bm_synthesize(s, eps, monic=True)
        out.expect(mono.is_monic(), f"{tag}: monic mode output not monic")
        out.expect(rho_m == reciprocal(mono) and L_m == L, f"{tag}: monic modes not dual")
    return out


def check_rational(s: Seq, eps: int) -> list[str]:
    out = _Failures()
    tag = f"s={s.to_text()} eps={s.domain.format(eps)}"
    # check_approx compares each nu^(j) with the expanded polynomial part
    approxes = rational.numerator_trace(s, eps)
    for approx in approxes:
        try:
            rational.check_approx(approx, s)
        except AssertionError as exc:
            out.append(f"{tag}: {exc}")
    out.expect(approxes[-1].nu == rational.nu_direct(s, eps), f"{tag}: nu_recursive != nu_direct")
    return out


def check_oracle(s: Seq, eps: int, cache: dict | None = None) -> list[str]:
    """Minimality against brute force, plus the discrepancy lower bound."""
    out = _Failures()
    tag = f"s={s.to_text()} eps={s.domain.format(eps)}"

    def brute(t: Seq) -> oracle.OracleResult:
        if cache is None:
            return oracle.brute_min_poly(t)
        key = (t.domain.spec, t.elems)
        if key not in cache:
            cache[key] = oracle.brute_min_poly(t)
        return cache[key]

    res = brute(s)
    state, trace = synthesis.run_min_poly(s, eps)
    out.expect(state.lc == res.min_degree, f"{tag}: L={state.lc} but brute force gives {res.min_degree}")
    out.expect(oracle.is_witness(res.witness, s) and is_annihilator(res.witness, s), f"{tag}: bad witness")
    out.expect(oracle.is_witness(state.mu, s), f"{tag}: mu fails the direct equations")
    # a degree-d annihilator of s^(j-1) with nonzero discrepancy at j forces L_j >= j - d
    prev = Poly.constant(s.domain, s.domain.one)
    for row in trace:
        low = brute(s.prefix(row.j)).min_degree
        if not s.domain.is_zero(row.delta):
            out.expect(low >= row.j - prev.degree, f"{tag} j={row.j}: lower bound fails for mu")
        w = brute(s.prefix(row.j - 1)).witness
        if w.degree < row.j:
            new_eq = oracle.residuals(list(w.coeffs), s.prefix(row.j).elems, w.degree)[-1]
            if s.domain.element(new_eq) != 0:
                out.expect(low >= row.j - w.degree, f"{tag} j={row.j}: lower bound fails for witness")
        prev = row.mu
    return out


def check_analysis(s: Seq, eps: int) -> list[str]:
    D = s.domain
    out = _Failures()
    tag = f"s={s.to_text()} eps={D.format(eps)}"
    total, bound, tight = analysis.lc_sum_check(s, eps)
    plcp = analysis.plcp_characterizations(s, eps)
    out.expect(len(set(plcp)) == 1, f"{tag}: PLCP characterizations disagree {plcp}")
    if plcp[0]:
        out.expect(tight, f"{tag}: PLCP but sum {total} < {bound}")
    n = s.n
    for algo in analysis.Algo:
        c = analysis.count_mults(s, eps, algo)
        out.expect(c.divs == 0, f"{tag} {algo.value}: division in default mode")
        out.expect(c.raw_mults <= analysis.mult_bound(n) + 3 * n, f"{tag} {algo.value}: raw count too big")
        if D.is_field:
            m = analysis.count_mults(s, eps, algo, monic=True)
            out.expect(m.mults <= analysis.mult_bound(n, monic=True), f"{tag} {algo.value}: monic mults")
            out.expect(m.divs <= n, f"{tag} {algo.value}: monic divs > n")
    a = analysis.count_mults(s, eps, "minpoly")
    b = analysis.count_mults(s, eps, "bm")
    out.expect(a.mults == b.mults, f"{tag}: minpoly and bm nontrivial counts differ")
    return out


CHECKS: dict[str, Callable[..., list[str]]] = {
    "synthesis": check_synthesis,
    "bm": check_bm,
    "rational": check_rational,
    "oracle": check_oracle,
    "analysis": check_analysis,
}


def run_suites(
    seqs: Iterable[Seq], epsilons: Iterable[int] | None = None, suites: Iterable[str] = SUITES
) -> dict[str, SuiteReport]:
    suites = list(suites)
    reports = {name: SuiteReport(name) for name in suites}
    cache: dict = {}
    for s in seqs:
        for eps in (epsilons if epsilons is not None else default_epsilons(s.domain)):
            for name in suites:
                if name == "oracle":
                    msgs = check_oracle(s, eps, cache)
                else:
                    msgs = CHECKS[name](s, eps)
                reports[name].checked += 1
                if msgs:
                    reports[name].failed_runs += 1
                    reports[name].failures.extend(msgs)
    return reports


def sequences_for(domain: Domain, max_n: int, trials: int, seed: int) -> list[Seq]:
    """Exhaustive for fields (when ``p^max_n`` is modest), random otherwise."""
    if isinstance(domain, PrimeField) and sum(domain.p**k for k in range(max_n + 1)) <= 200_000:
        return list(exhaustive_seqs(domain, max_n))
    return list(random_seqs(domain, trials, max(1, max_n), SplitMix64(seed)))

