"""Operation counts, linear complexity sums and the census over GF(q)^n."""

from __future__ import annotations

import enum
import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .bm import run_bm
from .domain import CountingDomain, OpCounter, PrimeField
from .errors import BudgetExceededError, InvariantError, RejectedInputError, UnsupportedOperationError
from .laurent import Seq
from .synthesis import SynthState, min_poly_step, run_min_poly

ENUM_BUDGET = 10**7


class Algo(enum.Enum):
    MINPOLY = "minpoly"
    BM = "bm"


def count_mults(
    s: Seq, epsilon: int = 0, algo: Algo | str = Algo.MINPOLY, monic: bool = False
) -> OpCounter:
    """Run one synthesis on an instrumented copy of the domain."""
    algo = Algo(algo)
    if monic and not s.domain.is_field:
        raise UnsupportedOperationError(f"monic mode needs a field, not {s.domain.spec}")
    counting = CountingDomain(s.domain)
    cs = s.with_domain(counting)
    if algo is Algo.MINPOLY:
        run_min_poly(cs, epsilon, monic, check=False)
    else:
        run_bm(cs, epsilon, monic)
    return counting.counter


def mult_bound(n: int, monic: bool = False) -> int:
    return (2 if monic else 3) * (n * n // 4)


def lc_sum_bound(n: int) -> int:
    return (n + 1) ** 2 // 4


def lc_sum_check(s: Seq, epsilon: int = 0) -> tuple[int, int, bool]:
    """``(sum L_i, floor((n+1)^2/4), equal?)``; raises if the bound fails."""
    _, trace = run_min_poly(s, epsilon)
    total = sum(row.lc for row in trace)
    bound = lc_sum_bound(s.n)
    if total > bound:
        raise InvariantError(f"sum of linear complexities {total} exceeds {bound}")
    return total, bound, total == bound


def plcp_characterizations(s: Seq, epsilon: int = 0) -> tuple[bool, bool, bool]:
    """The three equivalent PLCP tests: profile, exponents, odd discrepancies.

    The discrepancy test only looks at odd ``j <= n``; ``Delta_{n+1}`` would
    need a term past the end of ``s``.
    """
    D = s.domain
    _, trace = run_min_poly(s, epsilon)
    by_profile = all(row.lc == (row.j + 1) // 2 for row in trace)
    by_exponent = all(row.j + 1 - 2 * row.lc == (1 if row.j % 2 == 0 else 0) for row in trace)
    by_discrepancy = all(not D.is_zero(row.delta) for row in trace if row.j % 2 == 1)
    return by_profile, by_exponent, by_discrepancy


def is_plcp(s: Seq, epsilon: int = 0) -> bool:
    verdicts = plcp_characterizations(s, epsilon)
    if len(set(verdicts)) != 1:
        raise InvariantError(f"PLCP characterizations disagree on {s}: {verdicts}")
    return verdicts[0]


def lc_floor_sum(u: int, t: int) -> int:
    """``sum_{j=2u+1}^{2u+2t} floor((j+1)/2)``, checked against ``t(2u+t+1)``."""
    if u < 0 or t < 1:
        raise RejectedInputError("need u >= 0 and t >= 1")
    literal = sum((j + 1) // 2 for j in range(2 * u + 1, 2 * u + 2 * t + 1))
    if literal != t * (2 * u + t + 1):
        raise InvariantError(f"pairing identity fails at u={u}, t={t}")
    return literal


def expected_count(q: int, n: int, ell: int) -> int:
    """Number of ``s`` in ``F_q^n`` with linear complexity ``ell`` (closed form)."""
    if ell < 0 or ell > n:
        return 0
    if ell == 0:
        return 1
    return (q - 1) * q ** min(2 * ell - 1, 2 * n - 2 * ell)


@dataclass
class CountTable:
    q: int
    n: int
    counts: dict[int, int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.counts.values())

    def mismatches(self) -> dict[int, tuple[int, int]]:
        """``ell -> (enumerated, closed form)`` wherever they differ."""
        out = {}
        for ell in range(0, self.n + 1):
            got, want = self.counts.get(ell, 0), expected_count(self.q, self.n, ell)
            if got != want:
                out[ell] = (got, want)
        return out

    def to_json(self) -> dict:
        return {"q": self.q, "n": self.n, "counts": {str(k): v for k, v in sorted(self.counts.items())}}

    @classmethod
    def from_json(cls, obj: dict) -> "CountTable":
        return cls(obj["q"], obj["n"], {int(k): v for k, v in obj["counts"].items()})


def _census(q: int, n: int, prefix: tuple) -> dict[int, int]:
    """Tally ``L_n`` over all continuations of ``prefix``, sharing work along the prefix tree."""
    D = PrimeField(q)
    counts: dict[int, int] = {}

    def walk(state: SynthState, vals: list) -> None:
        if len(vals) == n:
            counts[state.lc] = counts.get(state.lc, 0) + 1
            return
        for a in range(q):
            vals.append(a)
            walk(min_poly_step(state, Seq(D, vals)), vals)
            vals.pop()

    state = SynthState.initial(D)
    vals = list(prefix)
    for k in range(1, len(vals) + 1):
        state = min_poly_step(state, Seq(D, vals[:k]))
    walk(state, vals)
    return counts


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("LRS_THREADS", "1")))
    except ValueError:
        return 1


def enumerate_counts(q: int, n: int, workers: int | None = None) -> CountTable:
    """Census of linear complexities over all of ``F_q^n``."""
    if n < 0:
        raise RejectedInputError("n must be non-negative")
    PrimeField(q)  # validates q
    if q**n > ENUM_BUDGET:
        raise BudgetExceededError(f"{q}^{n} sequences exceeds the budget of {ENUM_BUDGET}")
    workers = worker_count() if workers is None else workers
    depth = 1 if n >= 1 else 0
    prefixes = list(itertools.product(range(q), repeat=depth))
    if workers > 1 and len(prefixes) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_census, [q] * len(prefixes), [n] * len(prefixes), prefixes))
    else:
        parts = [_census(q, n, pre) for pre in prefixes]
    counts: dict[int, int] = {}
    for part in parts:
        for ell, c in part.items():
            counts[ell] = counts.get(ell, 0) + c
    table = CountTable(q, n, dict(sorted(counts.items())))
    if table.total() != q**n:
        raise InvariantError("census does not cover F_q^n")
    return table


def average_lc(table: CountTable) -> float:
    return sum(ell * c for ell, c in table.counts.items()) / table.total()
