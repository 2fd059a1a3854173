"""Division-free Berlekamp-Massey synthesis via reciprocal pairs.

A reciprocal pair ``(g, l)`` for ``s`` has ``g_0 != 0``, ``deg g <= l`` and
``g_0 s_j + g_1 s_{j-1} + ... + g_d s_{j-d} = 0`` for ``l < j <= n``; it is
the connection-polynomial view of an annihilator.  This module does not
import the minimal polynomial code: agreement between the two is a test.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .domain import Domain
from .errors import InvariantError, RejectedInputError, UnsupportedOperationError
from .laurent import Poly, Seq, feedback_sum, reciprocal


@dataclass(frozen=True)
class RecipPair:
    g: Poly
    ell: int

    def __post_init__(self):
        if self.g.domain.is_zero(self.g[0]):
            raise RejectedInputError("reciprocal pair needs g_0 != 0")
        if self.g.degree > self.ell:
            raise RejectedInputError(f"deg(g)={self.g.degree} exceeds l={self.ell}")


@dataclass(frozen=True)
class BMState:
    rho: Poly
    rho_prime: Poly
    delta_prime: int
    p: int
    e: int
    j: int = 0

    @classmethod
    def initial(cls, domain: Domain, epsilon: int = 0) -> "BMState":
        return cls(
            rho=Poly.constant(domain, domain.one),
            rho_prime=Poly.constant(domain, domain.element(epsilon)),
            delta_prime=domain.one,
            p=1,
            e=1,
        )

    @property
    def lc(self) -> int:
        return (self.j + 1 - self.e) // 2


@dataclass(frozen=True)
class BMTraceRow:
    """Step ``j`` of :func:`bm_synthesize`; columns as in the minimal polynomial trace."""

    j: int
    e_prev: int
    delta: int
    rho: Poly
    rho_prime: Poly
    lc: int
    j_prime: int
    p: int

    def to_json(self) -> dict:
        D = self.rho.domain
        return {
            "j": self.j,
            "e_prev": self.e_prev,
            "delta": D.format(self.delta),
            "rho": self.rho.to_json(),
            "rho_prime": self.rho_prime.to_json(),
            "lc": self.lc,
            "j_prime": self.j_prime,
            "p": self.p,
        }

    @classmethod
    def from_json(cls, obj: dict, domain: Domain | None = None) -> "BMTraceRow":
        rho = Poly.from_json(obj["rho"], domain)
        return cls(
            j=obj["j"],
            e_prev=obj["e_prev"],
            delta=rho.domain.parse(obj["delta"]),
            rho=rho,
            rho_prime=Poly.from_json(obj["rho_prime"], rho.domain),
            lc=obj["lc"],
            j_prime=obj["j_prime"],
            p=obj["p"],
        )


def is_reciprocal_pair(g: Poly, ell: int, s: Seq) -> bool:
    D = g.domain
    if g.is_zero() or D.is_zero(g[0]) or g.degree > ell:
        return False
    return all(D.is_zero(feedback_sum(g, s, j)) for j in range(ell + 1, s.n + 1))


def bm_discrepancy(state: BMState, s: Seq) -> int:
    """``sum_k rho_k s_{j+1-k}``."""
    if state.j >= s.n:
        raise RejectedInputError(f"no term s_{state.j + 1} in a sequence of length {s.n}")
    D = state.rho.domain
    j = state.j + 1
    acc = D.zero
    for k, c in enumerate(state.rho.coeffs):
        acc = D.add(acc, D.mul(c, s(j - k)))
    return acc


def bm_step(state: BMState, s: Seq, monic: bool = False) -> tuple[BMState, int]:
    """One loop iteration; returns the new state and the discrepancy used."""
    D = state.rho.domain
    delta = bm_discrepancy(state, s)
    p, e = state.p, state.e
    rho, rho_prime, delta_prime = state.rho, state.rho_prime, state.delta_prime
    if not D.is_zero(delta):
        t = rho
        if monic:
            rho = rho - rho_prime.scale(D.div(delta, delta_prime)).shift(p)
        else:
            rho = rho.scale(delta_prime) - rho_prime.scale(delta).shift(p)
        if e > 0:
            rho_prime, delta_prime, p, e = t, delta, 0, -e
    new = replace(
        state,
        rho=rho,
        rho_prime=rho_prime,
        delta_prime=delta_prime,
        p=p + 1,
        e=e + 1,
        j=state.j + 1,
    )
    return new, delta


def run_bm(
    s: Seq, epsilon: int = 0, monic: bool = False
) -> tuple[BMState, list[BMTraceRow]]:
    D = s.domain
    if monic and not D.is_field:
        raise UnsupportedOperationError(f"monic mode needs a field, not {D.spec}")
    state = BMState.initial(D, epsilon)
    trace = []
    for j in range(1, s.n + 1):
        e_prev, p_prev = state.e, state.p
        state, delta = bm_step(state, s, monic)
        if D.is_zero(state.rho[0]):
            raise InvariantError(f"rho_0 vanished at step {j}")
        trace.append(
            BMTraceRow(j, e_prev, delta, state.rho, state.rho_prime, state.lc, j - state.p, p_prev)
        )
    if (s.n + 1 - state.e) % 2:
        raise InvariantError("n+1-e is odd")
    return state, trace


def bm_synthesize(
    s: Seq, epsilon: int = 0, monic: bool = False
) -> tuple[Poly, int, list[BMTraceRow]]:
    """Shortest reciprocal pair ``(rho, L)`` for ``s`` plus the trace."""
    state, trace = run_bm(s, epsilon, monic)
    return state.rho, (s.n + 1 - state.e) // 2, trace


def pair_to_min_poly(g: Poly, ell: int) -> Poly:
    """``x^(l - deg g) * g*``, the annihilator dual to ``(g, l)``."""
    pair = RecipPair(g, ell)
    return reciprocal(pair.g).shift(ell - pair.g.degree)
