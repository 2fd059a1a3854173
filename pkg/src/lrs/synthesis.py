"""Minimal polynomials of finite sequences over an integral domain.

Two independent routes are provided:

* :func:`min_poly` -- the iterative algorithm; state ``(mu, mu', Delta', e)``
  is updated in place of indices, and every step is division-free.
* :func:`min_poly_recursive` -- the recursive definition driven by the index
  function ``j -> j'``; used as a cross-check of the iterative route.

Both are relative to a scalar ``epsilon`` which seeds ``mu^(-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import gcd

from .domain import Domain, Integers
from .errors import InvariantError, RejectedInputError, UnsupportedOperationError
from .laurent import Poly, Seq, is_annihilator, laurent_coeff


@dataclass(frozen=True)
class SynthState:
    mu: Poly
    mu_prime: Poly
    delta_prime: int
    e: int
    lc: int
    epsilon: int
    j: int = 0

    @classmethod
    def initial(cls, domain: Domain, epsilon: int = 0) -> "SynthState":
        eps = domain.element(epsilon)
        return cls(
            mu=Poly.constant(domain, domain.one),
            mu_prime=Poly.constant(domain, eps),
            delta_prime=domain.one,
            e=1,
            lc=0,
            epsilon=eps,
        )

    def check(self) -> None:
        if self.e != self.j + 1 - 2 * self.lc:
            raise InvariantError(f"e={self.e} but j+1-2L={self.j + 1 - 2 * self.lc}")
        if self.mu.degree != self.lc:
            raise InvariantError(f"deg(mu)={self.mu.degree} but L={self.lc}")
        if self.mu.domain.is_zero(self.delta_prime):
            raise InvariantError("Delta' vanished")


@dataclass(frozen=True)
class TraceRow:
    """One step ``j`` of a synthesis run.

    ``e_prev`` and ``p`` are the values in force when step ``j`` starts
    (``e_{j-1}`` and ``p(j-1)``); ``delta`` is the discrepancy tested at
    step ``j``; ``mu``/``mu_prime`` and ``lc`` are the values after it.
    """

    j: int
    e_prev: int
    delta: int
    mu: Poly
    mu_prime: Poly
    lc: int
    j_prime: int
    p: int

    def to_json(self) -> dict:
        D = self.mu.domain
        return {
            "j": self.j,
            "e_prev": self.e_prev,
            "delta": D.format(self.delta),
            "mu": self.mu.to_json(),
            "mu_prime": self.mu_prime.to_json(),
            "lc": self.lc,
            "j_prime": self.j_prime,
            "p": self.p,
        }

    @classmethod
    def from_json(cls, obj: dict, domain: Domain | None = None) -> "TraceRow":
        mu = Poly.from_json(obj["mu"], domain)
        return cls(
            j=obj["j"],
            e_prev=obj["e_prev"],
            delta=mu.domain.parse(obj["delta"]),
            mu=mu,
            mu_prime=Poly.from_json(obj["mu_prime"], mu.domain),
            lc=obj["lc"],
            j_prime=obj["j_prime"],
            p=obj["p"],
        )


def discrepancy(state: SynthState, s: Seq) -> int:
    """``Delta_{j+1}``: the coefficient of ``x^(L-j-1)`` in ``mu * s``."""
    if state.j >= s.n:
        raise RejectedInputError(f"no term s_{state.j + 1} in a sequence of length {s.n}")
    D = state.mu.domain
    base = state.j + 1 - state.lc
    acc = D.zero
    for k, c in enumerate(state.mu.coeffs):
        acc = D.add(acc, D.mul(c, s(k + base)))
    return acc


def _advance(state: SynthState, delta: int, monic: bool = False) -> SynthState:
    D = state.mu.domain
    e = state.e
    if D.is_zero(delta):
        return replace(state, e=e + 1, j=state.j + 1)
    if monic:
        q = D.div(delta, state.delta_prime)
        if e <= 0:
            mu = state.mu - state.mu_prime.scale(q).shift(-e)
            return replace(state, mu=mu, e=e + 1, j=state.j + 1)
        mu = state.mu.shift(e) - state.mu_prime.scale(q)
    else:
        if e <= 0:
            mu = state.mu.scale(state.delta_prime) - state.mu_prime.scale(delta).shift(-e)
            return replace(state, mu=mu, e=e + 1, j=state.j + 1)
        mu = state.mu.scale(state.delta_prime).shift(e) - state.mu_prime.scale(delta)
    return replace(
        state,
        mu=mu,
        mu_prime=state.mu,
        delta_prime=delta,
        e=1 - e,
        lc=state.lc + e,
        j=state.j + 1,
    )


def min_poly_step(state: SynthState, s: Seq, monic: bool = False) -> SynthState:
    """Consume ``s_{j+1}``; returns the state for the prefix of length ``j+1``."""
    return _advance(state, discrepancy(state, s), monic)


def run_min_poly(
    s: Seq, epsilon: int = 0, monic: bool = False, check: bool = True
) -> tuple[SynthState, list[TraceRow]]:
    """Iterative minimal polynomial, returning the final state and a trace."""
    D = s.domain
    if monic and not D.is_field:
        raise UnsupportedOperationError(f"monic mode needs a field, not {D.spec}")
    state = SynthState.initial(D, epsilon)
    trace = []
    jp = -1  # index function, 0' = -1
    p_prev = 1
    for j in range(1, s.n + 1):
        e_prev = state.e
        delta = discrepancy(state, s)
        state = _advance(state, delta, monic)
        if not D.is_zero(delta) and e_prev > 0:
            jp = j - 1
        if check:
            state.check()
        trace.append(TraceRow(j, e_prev, delta, state.mu, state.mu_prime, state.lc, jp, p_prev))
        p_prev = j - jp
    return state, trace


def min_poly(
    s: Seq, epsilon: int = 0, monic: bool = False, primitive: bool = False
) -> tuple[Poly, list[TraceRow]]:
    """A minimal polynomial of ``s`` and the per-step trace.

    ``monic`` (fields only) divides by ``Delta'`` at each update.  ``primitive``
    (integers only) divides the result by its content afterwards; the trace
    is left untouched.
    """
    state, trace = run_min_poly(s, epsilon, monic)
    mu = state.mu
    if primitive:
        mu = primitive_part(mu)
    return mu, trace


def primitive_part(f: Poly) -> Poly:
    """Divide an integer polynomial by the gcd of its coefficients, leading term positive."""
    if not isinstance(f.domain, Integers):
        raise UnsupportedOperationError("primitive part is only defined here over int")
    if f.is_zero():
        return f
    g = 0
    for c in f.coeffs:
        g = gcd(g, c)
    if f.leading() < 0:
        g = -g
    return Poly(f.domain, [c // g for c in f.coeffs])


class _Recursion:
    """Memoised recursive definition of ``mu^(j)``, ``Delta_j``, ``e_j`` and ``j'``."""

    def __init__(self, s: Seq, epsilon: int):
        D = s.domain
        self.s = s
        self.D = D
        self._mu = {-1: Poly.constant(D, D.element(epsilon)), 0: Poly.constant(D, D.one)}
        self._delta = {0: D.one}
        self._idx = {0: -1}

    def mu(self, j: int) -> Poly:
        if j not in self._mu:
            prev = self.mu(j - 1)
            d = self.delta(j)
            if self.D.is_zero(d):
                self._mu[j] = prev
            else:
                e = self.e(j - 1)
                jp = self.index(j - 1)
                dp = self.delta(jp + 1)
                self._mu[j] = prev.scale(dp).shift(max(e, 0)) - self.mu(jp).scale(d).shift(max(-e, 0))
        return self._mu[j]

    def delta(self, j: int) -> int:
        if j not in self._delta:
            f = self.mu(j - 1)
            self._delta[j] = laurent_coeff(f, self.s.prefix(j), f.degree - j)
        return self._delta[j]

    def e(self, j: int) -> int:
        return j + 1 - 2 * self.mu(j).degree

    def index(self, j: int) -> int:
        if j not in self._idx:
            prev = self.index(j - 1)
            if not self.D.is_zero(self.delta(j)) and self.e(j - 1) > 0:
                self._idx[j] = j - 1
            else:
                self._idx[j] = prev
        return self._idx[j]

    def warm(self, j: int) -> None:
        # fill bottom-up so the recursion never goes deep
        for k in range(0, j + 1):
            self.mu(k)
            self.index(k)


def _recursion(s: Seq, epsilon: int, j: int) -> _Recursion:
    if not -1 <= j <= s.n:
        raise RejectedInputError(f"j={j} outside -1..{s.n}")
    r = _Recursion(s, epsilon)
    r.warm(j)
    return r


def min_poly_recursive(s: Seq, epsilon: int = 0, j: int | None = None) -> Poly:
    """``mu^(j)`` from the recursive definition (defaults to ``j = n``)."""
    j = s.n if j is None else j
    return _recursion(s, epsilon, j).mu(j)


def index_fn(s: Seq, j: int, epsilon: int = 0) -> int:
    """The index ``j'`` of step ``j`` (``0' = -1``)."""
    if not 0 <= j <= s.n:
        raise RejectedInputError(f"j={j} outside 0..{s.n}")
    return _recursion(s, epsilon, j).index(j)


def lc_profile(s: Seq, epsilon: int = 0) -> list[int]:
    """Linear complexities ``[L_1, ..., L_n]``."""
    _, trace = run_min_poly(s, epsilon)
    return [row.lc for row in trace]


def jump_points(s: Seq, epsilon: int = 0) -> set[int]:
    """Steps ``j >= 2`` with ``L_j > L_{j-1}``.

    Checks that the jump heights ``e_{j-1}`` add up to ``L_n - L_1``.
    """
    _, trace = run_min_poly(s, epsilon)
    if len(trace) < 2:
        return set()
    jumps = {row.j for row in trace[1:] if row.lc > trace[row.j - 2].lc}
    total = sum(trace[j - 1].e_prev for j in jumps)
    if trace[-1].lc != trace[0].lc + total:
        raise InvariantError("jump heights do not add up to L_n - L_1")
    return jumps


def minimal_family_member(s: Seq, f_prime: Poly, epsilon: int = 0) -> Poly:
    """``mu + f' mu'``, another minimal polynomial when ``deg f' <= -e_n``."""
    state, _ = run_min_poly(s, epsilon)
    if not f_prime.is_zero() and f_prime.degree > -state.e:
        raise RejectedInputError(f"deg(f')={f_prime.degree} exceeds -e_n={-state.e}")
    f = state.mu + f_prime * state.mu_prime
    if f.degree != state.mu.degree or not is_annihilator(f, s):
        raise InvariantError(f"{f} is not a minimal polynomial of {s}")
    return f

