"""Numerators ``nu^(j)``: the polynomial part of ``mu^(j) * s``.

``nu`` obeys the same recursion as ``mu`` with the starting values
``nu^(-1) = -1`` and ``nu^(0) = 0``, so it can be carried along the
iterative minimal polynomial run at the cost of two more scalings per step.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantError, RejectedInputError
from .laurent import Poly, Seq, laurent_coeff, poly_part
from .synthesis import run_min_poly


@dataclass(frozen=True)
class RationalApprox:
    mu: Poly
    nu: Poly
    j: int
    lc: int

    def to_json(self) -> dict:
        return {"j": self.j, "lc": self.lc, "mu": self.mu.to_json(), "nu": self.nu.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "RationalApprox":
        mu = Poly.from_json(obj["mu"])
        return cls(mu=mu, nu=Poly.from_json(obj["nu"], mu.domain), j=obj["j"], lc=obj["lc"])


def _check_j(s: Seq, j: int) -> None:
    if not 0 <= j <= s.n:
        raise RejectedInputError(f"j={j} outside 0..{s.n}")


def numerator_trace(s: Seq, epsilon: int = 0) -> list[RationalApprox]:
    """``(mu^(j), nu^(j))`` for ``j = 0..n`` via the recursion."""
    D = s.domain
    _, trace = run_min_poly(s, epsilon)
    mu0 = Poly.constant(D, D.one)
    nu, nu_prime = Poly(D), Poly.constant(D, D.neg(D.one))
    delta_prime = D.one
    out = [RationalApprox(mu0, nu, 0, 0)]
    for row in trace:
        d, e = row.delta, row.e_prev
        if not D.is_zero(d):
            new = nu.scale(delta_prime).shift(max(e, 0)) - nu_prime.scale(d).shift(max(-e, 0))
            if e > 0:
                nu_prime, delta_prime = nu, d
            nu = new
        out.append(RationalApprox(row.mu, nu, row.j, row.lc))
    return out


def nu_recursive(s: Seq, epsilon: int = 0, j: int | None = None) -> Poly:
    j = s.n if j is None else j
    _check_j(s, j)
    return numerator_trace(s.prefix(j), epsilon)[j].nu


def nu_direct(s: Seq, epsilon: int = 0, j: int | None = None) -> Poly:
    """Polynomial part of ``mu^(j) * s^(j)`` computed by expansion."""
    j = s.n if j is None else j
    _check_j(s, j)
    prefix = s.prefix(j)
    state, _ = run_min_poly(prefix, epsilon)
    return poly_part(state.mu, prefix)


def check_approx(approx: RationalApprox, s: Seq) -> None:
    """Assert ``deg nu < L`` and the vanishing window ``[L-j, -1]`` of ``mu * s^(j)``."""
    prefix = s.prefix(approx.j)
    if not approx.nu.is_zero() and approx.nu.degree >= approx.lc:
        raise InvariantError(f"deg(nu)={approx.nu.degree} >= L={approx.lc} at j={approx.j}")
    D = s.domain
    for k in range(approx.lc - approx.j, 0):
        if not D.is_zero(laurent_coeff(approx.mu, prefix, k)):
            raise InvariantError(f"coefficient x^{k} of mu*s nonzero at j={approx.j}")
    if poly_part(approx.mu, prefix) != approx.nu:
        raise InvariantError(f"nu^({approx.j}) differs from the polynomial part")
