"""Brute-force minimal annihilator degree.

Shares nothing with the synthesis algorithms.  For each candidate degree
``d = 0, 1, ...`` the annihilator equations

    f_0 s_i + f_1 s_{i+1} + ... + f_d s_{i+d} = 0,   1 <= i <= n - d

are solved directly, either by exact elimination with ``f_d = 1`` (any
annihilator of degree ``d`` can be scaled to that over a field, or over the
fraction field of the integers) or by trying every coefficient vector.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .domain import Integers, PrimeField
from .errors import BudgetExceededError, RejectedInputError
from .laurent import Poly, Seq

SEARCH_BUDGET = 10**7


class Method(enum.Enum):
    EXHAUSTIVE = "exhaustive"
    LINEAR = "linear"


@dataclass(frozen=True)
class OracleResult:
    min_degree: int
    witness: Poly
    method: Method


def residuals(coeffs: list, s: tuple, d: int) -> list:
    """Left-hand sides of the annihilator equations for a degree-``d`` candidate."""
    n = len(s)
    return [sum(coeffs[k] * s[i - 1 + k] for k in range(d + 1)) for i in range(1, n - d + 1)]


def _solve_monic(s: tuple, d: int, field) -> list | None:
    """Solve for ``f_0..f_{d-1}`` with ``f_d = 1``; None if inconsistent.

    ``field`` is ``(reduce, inverse)``: both act on ints mod p, or on Fractions.
    """
    reduce, inverse = field
    n = len(s)
    rows = [[reduce(s[i - 1 + k]) for k in range(d)] + [reduce(-s[i - 1 + d])] for i in range(1, n - d + 1)]
    pivots = []
    r = 0
    for col in range(d):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = inverse(rows[r][col])
        rows[r] = [reduce(a * inv) for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                c = rows[i][col]
                rows[i] = [reduce(a - c * b) for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(row[d] != 0 for row in rows[r:]):
        return None
    sol = [reduce(0)] * d
    for i, col in enumerate(pivots):
        sol[col] = rows[i][d]  # free variables set to 0
    return sol + [reduce(1)]


def brute_min_poly_field(s: Seq, method: Method | str = Method.LINEAR) -> OracleResult:
    D = s.domain
    if not isinstance(D, PrimeField):
        raise RejectedInputError(f"field oracle needs gf:<p>, not {D.spec}")
    method = Method(method)
    p = D.p
    vals = s.elems
    n = len(vals)
    if method is Method.LINEAR:
        field = (lambda a: a % p, lambda a: pow(a, -1, p))
        for d in range(n + 1):
            sol = _solve_monic(vals, d, field)
            if sol is not None:
                return OracleResult(d, Poly(D, sol), method)
    else:
        for d in range(n + 1):
            if p ** (d + 1) > SEARCH_BUDGET:
                raise BudgetExceededError(f"exhaustive search over {p}^{d + 1} candidates")
            for low in itertools.product(range(p), repeat=d):
                for lead in range(1, p):
                    f = list(low) + [lead]
                    if all(r % p == 0 for r in residuals(f, vals, d)):
                        return OracleResult(d, Poly(D, f), method)
    raise AssertionError("degree n always annihilates")  # pragma: no cover


def brute_min_poly_int(s: Seq) -> OracleResult:
    """Minimal degree over the rationals, witness cleared to content 1."""
    D = s.domain
    if not isinstance(D, Integers):
        raise RejectedInputError(f"integer oracle needs int, not {D.spec}")
    vals = s.elems
    field = (Fraction, lambda a: 1 / Fraction(a))
    for d in range(len(vals) + 1):
        sol = _solve_monic(vals, d, field)
        if sol is None:
            continue
        den = lcm(*(c.denominator for c in sol))
        ints = [int(c * den) for c in sol]
        g = 0
        for c in ints:
            g = gcd(g, c)
        return OracleResult(d, Poly(D, [c // g for c in ints]), Method.LINEAR)
    raise AssertionError("degree n always annihilates")  # pragma: no cover


def brute_min_poly(s: Seq, method: Method | str = Method.LINEAR) -> OracleResult:
    if isinstance(s.domain, Integers):
        return brute_min_poly_int(s)
    return brute_min_poly_field(s, method)


def is_witness(f: Poly, s: Seq) -> bool:
    """Direct check of the annihilator equations, independent of :mod:`lrs.laurent`."""
    if f.is_zero():
        return True
    d = f.degree
    res = residuals(list(f.coeffs), s.elems, d)
    if isinstance(s.domain, PrimeField):
        return all(r % s.domain.p == 0 for r in res)
    return all(r == 0 for r in res)
