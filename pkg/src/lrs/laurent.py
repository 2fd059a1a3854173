"""Dense polynomials over a domain, finite sequences, and the finite Laurent
products ``f * s(x^-1)`` used to define annihilators.

A sequence ``s = (s_1, ..., s_n)`` is identified with the Laurent polynomial
``s_1 x^-1 + ... + s_n x^-n``.  Reading ``s_m`` outside ``1..n`` gives 0.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .domain import Domain


class Poly:
    """Polynomial with ascending coefficients; the zero polynomial is ``()``."""

    __slots__ = ("domain", "coeffs")

    def __init__(self, domain: Domain, coeffs: Iterable[int] = ()):
        c = [domain.element(a) for a in coeffs]
        while c and domain.is_zero(c[-1]):
            c.pop()
        self.domain = domain
        self.coeffs = tuple(c)

    @classmethod
    def _raw(cls, domain: Domain, coeffs: list) -> "Poly":
        # coeffs already reduced; only trim
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        f = object.__new__(cls)
        f.domain = domain
        f.coeffs = tuple(coeffs)
        return f

    @classmethod
    def constant(cls, domain: Domain, c: int) -> "Poly":
        return cls(domain, [c])

    @classmethod
    def monomial(cls, domain: Domain, k: int, c: int = 1) -> "Poly":
        return cls(domain, [0] * k + [c])

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.domain == other.domain and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.domain.spec, self.coeffs))

    def __repr__(self):
        return f"Poly({self.domain.spec}, {list(self.coeffs)})"

    def __str__(self):
        return self.to_text()

    def _check(self, other: "Poly") -> None:
        self.domain.same_as(other.domain)

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        D = self.domain
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = D.add(out[i], c)
        return Poly._raw(D, out)

    def __neg__(self) -> "Poly":
        return Poly._raw(self.domain, [self.domain.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        D = self.domain
        a, b = self.coeffs, other.coeffs
        out = list(a) + [0] * max(0, len(b) - len(a))
        for i, c in enumerate(b):
            out[i] = D.sub(out[i], c)
        return Poly._raw(D, out)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        D = self.domain
        if not self.coeffs or not other.coeffs:
            return Poly._raw(D, [])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = D.add(out[i + j], D.mul(a, b))
        return Poly._raw(D, out)

    def scale(self, c: int) -> "Poly":
        """``c * f``; one domain product per stored coefficient."""
        D = self.domain
        return Poly._raw(D, [D.mul(c, a) for a in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """``x^k * f`` for k >= 0."""
        if k < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return self
        return Poly._raw(self.domain, [0] * k + list(self.coeffs))

    def reciprocal(self) -> "Poly":
        return reciprocal(self)

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.domain.one

    def to_text(self, ascending: bool = False) -> str:
        """Compact text form, e.g. ``x^2-x-1`` or (ascending) ``1-x-x^2``."""
        D = self.domain
        if not self.coeffs:
            return "0"
        idx = range(len(self.coeffs))
        terms = []
        for k in idx if ascending else reversed(idx):
            c = self.coeffs[k]
            if c == 0:
                continue
            s = D.format(c)
            neg = s.startswith("-")
            mag = s[1:] if neg else s
            if k == 0:
                body = mag
            else:
                xk = "x" if k == 1 else f"x^{k}"
                body = xk if mag == "1" else f"{mag}*{xk}"
            terms.append(("-" if neg else "+", body))
        out = terms[0][1] if terms[0][0] == "+" else "-" + terms[0][1]
        for sign, body in terms[1:]:
            out += sign + body
        return out

    def to_json(self) -> dict:
        return {"coeffs": [self.domain.format(c) for c in self.coeffs], "domain": self.domain.spec}

    @classmethod
    def from_json(cls, obj: dict, domain: Domain | None = None) -> "Poly":
        from .domain import parse_domain

        D = domain if domain is not None else parse_domain(obj["domain"])
        return cls(D, [D.parse(c) for c in obj["coeffs"]])


def reciprocal(f: Poly) -> Poly:
    """``x^deg(f) f(1/x)``; the reciprocal of 0 is 0."""
    return Poly._raw(f.domain, list(reversed(f.coeffs)))


class Seq:
    """Finite sequence ``(s_1, ..., s_n)`` with 1-based access."""

    __slots__ = ("domain", "elems")

    def __init__(self, domain: Domain, elems: Iterable[int] = ()):
        self.domain = domain
        self.elems = tuple(domain.element(a) for a in elems)

    @classmethod
    def parse(cls, domain: Domain, text: str) -> "Seq":
        """Parse a comma/whitespace/newline separated list; ``#`` starts a comment."""
        items = []
        for line in text.splitlines():
            line = line.split("#", 1)[0]
            for tok in line.replace(",", " ").split():
                items.append(domain.parse(tok))
        return cls(domain, items)

    def __len__(self):
        return len(self.elems)

    @property
    def n(self) -> int:
        return len(self.elems)

    def __call__(self, i: int) -> int:
        """``s_i`` with the zero extension outside ``1..n``."""
        return self.elems[i - 1] if 1 <= i <= len(self.elems) else 0

    def prefix(self, j: int) -> "Seq":
        if not 0 <= j <= len(self.elems):
            raise IndexError(f"prefix length {j} outside 0..{len(self.elems)}")
        out = object.__new__(Seq)
        out.domain = self.domain
        out.elems = self.elems[:j]
        return out

    def with_domain(self, domain: Domain) -> "Seq":
        out = object.__new__(Seq)
        out.domain = domain
        out.elems = self.elems
        return out

    def __eq__(self, other):
        if not isinstance(other, Seq):
            return NotImplemented
        return self.domain == other.domain and self.elems == other.elems

    def __hash__(self):
        return hash((self.domain.spec, self.elems))

    def __repr__(self):
        return f"Seq({self.domain.spec}, {list(self.elems)})"

    def to_text(self) -> str:
        return ",".join(self.domain.format(a) for a in self.elems)


def laurent_coeff(f: Poly, s: Seq, k: int) -> int:
    """Coefficient of ``x^k`` in ``f * (s_1 x^-1 + ... + s_n x^-n)``."""
    f.domain.same_as(s.domain)
    D = f.domain
    acc = D.zero
    for i, c in enumerate(f.coeffs):
        m = i - k
        if 1 <= m <= s.n and c != 0:
            acc = D.add(acc, D.mul(c, s(m)))
    return acc


def is_annihilator(f: Poly, s: Seq) -> bool:
    """True iff ``f = 0`` or every coefficient of ``f*s`` at exponents
    ``deg(f)-n .. -1`` vanishes."""
    if f.is_zero():
        return True
    d = f.degree
    D = f.domain
    return all(D.is_zero(laurent_coeff(f, s, d - j)) for j in range(d + 1, s.n + 1))


def poly_part(f: Poly, s: Seq) -> Poly:
    """The polynomial part ``sum_{k>=0} (f*s)_k x^k``."""
    if f.is_zero():
        return f
    return Poly(f.domain, [laurent_coeff(f, s, k) for k in range(f.degree)])


def feedback_sum(g: Poly, s: Seq, j: int) -> int:
    """``g_0 s_j + g_1 s_{j-1} + ... + g_d s_{j-d}``."""
    D = g.domain
    acc = D.zero
    for k, c in enumerate(g.coeffs):
        acc = D.add(acc, D.mul(c, s(j - k)))
    return acc


def as_seq(domain: Domain, values: Sequence[int] | Seq) -> Seq:
    return values if isinstance(values, Seq) else Seq(domain, values)
