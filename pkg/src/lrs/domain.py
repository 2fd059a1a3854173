"""Exact arithmetic over commutative integral domains.

Elements are plain Python ints.  For ``Integers`` every int is an element;
for ``PrimeField(p)`` elements are the residues ``0 .. p-1``.  The domain
object carries the arithmetic, so algorithms stay generic over ``D``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, DomainMismatchError, UnsupportedOperationError


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Miller-Rabin with the first twelve prime bases; exact for n < 3.3e24."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Domain:
    """Base class; subclasses implement the ring operations on ints."""

    is_field = False
    zero = 0
    one = 1

    @property
    def spec(self) -> str:
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Domain) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"<Domain {self.spec}>"

    def same_as(self, other: "Domain") -> None:
        if self.spec != other.spec:
            raise DomainMismatchError(f"{self.spec} vs {other.spec}")

    def element(self, value: int) -> int:
        raise NotImplementedError

    def parse(self, text: str) -> int:
        text = text.strip()
        try:
            value = int(text, 10)
        except ValueError:
            raise DomainError(f"cannot parse {text!r} as an element of {self.spec}") from None
        return self.element(value)

    def format(self, a: int) -> str:
        return str(a)

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def sub(self, a: int, b: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def is_zero(self, a: int) -> bool:
        return a == 0

    def inv(self, a: int) -> int:
        raise UnsupportedOperationError(f"no inverses in {self.spec}")

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))


class Integers(Domain):
    """The ring of integers, arbitrary precision."""

    @property
    def spec(self) -> str:
        return "int"

    def element(self, value: int) -> int:
        if not isinstance(value, int) or isinstance(value, bool):
            raise DomainError(f"{value!r} is not an integer")
        return value

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a


class PrimeField(Domain):
    """GF(p) for a prime p < 2**64."""

    is_field = True

    def __init__(self, p: int):
        if not isinstance(p, int) or p >= 2**64 or not is_prime(p):
            raise DomainError(f"GF(p) needs a prime p < 2**64, got {p!r}")
        self.p = p

    @property
    def spec(self) -> str:
        return f"gf:{self.p}"

    def element(self, value: int) -> int:
        if not isinstance(value, int) or isinstance(value, bool):
            raise DomainError(f"{value!r} is not an integer")
        return value % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise UnsupportedOperationError("inverse of zero")
        return pow(a, -1, self.p)


def parse_domain(spec: str) -> Domain:
    """Parse ``int`` or ``gf:<p>``."""
    spec = spec.strip().lower()
    if spec in ("int", "z", "integers"):
        return Integers()
    if spec.startswith("gf:"):
        try:
            p = int(spec[3:])
        except ValueError:
            raise DomainError(f"bad prime in domain spec {spec!r}") from None
        return PrimeField(p)
    raise DomainError(f"unknown domain spec {spec!r} (expected 'int' or 'gf:<p>')")


@dataclass
class OpCounter:
    """Tallies of ring operations.

    ``mults`` counts nontrivial products only: a product where either factor
    is 0, 1 or -1 is a copy, a negation or a zero and is tallied in
    ``trivial_mults`` instead.  ``raw_mults`` is every product performed.
    """

    mults: int = 0
    trivial_mults: int = 0
    divs: int = 0
    adds: int = 0

    @property
    def raw_mults(self) -> int:
        return self.mults + self.trivial_mults

    def __add__(self, other: "OpCounter") -> "OpCounter":
        return OpCounter(
            self.mults + other.mults,
            self.trivial_mults + other.trivial_mults,
            self.divs + other.divs,
            self.adds + other.adds,
        )

    def as_dict(self) -> dict:
        return {
            "mults": self.mults,
            "trivial_mults": self.trivial_mults,
            "raw_mults": self.raw_mults,
            "divs": self.divs,
            "adds": self.adds,
        }


class CountingDomain(Domain):
    """Wraps a domain and records every operation in an :class:`OpCounter`."""

    def __init__(self, base: Domain, counter: OpCounter | None = None):
        self.base = base
        self.counter = counter if counter is not None else OpCounter()
        self.is_field = base.is_field
        self._minus_one = base.neg(base.one)

    @property
    def spec(self) -> str:
        return self.base.spec

    def element(self, value):
        return self.base.element(value)

    def format(self, a):
        return self.base.format(a)

    def add(self, a, b):
        self.counter.adds += 1
        return self.base.add(a, b)

    def sub(self, a, b):
        self.counter.adds += 1
        return self.base.sub(a, b)

    def neg(self, a):
        return self.base.neg(a)

    def mul(self, a, b):
        trivial = (0, 1, self._minus_one)
        if a in trivial or b in trivial:
            self.counter.trivial_mults += 1
        else:
            self.counter.mults += 1
        return self.base.mul(a, b)

    def inv(self, a):
        self.counter.divs += 1
        return self.base.inv(a)

    def div(self, a, b):
        # one division, not a multiplication by an inverse
        self.counter.divs += 1
        return self.base.mul(a, self.base.inv(b))
