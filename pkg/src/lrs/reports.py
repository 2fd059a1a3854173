"""Serializable results emitted by the command line tool."""

from __future__ import annotations

from dataclasses import dataclass, field

from .bm import BMTraceRow
from .domain import parse_domain
from .laurent import Poly
from .rational import RationalApprox
from .synthesis import TraceRow


def _seq_json(domain, elems) -> list[str]:
    return [domain.format(a) for a in elems]


@dataclass
class MinPolyReport:
    domain: str
    epsilon: str
    seq: list[str]
    mu: Poly
    mu_prime: Poly
    lc: int
    trace: list[TraceRow] | None = None
    numerators: list[RationalApprox] | None = None

    def to_json(self) -> dict:
        out = {
            "command": "minpoly",
            "domain": self.domain,
            "epsilon": self.epsilon,
            "seq": self.seq,
            "mu": self.mu.to_json(),
            "mu_prime": self.mu_prime.to_json(),
            "lc": self.lc,
        }
        if self.trace is not None:
            out["trace"] = [row.to_json() for row in self.trace]
        if self.numerators is not None:
            out["numerators"] = [a.to_json() for a in self.numerators]
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "MinPolyReport":
        D = parse_domain(obj["domain"])
        return cls(
            domain=obj["domain"],
            epsilon=obj["epsilon"],
            seq=obj["seq"],
            mu=Poly.from_json(obj["mu"], D),
            mu_prime=Poly.from_json(obj["mu_prime"], D),
            lc=obj["lc"],
            trace=[TraceRow.from_json(r, D) for r in obj["trace"]] if "trace" in obj else None,
            numerators=[RationalApprox.from_json(a) for a in obj["numerators"]]
            if "numerators" in obj
            else None,
        )


@dataclass
class BMReport:
    domain: str
    epsilon: str
    seq: list[str]
    rho: Poly
    lc: int
    trace: list[BMTraceRow] | None = None

    def to_json(self) -> dict:
        out = {
            "command": "bm",
            "domain": self.domain,
            "epsilon": self.epsilon,
            "seq": self.seq,
            "rho": self.rho.to_json(),
            "lc": self.lc,
        }
        if self.trace is not None:
            out["trace"] = [row.to_json() for row in self.trace]
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "BMReport":
        D = parse_domain(obj["domain"])
        return cls(
            domain=obj["domain"],
            epsilon=obj["epsilon"],
            seq=obj["seq"],
            rho=Poly.from_json(obj["rho"], D),
            lc=obj["lc"],
            trace=[BMTraceRow.from_json(r, D) for r in obj["trace"]] if "trace" in obj else None,
        )


@dataclass
class ProfileReport:
    domain: str
    epsilon: str
    seq: list[str]
    profile: list[int]
    jumps: list[int]
    lc_sum: int
    lc_sum_bound: int
    plcp: bool

    def to_json(self) -> dict:
        return {"command": "profile", **self.__dict__}

    @classmethod
    def from_json(cls, obj: dict) -> "ProfileReport":
        obj = {k: v for k, v in obj.items() if k != "command"}
        return cls(**obj)


@dataclass
class BenchReport:
    algo: str
    domain: str
    epsilon: str
    n: int
    trials: int
    seed: int
    monic: bool
    mults_min: int
    mults_mean: float
    mults_max: int
    raw_mults_max: int
    divs_max: int
    bound: int
    over_bound: int

    def to_json(self) -> dict:
        return {"command": "bench", **self.__dict__}

    @classmethod
    def from_json(cls, obj: dict) -> "BenchReport":
        obj = {k: v for k, v in obj.items() if k != "command"}
        return cls(**obj)


@dataclass
class VerifyReport:
    domain: str
    max_n: int
    sequences: int
    suites: dict[str, dict] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r["failed"] == 0 for r in self.suites.values())

    def to_json(self) -> dict:
        return {"command": "verify", **self.__dict__}

    @classmethod
    def from_json(cls, obj: dict) -> "VerifyReport":
        obj = {k: v for k, v in obj.items() if k != "command"}
        return cls(**obj)
