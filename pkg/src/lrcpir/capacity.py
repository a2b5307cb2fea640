"""MDS-PIR capacity and the capacity-achievability verdict for locality codes.

Capacities are exact :class:`fractions.Fraction` values.  The verdict only
ever certifies achievability through an explicit witness matrix; failing to
find one is reported as such and never as a proof of the converse.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ematrix import brute_force_search, construct, validate
from .errors import BudgetExceeded, LrcPirError, NonCompliantCode, SwapExhausted
from .lrc import LrcCode, check_compliance
from .matrix import BinaryMatrix

ACHIEVING = "ACHIEVING"
UNKNOWN = "UNKNOWN"
NOT_WITNESSED = "NOT_WITNESSED"


@dataclass(frozen=True)
class CapacityQuery:
    n: int
    k: int
    files: int | None = None  # None stands for infinitely many files

    def __post_init__(self):
        if not 1 <= self.k < self.n:
            raise ValueError(f"need 1 <= k < n, got n={self.n}, k={self.k}")
        if self.files is not None and self.files < 1:
            raise ValueError("file count must be at least 1")


def c_finite(q: CapacityQuery) -> Fraction:
    """(1 - k/n) / (1 - (k/n)^f)."""
    if q.files is None:
        raise ValueError("finite capacity needs a file count")
    rate = Fraction(q.k, q.n)
    return (1 - rate) / (1 - rate**q.files)


def c_asymptotic(q: CapacityQuery) -> Fraction:
    return 1 - Fraction(q.k, q.n)


def capacity(n: int, k: int, files: int | None = None) -> Fraction:
    q = CapacityQuery(n, k, files)
    return c_asymptotic(q) if files is None else c_finite(q)


def finite_capacity_expression(n: int, k: int) -> str:
    return f"(1 - {k}/{n}) / (1 - ({k}/{n})^f)"


@dataclass
class AchievabilityVerdict:
    status: str
    reason: str = ""
    witness: BinaryMatrix | None = None
    c_inf: Fraction | None = None
    c_f: str | None = None
    method: str | None = None

    def __bool__(self):
        return self.status == ACHIEVING

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "reason": self.reason,
            "method": self.method,
            "c_inf": None if self.c_inf is None else str(self.c_inf),
            "c_f": self.c_f,
            "witness": None if self.witness is None else self.witness.to_text().split(),
        }


def verdict(code: LrcCode, search_budget: int = 1_000_000) -> AchievabilityVerdict:
    """Certify capacity achievability by exhibiting a validated witness matrix."""
    n, k = code.n, code.k
    c_inf = c_asymptotic(CapacityQuery(n, k))
    expr = finite_capacity_expression(n, k)
    report = check_compliance(code, with_dmin=False)
    if not report.structural_ok:
        return AchievabilityVerdict(UNKNOWN, "NonCompliantCode", c_inf=c_inf, c_f=expr)
    try:
        E, trace = construct(code)
        witness, method = E.matrix, trace.method
    except (SwapExhausted, NonCompliantCode) as exc:
        reason = f"{type(exc).__name__}: {exc}"
        try:
            found = brute_force_search(code, budget=search_budget)
        except BudgetExceeded:
            return AchievabilityVerdict(UNKNOWN, reason + "; search over budget", c_inf=c_inf, c_f=expr)
        if found is None:
            return AchievabilityVerdict(
                NOT_WITNESSED, reason + "; exhaustive search found no witness", c_inf=c_inf, c_f=expr
            )
        witness, method = found, "search"
    if not validate(witness, code).verdict:
        raise LrcPirError("internal error: witness failed validation")
    return AchievabilityVerdict(ACHIEVING, "", witness, c_inf, expr, method)


__all__ = [
    "ACHIEVING",
    "AchievabilityVerdict",
    "CapacityQuery",
    "NOT_WITNESSED",
    "UNKNOWN",
    "c_asymptotic",
    "c_finite",
    "capacity",
    "verdict",
]
