"""Distance-optimal (r, delta) information locality codes.

Coordinates follow a fixed layout: local group ``j`` occupies
``S_j = {(j-1)*n_c + 1, ..., j*n_c}`` with its ``r`` systematic symbols first
and its ``delta-1`` local parities last; the ``a`` global parities close the
codeword.  With this layout the parity-check matrix is::

    P_1 I            |
          P_2 I      |
               ...   |
    M_1 0 M_2 0 ...  | I_a

and stacking the ``P_j`` over the ``M_j`` next to an identity gives the parity
check of the [n', k] parent code, ``n' = n - (L_c - 1)(delta - 1)``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Sequence

import numpy as np

from .code import LinearCode
from .errors import (
    DimensionMismatch,
    InconsistentLength,
    IndivisibleLocality,
    NotMds,
    NotSystematic,
    ParameterMismatch,
    TooLarge,
    Unsolvable,
)
from .gf import FieldSpec
from .matrix import MatrixGF, hconcat, vconcat


@dataclass(frozen=True)
class LocalityProfile:
    n: int
    k: int
    r: int
    delta: int

    @property
    def Lc(self) -> int:
        return self.k // self.r

    @property
    def nc(self) -> int:
        return self.r + self.delta - 1

    @property
    def L(self) -> int:
        return self.n // self.nc

    @property
    def rbar(self) -> int:
        return self.n % self.nc

    @property
    def a(self) -> int:
        """Number of global parities."""
        return self.n - self.Lc * self.nc

    @property
    def n_prime(self) -> int:
        return self.n - (self.Lc - 1) * (self.delta - 1)

    @property
    def distance_bound(self) -> int:
        return self.n - self.k + 1 - (math.ceil(self.k / self.r) - 1) * (self.delta - 1)

    def block(self, j: int) -> tuple[int, ...]:
        """Coordinates of column partition ``j`` in ``1 .. L+1``."""
        if not 1 <= j <= self.L + 1:
            raise IndexError(f"column partition {j} outside [1, {self.L + 1}]")
        if j == self.L + 1:
            return tuple(range(self.L * self.nc + 1, self.n + 1))
        return tuple(range((j - 1) * self.nc + 1, j * self.nc + 1))

    @cached_property
    def parity_sets(self) -> tuple[tuple[int, ...], ...]:
        """P_1 .. P_{L+1}: local parities of each group, then global parity blocks.

        P_{L+1} is left out when it would be empty (rbar = 0).
        """
        out = []
        for j in range(1, self.L + (2 if self.rbar else 1)):
            blk = self.block(j)
            out.append(blk[self.r:] if j <= self.Lc else blk)
        return tuple(out)

    @cached_property
    def local_sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.block(j) for j in range(1, self.Lc + 1))

    @property
    def systematic(self) -> tuple[int, ...]:
        return tuple(c for S in self.local_sets for c in S[: self.r])

    @property
    def global_parities(self) -> tuple[int, ...]:
        return tuple(range(self.Lc * self.nc + 1, self.n + 1))


def profile(n: int, k: int, r: int, delta: int) -> LocalityProfile:
    if r < 1 or delta < 1 or k < 1:
        raise ParameterMismatch("r, delta and k must be positive")
    if k % r:
        raise IndivisibleLocality(f"r = {r} does not divide k = {k}")
    nc = r + delta - 1
    if nc > n or (k // r) * nc > n:
        raise InconsistentLength(f"{k // r} local codes of length {nc} do not fit in n = {n}")
    return LocalityProfile(n, k, r, delta)


def assemble_parity_check(
    prof: LocalityProfile, P_blocks: Sequence[MatrixGF], M_blocks: Sequence[MatrixGF]
) -> MatrixGF:
    f = P_blocks[0].field
    n, r, d1, a = prof.n, prof.r, prof.delta - 1, prof.a
    H = np.zeros((prof.n - prof.k, n), dtype=np.int64)
    for j, S in enumerate(prof.local_sets):
        c0 = S[0] - 1
        rows = slice(j * d1, (j + 1) * d1)
        H[rows, c0:c0 + r] = P_blocks[j].data
        H[rows, c0 + r:c0 + r + d1] = np.eye(d1, dtype=np.int64)
        H[prof.Lc * d1:, c0:c0 + r] = M_blocks[j].data
    H[prof.Lc * d1:, n - a:] = np.eye(a, dtype=np.int64)
    return MatrixGF(f, H)


@dataclass(frozen=True, eq=False)
class LrcCode:
    profile: LocalityProfile
    field: FieldSpec
    P_blocks: tuple[MatrixGF, ...]
    M_blocks: tuple[MatrixGF, ...]
    H: MatrixGF = dc_field(default=None)

    def __post_init__(self):
        prof = self.profile
        if len(self.P_blocks) != prof.Lc or len(self.M_blocks) != prof.Lc:
            raise DimensionMismatch(f"expected {prof.Lc} P and M blocks")
        for P in self.P_blocks:
            if P.shape != (prof.delta - 1, prof.r):
                raise DimensionMismatch(f"P block has shape {P.shape}, expected {(prof.delta - 1, prof.r)}")
        for M in self.M_blocks:
            if M.shape != (prof.a, prof.r):
                raise DimensionMismatch(f"M block has shape {M.shape}, expected {(prof.a, prof.r)}")
        if self.H is None:
            object.__setattr__(self, "H", self.template())
        elif self.H.shape != (prof.n - prof.k, prof.n):
            raise DimensionMismatch(f"H has shape {self.H.shape}")

    @classmethod
    def from_blocks(cls, field, n, k, r, delta, P_blocks, M_blocks) -> "LrcCode":
        prof = profile(n, k, r, delta)
        P = tuple(_as_matrix(field, b, prof.delta - 1, prof.r) for b in P_blocks)
        M = tuple(_as_matrix(field, b, prof.a, prof.r) for b in M_blocks)
        return cls(prof, field, P, M)

    @classmethod
    def from_parity_check(cls, H: MatrixGF, k: int, r: int, delta: int) -> "LrcCode":
        """Read the P and M blocks off a parity-check matrix laid out as above.

        H is kept as given, so a matrix that deviates from the block template
        is detected by :func:`check_compliance` rather than silently repaired.
        """
        prof = profile(H.ncols, k, r, delta)
        d1 = delta - 1
        P, M = [], []
        for j, S in enumerate(prof.local_sets):
            c0 = S[0] - 1
            P.append(MatrixGF(H.field, H.data[j * d1:(j + 1) * d1, c0:c0 + r]))
            M.append(MatrixGF(H.field, H.data[prof.Lc * d1:, c0:c0 + r]))
        return cls(prof, H.field, tuple(P), tuple(M), H)

    def template(self) -> MatrixGF:
        return assemble_parity_check(self.profile, self.P_blocks, self.M_blocks)

    @cached_property
    def code(self) -> LinearCode:
        return LinearCode.from_parity_check(self.H)

    @property
    def n(self) -> int:
        return self.profile.n

    @property
    def k(self) -> int:
        return self.profile.k

    @cached_property
    def h_mds(self) -> MatrixGF:
        f = self.field
        top = hconcat(list(self.P_blocks))
        if self.profile.a:
            top = vconcat([top, hconcat(list(self.M_blocks))])
        return hconcat([top, MatrixGF.identity(f, top.nrows)])

    def local_code(self, j: int) -> LinearCode:
        return self.code.puncture(self.profile.local_sets[j - 1])

    def __repr__(self):
        p = self.profile
        return f"LrcCode[n={p.n}, k={p.k}, r={p.r}, delta={p.delta}] over {self.field.literal}"


def _as_matrix(field, block, rows, cols) -> MatrixGF:
    if isinstance(block, MatrixGF):
        return block
    if rows == 0:
        return MatrixGF.zeros(field, 0, cols)
    return MatrixGF.from_strings(field, block)


def build_from_mds_parent(parent: LinearCode, r: int, delta: int) -> LrcCode:
    """Split the first delta-1 parity rows of a systematic MDS parent into local groups."""
    f = parent.field
    n_p, k = parent.n, parent.k
    if r < 1 or k % r:
        raise ParameterMismatch(f"r = {r} must divide k = {k}")
    if delta < 1 or delta - 1 > n_p - k:
        raise ParameterMismatch(f"delta - 1 = {delta - 1} exceeds the {n_p - k} parent parity rows")
    H = parent.H
    tail = H.restrict(range(k + 1, n_p + 1))
    if tail != MatrixGF.identity(f, n_p - k):
        try:
            H = tail.inverse() @ H
        except Unsolvable:
            raise NotSystematic("the last n'-k columns of the parent parity check are singular")
    parent_code = LinearCode(f, parent.G, H)
    if not parent_code.is_mds():
        raise NotMds("parent code is not MDS")
    A = H.data[:, :k]
    Lc = k // r
    d1 = delta - 1
    P = tuple(MatrixGF(f, A[:d1, j * r:(j + 1) * r]) for j in range(Lc))
    M = tuple(MatrixGF(f, A[d1:, j * r:(j + 1) * r]) for j in range(Lc))
    n = n_p + (Lc - 1) * d1
    return LrcCode(profile(n, k, r, delta), f, P, M)


@dataclass
class ComplianceReport:
    local_lengths: bool
    local_distance: bool
    information_set_in_locals: bool
    local_mds: bool
    template: bool
    parent_mds: bool
    local_dmins: list[int]
    dmin: int | None = None
    bound: int | None = None

    @property
    def distance_optimal(self) -> bool | None:
        if self.dmin is None:
            return None
        return self.dmin == self.bound

    @property
    def structural_ok(self) -> bool:
        return all((
            self.local_lengths,
            self.local_distance,
            self.information_set_in_locals,
            self.local_mds,
            self.template,
            self.parent_mds,
        ))

    @property
    def ok(self) -> bool:
        return self.structural_ok and self.distance_optimal is not False

    def as_dict(self) -> dict:
        return {
            "local_lengths": self.local_lengths,
            "local_distance": self.local_distance,
            "information_set_in_locals": self.information_set_in_locals,
            "local_mds": self.local_mds,
            "template": self.template,
            "parent_mds": self.parent_mds,
            "local_dmins": self.local_dmins,
            "dmin": self.dmin,
            "bound": self.bound,
            "distance_optimal": self.distance_optimal,
            "ok": self.ok,
        }


def check_compliance(C: LrcCode, with_dmin: bool = True) -> ComplianceReport:
    prof = C.profile
    code = C.code
    locals_ = [code.puncture(S) for S in prof.local_sets]
    local_dmins = [lc.minimum_distance() for lc in locals_]
    union = sorted(c for S in prof.local_sets for c in S)
    report = ComplianceReport(
        local_lengths=all(len(S) <= prof.nc for S in prof.local_sets),
        local_distance=all(d >= prof.delta for d in local_dmins),
        information_set_in_locals=code.G.restrict(union).rank() == prof.k,
        local_mds=all(lc.k == prof.r and lc.n == prof.nc and lc.is_mds() for lc in locals_),
        template=C.H == C.template(),
        parent_mds=LinearCode.from_parity_check(C.h_mds).is_mds(),
        local_dmins=local_dmins,
        bound=prof.distance_bound,
    )
    if with_dmin:
        report.dmin = code.minimum_distance()
    return report


@dataclass
class SimultaneousErasureResult:
    nu: tuple[int, ...]
    applicable: bool
    holds: bool
    patterns_checked: int = 0
    counterexample: tuple[int, ...] | None = None
    reason: str = ""

    @property
    def status(self) -> str:
        if not self.applicable:
            return "NotApplicable"
        return "Holds" if self.holds else "Fails"

    def __bool__(self):
        return self.holds


def simultaneous_erasure_check(C: LrcCode, nu: Sequence[int], limit: int = 10**6) -> SimultaneousErasureResult:
    """Exhaustively test simultaneous correction of delta-1+nu_j erasures per local group.

    Only local-group coordinates are erased, so all ``a`` global parities are
    available; the claim is only made when ``sum(nu) <= a``.
    """
    prof = C.profile
    nu = tuple(int(v) for v in nu)
    if len(nu) != prof.Lc or any(v < 0 for v in nu):
        raise ValueError(f"need {prof.Lc} nonnegative surpluses, got {nu}")
    if sum(nu) > prof.a:
        return SimultaneousErasureResult(nu, False, True, reason=f"sum(nu) = {sum(nu)} exceeds a = {prof.a}")
    sizes = [prof.delta - 1 + v for v in nu]
    if any(s > prof.nc for s in sizes):
        return SimultaneousErasureResult(nu, False, True, reason="more erasures than local coordinates")
    total = math.prod(math.comb(prof.nc, s) for s in sizes)
    if total > limit:
        raise TooLarge(f"{total} patterns exceed the limit {limit}")
    per_group = []
    for S, s in zip(prof.local_sets, sizes):
        per_group.append(list(itertools.combinations(S, s)))
    patterns = np.zeros((total, prof.n), dtype=np.int8)
    for row, choice in enumerate(itertools.product(*per_group)):
        for subset in choice:
            patterns[row, [c - 1 for c in subset]] = 1
    ok = C.code.correctable_many(patterns)
    bad = np.nonzero(~ok)[0]
    counter = None
    if bad.size:
        counter = tuple(int(c) + 1 for c in np.nonzero(patterns[bad[0]])[0])
    return SimultaneousErasureResult(nu, True, not bad.size, total, counter)


def feasible_surpluses(prof: LocalityProfile):
    """Every surplus vector with sum <= a and at most n_c erasures per group."""
    for nu in itertools.product(range(prof.r + 1), repeat=prof.Lc):
        if sum(nu) <= prof.a:
            yield nu
