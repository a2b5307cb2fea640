"""Construction and validation of (n-k)-regular matrices of correctable erasure patterns.

An n x n binary matrix whose rows and columns all have weight n-k, and whose
rows are erasure patterns the code can correct, is the witness that a storage
code reaches the MDS-PIR capacity.  For the locality codes of :mod:`lrcpir.lrc`
it is built in two steps:

* **Step a** fills the top-left ``L*n_c`` square with a block-circulant
  arrangement of regular ``n_c x n_c`` seeds, leaves the ``Z`` block empty and
  lets the last ``rbar`` rows erase exactly the parity coordinates.
* **Step b** runs ``rbar`` iterations that move ones from parity columns of
  the square into the ``Z`` columns until every column weight is n-k.

The swap rows and parity columns are picked deterministically (smallest
indices first) with backtracking; every touched row is re-checked for
correctability, so an unlucky choice is undone instead of trusted.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from typing import Iterator, Sequence

import numpy as np

from .code import LinearCode
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    InfeasibleRho,
    NonCompliantCode,
    SwapExhausted,
)
from .lrc import LocalityProfile, LrcCode, check_compliance
from .matrix import BinaryMatrix


@dataclass(frozen=True, eq=False)
class EMatrix:
    matrix: BinaryMatrix
    profile: LocalityProfile

    @property
    def bits(self) -> np.ndarray:
        return self.matrix.bits

    @property
    def _cut(self) -> int:
        return self.profile.L * self.profile.nc

    @property
    def E_tilde(self) -> np.ndarray:
        return self.bits[: self._cut, : self._cut]

    @property
    def Z(self) -> np.ndarray:
        return self.bits[: self._cut, self._cut:]

    @property
    def W(self) -> np.ndarray:
        return self.bits[self._cut:, : self._cut]

    @property
    def O(self) -> np.ndarray:
        return self.bits[self._cut:, self._cut:]

    def row_partition(self, i: int) -> np.ndarray:
        nc = self.profile.nc
        if i == self.profile.L + 1:
            return self.bits[self._cut:]
        return self.bits[(i - 1) * nc: i * nc]


@dataclass(frozen=True)
class StepAConfig:
    m: int
    t: int
    rho: tuple[int, ...]
    seeds: tuple[np.ndarray, ...] = dc_field(repr=False)

    @property
    def m1(self) -> int:
        return self.m + 1


def circulant(order: int, weight: int) -> np.ndarray:
    """Circulant 0/1 matrix whose first row has ``weight`` leading ones."""
    first = np.zeros(order, dtype=np.uint8)
    first[:weight] = 1
    return np.array([np.roll(first, i) for i in range(order)], dtype=np.uint8)


def step_a_config(prof: LocalityProfile, seeds: Sequence[np.ndarray] | None = None) -> StepAConfig:
    redundancy = prof.n - prof.k
    m, t = divmod(redundancy, prof.L)
    rho = tuple([m + 1] * t + [m] * (prof.L - t))
    if max(rho) > prof.nc:
        raise InfeasibleRho(f"seed weight {max(rho)} exceeds the block order n_c = {prof.nc}")
    if seeds is None:
        seeds = tuple(circulant(prof.nc, w) for w in rho)
    else:
        seeds = tuple(np.asarray(s, dtype=np.uint8) for s in seeds)
        if len(seeds) != prof.L:
            raise DimensionMismatch(f"need {prof.L} seed matrices")
        for s, w in zip(seeds, rho):
            if s.shape != (prof.nc, prof.nc) or not (
                (s.sum(axis=0) == w).all() and (s.sum(axis=1) == w).all()
            ):
                raise InfeasibleRho(f"seed is not a {w}-regular {prof.nc}x{prof.nc} matrix")
    return StepAConfig(m, t, rho, seeds)


def step_a_init(prof: LocalityProfile, seeds=None) -> tuple[EMatrix, StepAConfig]:
    cfg = step_a_config(prof, seeds)
    L, nc = prof.L, prof.nc
    E = np.zeros((prof.n, prof.n), dtype=np.uint8)
    for i in range(L):
        for h in range(L):
            E[i * nc:(i + 1) * nc, h * nc:(h + 1) * nc] = cfg.seeds[(h - i) % L]
    parity = [c - 1 for P in prof.parity_sets for c in P]
    E[L * nc:, parity] = 1
    return EMatrix(BinaryMatrix(E), prof), cfg


def swap_feasibility_margin(prof: LocalityProfile, cfg: StepAConfig) -> int:
    """Left side minus right side of the counting condition for Step b."""
    d1 = prof.delta - 1
    lhs = sum(cfg.rho[j] - d1 for j in range(prof.Lc))
    lhs += sum(cfg.m - d1 for _ in range(prof.Lc, prof.L))
    return lhs - prof.rbar


@dataclass
class PartitionSwaps:
    partition: int
    block: int
    shift: tuple[int, ...]
    rows: tuple[int, ...]
    swaps: tuple[tuple[int, int, int], ...]  # (row, parity column, Z column), 1-based

    def as_dict(self) -> dict:
        return {
            "partition": self.partition,
            "block": self.block,
            "shift": list(self.shift),
            "rows": list(self.rows),
            "swaps": [list(s) for s in self.swaps],
        }


@dataclass
class IterationRecord:
    iteration: int
    partitions: list[PartitionSwaps]
    col_weights_before: list[int]
    col_weights_after: list[int]
    all_rows_correctable: bool = True

    @property
    def swap_count(self) -> int:
        return sum(len(p.swaps) for p in self.partitions)

    def as_dict(self) -> dict:
        return {
            "iteration": self.iteration,
            "partitions": [p.as_dict() for p in self.partitions],
            "col_weights_before": self.col_weights_before,
            "col_weights_after": self.col_weights_after,
            "all_rows_correctable": self.all_rows_correctable,
        }


@dataclass
class SwapTrace:
    iterations: list[IterationRecord] = dc_field(default_factory=list)
    method: str = "two-step"
    backtracks: int = 0
    seed_attempts: int = 1

    def as_dict(self) -> dict:
        return {
            "method": self.method,
            "backtracks": self.backtracks,
            "seed_attempts": self.seed_attempts,
            "iterations": [it.as_dict() for it in self.iterations],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SwapTrace":
        its = []
        for it in data["iterations"]:
            parts = [
                PartitionSwaps(
                    p["partition"], p["block"], tuple(p["shift"]), tuple(p["rows"]),
                    tuple(tuple(s) for s in p["swaps"]),
                )
                for p in it["partitions"]
            ]
            its.append(IterationRecord(
                it["iteration"], parts, it["col_weights_before"], it["col_weights_after"],
                it["all_rows_correctable"],
            ))
        return cls(
            its, data.get("method", "two-step"), data.get("backtracks", 0), data.get("seed_attempts", 1)
        )


class _StepB:
    def __init__(self, E: EMatrix, code: LinearCode, shift_choices, row_choices, budget):
        self.prof = E.profile
        self.bits = E.bits.copy()
        self.code = code
        self.m = (self.prof.n - self.prof.k) // self.prof.L
        self.shift_choices = shift_choices or {}
        self.row_choices = row_choices or {}
        self.budget = budget
        self.spent = 0
        self.backtracks = 0
        self.records: list[IterationRecord] = []

    def _tick(self):
        self.spent += 1
        if self.spent > self.budget:
            raise SwapExhausted(f"swap search exceeded its budget of {self.budget} steps")

    def candidates(self, i: int, blk: int, zcol: int, jp: int) -> Iterator[list[tuple[int, int]]]:
        """Swap sets ``[(row, p), ...]`` (0-based) for row partition i, column partition blk."""
        prof, bits = self.prof, self.bits
        nc, d1 = prof.nc, prof.delta - 1
        rows = range((i - 1) * nc, i * nc)
        cols = [c - 1 for c in prof.block(blk)]
        P = [c - 1 for c in prof.parity_sets[blk - 1]]
        weight = {row: int(bits[row, cols].sum()) for row in rows}
        if blk <= prof.Lc:
            eligible = [row for row in rows if weight[row] > d1]
        else:
            floor = max(1, self.m - d1)
            if any(weight[row] < floor for row in rows):
                return
            eligible = list(rows)
        forced = self.row_choices.get((jp, i))
        if forced is not None:
            subsets = [tuple(r - 1 for r in forced)]
        else:
            subsets = itertools.combinations(eligible, len(P))
        for R in subsets:
            if any(r not in eligible for r in R):
                continue
            for assignment in _matchings(bits, R, P):
                self._tick()
                swapped = bits[list(R)].copy()
                for k, (row, p) in enumerate(zip(R, assignment)):
                    swapped[k, p] = 0
                    swapped[k, zcol] = 1
                if len(R) and not self.code.correctable_many(swapped).all():
                    continue
                yield list(zip(R, assignment))

    def run(self) -> bool:
        return self._iteration(1)

    def _iteration(self, jp: int) -> bool:
        prof = self.prof
        if jp > prof.rbar:
            return True
        zcol = prof.L * prof.nc + jp - 1
        shifts = [self.shift_choices[jp]] if jp in self.shift_choices else range(1, prof.L + 1)
        before = [int(w) for w in self.bits.sum(axis=0)]
        for j in shifts:
            parts: list[PartitionSwaps] = []
            if self._partition(jp, j, 1, zcol, parts, before):
                return True
            self.backtracks += 1
        return False

    def _partition(self, jp, j, i, zcol, parts, before) -> bool:
        prof = self.prof
        L = prof.L
        if i > L:
            rec = IterationRecord(jp, list(parts), before, [int(w) for w in self.bits.sum(axis=0)])
            rec.all_rows_correctable = bool(self.code.correctable_many(self.bits).all())
            if not rec.all_rows_correctable:
                return False
            self.records.append(rec)
            if self._iteration(jp + 1):
                return True
            self.records.pop()
            return False
        blk = (j - 1 + i - 1) % L + 1
        shift = tuple(1 if h == blk else 0 for h in range(1, L + 1))
        for swaps in self.candidates(i, blk, zcol, jp):
            for row, p in swaps:
                assert self.bits[row, p] == 1 and self.bits[row, zcol] == 0
                self.bits[row, p] = 0
                self.bits[row, zcol] = 1
            parts.append(PartitionSwaps(
                i, blk, shift,
                tuple(r + 1 for r, _ in swaps),
                tuple((r + 1, p + 1, zcol + 1) for r, p in swaps),
            ))
            if self._partition(jp, j, i + 1, zcol, parts, before):
                return True
            parts.pop()
            for row, p in swaps:
                self.bits[row, p] = 1
                self.bits[row, zcol] = 0
            self.backtracks += 1
        return False


def _matchings(bits: np.ndarray, R: Sequence[int], P: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Distinct parity columns for the rows of R, each landing on a one."""
    def rec(k, used):
        if k == len(R):
            yield ()
            return
        for p in P:
            if p not in used and bits[R[k], p] == 1:
                for rest in rec(k + 1, used | {p}):
                    yield (p,) + rest
    yield from rec(0, frozenset())


def step_b_swaps(
    E: EMatrix,
    code: LrcCode | LinearCode,
    shift_choices: dict[int, int] | None = None,
    row_choices: dict[tuple[int, int], Sequence[int]] | None = None,
    budget: int = 200_000,
) -> tuple[EMatrix, SwapTrace]:
    """Run the rbar swap iterations on a Step a matrix.

    ``shift_choices`` pins the active column partition of the first row
    partition per iteration (``{iteration: j}``); ``row_choices`` pins the
    swap rows per ``(iteration, row partition)``.  Both are 1-based and are
    meant for replaying a hand-made construction.
    """
    lin = code.code if isinstance(code, LrcCode) else code
    search = _StepB(E, lin, shift_choices, row_choices, budget)
    if not search.run():
        raise SwapExhausted("no admissible swap assignment exists for this code")
    trace = SwapTrace(search.records, "two-step", search.backtracks)
    return EMatrix(BinaryMatrix(search.bits), E.profile), trace


@dataclass
class ValidationReport:
    target: int
    row_weights: list[int]
    col_weights: list[int]
    row_correctable: list[bool]

    @property
    def verdict(self) -> bool:
        return (
            all(w == self.target for w in self.row_weights)
            and all(w == self.target for w in self.col_weights)
            and all(self.row_correctable)
        )

    def failures(self) -> list[str]:
        out = []
        for i, w in enumerate(self.row_weights, 1):
            if w != self.target:
                out.append(f"row {i} has weight {w}")
        for j, w in enumerate(self.col_weights, 1):
            if w != self.target:
                out.append(f"column {j} has weight {w}")
        for i, ok in enumerate(self.row_correctable, 1):
            if not ok:
                out.append(f"row {i} is not correctable")
        return out

    def as_dict(self) -> dict:
        return {
            "target": self.target,
            "row_weights": self.row_weights,
            "col_weights": self.col_weights,
            "row_correctable": self.row_correctable,
            "verdict": self.verdict,
        }


def validate(E, code) -> ValidationReport:
    lin = code.code if isinstance(code, LrcCode) else code
    bits = E.bits if isinstance(E, (EMatrix, BinaryMatrix)) else np.asarray(E)
    if bits.shape != (lin.n, lin.n):
        raise DimensionMismatch(f"E has shape {bits.shape}, expected {(lin.n, lin.n)}")
    return ValidationReport(
        lin.n - lin.k,
        [int(w) for w in bits.sum(axis=1)],
        [int(w) for w in bits.sum(axis=0)],
        [bool(b) for b in lin.correctable_many(bits)],
    )


def correctable_patterns(code: LinearCode, weight: int) -> np.ndarray:
    combos = list(itertools.combinations(range(code.n), weight))
    pats = np.zeros((len(combos), code.n), dtype=np.uint8)
    for i, c in enumerate(combos):
        pats[i, list(c)] = 1
    return pats[code.correctable_many(pats)] if len(pats) else pats


def brute_force_search(code, budget: int = 1_000_000, seed: int | None = None) -> BinaryMatrix | None:
    """Backtracking search for any valid E; ``None`` once the space is exhausted.

    Rows are drawn from the correctable weight-(n-k) patterns (lexicographic
    order, or shuffled by ``seed``).  Each step branches on the unfinished
    column with the fewest usable patterns; consecutive rows added for the
    same column are taken in nondecreasing candidate order.
    """
    lin = code.code if isinstance(code, LrcCode) else code
    n, w = lin.n, lin.n - lin.k
    cands = correctable_patterns(lin, w).astype(bool)
    if seed is not None:
        cands = cands[np.random.default_rng(seed).permutation(len(cands))]
    if w == 0:
        return BinaryMatrix.zeros(n, n)
    if not len(cands):
        return None
    index = np.arange(len(cands))
    chosen: list[int] = []
    nodes = 0

    def rec(deficit: np.ndarray, rows_left: int, last_col: int, last_idx: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"search exceeded {budget} nodes")
        if rows_left == 0:
            return True
        if (deficit > rows_left).any():
            return False
        usable = ~(cands & (deficit == 0)).any(axis=1)
        open_cols = np.nonzero(deficit > 0)[0]
        counts = cands[usable][:, open_cols].sum(axis=0)
        if (counts == 0).any():
            return False
        c = int(open_cols[np.argmin(counts)])
        lo = last_idx if c == last_col else 0
        ok = usable & cands[:, c] & (index >= lo)
        for idx in np.nonzero(ok)[0]:
            chosen.append(int(idx))
            if rec(deficit - cands[idx], rows_left - 1, c, int(idx)):
                return True
            chosen.pop()
        return False

    if rec(np.full(n, w, dtype=np.int64), n, -1, 0):
        return BinaryMatrix(cands[chosen].astype(np.uint8))
    return None


def seed_candidates(prof: LocalityProfile, limit: int = 5000) -> Iterator[tuple[np.ndarray, ...]]:
    """Regular seed tuples to try, the consecutive-ones circulants first.

    Every seed is circulant; the alternatives vary the support of its first
    row over all ``rho``-subsets in lexicographic order.
    """
    cfg = step_a_config(prof)
    per_weight = {}
    for w in set(cfg.rho):
        rows = []
        for support in itertools.combinations(range(prof.nc), w):
            first = np.zeros(prof.nc, dtype=np.uint8)
            first[list(support)] = 1
            rows.append(np.array([np.roll(first, i) for i in range(prof.nc)], dtype=np.uint8))
        per_weight[w] = rows
    for count, combo in enumerate(itertools.product(*(per_weight[w] for w in cfg.rho))):
        if count >= limit:
            return
        yield combo


def construct(
    code: LrcCode,
    seeds=None,
    fallback_search: bool = True,
    search_budget: int = 1_000_000,
    seed_limit: int = 5000,
) -> tuple[EMatrix, SwapTrace]:
    """Build and validate an E for a compliant locality code.

    The consecutive-ones circulant seeds are tried first.  If their Step a
    rows are not all correctable, or Step b runs dry, other circulant seeds
    are tried in turn.  When no seed can exist at all (a seed weight above
    n_c, which needs rbar > k) the matrix is found by
    :func:`brute_force_search` and the trace says so.
    """
    report = check_compliance(code, with_dmin=False)
    if not report.structural_ok:
        raise NonCompliantCode(f"code fails compliance: {report.as_dict()}")
    prof = code.profile
    lin = code.code
    try:
        options = [tuple(seeds)] if seeds is not None else seed_candidates(prof, seed_limit)
        step_a_config(prof, seeds)
    except InfeasibleRho:
        if not fallback_search:
            raise
        found = brute_force_search(code, budget=search_budget)
        if found is None:
            raise SwapExhausted("no E exists and the seed blocks are infeasible")
        return EMatrix(found, prof), SwapTrace([], "search")
    tried = 0
    for option in options:
        tried += 1
        E0, _ = step_a_init(prof, option)
        if not lin.correctable_many(E0.bits).all():
            continue
        try:
            E, trace = step_b_swaps(E0, lin)
        except SwapExhausted:
            continue
        if validate(E, lin).verdict:
            trace.seed_attempts = tried
            return E, trace
    raise SwapExhausted(f"no admissible construction after {tried} seed choices")


__all__ = [
    "EMatrix",
    "IterationRecord",
    "PartitionSwaps",
    "StepAConfig",
    "SwapTrace",
    "ValidationReport",
    "brute_force_search",
    "circulant",
    "construct",
    "correctable_patterns",
    "seed_candidates",
    "step_a_config",
    "step_a_init",
    "step_b_swaps",
    "swap_feasibility_margin",
    "validate",
]
