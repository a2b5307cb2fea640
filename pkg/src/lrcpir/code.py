"""Linear [n, k] codes and the structural predicates used by the constructions."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    LengthMismatch,
    RankDeficientH,
    TooLarge,
    WrongSize,
)
from .gf import FieldSpec
from .matrix import MatrixGF, batch_rank, columns_independent

ENUMERATION_LIMIT = 1 << 24


@dataclass(frozen=True)
class ErasurePattern:
    """Length-n indicator vector; ones mark erased coordinates."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("erasure pattern entries must be 0 or 1")

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "ErasurePattern":
        bits = [0] * n
        for c in support:
            if not 1 <= c <= n:
                raise LengthMismatch(f"coordinate {c} outside [1, {n}]")
            bits[c - 1] = 1
        return cls(tuple(bits))

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, b in enumerate(self.bits) if b)

    @property
    def weight(self) -> int:
        return sum(self.bits)


@dataclass(frozen=True, eq=False)
class LinearCode:
    field: FieldSpec
    G: MatrixGF
    H: MatrixGF

    def __post_init__(self):
        if self.G.ncols != self.H.ncols:
            raise DimensionMismatch("G and H disagree on the block length")

    @property
    def n(self) -> int:
        return self.H.ncols

    @property
    def k(self) -> int:
        return self.G.nrows

    def __repr__(self):
        return f"LinearCode[{self.n},{self.k}] over {self.field.literal}"

    # constructors -------------------------------------------------------------
    @classmethod
    def from_parity_check(cls, H: MatrixGF) -> "LinearCode":
        if H.rank() != H.nrows:
            raise RankDeficientH(f"parity-check matrix has rank {H.rank()} < {H.nrows} rows")
        return cls(H.field, H.nullspace(), H)

    @classmethod
    def from_generator(cls, G: MatrixGF) -> "LinearCode":
        if G.rank() != G.nrows:
            raise WrongSize("generator rows are linearly dependent")
        return cls(G.field, G, G.nullspace())

    def check_duality(self) -> bool:
        return (self.G @ self.H.T).is_zero()

    # enumeration --------------------------------------------------------------
    def _guard(self, limit: int = ENUMERATION_LIMIT):
        if self.field.q ** self.k > limit:
            raise TooLarge(f"q^k = {self.field.q}^{self.k} exceeds {limit}")

    def codewords(self, limit: int = ENUMERATION_LIMIT) -> np.ndarray:
        """All q^k codewords as rows (message order: base-q counting)."""
        self._guard(limit)
        f, q, k = self.field, self.field.q, self.k
        words = np.zeros((1, self.n), dtype=np.int64)
        for i in range(k):
            row = self.G.data[i]
            scaled = f.mul(np.arange(q)[:, None], row[None, :])  # (q, n)
            words = f.add(words[:, None, :], scaled[None, :, :]).reshape(-1, self.n)
        return words

    def dmin_bruteforce(self, limit: int = ENUMERATION_LIMIT) -> int:
        words = self.codewords(limit)
        weights = (words != 0).sum(axis=1)
        weights = weights[weights > 0]
        return int(weights.min()) if weights.size else 0

    def dmin_by_columns(self) -> int:
        """Smallest number of linearly dependent columns of H."""
        for w in range(1, self.n - self.k + 2):
            for chunk in _chunked(itertools.combinations(range(self.n), w)):
                idx = np.array(chunk)
                sub = self.H.data[:, idx].transpose(1, 0, 2)
                if (batch_rank(self.field, sub) < w).any():
                    return w
        return self.n - self.k + 1  # unreachable for k >= 1 (Singleton)

    def minimum_distance(self, limit: int = 1 << 20) -> int:
        try:
            return self.dmin_bruteforce(limit)
        except TooLarge:
            return self.dmin_by_columns()

    # predicates -------------------------------------------------------------
    def is_mds(self, method: str = "rank", limit: int = ENUMERATION_LIMIT) -> bool:
        """d_min == n-k+1, by subset ranks of H (default) or by enumeration."""
        if method == "enumerate":
            return self.dmin_bruteforce(limit) == self.n - self.k + 1
        if method != "rank":
            raise ValueError(f"unknown method {method!r}")
        r = self.n - self.k
        if r == 0 or self.k == 0:
            return True
        for chunk in _chunked(itertools.combinations(range(self.n), r)):
            sub = self.H.data[:, np.array(chunk)].transpose(1, 0, 2)
            if (batch_rank(self.field, sub) < r).any():
                return False
        return True

    def is_information_set(self, J: Sequence[int]) -> bool:
        J = list(J)
        if len(J) != self.k or len(set(J)) != len(J):
            raise WrongSize(f"information set candidates need {self.k} distinct coordinates")
        return self.G.restrict(J).rank() == self.k

    def puncture(self, S: Iterable[int]) -> "LinearCode":
        S = sorted(set(S))
        if not S:
            raise ValueError("puncturing set must be nonempty")
        Gs = self.G.restrict(S)
        R, piv = Gs.rref()
        basis = R.rows(range(len(piv)))
        return LinearCode(self.field, basis, basis.nullspace())

    def _bits(self, e) -> np.ndarray:
        bits = np.asarray(e.bits if isinstance(e, ErasurePattern) else e, dtype=np.int64)
        if bits.shape[-1] != self.n:
            raise LengthMismatch(f"pattern length {bits.shape[-1]} != n = {self.n}")
        return bits

    def is_correctable(self, e) -> bool:
        return bool(columns_independent(self.H, self._bits(e))[0])

    def correctable_many(self, patterns) -> np.ndarray:
        return columns_independent(self.H, self._bits(patterns))

    def correctable_by_enumeration(self, e, words: np.ndarray | None = None) -> bool:
        """Reference oracle: every non-erased projection has at most one completion."""
        mask = self._bits(e).astype(bool)
        if words is None:
            words = self.codewords()
        kept = words[:, ~mask]
        return np.unique(kept, axis=0).shape[0] == words.shape[0]


def _chunked(it, size: int = 20000):
    while True:
        chunk = list(itertools.islice(it, size))
        if not chunk:
            return
        yield chunk


def from_parity_check(H: MatrixGF) -> LinearCode:
    return LinearCode.from_parity_check(H)


def systematic_parity_check(G: MatrixGF) -> tuple[MatrixGF, MatrixGF]:
    """Bring G to (I_k | B) by row operations and return it with H = (-B^T | I)."""
    f = G.field
    k, n = G.shape
    R, piv = G.rref()
    if piv != list(range(k)):
        raise WrongSize("the first k columns of G are not an information set")
    B = R.data[:, k:]
    H = np.hstack([f.neg(B.T), np.eye(n - k, dtype=np.int64)])
    return R, MatrixGF(f, H)


def reed_solomon(field: FieldSpec, n: int, k: int) -> LinearCode:
    """Systematic [n, k] Reed-Solomon code on points 1, z, ..., z^(n-1)."""
    if not 1 <= k <= n <= field.q - 1:
        raise ValueError(f"need 1 <= k <= n <= q-1, got n={n}, k={k}, q={field.q}")
    points = field.exp(np.arange(n))
    V = np.array([field.power(points, i) for i in range(k)], dtype=np.int64)
    G, H = systematic_parity_check(MatrixGF(field, V))
    return LinearCode(field, G, H)


def full_space(field: FieldSpec, n: int) -> LinearCode:
    return LinearCode(field, MatrixGF.identity(field, n), MatrixGF.zeros(field, 0, n))


def repetition(field: FieldSpec, n: int) -> LinearCode:
    one = MatrixGF(field, np.ones((1, n), dtype=np.int64))
    return LinearCode.from_generator(one)


__all__ = [
    "ErasurePattern",
    "LinearCode",
    "from_parity_check",
    "full_space",
    "reed_solomon",
    "repetition",
    "systematic_parity_check",
]
