"""Dense matrices over GF(q) and binary indicator matrices.

Column index sets in the public interface are 1-based, matching the usual
coding-theory convention ``[n] = {1, ..., n}``.
"""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, FieldMismatch, IndexOutOfRange, Unsolvable
from .gf import FieldSpec

BATCH = 20000


class MatrixGF:
    """Immutable dense matrix over a :class:`FieldSpec`."""

    __slots__ = ("field", "data")

    def __init__(self, field: FieldSpec, data):
        arr = np.array(data, dtype=np.int64)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1) if arr.size else arr.reshape(0, 0)
        if arr.ndim != 2:
            raise DimensionMismatch("matrix data must be two-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError(f"entries outside GF({field.q})")
        arr.setflags(write=False)
        self.field = field
        self.data = arr

    # constructors -----------------------------------------------------------
    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "MatrixGF":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, size: int) -> "MatrixGF":
        return cls(field, np.eye(size, dtype=np.int64))

    @classmethod
    def from_strings(cls, field: FieldSpec, rows: Sequence[Sequence[str] | str]) -> "MatrixGF":
        parsed = []
        for row in rows:
            tokens = row.split() if isinstance(row, str) else row
            parsed.append([field.parse_element(str(t)) for t in tokens])
        if parsed and len({len(r) for r in parsed}) != 1:
            raise DimensionMismatch("ragged matrix rows")
        return cls(field, np.array(parsed, dtype=np.int64).reshape(len(parsed), -1))

    def to_strings(self) -> list[list[str]]:
        return [[self.field.format_element(v) for v in row] for row in self.data]

    # basics -----------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def nrows(self) -> int:
        return self.data.shape[0]

    @property
    def ncols(self) -> int:
        return self.data.shape[1]

    def __eq__(self, other):
        return (
            isinstance(other, MatrixGF)
            and self.field == other.field
            and self.data.shape == other.data.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __hash__(self):
        return hash((self.field, self.data.shape, self.data.tobytes()))

    def __repr__(self):
        body = "\n".join("  " + " ".join(f"{s:>4}" for s in row) for row in self.to_strings())
        return f"MatrixGF({self.field.literal}, {self.nrows}x{self.ncols})\n{body}"

    def __getitem__(self, idx):
        return self.data[idx]

    @property
    def T(self) -> "MatrixGF":
        return MatrixGF(self.field, self.data.T)

    def __matmul__(self, other: "MatrixGF") -> "MatrixGF":
        _same_field(self, other)
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        f = self.field
        out = np.zeros((self.nrows, other.ncols), dtype=np.int64)
        for t in range(self.ncols):
            out = f.add(out, f.mul(self.data[:, t:t + 1], other.data[t:t + 1, :]))
        return MatrixGF(f, out)

    def is_zero(self) -> bool:
        return not self.data.any()

    def rows(self, idx: Iterable[int]) -> "MatrixGF":
        """Row-selected submatrix (0-based row indices)."""
        return MatrixGF(self.field, self.data[list(idx), :].reshape(-1, self.ncols))

    # linear algebra -----------------------------------------------------------
    def restrict(self, cols: Iterable[int]) -> "MatrixGF":
        """Columns ``cols`` (1-based, original order preserved)."""
        cols = list(cols)
        if any(c < 1 or c > self.ncols for c in cols):
            raise IndexOutOfRange(f"column index outside [1, {self.ncols}]: {cols}")
        idx = [c - 1 for c in cols]
        return MatrixGF(self.field, self.data[:, idx].reshape(self.nrows, len(idx)))

    def rref(self) -> tuple["MatrixGF", list[int]]:
        """Reduced row echelon form and 0-based pivot columns."""
        R, piv = _rref(self.field, self.data)
        return MatrixGF(self.field, R), piv

    def rank(self) -> int:
        return len(_rref(self.field, self.data)[1])

    def nullspace(self) -> "MatrixGF":
        """Basis of the right kernel, one vector per row; identity on free columns."""
        f = self.field
        R, piv = _rref(f, self.data)
        free = [c for c in range(self.ncols) if c not in piv]
        basis = np.zeros((len(free), self.ncols), dtype=np.int64)
        for i, c in enumerate(free):
            basis[i, c] = 1
            for r, pc in enumerate(piv):
                basis[i, pc] = f.neg(R[r, c])
        return MatrixGF(f, basis)

    def inverse(self) -> "MatrixGF":
        n = self.nrows
        if n != self.ncols:
            raise DimensionMismatch("only square matrices are invertible")
        aug = np.hstack([self.data, np.eye(n, dtype=np.int64)])
        R, piv = _rref(self.field, aug)
        if piv[:n] != list(range(n)):
            raise Unsolvable("matrix is singular")
        return MatrixGF(self.field, R[:, n:])

    def solve_erasures(self, erased: Iterable[int], received) -> np.ndarray:
        """Recover erased coordinates of a word in the kernel of ``self``.

        ``erased`` is 1-based; entries of ``received`` at erased positions are
        ignored.  Raises :class:`Unsolvable` when the erased columns are
        linearly dependent or the known symbols are inconsistent.
        """
        f = self.field
        erased = sorted(set(erased))
        word = np.array(received, dtype=np.int64).reshape(-1)
        if word.size != self.ncols:
            raise DimensionMismatch(f"received word has length {word.size}, expected {self.ncols}")
        if any(c < 1 or c > self.ncols for c in erased):
            raise IndexOutOfRange("erasure outside the code length")
        if not erased:
            return word.copy()
        e_idx = [c - 1 for c in erased]
        known = [c for c in range(self.ncols) if c not in set(e_idx)]
        word[e_idx] = 0
        # H_E x_E = -H_K y_K
        rhs = np.zeros(self.nrows, dtype=np.int64)
        for c in known:
            rhs = f.add(rhs, f.mul(self.data[:, c], word[c]))
        rhs = f.neg(rhs)
        aug = np.hstack([self.data[:, e_idx], rhs.reshape(-1, 1)])
        R, piv = _rref(f, aug)
        ne = len(e_idx)
        if len(piv) and piv[-1] == ne:
            raise Unsolvable("received symbols are inconsistent with the code")
        if len(piv) < ne:
            raise Unsolvable(f"erased columns {erased} are linearly dependent")
        word[e_idx] = R[:ne, ne]
        return word


def _same_field(*ms: MatrixGF):
    if any(m.field != ms[0].field for m in ms):
        raise FieldMismatch("matrices live over different fields")


def hconcat(blocks: Sequence[MatrixGF]) -> MatrixGF:
    if not blocks:
        raise DimensionMismatch("nothing to concatenate")
    _same_field(*blocks)
    if len({b.nrows for b in blocks}) != 1:
        raise DimensionMismatch(f"row counts differ: {[b.nrows for b in blocks]}")
    return MatrixGF(blocks[0].field, np.hstack([b.data for b in blocks]))


def vconcat(blocks: Sequence[MatrixGF]) -> MatrixGF:
    if not blocks:
        raise DimensionMismatch("nothing to concatenate")
    _same_field(*blocks)
    if len({b.ncols for b in blocks}) != 1:
        raise DimensionMismatch(f"column counts differ: {[b.ncols for b in blocks]}")
    return MatrixGF(blocks[0].field, np.vstack([b.data for b in blocks]))


def rank(M: MatrixGF) -> int:
    return M.rank()


def restrict(M: MatrixGF, cols: Iterable[int]) -> MatrixGF:
    return M.restrict(cols)


def _rref(f: FieldSpec, data: np.ndarray) -> tuple[np.ndarray, list[int]]:
    # pivot = first nonzero entry of the column, lowest row index wins
    M = np.array(data, dtype=np.int64)
    rows, cols = M.shape
    piv: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            M[[r, pr]] = M[[pr, r]]
        M[r] = f.mul(M[r], f.inv(M[r, c]))
        factors = M[:, c].copy()
        factors[r] = 0
        M = f.sub(M, f.mul(factors[:, None], M[r][None, :]))
        piv.append(c)
        r += 1
    return M, piv


def batch_rank(f: FieldSpec, stack: np.ndarray) -> np.ndarray:
    """Ranks of a stack of equally shaped matrices, shape ``(B, rows, cols)``."""
    stack = np.asarray(stack, dtype=np.int64)
    if stack.ndim != 3:
        raise DimensionMismatch("expected a (batch, rows, cols) array")
    out = np.empty(stack.shape[0], dtype=np.int64)
    for start in range(0, stack.shape[0], BATCH):
        out[start:start + BATCH] = _batch_rank_chunk(f, stack[start:start + BATCH])
    return out


def _batch_rank_chunk(f: FieldSpec, M: np.ndarray) -> np.ndarray:
    M = M.copy()
    B, R, C = M.shape
    rank = np.zeros(B, dtype=np.int64)
    rowidx = np.arange(R)
    for c in range(C):
        cand = (M[:, :, c] != 0) & (rowidx[None, :] >= rank[:, None])
        has = cand.any(axis=1) & (rank < R)
        if not has.any():
            continue
        b = np.nonzero(has)[0]
        pr = np.argmax(cand[b], axis=1)
        r0 = rank[b]
        top = M[b, r0].copy()
        M[b, r0] = M[b, pr]
        M[b, pr] = top
        pivrow = M[b, r0]
        pivrow = f.mul(f.inv(pivrow[:, c])[:, None], pivrow)
        M[b, r0] = pivrow
        factors = np.where(rowidx[None, :] > r0[:, None], M[b, :, c], 0)
        M[b] = f.sub(M[b], f.mul(factors[:, :, None], pivrow[:, None, :]))
        rank[b] += 1
    return rank


def columns_independent(H: MatrixGF, patterns: np.ndarray) -> np.ndarray:
    """For each 0/1 row of ``patterns`` tell whether the flagged columns of H are independent.

    Patterns of mixed weight are handled by padding with a zero column, which
    never adds rank.
    """
    patterns = np.asarray(patterns, dtype=bool)
    if patterns.ndim == 1:
        patterns = patterns[None, :]
    if patterns.shape[1] != H.ncols:
        raise DimensionMismatch(f"pattern length {patterns.shape[1]} != {H.ncols}")
    weights = patterns.sum(axis=1)
    out = np.ones(patterns.shape[0], dtype=bool)
    w_max = int(weights.max()) if weights.size else 0
    if w_max == 0:
        return out
    if w_max > H.nrows:
        out[weights > H.nrows] = False
    todo = np.nonzero((weights > 0) & (weights <= H.nrows))[0]
    if todo.size == 0:
        return out
    padded = np.hstack([H.data, np.zeros((H.nrows, 1), dtype=np.int64)])
    pad_col = H.ncols
    w = int(weights[todo].max())
    for start in range(0, todo.size, BATCH):
        chunk = todo[start:start + BATCH]
        # stable argsort puts flagged columns first in their natural order
        order = np.argsort(~patterns[chunk], axis=1, kind="stable")[:, :w]
        flagged = np.take_along_axis(patterns[chunk], order, axis=1)
        idx = np.where(flagged, order, pad_col)
        sub = padded[:, idx].transpose(1, 0, 2)
        out[chunk] = _batch_rank_chunk(H.field, sub) == weights[chunk]
    return out


class BinaryMatrix:
    """0/1 matrix used for erasure-pattern bookkeeping (not a code matrix)."""

    __slots__ = ("bits",)

    def __init__(self, bits):
        arr = np.array(bits, dtype=np.int64)
        if arr.ndim != 2:
            raise DimensionMismatch("binary matrix must be two-dimensional")
        if arr.size and not np.isin(arr, (0, 1)).all():
            raise ValueError("binary matrix entries must be 0 or 1")
        arr = arr.astype(np.uint8)
        arr.setflags(write=False)
        self.bits = arr

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BinaryMatrix":
        return cls(np.zeros((rows, cols), dtype=np.uint8))

    @property
    def shape(self) -> tuple[int, int]:
        return self.bits.shape

    def row_weights(self) -> list[int]:
        return [int(w) for w in self.bits.sum(axis=1)]

    def col_weights(self) -> list[int]:
        return [int(w) for w in self.bits.sum(axis=0)]

    def is_regular(self, weight: int) -> bool:
        return all(w == weight for w in self.row_weights() + self.col_weights())

    def to_text(self) -> str:
        return "\n".join("".join(str(int(b)) for b in row) for row in self.bits) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "BinaryMatrix":
        rows = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            rows.append([int(ch) for ch in line.replace(" ", "")])
        if len({len(r) for r in rows}) > 1:
            raise DimensionMismatch("ragged binary matrix")
        return cls(rows)

    def __eq__(self, other):
        return isinstance(other, BinaryMatrix) and np.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash((self.bits.shape, self.bits.tobytes()))

    def __getitem__(self, idx):
        return self.bits[idx]

    def __repr__(self):
        return f"BinaryMatrix({self.shape[0]}x{self.shape[1]})\n{self.to_text()}"
