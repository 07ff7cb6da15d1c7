"""Cuts of a finite vertex set and the exact linear algebra around them.

A cut is a subset C of {1,...,n}; it determines the cut semi-metric
that is 1 on pairs split by C and 0 elsewhere.  This module provides:

  * the canonical enumeration of the 2^n - 2 nontrivial cuts, graded
    by cardinality and lexicographic within each cardinality, whose
    complement rule pairs the k-th cut with the (2^n - 1 - k)-th
    (1-based ranks);
  * the square cut-matrix (pair cuts only), its eigenprojectors and
    its exact inverse for n >= 5;
  * the vertex-pair incidence matrix behind the projector formulas;
  * the full cut-matrix with one column per nontrivial cut.

All matrices are dense tuples of Fractions.  Zero/one entries are
interned so even the widest configured case (n = 16, a 120 x 65534
full cut-matrix) stays within desk-scale memory.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from cutcones.metric import num_pairs, pair_index, vertex_pairs

_ZERO = Fraction(0)
_ONE = Fraction(1)

DEFAULT_MAX_N = 16


@dataclass(frozen=True)
class Cut:
    """Subset of {1,...,n} as a bitmask (bit k-1 set iff vertex k in C)."""

    n: int
    members: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"need at least 2 vertices, got n={self.n}")
        if not 0 <= self.members < (1 << self.n):
            raise ValueError(f"bitmask {self.members:#x} out of range for n={self.n}")

    @classmethod
    def from_members(cls, n: int, vertices: Iterable[int]) -> "Cut":
        mask = 0
        for v in vertices:
            if not 1 <= v <= n:
                raise ValueError(f"vertex {v} out of range 1..{n}")
            mask |= 1 << (v - 1)
        return cls(n, mask)

    @property
    def member_list(self) -> tuple[int, ...]:
        return tuple(v for v in range(1, self.n + 1) if self.members >> (v - 1) & 1)

    @property
    def size(self) -> int:
        return self.members.bit_count()

    @property
    def is_trivial(self) -> bool:
        """Empty or full cuts induce the zero semi-metric."""
        return self.members == 0 or self.members == (1 << self.n) - 1

    def complement(self) -> "Cut":
        return Cut(self.n, self.members ^ ((1 << self.n) - 1))

    def contains(self, v: int) -> bool:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} out of range 1..{self.n}")
        return bool(self.members >> (v - 1) & 1)

    def separates(self, i: int, j: int) -> bool:
        """True iff exactly one of i, j lies in the cut."""
        return (self.members >> (i - 1) & 1) != (self.members >> (j - 1) & 1)


def pair_cut(n: int, i: int, j: int) -> Cut:
    """The two-element cut {i, j}."""
    if i == j:
        raise ValueError("pair cut needs two distinct vertices")
    return Cut.from_members(n, (i, j))


def enumerate_cuts(n: int, *, max_n: int = DEFAULT_MAX_N) -> list[Cut]:
    """All 2^n - 2 nontrivial cuts, graded by size then lexicographic.

    The order makes the complement rule hold: with 1-based ranks, the
    complement of the k-th cut is the (2^n - 1 - k)-th.
    """
    if n < 3:
        raise ValueError(f"need at least 3 vertices, got n={n}")
    if n > max_n:
        raise ValueError(f"n={n} exceeds the configured maximum {max_n}")
    cuts = []
    for size in range(1, n):
        for members in combinations(range(1, n + 1), size):
            cuts.append(Cut.from_members(n, members))
    return cuts


def cut_metric_vector(cut: Cut) -> tuple[Fraction, ...]:
    """Pair-indexed 0/1 vector of the cut semi-metric."""
    return tuple(
        _ONE if cut.separates(i, j) else _ZERO for i, j in vertex_pairs(cut.n)
    )


# ---------------------------------------------------------------------------
# dense exact matrices


@dataclass(frozen=True)
class RationalMatrix:
    """Dense matrix of Fractions, row-major."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.entries)}")
        for r in self.entries:
            if len(r) != self.cols:
                raise ValueError(f"expected {self.cols} columns, got {len(r)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Fraction]]) -> "RationalMatrix":
        data = tuple(tuple(row) for row in rows)
        if not data:
            raise ValueError("matrix needs at least one row")
        return cls(len(data), len(data[0]), data)

    @classmethod
    def identity(cls, k: int) -> "RationalMatrix":
        return cls(
            k, k,
            tuple(
                tuple(_ONE if i == j else _ZERO for j in range(k))
                for i in range(k)
            ),
        )

    @classmethod
    def ones(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, ((_ONE,) * cols,) * rows)

    def entry(self, r: int, c: int) -> Fraction:
        return self.entries[r][c]

    def row(self, r: int) -> tuple[Fraction, ...]:
        return self.entries[r]

    def column(self, c: int) -> tuple[Fraction, ...]:
        return tuple(row[c] for row in self.entries)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            self.cols, self.rows, tuple(zip(*self.entries))
        )

    def scale(self, factor: Fraction | int) -> "RationalMatrix":
        f = Fraction(factor)
        return RationalMatrix(
            self.rows, self.cols,
            tuple(tuple(f * x for x in row) for row in self.entries),
        )

    def add(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_shape(other)
        return RationalMatrix(
            self.rows, self.cols,
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def sub(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_shape(other)
        return RationalMatrix(
            self.rows, self.cols,
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            ),
        )

    def mul(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        cols = other.transpose().entries
        return RationalMatrix(
            self.rows, other.cols,
            tuple(
                tuple(_dot(row, col) for col in cols)
                for row in self.entries
            ),
        )

    def mul_vector(self, vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
        if len(vec) != self.cols:
            raise ValueError(f"vector length {len(vec)} != column count {self.cols}")
        return tuple(_dot(row, vec) for row in self.entries)

    def _check_shape(self, other: "RationalMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )


def _dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    total = _ZERO
    for x, y in zip(a, b):
        if x and y:
            total += x * y
    return total


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Exact rank over the rationals by Gaussian elimination."""
    work = [list(map(Fraction, row)) for row in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    row_at = 0
    for col in range(ncols):
        pivot = next(
            (r for r in range(row_at, len(work)) if work[r][col]), None
        )
        if pivot is None:
            continue
        work[row_at], work[pivot] = work[pivot], work[row_at]
        piv_row = work[row_at]
        inv = 1 / piv_row[col]
        work[row_at] = piv_row = [x * inv for x in piv_row]
        for r in range(len(work)):
            if r == row_at:
                continue
            f = work[r][col]
            if f:
                work[r] = [x - f * p for x, p in zip(work[r], piv_row)]
        rank += 1
        row_at += 1
        if row_at == len(work):
            break
    return rank


# ---------------------------------------------------------------------------
# the square cut-matrix (pair cuts) and its spectral pieces


def square_cut_matrix(n: int) -> RationalMatrix:
    """m x m matrix, m = n(n-1)/2: column for each pair cut {i, j}.

    Entry (p, q) is 1 iff pair cut q splits vertex pair p, which makes
    it the adjacency matrix of the line graph of the complete graph:
    symmetric, zero diagonal, every row summing to 2(n-2).
    """
    if n < 3:
        raise ValueError(f"need at least 3 vertices, got n={n}")
    ps = vertex_pairs(n)
    cuts = [pair_cut(n, i, j) for i, j in ps]
    return RationalMatrix.from_rows(
        [[_ONE if c.separates(i, j) else _ZERO for c in cuts] for i, j in ps]
    )


def incidence_matrix(n: int) -> RationalMatrix:
    """n x m vertex/pair incidence matrix B.

    B^T B = 2I + A with A the square cut-matrix, and
    B B^T = (n-2) I + J; both identities drive the projector formulas.
    """
    if n < 3:
        raise ValueError(f"need at least 3 vertices, got n={n}")
    return RationalMatrix.from_rows(
        [
            [_ONE if v in (i, j) else _ZERO for i, j in vertex_pairs(n)]
            for v in range(1, n + 1)
        ]
    )


def _column_space_projector(n: int) -> RationalMatrix:
    """Orthogonal projector onto the column space of B^T.

    Uses (B B^T)^{-1} = (1/(n-2)) I - (1/(2(n-1)(n-2))) J, which is a
    closed form valid for all n >= 3.
    """
    b = incidence_matrix(n)
    inv = (
        RationalMatrix.identity(n)
        .scale(Fraction(1, n - 2))
        .sub(RationalMatrix.ones(n, n).scale(Fraction(1, 2 * (n - 1) * (n - 2))))
    )
    return b.transpose().mul(inv).mul(b)


def projectors(n: int) -> tuple[RationalMatrix, RationalMatrix, RationalMatrix]:
    """Eigenprojectors of the square cut-matrix for n >= 5.

    Returned in eigenvalue order (-2, n-4, 2n-4) with ranks
    n(n-3)/2, n-1 and 1.  They are symmetric, idempotent, mutually
    annihilating, and sum to the identity; the matrix itself is
    -2 P_low + (n-4) P_mid + (2n-4) P_top.
    """
    if n < 5:
        raise ValueError(f"distinct eigenvalues require n >= 5, got n={n}")
    m = num_pairs(n)
    p_col = _column_space_projector(n)
    p_top = RationalMatrix.ones(m, m).scale(Fraction(1, m))
    p_mid = p_col.sub(p_top)
    p_low = RationalMatrix.identity(m).sub(p_col)
    return p_low, p_mid, p_top


def inverse_square_cut_matrix(n: int) -> RationalMatrix:
    """Exact inverse of the square cut-matrix, n >= 5.

    -(1/2) I - (n / (2(n-2)(n-4))) P_top + ((n-2) / (2(n-4))) P_col.
    The matrix is singular at n = 4 (eigenvalue n-4 vanishes), so that
    case is rejected rather than approximated.
    """
    if n < 5:
        raise ValueError(f"square cut-matrix is invertible only for n >= 5, got n={n}")
    m = num_pairs(n)
    p_col = _column_space_projector(n)
    p_top = RationalMatrix.ones(m, m).scale(Fraction(1, m))
    return (
        RationalMatrix.identity(m)
        .scale(Fraction(-1, 2))
        .sub(p_top.scale(Fraction(n, 2 * (n - 2) * (n - 4))))
        .add(p_col.scale(Fraction(n - 2, 2 * (n - 4))))
    )


def full_cut_matrix(n: int, *, max_n: int = DEFAULT_MAX_N) -> RationalMatrix:
    """m x (2^n - 2) matrix with one 0/1 column per nontrivial cut.

    Columns follow enumerate_cuts order; the first m columns whose cuts
    are pairs agree with the corresponding square cut-matrix columns.
    Satisfies S S^T = 2^{n-2} (I + J).
    """
    cuts = enumerate_cuts(n, max_n=max_n)
    if n < 3:
        raise ValueError(f"need at least 3 vertices, got n={n}")
    return RationalMatrix.from_rows(
        [
            [_ONE if c.separates(i, j) else _ZERO for c in cuts]
            for i, j in vertex_pairs(n)
        ]
    )
