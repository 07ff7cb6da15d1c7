"""Finite semi-metrics over exact rationals.

A semi-metric on the vertex set {1, ..., n} is stored as a vector of
Fractions indexed by unordered pairs {i, j} in lexicographic order:
(1,2), (1,3), ..., (1,n), (2,3), ..., (n-1,n).  Everything downstream
(cone membership, cut decompositions, embeddings) does exact rational
arithmetic on these vectors.  Several of the membership inequalities
are tight on natural examples, so nothing here may round: floats are
rejected at the door instead of being coerced.

Vertices are 1-based throughout; pair indices are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import TYPE_CHECKING, Callable, Iterable, Sequence

if TYPE_CHECKING:
    from cutcones.cut_algebra import Cut

RationalLike = int | Fraction

_ZERO = Fraction(0)


def as_fraction(x: RationalLike) -> Fraction:
    """Coerce an int or Fraction to Fraction.  Floats are rejected."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"exact rational required, got {type(x).__name__}")
    return Fraction(x)


def num_pairs(n: int) -> int:
    """Number of unordered pairs of {1,...,n}."""
    return n * (n - 1) // 2


def vertex_pairs(n: int) -> list[tuple[int, int]]:
    """All unordered pairs of {1,...,n} in lexicographic order."""
    return list(combinations(range(1, n + 1), 2))


def pair_index(i: int, j: int, n: int) -> int:
    """Zero-based rank of the pair {i, j} in lexicographic order.

    Closed form (i-1)(2n-i)/2 + (j-i-1), a bijection onto
    0 .. n(n-1)/2 - 1 for 1 <= i < j <= n.
    """
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got ({i}, {j}) with n={n}")
    return (i - 1) * (2 * n - i) // 2 + (j - i - 1)


@dataclass(frozen=True)
class Metric:
    """Semi-metric candidate on {1,...,n}, pair-indexed vector of Fractions.

    Construction checks shape only; use validate_metric for the
    semi-metric / strict-metric axioms.  Instances are immutable and
    safe to share across threads.
    """

    n: int
    d: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"need at least 2 vertices, got n={self.n}")
        entries = tuple(as_fraction(x) for x in self.d)
        if len(entries) != num_pairs(self.n):
            raise ValueError(
                f"metric on {self.n} vertices needs {num_pairs(self.n)} "
                f"entries, got {len(entries)}"
            )
        object.__setattr__(self, "d", entries)

    @classmethod
    def from_function(cls, n: int, dist: Callable[[int, int], RationalLike]) -> "Metric":
        """Build from a symmetric distance function on vertex pairs."""
        return cls(n, tuple(as_fraction(dist(i, j)) for i, j in vertex_pairs(n)))

    def distance(self, i: int, j: int) -> Fraction:
        """d(i, j); symmetric, zero on the diagonal."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"vertices must lie in 1..{self.n}, got ({i}, {j})")
        if i == j:
            return _ZERO
        a, b = (i, j) if i < j else (j, i)
        return self.d[pair_index(a, b, self.n)]

    def scaled(self, factor: RationalLike) -> "Metric":
        """Entrywise multiple of the metric."""
        f = as_fraction(factor)
        return Metric(self.n, tuple(f * x for x in self.d))


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validate_metric.

    triangle_violations holds (i, j, k, slack) with slack =
    d(i,k) + d(k,j) - d(i,j) < 0; negative_entries holds (i, j, value);
    zero_entries holds off-diagonal pairs (i, j) with d(i,j) = 0 and is
    only populated in strict mode.  An empty report means valid.
    """

    strict: bool
    triangle_violations: tuple[tuple[int, int, int, Fraction], ...]
    negative_entries: tuple[tuple[int, int, Fraction], ...]
    zero_entries: tuple[tuple[int, int], ...]

    @property
    def valid(self) -> bool:
        return not (self.triangle_violations or self.negative_entries or self.zero_entries)


def validate_metric(d: Metric, *, strict: bool = False) -> ValidationReport:
    """Check the semi-metric axioms (strict: also no zero off-diagonal).

    Symmetry and a zero diagonal hold by construction of Metric; what
    remains is nonnegativity and every triangle inequality
    d(i,j) <= d(i,k) + d(k,j).  All violations are reported, not just
    the first.
    """
    negatives = []
    zeros = []
    for i, j in vertex_pairs(d.n):
        v = d.distance(i, j)
        if v < 0:
            negatives.append((i, j, v))
        elif strict and v == 0:
            zeros.append((i, j))
    triangles = []
    for i, j in vertex_pairs(d.n):
        dij = d.distance(i, j)
        for k in range(1, d.n + 1):
            if k == i or k == j:
                continue
            slack = d.distance(i, k) + d.distance(k, j) - dij
            if slack < 0:
                triangles.append((i, j, k, slack))
    return ValidationReport(
        strict=strict,
        triangle_violations=tuple(triangles),
        negative_entries=tuple(negatives),
        zero_entries=tuple(zeros),
    )


@dataclass(frozen=True)
class MetricSummary:
    """Trace and star traces of a metric.

    trace = sum of all pairwise distances; star_traces[i-1] = sum of
    distances from vertex i.  Twice the trace equals the sum of the
    star traces.
    """

    n: int
    trace: Fraction
    star_traces: tuple[Fraction, ...]

    def star_trace(self, i: int) -> Fraction:
        if not 1 <= i <= self.n:
            raise ValueError(f"vertex must lie in 1..{self.n}, got {i}")
        return self.star_traces[i - 1]


def summarize(d: Metric) -> MetricSummary:
    """Compute the trace and all star traces in one pass."""
    stars = [_ZERO] * d.n
    total = _ZERO
    for (i, j), v in zip(vertex_pairs(d.n), d.d):
        total += v
        stars[i - 1] += v
        stars[j - 1] += v
    return MetricSummary(n=d.n, trace=total, star_traces=tuple(stars))


def cut_trace(d: Metric, cut: "Cut") -> Fraction:
    """Sum of d(i, j) over pairs split by the cut.

    Equals the inner product of the metric vector with the cut's
    0/1 metric vector.  For a pair cut {i, j} this comes to
    s_i + s_j - 2 d(i,j).
    """
    if cut.n != d.n:
        raise ValueError(f"cut on {cut.n} vertices vs metric on {d.n}")
    if cut.is_trivial:
        raise ValueError("cut trace is defined for nontrivial cuts only")
    total = _ZERO
    for (i, j), v in zip(vertex_pairs(d.n), d.d):
        if cut.separates(i, j):
            total += v
    return total
