"""Exact feasibility oracle for cut-cone membership, plus seeded
random metric generators for cross-checking the closed forms.

Membership of d in a cone generated by the columns of M is the
feasibility of M w = d, w >= 0.  That is decided by a phase-I simplex
over Fractions on the dense tableau [M | I]: minimize the sum of the
artificial variables with Bland's anti-cycling rule (smallest-index
entering column with positive reduced profit; ties in the ratio test
broken by smallest basis variable).  Bland's rule guarantees
termination, and exact arithmetic makes the verdict a proof once the
emitted certificate is re-checked:

  * feasible: a nonnegative witness w with M w = d, verified by
    substitution before returning;
  * infeasible: a Farkas vector y with y^T M <= 0 and y^T d > 0,
    read off the optimal reduced costs and verified the same way.

Determinism: identical inputs take identical pivot sequences and
return identical certificates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from cutcones.cut_algebra import RationalMatrix, full_cut_matrix, square_cut_matrix
from cutcones.metric import Metric, num_pairs, vertex_pairs

_ZERO = Fraction(0)
_ONE = Fraction(1)

DEFAULT_CUTCONE_MAX_N = 10
DEFAULT_PAIRCUT_MAX_N = 14


@dataclass(frozen=True)
class FeasibilityResult:
    """Verdict of the LP oracle with its verified certificate.

    Exactly one of witness / farkas is set: witness is a nonnegative
    column-weight vector with M w = d; farkas is a row functional
    nonpositive on every column of M and positive on d.
    """

    feasible: bool
    witness: tuple[Fraction, ...] | None
    farkas: tuple[Fraction, ...] | None


def lp_feasibility(matrix: RationalMatrix, rhs: Sequence[Fraction]) -> FeasibilityResult:
    """Decide M w = d, w >= 0 exactly; certificate is re-verified."""
    m, ncols = matrix.rows, matrix.cols
    if len(rhs) != m:
        raise ValueError(f"rhs length {len(rhs)} != row count {m}")

    # Normalize to b >= 0 by flipping row signs; remember the signs to
    # map a Farkas vector back to the original rows.
    sign = [1] * m
    rows: list[list[Fraction]] = []
    b: list[Fraction] = []
    for i in range(m):
        bi = Fraction(rhs[i])
        row = list(matrix.row(i))
        if bi < 0:
            bi, row, sign[i] = -bi, [-x for x in row], -1
        row.extend(_ONE if k == i else _ZERO for k in range(m))
        rows.append(row)
        b.append(bi)

    total_cols = ncols + m
    basis = list(range(ncols, total_cols))
    # Reduced profit row for minimizing the artificial sum: for an
    # original column it is the column sum; artificial columns start
    # at 0.  Objective value starts at sum(b).
    z = [sum(rows[i][j] for i in range(m)) for j in range(ncols)]
    z += [_ZERO] * m
    z0 = sum(b, _ZERO)

    while True:
        enter = next((j for j in range(total_cols) if z[j] > 0), None)
        if enter is None:
            break
        best_key = None
        leave = -1
        for i in range(m):
            a = rows[i][enter]
            if a > 0:
                key = (b[i] / a, basis[i])
                if best_key is None or key < best_key:
                    best_key, leave = key, i
        if best_key is None:
            # Column sums of [M | I] rows with b >= 0 keep phase-I
            # bounded below by 0, so this cannot happen.
            raise RuntimeError("phase-I relaxation unbounded")
        _pivot(rows, b, z, enter, leave)
        basis[leave] = enter
        # Objective = sum of the basic artificial values (their costs
        # are 1 and every nonbasic variable sits at 0).
        z0 = sum((b[i] for i in range(m) if basis[i] >= ncols), _ZERO)

    if z0 == 0:
        witness = [_ZERO] * ncols
        for i, var in enumerate(basis):
            if var < ncols:
                witness[var] = b[i]
        _check_witness(matrix, rhs, witness)
        return FeasibilityResult(feasible=True, witness=tuple(witness), farkas=None)

    # Simplex multipliers: y_i = reduced profit of artificial i plus
    # its cost 1.  Map back through the row sign flips.
    y = [sign[i] * (z[ncols + i] + 1) for i in range(m)]
    _check_farkas(matrix, rhs, y)
    return FeasibilityResult(feasible=False, witness=None, farkas=tuple(y))


def _pivot(
    rows: list[list[Fraction]],
    b: list[Fraction],
    z: list[Fraction],
    enter: int,
    leave: int,
) -> None:
    piv = rows[leave][enter]
    inv = 1 / piv
    prow = [x * inv for x in rows[leave]]
    rows[leave] = prow
    b[leave] = b[leave] * inv
    pb = b[leave]
    for i, row in enumerate(rows):
        if i == leave:
            continue
        f = row[enter]
        if f:
            rows[i] = [x - f * p for x, p in zip(row, prow)]
            b[i] -= f * pb
    f = z[enter]
    if f:
        z[:] = [x - f * p for x, p in zip(z, prow)]


def _check_witness(
    matrix: RationalMatrix, rhs: Sequence[Fraction], witness: Sequence[Fraction]
) -> None:
    if any(w < 0 for w in witness):
        raise RuntimeError("simplex produced a negative witness entry")
    if list(matrix.mul_vector(witness)) != [Fraction(x) for x in rhs]:
        raise RuntimeError("simplex witness fails M w = d")


def _check_farkas(
    matrix: RationalMatrix, rhs: Sequence[Fraction], y: Sequence[Fraction]
) -> None:
    cols = matrix.transpose()
    for c in range(matrix.cols):
        total = _ZERO
        for a, yi in zip(cols.row(c), y):
            if a and yi:
                total += a * yi
        if total > 0:
            raise RuntimeError("Farkas vector is positive on a cone generator")
    if sum(yi * Fraction(x) for yi, x in zip(y, rhs)) <= 0:
        raise RuntimeError("Farkas vector is nonpositive on the target")


def cutcone_membership(
    d: Metric, *, max_n: int = DEFAULT_CUTCONE_MAX_N
) -> FeasibilityResult:
    """Exact membership of d in the full cut cone.

    Solves over all 2^n - 2 nontrivial cuts; witness weights follow
    enumerate_cuts order.  Column count is exponential, so the input
    size is capped (default n <= 10).
    """
    if d.n > max_n:
        raise ValueError(f"n={d.n} exceeds the cut-cone oracle maximum {max_n}")
    if d.n < 3:
        raise ValueError(f"need at least 3 vertices, got n={d.n}")
    return lp_feasibility(full_cut_matrix(d.n, max_n=max_n), d.d)


def paircut_membership_exact(
    d: Metric, *, max_n: int = DEFAULT_PAIRCUT_MAX_N
) -> FeasibilityResult:
    """Exact membership of d in the pair-cut cone, any n >= 3.

    Unlike the closed form this covers n in {3, 4}; for n >= 5 the two
    must agree, and on membership the witness is the unique weight
    vector (the pair-cut matrix is invertible there).
    """
    if d.n > max_n:
        raise ValueError(f"n={d.n} exceeds the pair-cut oracle maximum {max_n}")
    if d.n < 3:
        raise ValueError(f"need at least 3 vertices, got n={d.n}")
    return lp_feasibility(square_cut_matrix(d.n), d.d)


# ---------------------------------------------------------------------------
# seeded random generators (for property tests and cross-checks)


def random_rational(rng: random.Random, *, low: int, high: int, denom: int) -> Fraction:
    """Uniform p/denom with low <= p/denom <= high."""
    return Fraction(rng.randint(low * denom, high * denom), denom)


def random_l1_points_metric(
    n: int,
    rng: random.Random,
    *,
    dim: int = 3,
    coord_bound: int = 8,
    denom: int = 4,
) -> Metric:
    """Metric of n random rational points under the l1 norm.

    Always embeds in l1 by construction, hence lies in the cut cone.
    """
    pts = [
        tuple(
            random_rational(rng, low=0, high=coord_bound, denom=denom)
            for _ in range(dim)
        )
        for _ in range(n)
    ]
    return Metric.from_function(
        n, lambda i, j: sum(abs(a - b) for a, b in zip(pts[i - 1], pts[j - 1]))
    )


def random_cut_combination(
    n: int,
    rng: random.Random,
    *,
    low: int = 0,
    high: int = 3,
    denom: int = 4,
    max_n: int = 16,
) -> Metric:
    """Nonnegative random combination of all nontrivial cut metrics.

    In the cut cone by construction.  low/high bound each weight.
    """
    from cutcones.cut_algebra import cut_metric_vector, enumerate_cuts

    if low < 0:
        raise ValueError("weights must stay nonnegative")
    total = [_ZERO] * num_pairs(n)
    for c in enumerate_cuts(n, max_n=max_n):
        w = random_rational(rng, low=low, high=high, denom=denom)
        if not w:
            continue
        for idx, x in enumerate(cut_metric_vector(c)):
            if x:
                total[idx] += w
    return Metric(n, tuple(total))


def random_paircut_combination(
    n: int,
    rng: random.Random,
    *,
    low: int = 0,
    high: int = 3,
    denom: int = 4,
) -> Metric:
    """Nonnegative random combination of pair-cut metrics only.

    In the pair-cut cone (hence the cut cone) by construction.
    """
    if low < 0:
        raise ValueError("weights must stay nonnegative")
    total = [_ZERO] * num_pairs(n)
    for i, j in vertex_pairs(n):
        w = random_rational(rng, low=low, high=high, denom=denom)
        if not w:
            continue
        for idx, (a, b) in enumerate(vertex_pairs(n)):
            if (a in (i, j)) != (b in (i, j)):
                total[idx] += w
    return Metric(n, tuple(total))


def random_semimetric(
    n: int,
    rng: random.Random,
    *,
    low: int = 1,
    high: int = 8,
    denom: int = 4,
) -> Metric:
    """Random semi-metric: random positive entries repaired by taking
    shortest paths over the complete graph (Floyd-Warshall), which
    enforces every triangle inequality without leaving the rationals.
    May or may not belong to either cone.
    """
    dist = [[_ZERO] * (n + 1) for _ in range(n + 1)]
    for i, j in vertex_pairs(n):
        v = random_rational(rng, low=low, high=high, denom=denom)
        dist[i][j] = dist[j][i] = v
    for k in range(1, n + 1):
        for i in range(1, n + 1):
            dik = dist[i][k]
            for j in range(1, n + 1):
                via = dik + dist[k][j]
                if i != j and via < dist[i][j]:
                    dist[i][j] = via
    return Metric.from_function(n, lambda i, j: dist[i][j])
