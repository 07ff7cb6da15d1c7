"""The full cut cone: candidate decompositions, a sufficient
membership condition, certificates, and the kernel of the cut-matrix.

The full cut-matrix S has one 0/1 column per nontrivial cut.  Because
S S^T = 2^{n-2} (I + J) is invertible, the minimum-norm solution of
S w = d is w = S^T (S S^T)^{-1} d, which evaluates cut by cut to

    w_C = (s_C - Tr(d) |C|(n-|C|) / (m+1)) / 2^{n-2},    m = n(n-1)/2,

with s_C the cut trace.  Nonnegativity of every w_C is therefore a
sufficient condition for membership in the cut cone (never a proof of
non-membership: other nonnegative solutions may exist when this one
fails).  By complement symmetry only one representative per
complement pair {C, V - C} needs checking.

The kernel of S (dimension 2^n - 2 - m) is spanned by

    phi_k  = e_{C_k} - e_{complement of C_k}      for singletons C_k,
    psi_T  = sum over nonempty proper C <= T of (-1)^{|C|} e_C
                                                  for 3 <= |T| <= n,

where e_C is the standard basis vector at the enumeration index of C.
For n in {3, 4} the same construction is emitted but flagged
non-normative (the count degenerates there).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from cutcones.cut_algebra import (
    DEFAULT_MAX_N,
    Cut,
    cut_metric_vector,
    enumerate_cuts,
)
from cutcones.metric import Metric, cut_trace, num_pairs, summarize, vertex_pairs

_ZERO = Fraction(0)


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class CutCertificate:
    """Weighted list of cuts asserting d = sum of weight * cut metric."""

    n: int
    cuts: tuple[Cut, ...]
    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.cuts) != len(self.weights):
            raise ValueError(
                f"{len(self.cuts)} cuts vs {len(self.weights)} weights"
            )
        for c in self.cuts:
            if c.n != self.n:
                raise ValueError(f"cut on {c.n} vertices in certificate for n={self.n}")


def certificate_metric(cert: CutCertificate) -> Metric:
    """Reconstruct the metric a certificate claims to decompose."""
    total = [_ZERO] * num_pairs(cert.n)
    for cut, w in zip(cert.cuts, cert.weights):
        if not w:
            continue
        for idx, x in enumerate(cut_metric_vector(cut)):
            if x:
                total[idx] += w
    return Metric(cert.n, tuple(total))


def certificate_from_weights(
    n: int, weights: Sequence[Fraction], *, max_n: int = DEFAULT_MAX_N
) -> CutCertificate:
    """Package a full weight vector (enumerate_cuts order), dropping zeros."""
    cuts = enumerate_cuts(n, max_n=max_n)
    if len(weights) != len(cuts):
        raise ValueError(f"expected {len(cuts)} weights, got {len(weights)}")
    kept = [(c, w) for c, w in zip(cuts, weights) if w]
    return CutCertificate(
        n=n,
        cuts=tuple(c for c, _ in kept),
        weights=tuple(w for _, w in kept),
    )


@dataclass(frozen=True)
class CertificateReport:
    """Outcome of verifying a certificate against a metric.

    negative_weights lists (cut, weight) entries below zero; mismatch
    holds the first pair (lexicographic) where the reconstruction
    differs, as ((i, j), reconstructed, expected), or None.
    """

    valid: bool
    negative_weights: tuple[tuple[Cut, Fraction], ...]
    mismatch: tuple[tuple[int, int], Fraction, Fraction] | None


def verify_cut_certificate(cert: CutCertificate, d: Metric) -> CertificateReport:
    """Exactly recompute the weighted sum and compare with d."""
    if cert.n != d.n:
        raise ValueError(f"certificate for n={cert.n} vs metric on n={d.n}")
    negatives = tuple(
        (c, w) for c, w in zip(cert.cuts, cert.weights) if w < 0
    )
    built = certificate_metric(cert)
    mismatch = None
    for (i, j), got, want in zip(vertex_pairs(d.n), built.d, d.d):
        if got != want:
            mismatch = ((i, j), got, want)
            break
    return CertificateReport(
        valid=not negatives and mismatch is None,
        negative_weights=negatives,
        mismatch=mismatch,
    )


# ---------------------------------------------------------------------------
# the minimum-norm candidate and the sufficient condition


def candidate_solution(
    d: Metric, *, max_n: int = DEFAULT_MAX_N
) -> tuple[Fraction, ...]:
    """Minimum-norm solution of S w = d, in enumerate_cuts order.

    Always satisfies the linear system exactly (checked property, not
    assumption); entries may be negative.  Linear in d.
    """
    n = d.n
    if n < 3:
        raise ValueError(f"need at least 3 vertices, got n={n}")
    cuts = enumerate_cuts(n, max_n=max_n)
    m = num_pairs(n)
    trace = summarize(d).trace
    scale = Fraction(1, 2 ** (n - 2))
    return tuple(
        scale * (cut_trace(d, c) - Fraction(trace * c.size * (n - c.size), m + 1))
        for c in cuts
    )


@dataclass(frozen=True)
class SufficiencyVerdict:
    """Result of the sufficient condition for cut-cone membership.

    status is "member" or "inconclusive"; the condition can never
    prove non-membership.  slacks lists (cut, slack) for one
    representative per complement pair, slack =
    s_C - |C|(n-|C|) Tr/(m+1); failing collects the representatives
    with negative slack.  On "member", certificate carries the
    nonnegative candidate decomposition.
    """

    n: int
    status: str
    certificate: CutCertificate | None
    slacks: tuple[tuple[Cut, Fraction], ...]
    failing: tuple[Cut, ...]


def sufficient_condition(
    d: Metric, *, max_n: int = DEFAULT_MAX_N
) -> SufficiencyVerdict:
    """Test whether the minimum-norm candidate is nonnegative.

    Checks s_C >= |C|(n-|C|) Tr(d)/(m+1) over the 2^{n-1} - 1
    complement-class representatives (cuts containing vertex 1); the
    slack is invariant under complementation.  If all pass, d is in
    the cut cone and the candidate weights form a certificate.
    """
    n = d.n
    if n < 3:
        raise ValueError(f"need at least 3 vertices, got n={n}")
    cuts = enumerate_cuts(n, max_n=max_n)
    m = num_pairs(n)
    trace = summarize(d).trace
    slacks = []
    failing = []
    for c in cuts:
        if not c.contains(1):
            continue
        slack = cut_trace(d, c) - Fraction(trace * c.size * (n - c.size), m + 1)
        slacks.append((c, slack))
        if slack < 0:
            failing.append(c)
    if failing:
        return SufficiencyVerdict(
            n=n,
            status="inconclusive",
            certificate=None,
            slacks=tuple(slacks),
            failing=tuple(failing),
        )
    cert = certificate_from_weights(n, candidate_solution(d, max_n=max_n), max_n=max_n)
    return SufficiencyVerdict(
        n=n,
        status="member",
        certificate=cert,
        slacks=tuple(slacks),
        failing=(),
    )


# ---------------------------------------------------------------------------
# kernel of the full cut-matrix


@dataclass(frozen=True)
class KernelVector:
    """Sparse kernel vector: (cut index, coefficient) pairs, index-sorted."""

    label: str
    kind: str  # "phi" | "psi"
    entries: tuple[tuple[int, Fraction], ...]

    def dense(self, length: int) -> tuple[Fraction, ...]:
        out = [_ZERO] * length
        for idx, coeff in self.entries:
            out[idx] = coeff
        return tuple(out)


@dataclass(frozen=True)
class KernelBasis:
    """Basis of the kernel of the full cut-matrix.

    Vectors are ordered phi_1 .. phi_{n-1} then psi_T by (|T|, lex).
    normative is False for n in {3, 4}, where the generic count
    2^n - 2 - m degenerates (0 at n=4, 1 at n=3) while the same
    construction is still emitted for inspection.
    """

    n: int
    vectors: tuple[KernelVector, ...]
    normative: bool

    @property
    def dimension(self) -> int:
        return len(self.vectors)


def _cut_index_map(n: int, max_n: int) -> dict[int, int]:
    return {c.members: k for k, c in enumerate(enumerate_cuts(n, max_n=max_n))}


def phi_vector(n: int, k: int, *, max_n: int = DEFAULT_MAX_N) -> KernelVector:
    """phi_k = e at cut rank k minus e at rank 2^n - 1 - k (1-based).

    Since the enumeration pairs complements at mirrored ranks, this is
    the singleton {k} minus its complement; complements induce the
    same cut metric, so S phi_k = 0.
    """
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k}")
    total = (1 << n) - 2
    return KernelVector(
        label=f"phi_{k}",
        kind="phi",
        entries=((k - 1, Fraction(1)), (total - k, Fraction(-1))),
    )


def psi_vector(
    n: int, subset: Iterable[int], *, max_n: int = DEFAULT_MAX_N
) -> KernelVector:
    """psi_T = sum over nonempty proper cuts C <= T of (-1)^{|C|} e_C.

    Defined for any nonempty T <= {1,...,n}; the kernel basis uses
    |T| >= 3, but smaller T are useful for identity checks
    (S psi_{T} telescopes by inclusion-exclusion).
    """
    members = tuple(sorted(set(subset)))
    if not members:
        raise ValueError("subset must be nonempty")
    if members[0] < 1 or members[-1] > n:
        raise ValueError(f"subset {members} out of range 1..{n}")
    index_of = _cut_index_map(n, max_n)
    full = (1 << n) - 1
    entries = {}
    for size in range(1, len(members) + 1):
        sign = Fraction(-1) if size % 2 else Fraction(1)
        for sub in combinations(members, size):
            mask = 0
            for v in sub:
                mask |= 1 << (v - 1)
            if mask == full:
                continue
            entries[index_of[mask]] = sign
    label = "psi_{" + ",".join(map(str, members)) + "}"
    return KernelVector(
        label=label,
        kind="psi",
        entries=tuple(sorted(entries.items())),
    )


def kernel_basis(n: int, *, max_n: int = DEFAULT_MAX_N) -> KernelBasis:
    """Kernel basis of the full cut-matrix: the phi and psi vectors.

    For n >= 5 the 2^n - 2 - m vectors are linearly independent and
    span the kernel exactly.  For n in {3, 4} the emitted family is
    flagged non-normative.
    """
    if n < 3:
        raise ValueError(f"need at least 3 vertices, got n={n}")
    if n > max_n:
        raise ValueError(f"n={n} exceeds the configured maximum {max_n}")
    vectors = [phi_vector(n, k, max_n=max_n) for k in range(1, n)]
    for size in range(3, n + 1):
        for subset in combinations(range(1, n + 1), size):
            vectors.append(psi_vector(n, subset, max_n=max_n))
    return KernelBasis(n=n, vectors=tuple(vectors), normative=n >= 5)


def apply_full_cut_matrix(
    n: int,
    entries: Iterable[tuple[int, Fraction]],
    *,
    max_n: int = DEFAULT_MAX_N,
) -> tuple[Fraction, ...]:
    """Image under the full cut-matrix of a sparse coefficient vector.

    entries are (cut index, coefficient) pairs in enumerate_cuts
    indexing.  Avoids materializing the matrix; used to check kernel
    membership (all-zero image).
    """
    cuts = enumerate_cuts(n, max_n=max_n)
    total = [_ZERO] * num_pairs(n)
    for idx, coeff in entries:
        if not coeff:
            continue
        for p, x in enumerate(cut_metric_vector(cuts[idx])):
            if x:
                total[p] += coeff
    return tuple(total)
