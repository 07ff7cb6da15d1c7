"""Command-line interface.

Exit codes: 0 member/valid/success, 1 non-member/invalid, 2
inconclusive, 3 usage or input error.  Object-valued outputs (metrics,
graphs, point sets, certificates) are always emitted in their
canonical JSON file formats so commands can be piped; verdict output
honors --format text|json.  Inputs default to stdin ("-").
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from cutcones import cut_algebra, embeddings, fullcut, io as cio, metric as cm
from cutcones import oracle, paircut, sig
from cutcones.cut_algebra import RationalMatrix

EXIT_MEMBER = 0
EXIT_NON_MEMBER = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3


def _q(x: Fraction) -> str:
    return cio.format_rational(x)


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load_metric(path: str | None) -> cm.Metric:
    return cio.loads_metric(_read_text(path))


def _load_graph(path: str | None) -> sig.SimpleGraph:
    return cio.loads_graph(_read_text(path))


def _load_certificate(path: str | None) -> fullcut.CutCertificate:
    return cio.loads_certificate(_read_text(path))


def _print_payload(payload: str, out: str | None) -> None:
    if out and out != "-":
        Path(out).write_text(payload)
    else:
        sys.stdout.write(payload)


def _fmt(args: argparse.Namespace) -> str:
    return args.format or "text"


def _emit_verdict(args: argparse.Namespace, doc: dict[str, Any], lines: list[str]) -> None:
    if _fmt(args) == "json":
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# verdict commands


def _cmd_validate(args: argparse.Namespace) -> int:
    d = _load_metric(args.metric)
    report = cm.validate_metric(d, strict=args.strict)
    doc = {
        "command": "validate",
        "n": d.n,
        "strict": args.strict,
        "valid": report.valid,
        "triangle_violations": [
            {"i": i, "j": j, "k": k, "slack": _q(s)}
            for i, j, k, s in report.triangle_violations
        ],
        "negative_entries": [
            {"i": i, "j": j, "value": _q(v)} for i, j, v in report.negative_entries
        ],
        "zero_entries": [{"i": i, "j": j} for i, j in report.zero_entries],
    }
    kind = "strict metric" if args.strict else "semi-metric"
    lines = [f"{'valid' if report.valid else 'INVALID'} {kind} on {d.n} vertices"]
    for i, j, k, s in report.triangle_violations:
        lines.append(f"  triangle ({i},{j};{k}) violated, slack {_q(s)}")
    for i, j, v in report.negative_entries:
        lines.append(f"  negative entry d({i},{j}) = {_q(v)}")
    for i, j in report.zero_entries:
        lines.append(f"  zero entry d({i},{j})")
    _emit_verdict(args, doc, lines)
    return EXIT_MEMBER if report.valid else EXIT_NON_MEMBER


def _cmd_stats(args: argparse.Namespace) -> int:
    d = _load_metric(args.metric)
    s = cm.summarize(d)
    doc = {
        "command": "stats",
        "n": d.n,
        "trace": _q(s.trace),
        "star_traces": [_q(x) for x in s.star_traces],
    }
    lines = [f"n = {d.n}", f"trace = {_q(s.trace)}"]
    lines += [
        f"star trace s_{i} = {_q(x)}" for i, x in enumerate(s.star_traces, start=1)
    ]
    _emit_verdict(args, doc, lines)
    return EXIT_MEMBER


def _farkas_doc(n: int, farkas: tuple[Fraction, ...]) -> dict[str, Any]:
    return {"n": n, "farkas": [_q(x) for x in farkas]}


def _cmd_paircut(args: argparse.Namespace) -> int:
    d = _load_metric(args.metric)
    use_oracle = args.mode == "exact" or d.n < 5
    if use_oracle:
        max_n = args.max_n if args.max_n else oracle.DEFAULT_PAIRCUT_MAX_N
        result = oracle.paircut_membership_exact(d, max_n=max_n)
        doc: dict[str, Any] = {
            "command": "paircut",
            "mode": "exact",
            "n": d.n,
            "member": result.feasible,
        }
        lines = []
        if args.mode != "exact":
            lines.append(f"n = {d.n} < 5: routed to the exact oracle")
        if result.feasible:
            doc["weights"] = [_q(x) for x in result.witness]
            lines.append("member of the pair-cut cone")
            lines.append("weights: " + " ".join(_q(x) for x in result.witness))
        else:
            doc["farkas"] = [_q(x) for x in result.farkas]
            lines.append("NOT a member of the pair-cut cone")
            lines.append("farkas: " + " ".join(_q(x) for x in result.farkas))
            if args.emit_farkas:
                Path(args.emit_farkas).write_text(
                    json.dumps(_farkas_doc(d.n, result.farkas), indent=2) + "\n"
                )
        _emit_verdict(args, doc, lines)
        return EXIT_MEMBER if result.feasible else EXIT_NON_MEMBER
    verdict = paircut.paircut_membership(d)
    doc = {
        "command": "paircut",
        "mode": "closed-form",
        "n": d.n,
        "member": verdict.member,
        "weights": [_q(x) for x in verdict.weights],
        "violations": [
            {"i": i, "j": j, "slack": _q(s)} for (i, j), s in verdict.violations
        ],
    }
    lines = [
        "member of the pair-cut cone"
        if verdict.member
        else "NOT a member of the pair-cut cone"
    ]
    for (i, j), s in verdict.violations:
        lines.append(f"  pair ({i},{j}) violated, slack {_q(s)}")
    if verdict.member:
        lines.append("weights: " + " ".join(_q(x) for x in verdict.weights))
    _emit_verdict(args, doc, lines)
    return EXIT_MEMBER if verdict.member else EXIT_NON_MEMBER


def _certificate_lines(cert: fullcut.CutCertificate) -> list[str]:
    return [
        f"  cut {{{','.join(map(str, c.member_list))}}} weight {_q(w)}"
        for c, w in zip(cert.cuts, cert.weights)
    ]


def _cmd_cutcone(args: argparse.Namespace) -> int:
    d = _load_metric(args.metric)
    if args.mode == "sufficient":
        max_n = args.max_n if args.max_n else cut_algebra.DEFAULT_MAX_N
        verdict = fullcut.sufficient_condition(d, max_n=max_n)
        member = verdict.status == "member"
        doc: dict[str, Any] = {
            "command": "cutcone",
            "mode": "sufficient",
            "n": d.n,
            "status": verdict.status,
            "failing_cuts": [list(c.member_list) for c in verdict.failing],
        }
        lines = []
        if member:
            lines.append("member of the cut cone (candidate decomposition is nonnegative)")
            cert = verdict.certificate
            doc["certificate"] = cio.certificate_to_json(cert)
            lines += _certificate_lines(cert)
            if args.emit_certificate:
                cio.write_certificate(cert, args.emit_certificate)
        else:
            lines.append("inconclusive: candidate decomposition has negative weights")
            for c in verdict.failing:
                lines.append(f"  failing cut {{{','.join(map(str, c.member_list))}}}")
        _emit_verdict(args, doc, lines)
        return EXIT_MEMBER if member else EXIT_INCONCLUSIVE
    max_n = args.max_n if args.max_n else oracle.DEFAULT_CUTCONE_MAX_N
    result = oracle.cutcone_membership(d, max_n=max_n)
    doc = {
        "command": "cutcone",
        "mode": "exact",
        "n": d.n,
        "member": result.feasible,
    }
    lines = []
    if result.feasible:
        cert = fullcut.certificate_from_weights(d.n, result.witness, max_n=max_n)
        doc["certificate"] = cio.certificate_to_json(cert)
        lines.append("member of the cut cone")
        lines += _certificate_lines(cert)
        if args.emit_certificate:
            cio.write_certificate(cert, args.emit_certificate)
    else:
        doc["farkas"] = [_q(x) for x in result.farkas]
        lines.append("NOT a member of the cut cone")
        lines.append("farkas: " + " ".join(_q(x) for x in result.farkas))
        if args.emit_farkas:
            Path(args.emit_farkas).write_text(
                json.dumps(_farkas_doc(d.n, result.farkas), indent=2) + "\n"
            )
    _emit_verdict(args, doc, lines)
    return EXIT_MEMBER if result.feasible else EXIT_NON_MEMBER


def _cmd_verify_cert(args: argparse.Namespace) -> int:
    cert = _load_certificate(args.cert)
    d = _load_metric(args.metric)
    report = fullcut.verify_cut_certificate(cert, d)
    doc: dict[str, Any] = {
        "command": "verify-cert",
        "n": d.n,
        "valid": report.valid,
        "negative_weights": [
            {"members": list(c.member_list), "weight": _q(w)}
            for c, w in report.negative_weights
        ],
    }
    lines = ["certificate valid" if report.valid else "certificate INVALID"]
    for c, w in report.negative_weights:
        lines.append(f"  negative weight {_q(w)} on cut {{{','.join(map(str, c.member_list))}}}")
    if report.mismatch is not None:
        (i, j), got, want = report.mismatch
        doc["mismatch"] = {"i": i, "j": j, "reconstructed": _q(got), "expected": _q(want)}
        lines.append(f"  first mismatch at ({i},{j}): reconstructed {_q(got)}, expected {_q(want)}")
    _emit_verdict(args, doc, lines)
    return EXIT_MEMBER if report.valid else EXIT_NON_MEMBER


def _cmd_sig_verify(args: argparse.Namespace) -> int:
    d = _load_metric(args.metric)
    g = _load_graph(args.graph)
    report = sig.verify_sig_metric(d, g)
    doc = {
        "command": "sig-verify",
        "n": d.n,
        "matches": report.matches,
        "radii": [_q(x) for x in report.radii],
        "missing_edges": [list(e) for e in report.missing_edges],
        "extra_edges": [list(e) for e in report.extra_edges],
    }
    lines = [
        "metric realizes the graph as its sphere-of-influence graph"
        if report.matches
        else "metric does NOT realize the graph"
    ]
    for i, j in report.missing_edges:
        lines.append(f"  missing edge ({i},{j})")
    for i, j in report.extra_edges:
        lines.append(f"  extra edge ({i},{j})")
    _emit_verdict(args, doc, lines)
    return EXIT_MEMBER if report.matches else EXIT_NON_MEMBER


def _cmd_sig_star(args: argparse.Namespace) -> int:
    lengths = [cio.parse_rational(tok) for tok in args.lengths]
    report = sig.star_graph_obstruction(args.n, lengths)
    doc = {
        "command": "sig-star-obstruction",
        "leaves": report.leaves,
        "n": report.metric.n,
        "sig_ok": report.sig_ok,
        "member": report.verdict.member,
        "confirmed": report.confirmed,
        "violations": [
            {"i": i, "j": j, "slack": _q(s)}
            for (i, j), s in report.verdict.violations
        ],
        "metric": cio.metric_to_json(report.metric),
    }
    lines = [
        f"star with {report.leaves} leaves: metric is "
        f"{'a valid' if report.sig_ok else 'NOT a'} sphere-of-influence realization",
        "pair-cut cone: "
        + ("member (unexpected)" if report.verdict.member else "non-member (as forced)"),
    ]
    _emit_verdict(args, doc, lines)
    return EXIT_MEMBER if report.confirmed else EXIT_NON_MEMBER


# ---------------------------------------------------------------------------
# object-producing commands


def _cmd_kernel(args: argparse.Namespace) -> int:
    max_n = args.max_n if args.max_n else cut_algebra.DEFAULT_MAX_N
    basis = fullcut.kernel_basis(args.n, max_n=max_n)
    length = (1 << args.n) - 2
    if _fmt(args) == "json":
        doc = {
            "command": "kernel-basis",
            "n": basis.n,
            "dimension": basis.dimension,
            "normative": basis.normative,
            "vectors": [
                {"label": v.label, "entries": [_q(x) for x in v.dense(length)]}
                for v in basis.vectors
            ],
        }
        payload = json.dumps(doc, indent=2) + "\n"
    else:
        lines = [
            f"kernel basis for n={basis.n}: {basis.dimension} vectors"
            + ("" if basis.normative else " (non-normative below n=5)")
        ]
        for v in basis.vectors:
            lines.append(v.label + ": " + " ".join(_q(x) for x in v.dense(length)))
        payload = "\n".join(lines) + "\n"
    _print_payload(payload, args.output)
    return EXIT_MEMBER


def _cmd_embed(args: argparse.Namespace) -> int:
    if args.kind == "l1":
        cert = _load_certificate(args.cert)
        points = embeddings.l1_embedding(cert)
        if args.metric:
            d = _load_metric(args.metric)
            report = embeddings.verify_isometry(points, d)
            if not report.ok:
                for (i, j), got, want in report.mismatches:
                    print(
                        f"mismatch at ({i},{j}): embedded {_q(got)}, metric {_q(want)}",
                        file=sys.stderr,
                    )
                return EXIT_NON_MEMBER
    else:
        g = _load_graph(args.graph)
        points = embeddings.linf_sig_embedding(g)
    _print_payload(cio.dumps_points(points), args.output)
    return EXIT_MEMBER


def _cmd_sig_build(args: argparse.Namespace) -> int:
    d = _load_metric(args.metric)
    g = sig.sig_graph(d)
    _print_payload(cio.dumps_graph(g), args.output)
    return EXIT_MEMBER


def _cmd_family(args: argparse.Namespace) -> int:
    g = sig.family(args.name, *args.params)
    if args.metric is None:
        _print_payload(cio.dumps_graph(g), args.output)
        return EXIT_MEMBER
    d = sig.truncated_metric(g) if args.metric == "d0" else sig.graph_metric(g)
    _print_payload(cio.dumps_metric(d), args.output)
    return EXIT_MEMBER


_MATRICES = {
    "square": lambda n, max_n: cut_algebra.square_cut_matrix(n),
    "incidence": lambda n, max_n: cut_algebra.incidence_matrix(n),
    "inverse": lambda n, max_n: cut_algebra.inverse_square_cut_matrix(n),
    "full": lambda n, max_n: cut_algebra.full_cut_matrix(n, max_n=max_n),
    "proj-low": lambda n, max_n: cut_algebra.projectors(n)[0],
    "proj-mid": lambda n, max_n: cut_algebra.projectors(n)[1],
    "proj-top": lambda n, max_n: cut_algebra.projectors(n)[2],
}


def _cmd_matrix(args: argparse.Namespace) -> int:
    max_n = args.max_n if args.max_n else cut_algebra.DEFAULT_MAX_N
    matrix: RationalMatrix = _MATRICES[args.which](args.n, max_n)
    if _fmt(args) == "json":
        doc = {
            "command": "matrix-dump",
            "which": args.which,
            "n": args.n,
            "rows": matrix.rows,
            "cols": matrix.cols,
            "entries": [[_q(x) for x in row] for row in matrix.entries],
        }
        payload = json.dumps(doc, indent=2) + "\n"
    else:
        payload = cio.matrix_to_text(matrix)
    _print_payload(payload, args.output)
    return EXIT_MEMBER


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cutcones",
        description="Exact cut-cone membership, decompositions, embeddings, "
        "and sphere-of-influence graphs.",
    )
    fmt = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps an unset subcommand-level flag from shadowing a
    # --format given before the subcommand (subparsers re-apply defaults)
    fmt.add_argument(
        "--format", choices=("text", "json"), default=argparse.SUPPRESS,
        help="verdict output format (object outputs are always canonical JSON)",
    )
    parser.add_argument(
        "--format", choices=("text", "json"), default=None, help=argparse.SUPPRESS
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the (semi-)metric axioms", parents=[fmt])
    p.add_argument("--metric", help="metric JSON file (default stdin)")
    p.add_argument("--strict", action="store_true", help="also reject zero distances")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("stats", help="trace and star traces of a metric", parents=[fmt])
    p.add_argument("--metric", help="metric JSON file (default stdin)")
    p.set_defaults(handler=_cmd_stats)

    p = sub.add_parser("paircut", help="pair-cut cone membership", parents=[fmt])
    p.add_argument(
        "mode", nargs="?", choices=("exact",),
        help="force the LP oracle instead of the closed form",
    )
    p.add_argument("--metric", help="metric JSON file (default stdin)")
    p.add_argument("--max-n", type=int, help="size cap for the exact oracle")
    p.add_argument("--emit-farkas", metavar="PATH", help="write the Farkas vector on non-membership")
    p.set_defaults(handler=_cmd_paircut)

    p = sub.add_parser("cutcone", help="cut cone membership", parents=[fmt])
    p.add_argument("mode", choices=("sufficient", "exact"))
    p.add_argument("--metric", help="metric JSON file (default stdin)")
    p.add_argument("--max-n", type=int, help="size cap")
    p.add_argument("--emit-certificate", metavar="PATH", help="write the certificate on membership")
    p.add_argument("--emit-farkas", metavar="PATH", help="write the Farkas vector on non-membership")
    p.set_defaults(handler=_cmd_cutcone)

    p = sub.add_parser("kernel", help="kernel of the full cut-matrix", parents=[fmt])
    p.add_argument("what", choices=("basis",))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-n", type=int, help="size cap")
    p.add_argument("-o", "--output", help="write to file instead of stdout")
    p.set_defaults(handler=_cmd_kernel)

    p = sub.add_parser("verify-cert", help="check a cut decomposition against a metric", parents=[fmt])
    p.add_argument("--cert", required=True, help="certificate JSON file")
    p.add_argument("--metric", help="metric JSON file (default stdin)")
    p.set_defaults(handler=_cmd_verify_cert)

    p = sub.add_parser("embed", help="exact coordinate embeddings")
    esub = p.add_subparsers(dest="kind", required=True)
    e1 = esub.add_parser("l1", help="l1 points from a cut certificate")
    e1.add_argument("--cert", required=True, help="certificate JSON file")
    e1.add_argument("--metric", help="optional metric to verify the isometry against")
    e1.add_argument("-o", "--output", help="write points to file instead of stdout")
    e1.set_defaults(handler=_cmd_embed, kind="l1")
    e2 = esub.add_parser("linf-sig", help="max-norm points realizing a connected graph")
    e2.add_argument("--graph", help="graph JSON file (default stdin)")
    e2.add_argument("-o", "--output", help="write points to file instead of stdout")
    e2.set_defaults(handler=_cmd_embed, kind="linf-sig")

    p = sub.add_parser("sig", help="sphere-of-influence graphs")
    ssub = p.add_subparsers(dest="action", required=True)
    s1 = ssub.add_parser("build", help="SIG of a strict metric")
    s1.add_argument("--metric", help="metric JSON file (default stdin)")
    s1.add_argument("-o", "--output", help="write graph to file instead of stdout")
    s1.set_defaults(handler=_cmd_sig_build)
    s2 = ssub.add_parser("verify", help="check that a metric realizes a graph", parents=[fmt])
    s2.add_argument("--metric", help="metric JSON file (default stdin)")
    s2.add_argument("--graph", required=True, help="graph JSON file")
    s2.set_defaults(handler=_cmd_sig_verify)
    s3 = ssub.add_parser(
        "star-obstruction",
        help="star SIG-metric forced outside the pair-cut cone",
        parents=[fmt],
    )
    s3.add_argument("--n", type=int, required=True, help="number of leaves (>= 4)")
    s3.add_argument(
        "--a", dest="lengths", nargs="+", required=True,
        help="leaf lengths (n positive rationals)",
    )
    s3.set_defaults(handler=_cmd_sig_star)

    p = sub.add_parser("family", help="graph family catalog")
    p.add_argument("what", choices=("gen",))
    p.add_argument("name", help="K, C, L, Q, B, CP, or S")
    p.add_argument("params", nargs="+", type=int)
    p.add_argument(
        "--metric", choices=("d0", "d1"),
        help="emit the truncated (d0) or shortest-path (d1) metric instead of the graph",
    )
    p.add_argument("-o", "--output", help="write to file instead of stdout")
    p.set_defaults(handler=_cmd_family)

    p = sub.add_parser("matrix", help="dump exact matrices", parents=[fmt])
    p.add_argument("what", choices=("dump",))
    p.add_argument("which", choices=tuple(_MATRICES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-n", type=int, help="size cap for the full cut-matrix")
    p.add_argument("-o", "--output", help="write to file instead of stdout")
    p.set_defaults(handler=_cmd_matrix)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_MEMBER if exc.code == 0 else EXIT_USAGE
    try:
        return args.handler(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
