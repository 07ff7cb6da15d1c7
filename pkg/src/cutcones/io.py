"""JSON file formats and exact-rational text serialization.

Rationals in files are integers, decimal literals (parsed exactly,
never through binary floating point), or strings "p/q" with q > 0.
Written files use integers where possible and "p/q" strings
otherwise, so every value round-trips bit for bit.

Formats:
  metric       {"n": 5, "d": [1, "1/2", ...]}         (lex pair order)
  graph        {"n": 4, "edges": [[1, 2], ...]}
               or {"n": 4, "adjacency": [[0, 1, ...], ...]}
  certificate  {"n": 5, "cuts": [{"members": [1, 3], "weight": "1/2"},
                                 {"mask": 5, "weight": 2}, ...]}
  points       {"norm": "l1", "points": [["0", "1/2"], ...]}

Matrices dump to plain text, one row per line, entries as
space-separated rational tokens.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from cutcones.cut_algebra import Cut, RationalMatrix
from cutcones.embeddings import PointSet
from cutcones.fullcut import CutCertificate
from cutcones.metric import Metric, num_pairs
from cutcones.sig import SimpleGraph


def parse_rational(value: Any) -> Fraction:
    """Exact rational from an int, Fraction, or string token.

    Strings may be "p/q", an integer literal, or a decimal literal;
    all are parsed exactly.  Floats are rejected: they have already
    lost the value.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
    raise ValueError(f"not a rational: {value!r} ({type(value).__name__})")


def format_rational(q: Fraction) -> str:
    """Canonical token: "p" when integral, else "p/q" in lowest terms."""
    return str(Fraction(q))


def rational_to_json(q: Fraction) -> int | str:
    """JSON value: a plain int when integral, else a "p/q" string."""
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else str(q)


def _reject_constant(token: str) -> Any:
    raise ValueError(f"non-finite number {token!r} is not a rational")


def loads_json(text: str) -> Any:
    """json.loads with decimals parsed exactly and NaN/Infinity rejected."""
    return json.loads(text, parse_float=Fraction, parse_constant=_reject_constant)


def _as_int(v: Any, what: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise ValueError(f"{what} must be an integer, got {v!r}")
    return v


def _require_int(obj: Any, key: str) -> int:
    return _as_int(obj.get(key), f"field {key!r}")


# ---------------------------------------------------------------------------
# metrics


def metric_to_json(d: Metric) -> dict[str, Any]:
    return {"n": d.n, "d": [rational_to_json(x) for x in d.d]}


def metric_from_json(obj: Any) -> Metric:
    if not isinstance(obj, dict):
        raise ValueError("metric document must be a JSON object")
    n = _require_int(obj, "n")
    entries = obj.get("d")
    if not isinstance(entries, list):
        raise ValueError("field 'd' must be a list of rationals")
    if n >= 2 and len(entries) != num_pairs(n):
        raise ValueError(
            f"metric on {n} vertices needs {num_pairs(n)} entries, got {len(entries)}"
        )
    return Metric(n, tuple(parse_rational(x) for x in entries))


def dumps_metric(d: Metric) -> str:
    return json.dumps(metric_to_json(d), indent=2) + "\n"


def loads_metric(text: str) -> Metric:
    return metric_from_json(loads_json(text))


def read_metric(path: str | Path) -> Metric:
    return loads_metric(Path(path).read_text())


def write_metric(d: Metric, path: str | Path) -> None:
    Path(path).write_text(dumps_metric(d))


# ---------------------------------------------------------------------------
# graphs


def graph_to_json(g: SimpleGraph) -> dict[str, Any]:
    return {"n": g.n, "edges": [[i, j] for i, j in g.edges]}


def graph_from_json(obj: Any) -> SimpleGraph:
    if not isinstance(obj, dict):
        raise ValueError("graph document must be a JSON object")
    n = _require_int(obj, "n")
    if "edges" in obj:
        edges = obj["edges"]
        if not isinstance(edges, list):
            raise ValueError("field 'edges' must be a list of pairs")
        parsed = []
        for e in edges:
            if not (isinstance(e, list) and len(e) == 2):
                raise ValueError(f"edge entries must be pairs, got {e!r}")
            parsed.append((_as_int(e[0], "edge endpoint"), _as_int(e[1], "edge endpoint")))
        return SimpleGraph.from_edges(n, parsed)
    if "adjacency" in obj:
        adj = obj["adjacency"]
        if not (isinstance(adj, list) and len(adj) == n):
            raise ValueError(f"adjacency must be an {n}x{n} 0/1 matrix")
        edges = []
        for i, row in enumerate(adj, start=1):
            if not (isinstance(row, list) and len(row) == n):
                raise ValueError(f"adjacency must be an {n}x{n} 0/1 matrix")
            for j, v in enumerate(row, start=1):
                if v not in (0, 1) or isinstance(v, bool):
                    raise ValueError(f"adjacency entries must be 0 or 1, got {v!r}")
                if v and i < j:
                    edges.append((i, j))
        g = SimpleGraph.from_edges(n, edges)
        for i, row in enumerate(adj, start=1):
            for j, v in enumerate(row, start=1):
                want = 1 if g.are_adjacent(i, j) else 0
                if v != want:
                    raise ValueError(f"adjacency not symmetric/loop-free at ({i}, {j})")
        return g
    raise ValueError("graph document needs an 'edges' or 'adjacency' field")


def dumps_graph(g: SimpleGraph) -> str:
    return json.dumps(graph_to_json(g), indent=2) + "\n"


def loads_graph(text: str) -> SimpleGraph:
    return graph_from_json(loads_json(text))


def read_graph(path: str | Path) -> SimpleGraph:
    return loads_graph(Path(path).read_text())


def write_graph(g: SimpleGraph, path: str | Path) -> None:
    Path(path).write_text(dumps_graph(g))


# ---------------------------------------------------------------------------
# cut certificates


def certificate_to_json(cert: CutCertificate) -> dict[str, Any]:
    return {
        "n": cert.n,
        "cuts": [
            {"members": list(c.member_list), "weight": rational_to_json(w)}
            for c, w in zip(cert.cuts, cert.weights)
        ],
    }


def certificate_from_json(obj: Any) -> CutCertificate:
    if not isinstance(obj, dict):
        raise ValueError("certificate document must be a JSON object")
    n = _require_int(obj, "n")
    items = obj.get("cuts")
    if not isinstance(items, list):
        raise ValueError("field 'cuts' must be a list")
    cuts = []
    weights = []
    for item in items:
        if not isinstance(item, dict):
            raise ValueError(f"certificate entries must be objects, got {item!r}")
        if "members" in item:
            members = item["members"]
            if not isinstance(members, list):
                raise ValueError(f"'members' must be a vertex list, got {members!r}")
            cut = Cut.from_members(n, members)
        elif "mask" in item:
            cut = Cut(n, _require_int(item, "mask"))
        else:
            raise ValueError("certificate entry needs a 'members' or 'mask' field")
        if "weight" not in item:
            raise ValueError("certificate entry needs a 'weight' field")
        cuts.append(cut)
        weights.append(parse_rational(item["weight"]))
    return CutCertificate(n=n, cuts=tuple(cuts), weights=tuple(weights))


def dumps_certificate(cert: CutCertificate) -> str:
    return json.dumps(certificate_to_json(cert), indent=2) + "\n"


def loads_certificate(text: str) -> CutCertificate:
    return certificate_from_json(loads_json(text))


def read_certificate(path: str | Path) -> CutCertificate:
    return loads_certificate(Path(path).read_text())


def write_certificate(cert: CutCertificate, path: str | Path) -> None:
    Path(path).write_text(dumps_certificate(cert))


# ---------------------------------------------------------------------------
# point sets


def points_to_json(points: PointSet) -> dict[str, Any]:
    return {
        "norm": points.norm,
        "points": [[rational_to_json(x) for x in p] for p in points.points],
    }


def points_from_json(obj: Any) -> PointSet:
    if not isinstance(obj, dict):
        raise ValueError("point-set document must be a JSON object")
    norm = obj.get("norm")
    pts = obj.get("points")
    if not isinstance(pts, list):
        raise ValueError("field 'points' must be a list of coordinate lists")
    parsed = []
    for p in pts:
        if not isinstance(p, list):
            raise ValueError(f"points must be coordinate lists, got {p!r}")
        parsed.append(tuple(parse_rational(x) for x in p))
    if not isinstance(norm, str):
        raise ValueError("field 'norm' must be a string")
    return PointSet(norm=norm, points=tuple(parsed))


def dumps_points(points: PointSet) -> str:
    return json.dumps(points_to_json(points), indent=2) + "\n"


def loads_points(text: str) -> PointSet:
    return points_from_json(loads_json(text))


# ---------------------------------------------------------------------------
# matrix text dump


def matrix_to_text(matrix: RationalMatrix) -> str:
    """One row per line, entries as space-separated rational tokens."""
    return "\n".join(
        " ".join(format_rational(x) for x in row) for row in matrix.entries
    ) + "\n"


def matrix_from_text(text: str) -> RationalMatrix:
    rows = [
        [parse_rational(tok) for tok in line.split()]
        for line in text.splitlines()
        if line.strip()
    ]
    return RationalMatrix.from_rows(rows)
