"""Exact-rational JSON formats and matrix text serialization."""

import json
from fractions import Fraction

import pytest

from cutcones.cut_algebra import Cut, square_cut_matrix
from cutcones.embeddings import linf_sig_embedding
from cutcones.fullcut import CutCertificate
from cutcones.io import (
    certificate_from_json,
    dumps_certificate,
    dumps_graph,
    dumps_metric,
    dumps_points,
    format_rational,
    graph_from_json,
    loads_certificate,
    loads_graph,
    loads_json,
    loads_metric,
    loads_points,
    matrix_from_text,
    matrix_to_text,
    metric_from_json,
    parse_rational,
    points_from_json,
    rational_to_json,
    read_metric,
    write_graph,
    write_metric,
)
from cutcones.metric import Metric
from cutcones.sig import SimpleGraph, cycle_graph, star_graph

from conftest import metric_of_ints

F = Fraction


# ---------------------------------------------------------------------------
# rational tokens


def test_parse_rational_accepted_forms():
    assert parse_rational(5) == F(5)
    assert parse_rational(-3) == F(-3)
    assert parse_rational("3/4") == F(3, 4)
    assert parse_rational("  -7/2  ") == F(-7, 2)
    assert parse_rational("2.5") == F(5, 2)
    assert parse_rational("10") == F(10)
    assert parse_rational(F(1, 3)) == F(1, 3)


def test_parse_rational_rejections():
    for bad in (1.5, True, False, None, [1], "nan", "inf", "1/0", "abc", ""):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_format_rational_canonical():
    assert format_rational(F(6, 3)) == "2"
    assert format_rational(F(-1, 2)) == "-1/2"
    assert format_rational(F(0)) == "0"


def test_rational_to_json_types():
    assert rational_to_json(F(4, 2)) == 2
    assert isinstance(rational_to_json(F(4, 2)), int)
    assert rational_to_json(F(1, 3)) == "1/3"


def test_loads_json_parses_decimals_exactly():
    doc = loads_json('{"x": 0.1, "y": 3, "z": "1/7"}')
    assert doc["x"] == F(1, 10)
    assert isinstance(doc["x"], Fraction)
    assert doc["y"] == 3


def test_loads_json_rejects_non_finite():
    for text in ("NaN", "Infinity", "-Infinity", '{"x": NaN}'):
        with pytest.raises(ValueError):
            loads_json(text)


# ---------------------------------------------------------------------------
# metrics


def test_metric_round_trip_bit_exact(figure_eight_d0):
    assert loads_metric(dumps_metric(figure_eight_d0)).d == figure_eight_d0.d


def test_metric_round_trip_huge_rationals():
    big = F(10**40 + 1, 3)
    d = Metric(3, (big, big, F(10**50)))
    again = loads_metric(dumps_metric(d))
    assert again.d == d.d


def test_metric_json_uses_ints_and_fraction_strings():
    d = Metric(3, (F(1), F(1, 2), F(3, 2)))
    doc = json.loads(dumps_metric(d))
    assert doc["d"] == [1, "1/2", "3/2"]


def test_metric_from_json_errors():
    with pytest.raises(ValueError):
        metric_from_json([1, 2, 3])
    with pytest.raises(ValueError):
        metric_from_json({"n": "5", "d": [1]})
    with pytest.raises(ValueError):
        metric_from_json({"n": 4, "d": [1, 1, 1]})
    with pytest.raises(ValueError):
        metric_from_json({"n": 3, "d": "111"})


def test_loads_metric_scientific_notation_is_exact():
    d = loads_metric('{"n": 3, "d": [1, 1, 1.0e400]}')
    assert d.distance(2, 3) == F(10) ** 400


def test_metric_file_round_trip(tmp_path):
    d = metric_of_ints(4, [1, 2, 1, 1, 2, 1])
    path = tmp_path / "metric.json"
    write_metric(d, path)
    assert read_metric(path).d == d.d


# ---------------------------------------------------------------------------
# graphs


def test_graph_round_trip_edges(figure_eight):
    g = loads_graph(dumps_graph(figure_eight))
    assert g.n == figure_eight.n
    assert g.edges == figure_eight.edges


def test_graph_from_adjacency_matrix():
    g = graph_from_json(
        {
            "n": 4,
            "adjacency": [
                [0, 1, 0, 1],
                [1, 0, 1, 0],
                [0, 1, 0, 1],
                [1, 0, 1, 0],
            ],
        }
    )
    assert g.edges == cycle_graph(4).edges


def test_graph_adjacency_rejections():
    base = [[0, 1, 0], [1, 0, 1], [0, 1, 0]]
    asym = [row[:] for row in base]
    asym[0][2] = 1
    with pytest.raises(ValueError):
        graph_from_json({"n": 3, "adjacency": asym})
    loop = [row[:] for row in base]
    loop[1][1] = 1
    with pytest.raises(ValueError):
        graph_from_json({"n": 3, "adjacency": loop})
    two = [row[:] for row in base]
    two[0][1] = 2
    with pytest.raises(ValueError):
        graph_from_json({"n": 3, "adjacency": two})
    with pytest.raises(ValueError):
        graph_from_json({"n": 3, "adjacency": base[:2]})


def test_graph_document_errors():
    with pytest.raises(ValueError):
        graph_from_json({"n": 3})
    with pytest.raises(ValueError):
        graph_from_json({"n": 3, "edges": [[1, 2, 3]]})
    with pytest.raises(ValueError):
        graph_from_json({"n": 3, "edges": [[1, 4]]})


def test_graph_file_round_trip(tmp_path):
    g = star_graph(4)
    path = tmp_path / "graph.json"
    write_graph(g, path)
    assert loads_graph(path.read_text()).edges == g.edges


# ---------------------------------------------------------------------------
# certificates


def test_certificate_round_trip():
    cert = CutCertificate(
        n=4,
        cuts=(Cut.from_members(4, (1,)), Cut.from_members(4, (2, 3))),
        weights=(F(1, 2), F(7)),
    )
    again = loads_certificate(dumps_certificate(cert))
    assert again == cert


def test_certificate_mask_and_members_forms_agree():
    by_members = certificate_from_json(
        {"n": 4, "cuts": [{"members": [1, 3], "weight": "1/2"}]}
    )
    by_mask = certificate_from_json(
        {"n": 4, "cuts": [{"mask": 5, "weight": "1/2"}]}
    )
    assert by_members == by_mask


def test_certificate_document_errors():
    with pytest.raises(ValueError):
        certificate_from_json({"n": 4, "cuts": [{"members": [1, 3]}]})
    with pytest.raises(ValueError):
        certificate_from_json({"n": 4, "cuts": [5]})
    with pytest.raises(ValueError):
        certificate_from_json({"n": 4, "cuts": [{"weight": 1}]})
    with pytest.raises(ValueError):
        certificate_from_json({"n": 4, "cuts": [{"mask": 16, "weight": 1}]})
    with pytest.raises(ValueError):
        certificate_from_json({"n": 4, "cuts": [{"members": [5], "weight": 1}]})
    with pytest.raises(ValueError):
        certificate_from_json({"n": 4, "cuts": {"mask": 1}})


# ---------------------------------------------------------------------------
# point sets


def test_points_round_trip_bit_exact():
    ps = linf_sig_embedding(star_graph(3))
    again = loads_points(dumps_points(ps))
    assert again == ps


def test_points_document_errors():
    with pytest.raises(ValueError):
        points_from_json({"points": [["1"]]})
    with pytest.raises(ValueError):
        points_from_json({"norm": "l1", "points": [["1"], ["1", "2"]]})
    with pytest.raises(ValueError):
        points_from_json({"norm": "l1", "points": "11"})
    with pytest.raises(ValueError):
        points_from_json({"norm": "l1", "points": [[1.5]]})


# ---------------------------------------------------------------------------
# matrix text


def test_matrix_text_round_trip():
    m = square_cut_matrix(4)
    assert matrix_from_text(matrix_to_text(m)).entries == m.entries


def test_matrix_text_fractional_entries():
    text = "1/2 -3\n0 1/6\n"
    m = matrix_from_text(text)
    assert m.entries == ((F(1, 2), F(-3)), (F(0), F(1, 6)))
    assert matrix_to_text(m) == text


def test_matrix_text_skips_blank_lines():
    m = matrix_from_text("1 2\n\n3 4\n   \n")
    assert m.entries == ((F(1), F(2)), (F(3), F(4)))


def test_matrix_text_rejects_ragged_rows():
    with pytest.raises(ValueError):
        matrix_from_text("1 2\n3\n")
