"""Cuts, cut enumerations, and the exact matrix constructions."""

from fractions import Fraction

import pytest

from cutcones.cut_algebra import (
    Cut,
    RationalMatrix,
    cut_metric_vector,
    enumerate_cuts,
    full_cut_matrix,
    incidence_matrix,
    inverse_square_cut_matrix,
    matrix_rank,
    pair_cut,
    projectors,
    square_cut_matrix,
)
from cutcones.metric import num_pairs, vertex_pairs

F = Fraction


def members(cuts) -> list[tuple[int, ...]]:
    return [c.member_list for c in cuts]


# ---------------------------------------------------------------------------
# cuts


def test_cut_member_round_trip():
    c = Cut.from_members(6, [5, 2, 3])
    assert c.member_list == (2, 3, 5)
    assert c.size == 3
    assert c.contains(2) and not c.contains(4)
    assert c.separates(1, 2) and not c.separates(2, 5)


def test_cut_rejects_out_of_range():
    with pytest.raises(ValueError):
        Cut.from_members(4, [5])
    with pytest.raises(ValueError):
        Cut.from_members(4, [0])
    with pytest.raises(ValueError):
        Cut(3, 1 << 3)


def test_cut_complement_and_triviality():
    c = Cut.from_members(5, [1, 4])
    assert c.complement().member_list == (2, 3, 5)
    assert not c.is_trivial
    assert Cut(5, 0).is_trivial
    assert Cut(5, 0b11111).is_trivial


def test_pair_cut_constructor():
    c = pair_cut(6, 2, 5)
    assert c.member_list == (2, 5)
    with pytest.raises(ValueError):
        pair_cut(6, 5, 5)


# ---------------------------------------------------------------------------
# enumeration


def test_enumerate_cuts_four_points():
    expected = [
        (1,), (2,), (3,), (4,),
        (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
        (1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4),
    ]
    assert members(enumerate_cuts(4)) == expected


def test_enumerate_cuts_three_points():
    assert members(enumerate_cuts(3)) == [
        (1,), (2,), (3,), (1, 2), (1, 3), (2, 3),
    ]


def test_enumerate_complement_rule():
    # the k-th cut and the (2^n - 1 - k)-th cut are complements (1-based)
    for n in range(3, 11):
        cuts = enumerate_cuts(n)
        total = (1 << n) - 1
        for k, cut in enumerate(cuts, start=1):
            assert cuts[total - k - 1].members == cut.complement().members


def test_enumerate_complement_example_four_points():
    cuts = enumerate_cuts(4)
    assert cuts[4].member_list == (1, 2)
    assert cuts[9].member_list == (3, 4)


def test_enumerate_size_guards():
    with pytest.raises(ValueError):
        enumerate_cuts(2)
    with pytest.raises(ValueError):
        enumerate_cuts(17)
    assert len(enumerate_cuts(5, max_n=5)) == 30
    with pytest.raises(ValueError):
        enumerate_cuts(6, max_n=5)


# ---------------------------------------------------------------------------
# cut metric vectors


def test_cut_metric_vector_three_points():
    assert cut_metric_vector(Cut.from_members(3, [1])) == (F(1), F(1), F(0))
    assert cut_metric_vector(Cut.from_members(3, [3])) == (F(0), F(1), F(1))


def test_cut_metric_vector_complement_invariant():
    for mask in range(1, 15):
        c = Cut(4, mask)
        assert cut_metric_vector(c) == cut_metric_vector(c.complement())


def test_cut_metric_vector_trivial_is_zero():
    assert cut_metric_vector(Cut(4, 0)) == (F(0),) * 6
    assert cut_metric_vector(Cut(4, 0b1111)) == (F(0),) * 6


# ---------------------------------------------------------------------------
# rational matrices


def test_matrix_basic_operations():
    a = RationalMatrix.from_rows([[F(1), F(2)], [F(3), F(4)]])
    b = RationalMatrix.identity(2)
    assert a.add(b).entry(0, 0) == 2
    assert a.sub(b).entry(1, 1) == 3
    assert a.scale(F(1, 2)).entry(0, 1) == 1
    assert a.transpose().row(0) == (F(1), F(3))
    assert a.mul(b).entries == a.entries
    assert a.mul_vector([F(1), F(1)]) == (F(3), F(7))
    assert a.column(1) == (F(2), F(4))
    assert RationalMatrix.ones(2, 3).row(1) == (F(1), F(1), F(1))


def test_matrix_shape_errors():
    a = RationalMatrix.from_rows([[F(1), F(2)]])
    b = RationalMatrix.identity(2)
    with pytest.raises(ValueError):
        a.add(b)
    with pytest.raises(ValueError):
        b.mul(RationalMatrix.from_rows([[F(1)]]))
    with pytest.raises(ValueError):
        a.mul_vector([F(1)])


def test_matrix_rank_examples():
    assert matrix_rank([[F(1), F(2)], [F(2), F(4)]]) == 1
    assert matrix_rank([[F(1), F(0)], [F(0), F(1)]]) == 2
    assert matrix_rank([[F(0), F(0)]]) == 0


# ---------------------------------------------------------------------------
# square cut-matrix


def test_square_cut_matrix_four_points():
    expected = [
        "011110",
        "101101",
        "110011",
        "110011",
        "101101",
        "011110",
    ]
    got = square_cut_matrix(4)
    assert got.rows == got.cols == 6
    for r, pattern in enumerate(expected):
        assert got.row(r) == tuple(F(int(ch)) for ch in pattern)


def test_square_cut_matrix_columns_are_pair_cuts():
    s = square_cut_matrix(5)
    for col, (i, j) in enumerate(vertex_pairs(5)):
        assert s.column(col) == cut_metric_vector(pair_cut(5, i, j))


def test_square_cut_matrix_row_sums():
    for n in (5, 6, 7):
        s = square_cut_matrix(n)
        for r in range(s.rows):
            assert sum(s.row(r)) == 2 * (n - 2)


def test_square_cut_matrix_zero_diagonal():
    s = square_cut_matrix(5)
    for k in range(10):
        assert s.entry(k, k) == 0


def test_square_cut_matrix_rejects_small_n():
    with pytest.raises(ValueError):
        square_cut_matrix(2)


# ---------------------------------------------------------------------------
# incidence matrix


def test_incidence_matrix_three_points():
    b = incidence_matrix(3)
    assert b.row(0) == (F(1), F(1), F(0))
    assert b.row(1) == (F(1), F(0), F(1))
    assert b.row(2) == (F(0), F(1), F(1))


def test_incidence_identities():
    for n in range(4, 8):
        b = incidence_matrix(n)
        m = num_pairs(n)
        a = square_cut_matrix(n)
        gram = b.transpose().mul(b)
        assert gram.entries == RationalMatrix.identity(m).scale(2).add(a).entries
        outer = b.mul(b.transpose())
        expected = RationalMatrix.identity(n).scale(n - 2).add(
            RationalMatrix.ones(n, n)
        )
        assert outer.entries == expected.entries


def test_incidence_outer_product_five_points():
    outer = incidence_matrix(5).mul(incidence_matrix(5).transpose())
    for i in range(5):
        for j in range(5):
            assert outer.entry(i, j) == (4 if i == j else 1)


# ---------------------------------------------------------------------------
# projectors and the inverse


def test_projector_ranks_five_points():
    p_low, p_mid, p_top = projectors(5)
    assert matrix_rank(p_top.entries) == 1
    assert matrix_rank(p_mid.entries) == 4
    assert matrix_rank(p_low.entries) == 5


def test_projector_algebra():
    for n in (5, 6):
        p_low, p_mid, p_top = projectors(n)
        m = num_pairs(n)
        eye = RationalMatrix.identity(m)
        zero = RationalMatrix.ones(m, m).scale(0)
        for p in (p_low, p_mid, p_top):
            assert p.mul(p).entries == p.entries
            assert p.transpose().entries == p.entries
        assert p_low.mul(p_mid).entries == zero.entries
        assert p_low.mul(p_top).entries == zero.entries
        assert p_mid.mul(p_top).entries == zero.entries
        assert p_low.add(p_mid).add(p_top).entries == eye.entries
        spectral = (
            p_low.scale(-2)
            .add(p_mid.scale(n - 4))
            .add(p_top.scale(2 * n - 4))
        )
        assert spectral.entries == square_cut_matrix(n).entries


def test_projectors_reject_degenerate_size():
    with pytest.raises(ValueError):
        projectors(4)


def test_inverse_square_cut_matrix():
    a = square_cut_matrix(5)
    inv = inverse_square_cut_matrix(5)
    assert a.mul(inv).entries == RationalMatrix.identity(10).entries


def test_inverse_on_all_ones_vector():
    inv = inverse_square_cut_matrix(6)
    ones = [F(1)] * 15
    assert inv.mul_vector(ones) == (F(1, 8),) * 15


def test_inverse_rejects_four_points():
    with pytest.raises(ValueError):
        inverse_square_cut_matrix(4)


# ---------------------------------------------------------------------------
# full cut-matrix


def test_full_cut_matrix_gram_four_points():
    s = full_cut_matrix(4)
    assert (s.rows, s.cols) == (6, 14)
    gram = s.mul(s.transpose())
    for i in range(6):
        for j in range(6):
            assert gram.entry(i, j) == (8 if i == j else 4)


def test_full_cut_matrix_gram_identity():
    for n in (5, 6):
        s = full_cut_matrix(n)
        m = num_pairs(n)
        gram = s.mul(s.transpose())
        expected = (
            RationalMatrix.identity(m)
            .add(RationalMatrix.ones(m, m))
            .scale(F(2 ** (n - 2)))
        )
        assert gram.entries == expected.entries


def test_full_cut_matrix_complement_columns():
    # complements sit at mirrored positions and share a column
    s = full_cut_matrix(4)
    for k in range(1, 15):
        assert s.column(k - 1) == s.column(14 - k)


def test_full_cut_matrix_contains_square_block():
    s = full_cut_matrix(5)
    sq = square_cut_matrix(5)
    # after the 5 singleton columns come the ten pair-cut columns
    for col in range(10):
        assert s.column(5 + col) == sq.column(col)


def test_full_cut_matrix_size_guard():
    with pytest.raises(ValueError):
        full_cut_matrix(6, max_n=5)
