import random

import pytest

from conftest import exhaustive_max_influence
from effdom.lattice import hexa, rect, tri
from effdom.packing import audit
from effdom.solver import (
    ConjectureRow,
    VoidRow,
    brute_force_F,
    check_conjecture,
    dp_F_rect,
    table_voids,
)

# -- backtracking oracle ----------------------------------------------------------


def test_brute_force_small_squares():
    assert brute_force_F(rect(3, 3)).f_value == 7
    assert brute_force_F(rect(4, 4)).f_value == 16


def test_brute_force_trivia():
    result = brute_force_F(rect(1, 1))
    assert result.f_value == 1 and result.witness == ((1, 1),)
    assert brute_force_F(rect(2, 2)).f_value == 3


@pytest.mark.parametrize(
    "graph",
    [rect(2, 2), rect(2, 5), rect(3, 3, torus=True), tri(3), tri(4), hexa(2, 4), hexa(3, 3)],
    ids=lambda g: g.descriptor(),
)
def test_brute_force_agrees_with_subset_enumeration(graph):
    assert brute_force_F(graph).f_value == exhaustive_max_influence(graph)


def test_brute_force_on_augmented_graph():
    # a pendant-augmented grid is efficiently dominatable, so F = |V|
    from effdom.constructions import fset_pn_p3, near_grid_augment

    augmented, eds = near_grid_augment(rect(3, 3), fset_pn_p3(3))
    result = brute_force_F(augmented)
    assert result.f_value == augmented.vertex_count == 11
    assert audit(augmented, result.witness).is_eds
    assert set(result.witness) == set(eds)


def test_brute_force_witness_audits():
    for graph in (rect(4, 5), tri(5), hexa(4, 4, torus=True)):
        result = brute_force_F(graph)
        report = audit(graph, result.witness)
        assert report.is_two_packing
        assert report.influence == result.f_value


def test_brute_force_vertex_limit():
    with pytest.raises(ValueError, match="dp_F_rect"):
        brute_force_F(rect(8, 8))
    with pytest.raises(ValueError):
        brute_force_F(rect(4, 4), limit=10)
    # an explicit limit unlocks instances the default refuses
    assert brute_force_F(rect(4, 4), limit=16).f_value == 16


def test_brute_force_deterministic():
    a = brute_force_F(rect(4, 6))
    b = brute_force_F(rect(4, 6))
    assert a.f_value == b.f_value and a.witness == b.witness and a.explored == b.explored


# -- column-profile DP ---------------------------------------------------------------


def test_dp_strip_formulas():
    for n in range(1, 41):
        expected = 2 * n if n % 2 else 2 * n - 1
        assert dp_F_rect(2, n).f_value == expected
    # the 3 x n formula starts at n = 4; the 3 x 3 square tops out at 7
    assert dp_F_rect(3, 3).f_value == 7
    for n in range(4, 41):
        assert dp_F_rect(3, n).f_value == 3 * n - n // 3


def test_dp_small_squares():
    assert dp_F_rect(4, 4).f_value == 16
    assert dp_F_rect(5, 5).f_value == 23
    assert dp_F_rect(6, 6).f_value == 33


def test_dp_matches_brute_force_exhaustively():
    for m in range(1, 21):
        for n in range(m, 21):
            if m * n > 20:
                continue
            assert dp_F_rect(m, n).f_value == brute_force_F(rect(m, n)).f_value


def test_dp_matches_brute_force_random_shapes():
    rng = random.Random(2024)
    seen = 0
    while seen < 20:
        m = rng.randint(1, 8)
        n = rng.randint(1, 42 // m)
        if m * n > 42:
            continue
        seen += 1
        assert dp_F_rect(m, n).f_value == brute_force_F(rect(m, n), limit=42).f_value


def test_dp_transpose_symmetry():
    for m, n in [(2, 9), (3, 7), (4, 6), (5, 8), (6, 11), (7, 7)]:
        assert dp_F_rect(m, n).f_value == dp_F_rect(n, m).f_value


def test_dp_witness_audits():
    for m, n in [(1, 9), (2, 12), (5, 5), (7, 10)]:
        result = dp_F_rect(m, n)
        report = audit(rect(m, n), result.witness)
        assert report.is_two_packing
        assert report.influence == result.f_value


def test_dp_never_exceeds_vertex_count():
    for m in range(3, 10):
        for n in range(m, 10):
            value = dp_F_rect(m, n).f_value
            assert value <= m * n
            assert (value == m * n) == (m == n == 4)


def test_dp_width_limit():
    with pytest.raises(ValueError, match="width limit"):
        dp_F_rect(17, 3)
    assert dp_F_rect(3, 17).f_value == 3 * 17 - 17 // 3


def test_dp_deterministic():
    a = dp_F_rect(6, 9)
    b = dp_F_rect(6, 9)
    assert a.witness == b.witness and a.explored == b.explored


def test_dp_rejects_degenerate():
    with pytest.raises(ValueError):
        dp_F_rect(0, 5)


# -- conjecture and void tables ----------------------------------------------------------


def test_check_conjecture_desk_range():
    rows = check_conjecture(7, 10)
    assert rows == [
        ConjectureRow(7, 44, 44, True),
        ConjectureRow(8, 58, 58, True),
        ConjectureRow(9, 77, 77, True),
        ConjectureRow(10, 92, 92, True),
    ]


def test_check_conjecture_skips_beyond_width():
    rows = check_conjecture(8, 10, width_limit=8)
    assert rows[0].dp_value == 58 and rows[0].matches is True
    assert rows[1].dp_value is None and rows[1].matches is None
    assert rows[2].dp_value is None


def test_table_voids_known_rows():
    rows = table_voids(7, 9)
    assert rows == [
        VoidRow(7, 5, 5, True),
        VoidRow(8, 6, 6, True),
        VoidRow(9, 4, 4, True),
    ]


def test_table_voids_skips_beyond_width():
    rows = table_voids(7, 20, width_limit=7)
    assert rows[0].dp_voids == 5
    assert all(r.dp_voids is None for r in rows[1:])
    assert [r.predicted for r in rows[-3:]] == [14, 12, 16]
