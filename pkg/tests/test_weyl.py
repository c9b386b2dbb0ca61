import itertools
import random

import pytest
from hypothesis import given, settings

from phdiamond.hilbert import hilb_partition_sum
from phdiamond.tables import TableError, TriTable, check_phs, dual
from phdiamond.weyl import (
    NEGATION,
    SWAP,
    CenteredWeight,
    act_on_table,
    centered,
    check_element_invariance,
    check_octahedron,
    check_weyl_invariance,
    in_octahedron,
    octahedron_vertices,
    uncentered,
    weyl_group,
)

from conftest import small_tables


def test_centered_examples(k3):
    assert centered(0, 0, 0, 1) == CenteredWeight(-2, 0, 0)
    for n in range(4):
        assert centered(n, 2 * n, 2 * n, n) == CenteredWeight(0, 0, 2 * n)
    for (i, k, d) in k3.table:
        assert uncentered(centered(i, k, d, 1), 1) == (i, k, d)


def test_uncentered_parity():
    with pytest.raises(TableError):
        uncentered(CenteredWeight(0, 1, 0), 1)


def test_group_orders():
    assert len(weyl_group("D3")) == 24
    assert len(weyl_group("B3")) == 48
    assert NEGATION in weyl_group("B3") and NEGATION not in weyl_group("D3")
    assert SWAP in weyl_group("D3")
    with pytest.raises(ValueError):
        weyl_group("A2")


@pytest.mark.parametrize("mode", ["D3", "B3"])
def test_group_closure(mode):
    group = set(weyl_group(mode))
    for a, b in itertools.product(group, repeat=2):
        assert a.compose(b) in group
    w = CenteredWeight(3, -1, 5)
    for a, b in itertools.product(list(group)[:8], repeat=2):
        assert a.compose(b)(w) == a(b(w))


def test_swap_fixes_degree(k3):
    moved = act_on_table(SWAP, k3.table)
    assert moved == k3.table
    assert SWAP(CenteredWeight(1, 2, 3)) == CenteredWeight(1, 3, 2)


def test_k3_invariance(k3):
    assert check_weyl_invariance(k3.table, "D3").passed
    assert check_weyl_invariance(k3.table, "B3").passed


def test_hilbert_invariance(k3):
    for n in range(1, 6):
        d = hilb_partition_sum(k3, n)
        assert check_weyl_invariance(d, "D3").passed
        assert check_weyl_invariance(d, "B3").passed


def test_b3_is_labelled(k3):
    assert "requires b2 >= 5" in check_weyl_invariance(k3.table, "B3").notes


def test_swap_verdict_equals_phs_on_random_tables():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(0, 2)
        entries = {}
        for _ in range(rng.randint(0, 6)):
            i, k, d = rng.randint(0, 2 * n), rng.randint(0, 2 * n), rng.randint(0, 4 * n)
            entries[(i, k, d)] = rng.randint(1, 3)
            if rng.random() < 0.7:
                entries[(k, i, d)] = entries[(i, k, d)]
        t = TriTable(entries, n=n)
        assert check_element_invariance(t, SWAP).passed == check_phs(t).passed


@settings(max_examples=200)
@given(small_tables())
def test_negation_is_dual(t):
    assert act_on_table(NEGATION, t) == dual(t)


def test_vertices_on_boundary():
    for n in range(1, 6):
        images = {centered(*v, n).as_tuple() for v in octahedron_vertices(n)}
        expected = {(s * 2 * n, 0, 0) for s in (1, -1)} | {(0, s * 2 * n, 0) for s in (1, -1)} \
            | {(0, 0, s * 2 * n) for s in (1, -1)}
        assert images == expected
        for v in octahedron_vertices(n):
            w = centered(*v, n)
            assert abs(w.h) + abs(w.p) + abs(w.f) == 2 * n


def test_interior_points_strict():
    rng = random.Random(3)
    for _ in range(500):
        n = rng.randint(1, 4)
        i, k, d = rng.randint(0, 2 * n), rng.randint(0, 2 * n), rng.randint(0, 4 * n)
        w = centered(i, k, d, n)
        s = abs(w.h) + abs(w.p) + abs(w.f)
        assert in_octahedron(i, k, d, n) == (s <= 2 * n)
    # the centre is strictly inside
    assert abs(centered(2, 2, 4, 2).h) == 0 and in_octahedron(2, 2, 4, 2)


def test_octahedron_examples(k3):
    report = check_octahedron(k3.table)
    assert report.passed and report.details["vertices_ok"]
    assert check_octahedron(hilb_partition_sum(k3, 2)).passed
    bad = check_octahedron(TriTable({(0, 0, 2): 1}, n=1))
    assert not bad.passed and bad.violations[0] == ((0, 0, 2), 4)
    assert not bad.details["vertices_ok"]
