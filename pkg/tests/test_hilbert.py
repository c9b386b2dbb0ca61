import pytest

from phdiamond.hilbert import (
    Partition,
    check_matsushita,
    hilb_partition_sum,
    hilb_partition_sum_codim,
    hilb_product_formula,
    partitions,
    resolve_workers,
)
from phdiamond.oracles import euler_series, goettsche_hodge
from phdiamond.surfaces import SurfaceSpec
from phdiamond.tables import TriTable, check_phs, check_self_dual, dual, hodge_marginal, tate_twist

from conftest import brute_euler_series, brute_partitions

K3_EULER = [1, 24, 324, 3200, 25650, 176256, 1073720, 5930496, 30178575]


def test_partitions_small():
    assert [p.parts() for p in partitions(1)] == [[1]]
    three = partitions(3)
    assert sorted(tuple(sorted(p.parts())) for p in three) == [(1, 1, 1), (1, 2), (3,)]
    assert [str(p) for p in three] == ["1^3", "1^1 2^1", "3^1"]


@pytest.mark.parametrize("n", range(1, 13))
def test_partition_counts_match_enumeration(n):
    ours = partitions(n)
    assert sorted(tuple(sorted(p.parts(), reverse=True)) for p in ours) == sorted(brute_partitions(n))
    assert len({p.mult for p in ours}) == len(ours)
    assert all(p.weight == n and p.codim == n - p.length for p in ours)


def test_partition_count_ten():
    assert len(partitions(10)) == 42 == len(brute_partitions(10))


def test_partition_order_is_deterministic():
    assert partitions(6) == partitions(6)
    vecs = [p.mult for p in partitions(6)]
    assert vecs == sorted(vecs, reverse=True)


def test_partition_fields():
    nu = Partition((1, 0, 2))
    assert nu.weight == 7 and nu.length == 3 and nu.codim == 4


def test_partitions_reject_zero():
    with pytest.raises(ValueError):
        partitions(0)


def test_n1_is_the_surface(k3):
    assert hilb_partition_sum(k3, 1) == k3.table


def test_n2_hand_oracle(k3):
    d = hilb_partition_sum(k3, 2)
    # Sym^2 of a 24-dim even space plus the 24-dim twisted copy
    assert d.total() == 300 + 24
    # 18 from Sym^2 cross terms with the unit class, 1 from the twisted unit class
    assert d[(1, 1, 2)] == 19
    assert d.n == 2 and d.in_box()


def test_twist_placement_equivalence(k3):
    for n in range(1, 7):
        assert hilb_partition_sum(k3, n) == hilb_partition_sum_codim(k3, n)


def test_product_formula_examples(k3):
    series = hilb_product_formula(k3, 5)
    assert series[1] == k3.table
    assert series.totals() == K3_EULER[:6]
    for n in range(1, 6):
        assert series[n] == hilb_partition_sum(k3, n)


def test_euler_against_brute_force(k3):
    assert brute_euler_series(24, 8) == K3_EULER
    assert euler_series(24, 8) == K3_EULER
    series = hilb_product_formula(k3, 8)
    assert series.euler() == K3_EULER


def test_symmetries_of_hilbert_diamonds(k3):
    for n in range(1, 7):
        d = hilb_partition_sum(k3, n)
        assert check_phs(d).passed
        assert dual(d) == d
        assert check_matsushita(d).passed


def test_goettsche_specialization(k3):
    reference = goettsche_hodge(hodge_marginal(k3.table), 6)
    for n in range(1, 7):
        assert hodge_marginal(hilb_partition_sum(k3, n)) == reference[n]
    assert reference[2][(1, 1)] == 21 and reference[2][(2, 2)] == 232


def test_matsushita_examples(k3):
    assert check_matsushita(k3.table).passed
    d2 = hilb_partition_sum(k3, 2)
    assert {t: h for t, h in d2.items() if t[1] == 4} == {(2, 4, 4): 1, (3, 4, 6): 1, (4, 4, 8): 1}
    assert check_matsushita(d2).passed
    broken = TriTable({t: h for t, h in k3.table.items() if t != (2, 2, 4)}, n=1)
    assert not check_matsushita(broken).passed


def test_surface_with_odd_classes_keeps_symmetry_and_euler():
    # synthetic symmetric, self-dual table carrying odd-degree classes
    table = TriTable(
        {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 2): 2,
         (1, 2, 3): 1, (2, 1, 3): 1, (2, 2, 4): 1, (0, 2, 2): 1, (2, 0, 2): 1},
        n=1,
    )
    s = SurfaceSpec("synthetic", table)
    series = hilb_product_formula(s, 4)
    assert series.euler() == euler_series(table.euler(), 4)
    for n in range(1, 5):
        d = hilb_partition_sum(s, n)
        assert d == series[n]
        assert check_phs(d).passed and dual(d) == d


def test_parallel_sum_is_identical(k3, monkeypatch):
    serial = hilb_partition_sum(k3, 5, workers=1)
    assert hilb_partition_sum(k3, 5, workers=2) == serial
    monkeypatch.setenv("PHD_THREADS", "0")
    assert resolve_workers() >= 1
    monkeypatch.setenv("PHD_THREADS", "x")
    with pytest.raises(ValueError):
        resolve_workers()


def test_twist_then_dual_pairing(k3):
    # the codimension-one summand of S^[2] is self-dual on its own
    t = tate_twist(k3.table, 1).with_n(2)
    assert check_self_dual(t).passed
