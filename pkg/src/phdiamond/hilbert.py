"""Perverse-Hodge diamonds of Hilbert schemes of points on fibred surfaces.

Two independent routes compute the diamond of ``S^[n] -> B^(n)``:

* :func:`hilb_partition_sum` sums, over partitions ``1^a1 2^a2 ... n^an`` of
  ``n``, the tensor product of ``sym_power(twist(S, m - 1), a_m)``;
* :func:`hilb_product_formula` expands ``prod_m Sym_z^m(twist(S, m - 1))``
  as a truncated series in ``z`` using :func:`sym_series`.

Both twist each ``m``-part by ``m - 1`` instead of twisting a whole summand by
its codimension ``n - len(partition)``; the two placements agree because a
twist is additive over tensor factors (see :func:`hilb_partition_sum_codim`).
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache, reduce

from .surfaces import SurfaceSpec
from .sympower import GenSeries, series_mul, substitute, sym_power, sym_series
from .tables import UNIT, CheckReport, TriTable, add, tate_twist, tensor

__all__ = [
    "Partition",
    "partitions",
    "hilb_partition_sum",
    "hilb_partition_sum_codim",
    "hilb_product_formula",
    "hilb",
    "check_matsushita",
    "resolve_workers",
]


@dataclass(frozen=True)
class Partition:
    """Partition stored by multiplicities: ``mult[m - 1]`` copies of the part ``m``."""

    mult: tuple[int, ...]

    @property
    def weight(self) -> int:
        return sum(m * a for m, a in enumerate(self.mult, start=1))

    @property
    def length(self) -> int:
        return sum(self.mult)

    @property
    def codim(self) -> int:
        return self.weight - self.length

    def parts(self) -> list[int]:
        return [m for m, a in enumerate(self.mult, start=1) for _ in range(a)]

    def __str__(self) -> str:
        return " ".join(f"{m}^{a}" for m, a in enumerate(self.mult, start=1) if a) or "()"


def _mult_vectors(n: int, largest: int):
    # multiplicity vectors (a_1..a_largest) with sum m*a_m == n, a_largest first
    if largest == 0:
        if n == 0:
            yield ()
        return
    for a in range(n // largest + 1):
        for rest in _mult_vectors(n - a * largest, largest - 1):
            yield rest + (a,)


def partitions(n: int) -> list[Partition]:
    """All partitions of ``n``, ordered lexicographically by multiplicity vector (descending)."""
    if n < 1:
        raise ValueError(f"partitions need n >= 1, got {n}")
    vecs = sorted(_mult_vectors(n, n), reverse=True)
    return [Partition(v) for v in vecs]


def resolve_workers(workers: int | None = None) -> int:
    """Worker count from the argument or ``PHD_THREADS`` (0 means one per CPU)."""
    if workers is None:
        raw = os.environ.get("PHD_THREADS", "1").strip() or "1"
        try:
            workers = int(raw)
        except ValueError:
            raise ValueError(f"PHD_THREADS must be an integer, got {raw!r}") from None
    if workers < 0:
        raise ValueError("worker count must be non-negative")
    if workers == 0:
        workers = os.cpu_count() or 1
    return workers


@lru_cache(maxsize=None)
def _part_factor(table: TriTable, m: int, a: int) -> TriTable:
    return sym_power(tate_twist(table, m - 1), a)


def _partition_term(table: TriTable, nu: Partition) -> TriTable:
    factors = [_part_factor(table, m, a) for m, a in enumerate(nu.mult, start=1) if a]
    return reduce(tensor, factors, UNIT)


def _check_surface(surface: SurfaceSpec, n: int) -> None:
    if n < 1:
        raise ValueError(f"number of points must be >= 1, got {n}")
    if surface.validated and surface.table.n != 1:
        raise ValueError("surface table must have n=1")


def hilb_partition_sum(surface: SurfaceSpec, n: int, workers: int | None = None) -> TriTable:
    """Diamond of ``S^[n]`` as a sum over partitions of ``n``.

    Terms are independent; with more than one worker they are computed in a
    process pool and summed in partition order, so the result does not
    depend on the worker count.
    """
    _check_surface(surface, n)
    parts = partitions(n)
    table = surface.table
    w = resolve_workers(workers)
    if w > 1 and len(parts) > 1:
        with ProcessPoolExecutor(max_workers=min(w, len(parts))) as pool:
            terms = list(pool.map(_partition_term, [table] * len(parts), parts))
    else:
        terms = [_partition_term(table, nu) for nu in parts]
    total = reduce(add, terms, TriTable({}, 0))
    return total.with_n(n * table.n)


def hilb_partition_sum_codim(surface: SurfaceSpec, n: int) -> TriTable:
    """Same sum, twisting each summand once by ``codim = n - len(partition)``."""
    _check_surface(surface, n)
    total = TriTable({}, 0)
    for nu in partitions(n):
        factors = [sym_power(surface.table, a) for a in nu.mult if a]
        term = reduce(tensor, factors, UNIT)
        total = add(total, tate_twist(term, nu.codim))
    return total.with_n(n * surface.table.n)


@lru_cache(maxsize=None)
def _twisted_series(table: TriTable, m: int, order: int) -> GenSeries:
    return sym_series(tate_twist(table, m - 1), order)


def hilb_product_formula(surface: SurfaceSpec, n_max: int) -> GenSeries:
    """Series ``sum_n diamond(S^[n]) z^n`` truncated at ``z**n_max``."""
    _check_surface(surface, n_max)
    table = surface.table
    acc = GenSeries((UNIT,) + tuple(TriTable({}, 0) for _ in range(n_max)))
    for m in range(1, n_max + 1):
        factor = substitute(_twisted_series(table, m, n_max // m), m, n_max)
        acc = series_mul(acc, factor)
    coeffs = [acc[0]] + [c.with_n(j * table.n) for j, c in enumerate(acc.coefficients) if j]
    return GenSeries(tuple(coeffs))


def hilb(surface: SurfaceSpec, n: int) -> TriTable:
    return hilb_partition_sum(surface, n)


def check_matsushita(diamond: TriTable) -> CheckReport:
    """Edge check: the ``k = 2n`` slice is ``{(i, 2n, 2i): n <= i <= 2n}``, all ones.

    By symmetry the ``i = 2n`` slice must mirror it; both are checked.
    """
    n = diamond.n
    report = CheckReport("matsushita")
    expected_k = {(i, 2 * n, 2 * i): 1 for i in range(n, 2 * n + 1)}
    expected_i = {(2 * n, i, 2 * i): 1 for i in range(n, 2 * n + 1)}
    for axis, expected in ((1, expected_k), (0, expected_i)):
        actual = {t: h for t, h in diamond.items() if t[axis] == 2 * n}
        for t in sorted(set(actual) | set(expected), key=lambda t: (t[2], t[0], t[1])):
            if actual.get(t, 0) != expected.get(t, 0):
                report.violations.append((t, actual.get(t, 0), expected.get(t, 0)))
    return report
