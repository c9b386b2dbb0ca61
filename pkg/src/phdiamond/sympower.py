"""Graded symmetric powers of trigraded tables.

Parity is the parity of the cohomological degree ``d``: classes with even
``d`` are symmetrized, classes with odd ``d`` are antisymmetrized.  The
generating function is

    prod_even (1 - t x^i y^k q^d)^(-h) * prod_odd (1 + t x^i y^k q^d)^h

and :func:`sym_power` returns its ``t^m`` coefficient.

Two routes are provided on purpose.  :func:`sym_power` enumerates how the
``m`` factors are distributed over the entries of the table;
:func:`sym_series` multiplies the truncated factors together one entry at a
time.  They share no code beyond the table type, so each checks the other.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .tables import UNIT, TableError, TriTable, add, tensor

__all__ = ["GenSeries", "sym_power", "sym_series", "series_mul", "substitute"]


def _piece_count(h: int, j: int, odd: bool) -> int:
    # dimension of Sym^j (even) or Lambda^j (odd) of an h-dimensional space
    return comb(h, j) if odd else comb(h + j - 1, j)


def _distributions(caps: Sequence[int | None], m: int) -> Iterator[tuple[int, ...]]:
    """All ways to write ``m`` as an ordered sum with part ``j`` at most ``caps[j]``."""
    if not caps:
        if m == 0:
            yield ()
        return
    head, rest = caps[0], caps[1:]
    top = m if head is None else min(m, head)
    for j in range(top, -1, -1):
        for tail in _distributions(rest, m - j):
            yield (j,) + tail


def sym_power(a: TriTable, m: int) -> TriTable:
    """``m``-th graded symmetric power of ``a``; half-dimension becomes ``m * a.n``."""
    if m < 0:
        raise TableError(f"symmetric power order must be non-negative, got {m}")
    if m == 0:
        return UNIT
    items = list(a.items())
    caps = [h if d % 2 else None for (_, _, d), h in items]
    acc: dict[tuple[int, int, int], int] = defaultdict(int)
    for dist in _distributions(caps, m):
        coeff = 1
        i = k = d = 0
        for ((ei, ek, ed), h), j in zip(items, dist):
            if j:
                coeff *= _piece_count(h, j, ed % 2 == 1)
                i += j * ei
                k += j * ek
                d += j * ed
        if coeff:
            acc[(i, k, d)] += coeff
    return TriTable._trusted({key: h for key, h in acc.items() if h}, m * a.n)


@dataclass(frozen=True)
class GenSeries:
    """Truncated power series in ``z`` with table coefficients.

    ``coefficients[m]`` is the coefficient of ``z**m``; the series is known
    exactly up to ``z**order``.
    """

    coefficients: tuple[TriTable, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise TableError("a series needs at least the constant coefficient")
        if self.coefficients[0] != UNIT:
            raise TableError("constant coefficient must be the unit table")

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, m: int) -> TriTable:
        return self.coefficients[m]

    def __len__(self) -> int:
        return len(self.coefficients)

    def totals(self) -> list[int]:
        return [c.total() for c in self.coefficients]

    def euler(self) -> list[int]:
        return [c.euler() for c in self.coefficients]


def sym_series(a: TriTable, order: int) -> GenSeries:
    """Series ``sum_m sym_power(a, m) z^m`` truncated at ``z**order``."""
    if order < 0:
        raise TableError(f"truncation order must be non-negative, got {order}")
    # running coefficients as plain dicts; half-dimension tracked separately
    coeffs: list[dict] = [{(0, 0, 0): 1}] + [{} for _ in range(order)]
    for (ei, ek, ed), h in a.items():
        odd = ed % 2 == 1
        top = min(order, h) if odd else order
        factor = [_piece_count(h, j, odd) for j in range(top + 1)]
        new: list[dict] = []
        for m in range(order + 1):
            acc: dict = defaultdict(int)
            for j in range(min(m, top) + 1):
                prev = coeffs[m - j]
                if not prev:
                    continue
                c = factor[j]
                si, sk, sd = j * ei, j * ek, j * ed
                for (i, k, d), v in prev.items():
                    acc[(i + si, k + sk, d + sd)] += c * v
            new.append(acc)
        coeffs = new
    tables = tuple(
        TriTable._trusted({key: v for key, v in c.items() if v}, m * a.n)
        for m, c in enumerate(coeffs)
    )
    return GenSeries(tables)


def series_mul(p: GenSeries, q: GenSeries, order: int | None = None) -> GenSeries:
    """Cauchy product of two series, truncated at the smaller order (or ``order``)."""
    top = min(p.order, q.order) if order is None else order
    if top > min(p.order, q.order):
        raise TableError("cannot extend a truncated product beyond its factors")
    out = []
    for m in range(top + 1):
        acc = TriTable._trusted({}, 0)
        for j in range(m + 1):
            if p[j] and q[m - j]:
                acc = add(acc, tensor(p[j], q[m - j]))
        out.append(acc)
    return GenSeries(tuple(out))


def substitute(p: GenSeries, step: int, order: int) -> GenSeries:
    """Replace ``z`` by ``z**step``; coefficients off the lattice are empty tables."""
    if step < 1:
        raise TableError("substitution step must be positive")
    out = [TriTable._trusted({}, 0) for _ in range(order + 1)]
    for j, c in enumerate(p.coefficients):
        if j * step > order:
            break
        out[j * step] = c
    return GenSeries(tuple(out))
