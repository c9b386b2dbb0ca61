"""Classical generating functions used to cross-check the diamond pipeline.

Nothing here touches perverse gradings: these are the Euler-characteristic
and Hodge-number product formulas for Hilbert schemes of points, expanded
with plain integer arithmetic.
"""

from __future__ import annotations

from collections import defaultdict
from math import comb


def euler_series(chi: int, order: int) -> list[int]:
    """Coefficients of ``prod_{m>=1} (1 - z^m)^(-chi)`` up to ``z**order``."""
    coeffs = [1] + [0] * order
    for m in range(1, order + 1):
        # multiply by (1 - z^m)^(-chi) = sum_j C(chi + j - 1, j) z^(m j), valid for negative chi too
        factor = [1]
        for j in range(1, order // m + 1):
            factor.append(factor[-1] * (chi + j - 1) // j)
        new = [0] * (order + 1)
        for a, ca in enumerate(coeffs):
            if not ca:
                continue
            for j, cj in enumerate(factor):
                e = a + m * j
                if e > order:
                    break
                new[e] += ca * cj
        coeffs = new
    return coeffs


def _signed_multiset(h: int, j: int, odd: bool) -> int:
    return comb(h, j) if odd else comb(h + j - 1, j)


def goettsche_hodge(surface_hodge: dict[tuple[int, int], int], order: int) -> list[dict[tuple[int, int], int]]:
    """Hodge numbers ``h^{p,q}(S^[n])`` for ``n = 0..order``.

    Expands ``prod_{m>=1} prod_{p,q} (1 - (-1)^(p+q) x^(p+m-1) y^(q+m-1) t^m)^(-(-1)^(p+q) h^{p,q})``.
    """
    coeffs: list[dict] = [{(0, 0): 1}] + [{} for _ in range(order)]
    for m in range(1, order + 1):
        for (p, q), h in sorted(surface_hodge.items()):
            if not h:
                continue
            odd = (p + q) % 2 == 1
            xp, yq = p + m - 1, q + m - 1
            top = order // m if not odd else min(order // m, h)
            new: list[dict] = [defaultdict(int) for _ in range(order + 1)]
            for a, poly in enumerate(coeffs):
                for j in range(top + 1):
                    e = a + m * j
                    if e > order:
                        break
                    c = _signed_multiset(h, j, odd)
                    for (x, y), v in poly.items():
                        new[e][(x + j * xp, y + j * yq)] += c * v
            coeffs = [{key: v for key, v in poly.items() if v} for poly in new]
    return [dict(sorted(poly.items())) for poly in coeffs]
