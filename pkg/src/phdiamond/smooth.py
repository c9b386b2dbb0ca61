"""Rank and degree bookkeeping for perverse-Hodge complexes of smooth abelian fibrations.

Over an ``n``-dimensional base, ``V^{a,b}`` is the Hodge bundle
``wedge^a V^{1,0} (x) wedge^b V^{0,1}`` of rank ``C(n,a) C(n,b)``.  The
complex ``G_{i,k}`` has the term ``V^{k-t, i-k+t} (x) Omega^t`` in
cohomological degree ``t - 2n + i`` for ``t = 0..n``.  Exchanging the second
and third tensor factors identifies term ``t`` of ``G_{i,k}`` with term
``i - k + t`` of ``G_{k,i}``; the checks here confirm that this is a bijection
of nonzero terms preserving rank and degree.

Only ranks and degrees are modelled, not the differentials.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .tables import CheckReport

__all__ = [
    "Term",
    "ComplexBlueprint",
    "vb_rank",
    "build_G",
    "degree_window",
    "check_smooth_phs",
    "check_smooth_grid",
    "saito_consistency",
]


def _c(n: int, a: int) -> int:
    return comb(n, a) if 0 <= a <= n else 0


def vb_rank(n: int, a: int, b: int) -> int:
    """Rank of ``V^{a,b}``; zero outside ``0 <= a, b <= n``."""
    return _c(n, a) * _c(n, b)


@dataclass(frozen=True)
class Term:
    degree: int
    rank: int
    label: tuple[int, int, int]  # (a, b, c) for V^{a,b} (x) Omega^c


@dataclass(frozen=True)
class ComplexBlueprint:
    n: int
    i: int
    k: int
    terms: tuple[Term, ...]

    def __post_init__(self):
        degs = [t.degree for t in self.terms]
        if any(b <= a for a, b in zip(degs, degs[1:])):
            raise ValueError("term degrees must be strictly increasing")
        if any(t.rank <= 0 for t in self.terms):
            raise ValueError("zero-rank terms must be omitted")

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def degrees(self) -> list[int]:
        return [t.degree for t in self.terms]

    @property
    def total_rank(self) -> int:
        return sum(t.rank for t in self.terms)

    def term_at(self, t: int) -> Term | None:
        # term with Omega-exponent t
        for term in self.terms:
            if term.label[2] == t:
                return term
        return None


def build_G(n: int, i: int, k: int) -> ComplexBlueprint:
    terms = []
    if 0 <= i <= 2 * n and 0 <= k <= 2 * n:
        for t in range(n + 1):
            a, b = k - t, i - k + t
            rank = vb_rank(n, a, b) * _c(n, t)
            if rank:
                terms.append(Term(degree=t - 2 * n + i, rank=rank, label=(a, b, t)))
    return ComplexBlueprint(n, i, k, tuple(terms))


def degree_window(n: int, i: int, k: int) -> tuple[int, int]:
    """Closed interval ``[max(i,k) - 2n, min(i,k) - n]`` containing every nonzero term."""
    return (max(i, k) - 2 * n, min(i, k) - n)


def check_smooth_phs(n: int, i: int, k: int) -> CheckReport:
    report = CheckReport(f"smooth[n={n},i={i},k={k}]")
    g, h = build_G(n, i, k), build_G(n, k, i)
    lo, hi = degree_window(n, i, k)
    matched = set()
    for term in g.terms:
        a, b, t = term.label
        image = h.term_at(i - k + t)
        if image is None:
            report.violations.append(("unmatched", term))
            continue
        # the swap sends V^{a,b} (x) Omega^t to V^{a,t} (x) Omega^b
        if image.label != (a, t, b):
            report.violations.append(("label", term, image))
        if image.rank != term.rank or image.degree != term.degree:
            report.violations.append(("rank/degree", term, image))
        matched.add(image.label)
    for term in h.terms:
        if term.label not in matched:
            report.violations.append(("not hit", term))
    for term in g.terms + h.terms:
        if not lo <= term.degree <= hi:
            report.violations.append(("window", term, (lo, hi)))
    return report


def check_smooth_grid(n: int) -> list[CheckReport]:
    """One report per ``(i, k)`` with ``0 <= i, k <= 2n``, row-major."""
    return [check_smooth_phs(n, i, k) for i in range(2 * n + 1) for k in range(2 * n + 1)]


def saito_consistency(n: int, k: int) -> CheckReport:
    """Compare ``sum_i G_{i,k}`` with ``R pi_* Omega^k_M [2n - k]`` for a product fibration.

    Locally ``Omega^k_M = sum_{a+c=k} Omega^a_fibre (x) Omega^c_B``, so in
    degree ``e`` the direct image has rank ``C(2n, k) C(n, e + 2n - k)``.  The
    report also checks the alternating sum of ranks, which is
    ``C(2n, k) (-1)^k (1 - 1)^n``.
    """
    report = CheckReport(f"saito[n={n},k={k}]")
    by_degree: dict[int, int] = {}
    for i in range(2 * n + 1):
        for term in build_G(n, i, k).terms:
            by_degree[term.degree] = by_degree.get(term.degree, 0) + term.rank
    expected = {}
    for q in range(n + 1):
        r = comb(2 * n, k) * comb(n, q) if 0 <= k <= 2 * n else 0
        if r:
            expected[q - 2 * n + k] = r
    for e in sorted(set(by_degree) | set(expected)):
        if by_degree.get(e, 0) != expected.get(e, 0):
            report.violations.append((e, by_degree.get(e, 0), expected.get(e, 0)))
    alt = sum((-1) ** (e % 2) * r for e, r in by_degree.items())
    alt_expected = comb(2 * n, k) * (-1) ** k * (0 if n else 1) if 0 <= k <= 2 * n else 0
    if alt != alt_expected:
        report.violations.append(("euler", alt, alt_expected))
    return report
