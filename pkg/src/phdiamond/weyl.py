"""Weight coordinates, Weyl-group symmetries and the octahedron shape check.

A cell ``(i, k, d)`` of a diamond with half-dimension ``n`` is sent to the
centred weight ``(d - 2n, 2i - d, 2k - d)``: the eigenvalues of the three
Cartan elements ``H``, ``H_P``, ``H_F``.  The Weyl group of so(6) acts on these
by permutations with an even number of sign changes (type D3, 24 elements);
adding one more sl2-triple gives so(7), where all sign changes are allowed
(type B3, 48 elements).  Weight multiplicities of a finite-dimensional
representation are constant on Weyl orbits.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Literal

from .tables import CheckReport, TableError, TriTable

__all__ = [
    "CenteredWeight",
    "WeylElement",
    "centered",
    "uncentered",
    "weyl_group",
    "SWAP",
    "NEGATION",
    "act_on_table",
    "check_weyl_invariance",
    "check_element_invariance",
    "in_octahedron",
    "octahedron_vertices",
    "check_octahedron",
]

Mode = Literal["D3", "B3"]


@dataclass(frozen=True)
class CenteredWeight:
    h: int
    p: int
    f: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.h, self.p, self.f)


def centered(i: int, k: int, d: int, n: int) -> CenteredWeight:
    return CenteredWeight(d - 2 * n, 2 * i - d, 2 * k - d)


def uncentered(w: CenteredWeight, n: int) -> tuple[int, int, int]:
    """Inverse of :func:`centered`; the three coordinates must share a parity."""
    d = w.h + 2 * n
    if (w.p + d) % 2 or (w.f + d) % 2:
        raise TableError(f"weight {w.as_tuple()} has mixed parity; no cell maps to it")
    return ((w.p + d) // 2, (w.f + d) // 2, d)


@dataclass(frozen=True)
class WeylElement:
    """Signed permutation: coordinate ``j`` of the image is ``signs[j] * w[perm[j]]``."""

    perm: tuple[int, int, int]
    signs: tuple[int, int, int]

    def __call__(self, w: CenteredWeight) -> CenteredWeight:
        v = w.as_tuple()
        return CenteredWeight(*(s * v[p] for p, s in zip(self.perm, self.signs)))

    def compose(self, other: "WeylElement") -> "WeylElement":
        """``self`` after ``other``."""
        perm = tuple(other.perm[p] for p in self.perm)
        signs = tuple(s * other.signs[p] for p, s in zip(self.perm, self.signs))
        return WeylElement(perm, signs)

    @property
    def sign_product(self) -> int:
        a, b, c = self.signs
        return a * b * c

    @property
    def is_identity(self) -> bool:
        return self.perm == (0, 1, 2) and self.signs == (1, 1, 1)


SWAP = WeylElement((0, 2, 1), (1, 1, 1))  # exchanges the perverse and Hodge weights
NEGATION = WeylElement((0, 1, 2), (-1, -1, -1))


def weyl_group(mode: Mode) -> list[WeylElement]:
    """Elements of the D3 (24) or B3 (48) Weyl group, in a fixed order."""
    if mode not in ("D3", "B3"):
        raise ValueError(f"mode must be 'D3' or 'B3', got {mode!r}")
    out = []
    for perm in itertools.permutations(range(3)):
        for signs in itertools.product((1, -1), repeat=3):
            g = WeylElement(perm, signs)
            if mode == "B3" or g.sign_product == 1:
                out.append(g)
    return out


def act_on_table(g: WeylElement, table: TriTable) -> TriTable:
    """Move every cell of ``table`` along ``g``."""
    n = table.n
    moved = {}
    for (i, k, d), h in table.items():
        moved[uncentered(g(centered(i, k, d, n)), n)] = h
    return TriTable(moved, n)


def check_element_invariance(table: TriTable, g: WeylElement, name: str = "element") -> CheckReport:
    report = CheckReport(name)
    n = table.n
    for (i, k, d), h in table.items():
        image = uncentered(g(centered(i, k, d, n)), n)
        if table[image] != h:
            report.violations.append(((i, k, d), image, h, table[image]))
    return report


def check_weyl_invariance(table: TriTable, mode: Mode = "D3") -> CheckReport:
    """Multiplicity must be constant along every orbit of centred weights."""
    report = CheckReport(f"weyl-{mode}")
    if mode == "B3":
        report.notes.append("requires b2 >= 5")
    group = weyl_group(mode)
    n = table.n
    seen: set = set()
    for (i, k, d), h in table.items():
        if (i, k, d) in seen:
            continue
        w = centered(i, k, d, n)
        orbit = sorted({uncentered(g(w), n) for g in group}, key=lambda t: (t[2], t[0], t[1]))
        seen.update(orbit)
        values = {t: table[t] for t in orbit}
        if len(set(values.values())) > 1:
            report.violations.append({"orbit_of": (i, k, d), "values": values})
    return report


def in_octahedron(i: int, k: int, d: int, n: int) -> bool:
    w = centered(i, k, d, n)
    return abs(w.h) + abs(w.p) + abs(w.f) <= 2 * n


def octahedron_vertices(n: int) -> list[tuple[int, int, int]]:
    return [(0, 0, 0), (0, n, 2 * n), (n, 0, 2 * n), (n, 2 * n, 2 * n), (2 * n, n, 2 * n), (2 * n, 2 * n, 4 * n)]


def check_octahedron(table: TriTable) -> CheckReport:
    """Every nonzero cell lies in the convex hull of the six vertices.

    The hull in centred coordinates is ``|x| + |y| + |z| <= 2n``.  Whether all
    six vertices are present with ``h = 1`` is recorded in ``details['vertices_ok']``
    and in the notes; it does not by itself fail the check.
    """
    n = table.n
    report = CheckReport("octahedron")
    for (i, k, d), h in table.items():
        if not in_octahedron(i, k, d, n):
            w = centered(i, k, d, n)
            report.violations.append(((i, k, d), abs(w.h) + abs(w.p) + abs(w.f)))
    missing = [v for v in octahedron_vertices(n) if table[v] != 1]
    report.details["vertices_ok"] = not missing
    report.notes.append("all six vertices h=1" if not missing else f"vertices not h=1: {missing}")
    return report
