"""Trigraded dimension tables and their elementary operations.

A :class:`TriTable` stores the numbers ``h[i, k, d]`` of a perverse-Hodge
diamond: ``i`` is the perverse degree, ``k`` the Hodge degree and ``d`` the
cohomological degree, all in normalized (non-negative) form.  For a
fibration of half-dimension ``n`` the support lies in the box
``0 <= i, k <= 2n``, ``0 <= d <= 4n``.

Tables are immutable; every operation returns a new table.  The empty table
is legal and behaves as zero under :func:`add` and as an absorbing element
under :func:`tensor`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

Triple = tuple[int, int, int]


class TableError(ValueError):
    """Raised when a table is malformed or an operation needs box support."""


class TriTable:
    """Sparse map ``(i, k, d) -> h`` with ``h >= 1``, plus the half-dimension ``n``."""

    __slots__ = ("_entries", "_n", "_hash")

    def __init__(self, entries: Mapping[Triple, int] | Iterable[tuple[Triple, int]] = (), n: int = 0):
        if isinstance(entries, Mapping):
            entries = entries.items()
        store: dict[Triple, int] = {}
        for key, h in entries:
            key = _as_triple(key)
            if isinstance(h, bool) or not isinstance(h, int):
                raise TableError(f"dimension at {key} must be an integer, got {h!r}")
            if h < 0:
                raise TableError(f"negative dimension {h} at {key}")
            if h == 0:
                continue
            if key in store:
                raise TableError(f"duplicate entry {key}")
            store[key] = h
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise TableError(f"half-dimension must be a non-negative integer, got {n!r}")
        self._entries = MappingProxyType(dict(sorted(store.items(), key=_dik)))
        self._n = n
        self._hash: int | None = None

    @classmethod
    def _trusted(cls, store: dict[Triple, int], n: int) -> "TriTable":
        # internal fast path: keys are int triples, values are positive ints
        obj = cls.__new__(cls)
        obj._entries = MappingProxyType(dict(sorted(store.items(), key=_dik)))
        obj._n = n
        obj._hash = None
        return obj

    @property
    def entries(self) -> Mapping[Triple, int]:
        return self._entries

    @property
    def n(self) -> int:
        return self._n

    def __getitem__(self, key: Triple) -> int:
        return self._entries.get(tuple(key), 0)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def items(self):
        return self._entries.items()

    def total(self) -> int:
        """Total dimension ``sum(h)``."""
        return sum(self._entries.values())

    def euler(self) -> int:
        """Signed total ``sum((-1)**d * h)``."""
        return sum(h if d % 2 == 0 else -h for (_, _, d), h in self._entries.items())

    def in_box(self) -> bool:
        n = self._n
        return all(0 <= i <= 2 * n and 0 <= k <= 2 * n and 0 <= d <= 4 * n for i, k, d in self._entries)

    def outside_box(self) -> list[Triple]:
        n = self._n
        return [t for t in self._entries
                if not (0 <= t[0] <= 2 * n and 0 <= t[1] <= 2 * n and 0 <= t[2] <= 4 * n)]

    def with_n(self, n: int) -> "TriTable":
        return TriTable(self._entries, n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TriTable):
            return NotImplemented
        return self._n == other._n and dict(self._entries) == dict(other._entries)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._entries.items())))
        return self._hash

    def __reduce__(self):
        return (TriTable, (dict(self._entries), self._n))

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {v}" for k, v in self._entries.items())
        return f"TriTable({{{body}}}, n={self._n})"


def _as_triple(key) -> Triple:
    try:
        i, k, d = key
    except (TypeError, ValueError):
        raise TableError(f"key must be an (i, k, d) triple, got {key!r}") from None
    for x in (i, k, d):
        if isinstance(x, bool) or not isinstance(x, int):
            raise TableError(f"key must hold integers, got {key!r}")
    return (i, k, d)


def _dik(item):
    (i, k, d), _ = item
    return (d, i, k)


UNIT = TriTable({(0, 0, 0): 1}, n=0)
EMPTY = TriTable({}, n=0)


def unit() -> TriTable:
    return UNIT


def add(a: TriTable, b: TriTable) -> TriTable:
    """Entrywise sum; the result keeps the larger half-dimension."""
    store = dict(a.entries)
    for key, h in b.items():
        store[key] = store.get(key, 0) + h
    return TriTable._trusted(store, max(a.n, b.n))


def scale(a: TriTable, c: int) -> TriTable:
    if c == 0:
        return TriTable._trusted({}, a.n)
    if c < 0:
        raise TableError("dimension tables cannot be scaled by a negative number")
    return TriTable._trusted({key: c * h for key, h in a.items()}, a.n)


def tensor(a: TriTable, b: TriTable) -> TriTable:
    """Convolution of two tables; half-dimensions add."""
    acc: dict[Triple, int] = defaultdict(int)
    for (i1, k1, d1), h1 in a.items():
        for (i2, k2, d2), h2 in b.items():
            acc[(i1 + i2, k1 + k2, d1 + d2)] += h1 * h2
    return TriTable._trusted(dict(acc), a.n + b.n)


def tate_twist(a: TriTable, c: int) -> TriTable:
    """Shift every entry ``(i, k, d) -> (i + c, k + c, d + 2c)``."""
    if c == 0:
        return a
    return TriTable._trusted({(i + c, k + c, d + 2 * c): h for (i, k, d), h in a.items()}, a.n)


def dual(a: TriTable) -> TriTable:
    """Reflect through the centre of the box: ``(i, k, d) -> (2n-i, 2n-k, 4n-d)``."""
    bad = a.outside_box()
    if bad:
        raise TableError(f"support outside box at {bad[0]} (n={a.n}); dual is undefined")
    n = a.n
    return TriTable._trusted({(2 * n - i, 2 * n - k, 4 * n - d): h for (i, k, d), h in a.items()}, n)


def hodge_marginal(a: TriTable) -> dict[tuple[int, int], int]:
    """Sum over the perverse index: ``(k, d - k) -> sum_i h[i, k, d]``."""
    out: dict[tuple[int, int], int] = defaultdict(int)
    for (i, k, d), h in a.items():
        out[(k, d - k)] += h
    return dict(sorted(out.items()))


def perverse_marginal(a: TriTable) -> dict[tuple[int, int], int]:
    """Sum over the Hodge index: ``(i, d - i) -> sum_k h[i, k, d]``."""
    out: dict[tuple[int, int], int] = defaultdict(int)
    for (i, k, d), h in a.items():
        out[(i, d - i)] += h
    return dict(sorted(out.items()))


def degree_series(a: TriTable) -> dict[int, int]:
    """Collapse both gradings: ``d -> sum h``."""
    out: dict[int, int] = defaultdict(int)
    for (_, _, d), h in a.items():
        out[d] += h
    return dict(sorted(out.items()))


def slice_k(a: TriTable, k: int) -> dict[Triple, int]:
    return {t: h for t, h in a.items() if t[1] == k}


def slice_i(a: TriTable, i: int) -> dict[Triple, int]:
    return {t: h for t, h in a.items() if t[0] == i}


def max_degree(a: TriTable, axis: int) -> int:
    return max((t[axis] for t in a.entries), default=0)


def has_odd(a: TriTable) -> bool:
    return any(d % 2 for (_, _, d) in a.entries)


@dataclass
class CheckReport:
    """Outcome of a symmetry or shape check.

    ``violations`` lists the offending items in deterministic order; a check
    passes exactly when it is empty.
    """

    name: str
    violations: list = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed

    def first(self):
        return self.violations[0] if self.violations else None

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{self.name}: {status}"
        if not self.passed:
            line += f" ({len(self.violations)} violation(s); first: {self.violations[0]})"
        if self.notes:
            line += " [" + "; ".join(self.notes) + "]"
        return line


def check_phs(a: TriTable) -> CheckReport:
    """Perverse-Hodge symmetry ``h[i, k, d] == h[k, i, d]``.

    Each asymmetric pair is reported once, as ``((i, k, d), (k, i, d))``
    with ``i < k``.
    """
    report = CheckReport("phs")
    seen = set()
    for (i, k, d), h in a.items():
        if i == k:
            continue
        pair = ((min(i, k), max(i, k), d), (max(i, k), min(i, k), d))
        if pair in seen:
            continue
        seen.add(pair)
        if a[pair[0]] != a[pair[1]]:
            report.violations.append(pair)
    report.violations.sort(key=lambda p: (p[0][2], p[0][0], p[0][1]))
    return report


def check_self_dual(a: TriTable) -> CheckReport:
    report = CheckReport("dual")
    bad = a.outside_box()
    if bad:
        report.violations.extend(bad)
        report.notes.append("support outside box")
        return report
    d = dual(a)
    for key in sorted(set(a.entries) | set(d.entries), key=lambda t: (t[2], t[0], t[1])):
        if a[key] != d[key]:
            report.violations.append(key)
    return report
