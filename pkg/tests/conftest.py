import itertools
from collections import Counter
from math import comb

import pytest
from hypothesis import strategies as st

from phdiamond.surfaces import builtin_elliptic_k3
from phdiamond.tables import TriTable


@pytest.fixture(scope="session")
def k3():
    return builtin_elliptic_k3()


def small_tables(max_n=2, max_entries=4, max_h=3, box=True):
    """Random tables, box-supported by default."""

    @st.composite
    def build(draw):
        n = draw(st.integers(0, max_n))
        if box:
            key = st.tuples(st.integers(0, 2 * n), st.integers(0, 2 * n), st.integers(0, 4 * n))
        else:
            key = st.tuples(st.integers(-2, 4), st.integers(-2, 4), st.integers(-2, 6))
        entries = draw(st.dictionaries(key, st.integers(1, max_h), max_size=max_entries))
        return TriTable(entries, n=n)

    return build()


def symmetric_tables(max_n=2, max_entries=3, max_h=3):
    """Random tables that satisfy h[i,k,d] == h[k,i,d]."""

    @st.composite
    def build(draw):
        t = draw(small_tables(max_n, max_entries, max_h))
        store = {}
        for (i, k, d), h in t.items():
            if i <= k:
                store[(i, k, d)] = store[(k, i, d)] = h
        return TriTable(store, n=t.n)

    return build()


def brute_sym_power(table, m):
    """Graded symmetric power by listing monomials in an explicit basis."""
    basis = []
    for (i, k, d), h in table.items():
        basis.extend(((i, k, d), j) for j in range(h))
    counts = Counter()
    for combo in itertools.combinations_with_replacement(range(len(basis)), m):
        reps = Counter(combo)
        if any(r > 1 and basis[b][0][2] % 2 for b, r in reps.items()):
            continue
        grade = tuple(sum(basis[b][0][axis] for b in combo) for axis in range(3))
        counts[grade] += 1
    return TriTable(dict(counts), n=m * table.n)


def multiset(size, m):
    """Number of size-m multisets from a size-element set."""
    return comb(size + m - 1, m) if m else 1


def brute_partitions(n, largest=None):
    """Non-increasing part sequences summing to n."""
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in brute_partitions(n - first, first))
    return out


def brute_euler_series(chi, order):
    """prod (1 - z^m)^(-chi) for chi >= 0 by repeated geometric-series multiplication."""
    coeffs = [1] + [0] * order
    for m in range(1, order + 1):
        for _ in range(chi):
            for e in range(m, order + 1):
                coeffs[e] += coeffs[e - m]
    return coeffs


def pytest_configure(config):
    config._phd_acceptance = []


@pytest.fixture
def criterion(request):
    """Record a one-line verdict for the acceptance summary."""

    def record(label, ok, detail=""):
        request.config._phd_acceptance.append((label, ok, detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_phd_acceptance", [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in lines:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())
