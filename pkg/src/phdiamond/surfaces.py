"""Base surfaces: the built-in elliptic K3 and validated user tables."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Mapping

from .tables import TableError, TriTable, check_phs, check_self_dual, hodge_marginal

__all__ = [
    "SurfaceSpec",
    "ValidationError",
    "builtin_elliptic_k3",
    "BUILTINS",
    "get_builtin",
    "load_surface",
    "table_from_document",
    "validate_surface_table",
]


class ValidationError(ValueError):
    """A surface table failed a structural or symmetry check.

    ``triple`` holds the offending ``(i, k, d)`` when there is one.
    """

    def __init__(self, message: str, triple=None):
        super().__init__(message)
        self.triple = triple


@dataclass(frozen=True)
class SurfaceSpec:
    name: str
    table: TriTable
    meta: Mapping[str, Any] = field(default_factory=dict)
    validated: bool = True

    def __post_init__(self):
        if self.validated:
            validate_surface_table(self.table)

    @property
    def has_odd(self) -> bool:
        return any(d % 2 for (_, _, d) in self.table.entries)


def validate_surface_table(table: TriTable) -> None:
    """Raise :class:`ValidationError` unless ``table`` is a valid fibred-surface diamond."""
    if table.n != 1:
        raise ValidationError(f"surface tables must have n=1, got n={table.n}")
    bad = table.outside_box()
    if bad:
        raise ValidationError(f"support outside box at {bad[0]}", bad[0])
    phs = check_phs(table)
    if not phs.passed:
        lo, hi = phs.first()
        # name the triple that is actually present
        culprit = lo if table[lo] else hi
        raise ValidationError(f"PHS violation at {culprit}", culprit)
    dual = check_self_dual(table)
    if not dual.passed:
        raise ValidationError(f"duality violation at {dual.first()}", dual.first())
    hodge = hodge_marginal(table)
    for corner in ((0, 0), (2, 2)):
        if hodge.get(corner, 0) != 1:
            raise ValidationError(
                f"Hodge number h^{corner} = {hodge.get(corner, 0)}, expected 1 for a surface")


_K3_ENTRIES = {
    (0, 0, 0): 1,
    (0, 1, 2): 1,
    (1, 0, 2): 1,
    (1, 1, 2): 18,
    (1, 2, 2): 1,
    (2, 1, 2): 1,
    (2, 2, 4): 1,
}


def builtin_elliptic_k3() -> SurfaceSpec:
    """Elliptic K3 over P^1 with 24 irreducible nodal fibres."""
    return SurfaceSpec(
        name="k3-elliptic",
        table=TriTable(_K3_ENTRIES, n=1),
        meta={"singular_fibers": 24, "reducible_fiber_components": []},
    )


BUILTINS = {"k3-elliptic": builtin_elliptic_k3}


def get_builtin(name: str) -> SurfaceSpec:
    try:
        return BUILTINS[name]()
    except KeyError:
        known = ", ".join(sorted(BUILTINS))
        raise ValidationError(f"unknown built-in surface {name!r} (known: {known})") from None


def _parse_h(raw, where) -> int:
    if isinstance(raw, bool):
        raise ValidationError(f"h at {where} must be a decimal string", where)
    if isinstance(raw, int):
        value = raw
    elif isinstance(raw, str) and raw.strip().lstrip("-").isdigit():
        value = int(raw)
    else:
        raise ValidationError(f"h at {where} must be a decimal string, got {raw!r}", where)
    if value <= 0:
        raise ValidationError(f"non-positive h={value} at {where}", where)
    return value


def table_from_document(doc: Mapping[str, Any]) -> tuple[str, TriTable, dict]:
    """Parse the JSON table schema into ``(name, table, meta)`` without symmetry checks."""
    if not isinstance(doc, Mapping):
        raise ValidationError("document must be a JSON object")
    for key in ("name", "n", "entries"):
        if key not in doc:
            raise ValidationError(f"schema violation: missing field {key!r}")
    name, n, entries = doc["name"], doc["n"], doc["entries"]
    if not isinstance(name, str):
        raise ValidationError("schema violation: 'name' must be a string")
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ValidationError("schema violation: 'n' must be a non-negative integer")
    if not isinstance(entries, list):
        raise ValidationError("schema violation: 'entries' must be a list")
    store: dict = {}
    for pos, entry in enumerate(entries):
        if not isinstance(entry, Mapping) or set(entry) != {"i", "k", "d", "h"}:
            raise ValidationError(f"schema violation: entry #{pos} must have exactly i, k, d, h")
        triple = tuple(entry[c] for c in ("i", "k", "d"))
        if any(isinstance(x, bool) or not isinstance(x, int) for x in triple):
            raise ValidationError(f"schema violation: entry #{pos} indices must be integers")
        if triple in store:
            raise ValidationError(f"duplicate entry {triple}", triple)
        store[triple] = _parse_h(entry["h"], triple)
    meta = doc.get("meta") or {}
    if not isinstance(meta, Mapping):
        raise ValidationError("schema violation: 'meta' must be an object")
    try:
        table = TriTable(store, n=n)
    except TableError as exc:
        raise ValidationError(str(exc)) from exc
    return name, table, dict(meta)


def load_surface(document, validate: bool = True) -> SurfaceSpec:
    """Build a :class:`SurfaceSpec` from a parsed JSON document or its text."""
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"invalid JSON: {exc}") from exc
    name, table, meta = table_from_document(document)
    return SurfaceSpec(name=name, table=table, meta=meta, validated=validate)
