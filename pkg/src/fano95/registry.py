"""The 95-family table: loading, export, classification and cross-validation.

Table format (UTF-8, tab separated, ``#`` starts a comment line, header row
mandatory)::

    N  d  a1 a2 a3 a4 a5  basket  presentation  elliptic  omega  unique  k3  dense

``basket`` is ``r:a:count`` triples joined by ``;`` (``-`` when empty), with
``a`` the smaller of the two paired local weights.  Flags are ``0``/``1``.
"""
from __future__ import annotations

import io
import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Iterable, TextIO

from . import tables
from .enumeration import AdmissibilityVerdict, check_quasismooth, enumerate_families
from .fibrations import (
    EllipticKind,
    EllipticStatus,
    K3Route,
    elliptic_fiber_criterion,
    elliptic_status,
    k3_route,
)
from .groups import Presentation, presentation_of
from .singularities import Basket, compute_basket, one_step_values
from .weights import WeightSystem, minus_k_cubed

__all__ = [
    "COLUMNS",
    "RegistryError",
    "RegistryParseError",
    "FamilyRecord",
    "ClassificationReport",
    "default_table_path",
    "load_registry",
    "export_tsv",
    "export_json",
    "derive_record",
    "family",
    "classify",
    "validate_all",
]

COLUMNS = ("N", "d", "a1", "a2", "a3", "a4", "a5", "basket", "presentation",
           "elliptic", "omega", "unique", "k3", "dense")
TABLE_ENV = "FANO95_TABLE"


class RegistryError(ValueError):
    """A table row violates a record invariant."""

    def __init__(self, message: str, n: int | None = None, field: str | None = None):
        super().__init__(message)
        self.n = n
        self.field = field


class RegistryParseError(RegistryError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class FamilyRecord:
    n: int
    ws: WeightSystem
    basket: Basket
    presentation: Presentation
    elliptic: EllipticStatus
    k3: K3Route
    potentially_dense: bool

    @property
    def minus_k_cubed(self) -> Fraction:
        return minus_k_cubed(self.ws)

    def fields(self) -> dict[str, object]:
        """Comparable view used for diffs and export."""
        return {
            "weights": self.ws.weights,
            "degree": self.ws.degree,
            "basket": self.basket.to_string(),
            "presentation": self.presentation.tag,
            "elliptic": self.elliptic.kind.value,
            "omega": self.elliptic.multiple_structures,
            "unique": self.elliptic.unique_structure,
            "k3": self.k3.value,
            "dense": self.potentially_dense,
        }

    def to_row(self) -> list[str]:
        e = self.elliptic
        return [str(self.n), str(self.ws.degree), *map(str, self.ws.weights),
                self.basket.to_string() or "-", self.presentation.tag, e.kind.value,
                str(int(e.multiple_structures)), str(int(e.unique_structure)),
                self.k3.value, str(int(self.potentially_dense))]

    def to_json(self) -> dict:
        k = self.minus_k_cubed
        return {
            "N": self.n,
            "degree": self.ws.degree,
            "weights": list(self.ws.weights),
            "basket": [{"r": s.r, "a": s.a, "count": s.count, "type": f"1/{s.r}(1,{s.a},{s.r - s.a})"}
                       for s in self.basket],
            "presentation": self.presentation.tag,
            "generators": self.presentation.generators,
            "elliptic": {"kind": self.elliptic.kind.value,
                         "multiple_structures": self.elliptic.multiple_structures,
                         "unique_structure": self.elliptic.unique_structure},
            "k3": self.k3.value,
            "potentially_dense": self.potentially_dense,
            "minus_k_cubed": f"{k.numerator}/{k.denominator}",
        }


# -- loading -----------------------------------------------------------------

def default_table_path() -> Path:
    override = os.environ.get(TABLE_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("fano95") / "data" / "fano95.tsv"))


def _flag(text: str, line: int, name: str) -> bool:
    if text not in ("0", "1"):
        raise RegistryParseError(f"{name} must be 0 or 1, got {text!r}", line)
    return text == "1"


def _parse_row(cells: list[str], line: int) -> FamilyRecord:
    if len(cells) != len(COLUMNS):
        raise RegistryParseError(f"expected {len(COLUMNS)} columns, got {len(cells)}", line)
    try:
        n, d, *weights = (int(c) for c in cells[:7])
        ws = WeightSystem(weights, d)
        basket = Basket.parse(cells[7])
        presentation = Presentation.from_tag(cells[8])
        kind = EllipticKind(cells[9])
        k3 = K3Route(cells[12])
    except ValueError as exc:
        raise RegistryParseError(str(exc), line) from None
    try:
        elliptic = EllipticStatus(kind, _flag(cells[10], line, "omega"), _flag(cells[11], line, "unique"))
    except RegistryParseError:
        raise
    except ValueError as exc:
        raise RegistryParseError(str(exc), line) from None
    return FamilyRecord(n, ws, basket, presentation, elliptic, k3, _flag(cells[13], line, "dense"))


def _read_text(source) -> str:
    if source is None:
        source = default_table_path()
    if hasattr(source, "read"):
        return source.read()
    return Path(source).read_text(encoding="utf-8")


def load_registry(source: str | Path | TextIO | None = None, strict: bool = True) -> list[FamilyRecord]:
    """Parse a family table; with ``strict`` every record invariant is enforced.

    ``source`` is a path, an open text file, or ``None`` for the shipped table
    (overridable through the ``FANO95_TABLE`` environment variable).
    Non-strict loading only parses, so damaged tables can still be validated.
    """
    text = _read_text(source)
    records: list[FamilyRecord] = []
    seen: dict[int, int] = {}
    header_seen = False
    for line_no, raw in enumerate(text.splitlines(), 1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        cells = [c.strip() for c in raw.split("\t")]
        if not header_seen:
            if tuple(cells) != COLUMNS:
                raise RegistryParseError(f"bad header {cells}; expected {list(COLUMNS)}", line_no)
            header_seen = True
            continue
        rec = _parse_row(cells, line_no)
        if rec.n in seen:
            raise RegistryError(f"duplicate N={rec.n} (lines {seen[rec.n]} and {line_no})", rec.n, "N")
        seen[rec.n] = line_no
        records.append(rec)
    if not header_seen:
        raise RegistryParseError("missing header row", 1)
    records.sort(key=lambda r: r.n)
    if strict:
        _check_invariants(records)
    return records


def _check_invariants(records: list[FamilyRecord]) -> None:
    numbers = {r.n for r in records}
    if numbers != tables.FAMILIES:
        missing = sorted(tables.FAMILIES - numbers)
        extra = sorted(numbers - tables.FAMILIES)
        raise RegistryError(f"table must hold N=1..95 exactly (missing {missing}, unexpected {extra})", None, "N")
    for r in records:
        pinned = tables.PINNED_WEIGHTS.get(r.n)
        if pinned is not None and r.ws.weights != pinned:
            raise RegistryError(f"N={r.n}: weights {r.ws.weights} contradict {pinned}", r.n, "weights")
        verdict = check_quasismooth(r.ws)
        if not verdict.admissible:
            raise RegistryError(f"N={r.n}: {r.ws} is not admissible ({verdict.describe()})", r.n, "weights")
        basket = compute_basket(r.ws)
        if basket != r.basket:
            raise RegistryError(f"N={r.n}: basket mismatch, table {r.basket} but computed {basket}", r.n, "basket")
        if r.potentially_dense != (r.n in tables.DENSE_FAMILIES):
            raise RegistryError(f"N={r.n}: dense flag disagrees with the density list", r.n, "dense")
        by_group = r.presentation.generators >= 2 or r.n in tables.DENSE_WITHOUT_INVOLUTIONS
        if r.potentially_dense != by_group:
            raise RegistryError(f"N={r.n}: dense flag disagrees with presentation {r.presentation}", r.n, "dense")


# -- export ------------------------------------------------------------------

def export_tsv(records: Iterable[FamilyRecord], out: TextIO | None = None) -> str:
    buf = io.StringIO()
    buf.write("# Quasismooth anticanonical Fano 3-fold hypersurfaces X_d in P(1,a2,a3,a4,a5)\n")
    buf.write("# numbered in Iano-Fletcher order, i.e. sorted by (d, a2, a3, a4, a5)\n")
    buf.write("\t".join(COLUMNS) + "\n")
    for r in records:
        buf.write("\t".join(r.to_row()) + "\n")
    text = buf.getvalue()
    if out is not None:
        out.write(text)
    return text


def export_json(records: Iterable[FamilyRecord]) -> str:
    return json.dumps([r.to_json() for r in records], indent=2, sort_keys=True)


# -- derivation and classification ---------------------------------------------

def derive_record(n: int, ws: WeightSystem) -> FamilyRecord:
    """Recompute every field of family ``n`` from its weights."""
    p = presentation_of(n)
    dense = p.generators >= 2 or n in tables.DENSE_WITHOUT_INVOLUTIONS
    return FamilyRecord(n, ws, compute_basket(ws), p, elliptic_status(n), k3_route(ws, n), dense)


_CACHE: dict[str, list[FamilyRecord]] = {}


def _shipped() -> list[FamilyRecord]:
    key = str(default_table_path())
    if key not in _CACHE:
        _CACHE[key] = load_registry()
    return _CACHE[key]


def family(n: int, records: list[FamilyRecord] | None = None) -> FamilyRecord:
    for r in records if records is not None else _shipped():
        if r.n == n:
            return r
    raise KeyError(f"no family N={n}")


@dataclass
class ClassificationReport:
    ws: WeightSystem | None
    n: int | None = None
    verdict: AdmissibilityVerdict | None = None
    derived: dict = field(default_factory=dict)
    tabulated: dict = field(default_factory=dict)
    mismatches: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def in_classification(self) -> bool:
        return self.n is not None

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        def plain(d):
            return {k: list(v) if isinstance(v, tuple) else v for k, v in d.items()}
        return {
            "N": self.n,
            "weights": list(self.ws.weights) if self.ws else None,
            "degree": self.ws.degree if self.ws else None,
            "in_classification": self.in_classification,
            "admissible": self.verdict.admissible if self.verdict else None,
            "failures": [str(f) for f in self.verdict.failures] if self.verdict else [],
            "derived": plain(self.derived),
            "tabulated": plain(self.tabulated),
            "mismatches": self.mismatches,
            "notes": self.notes,
        }


def _invariant_mismatches(rec: FamilyRecord) -> list[str]:
    """Checks tying the tabulated basket to the blow-up sign pattern."""
    out = []
    values = [v for _, v in one_step_values(rec.ws, rec.basket)]
    zeros = sum(v == 0 for v in values)
    if rec.n in tables.UNIQUE_VIA_ZERO_POINT:
        if zeros != 1 or any(v > 0 for v in values):
            out.append("zero_point")
    if rec.n in tables.ALL_NEGATIVE_FAMILIES and any(v >= 0 for v in values):
        out.append("all_negative")
    if rec.n == 60 and sum(v >= 0 for v in values) != 1:
        out.append("single_nonnegative")
    if rec.n not in tables.LEMMA_ELLIPTIC_EXCLUDED and not elliptic_fiber_criterion(rec.ws):
        out.append("elliptic_criterion")
    pinned = tables.PINNED_WEIGHTS.get(rec.n)
    if pinned is not None and pinned != rec.ws.weights:
        out.append("pinned_weights")
    return out


def _report(rec: FamilyRecord) -> ClassificationReport:
    verdict = check_quasismooth(rec.ws)
    tab = rec.fields()
    rep = ClassificationReport(rec.ws, rec.n, verdict, tabulated=tab)
    if not verdict.admissible:
        rep.mismatches.append("weights")
        return rep
    derived = derive_record(rec.n, rec.ws).fields()
    rep.derived = derived
    rep.mismatches.extend(k for k in tab if tab[k] != derived[k])
    rep.mismatches.extend(_invariant_mismatches(rec))
    return rep


def classify(ws: WeightSystem, records: list[FamilyRecord] | None = None) -> ClassificationReport:
    records = records if records is not None else _shipped()
    for rec in records:
        if rec.ws == ws:
            return _report(rec)
    verdict = check_quasismooth(ws)
    rep = ClassificationReport(ws, None, verdict)
    rep.notes.append("not in the classification")
    if verdict.admissible:
        rep.notes.append("admissible weight system missing from the table")
        rep.mismatches.append("registry")
    return rep


def validate_all(records: list[FamilyRecord] | None = None) -> list[ClassificationReport]:
    """Recompute every family and diff it against the table.

    Also compares the table with a fresh enumeration; weight systems the
    enumeration finds but the table lacks are reported with ``n=None``.
    """
    records = records if records is not None else _shipped()
    reports = [_report(r) for r in records]
    enumerated = enumerate_families()
    table_order = [r.ws for r in sorted(records, key=lambda r: r.n)]
    in_table = set(table_order)
    for rep, ws in zip(sorted(reports, key=lambda r: r.n), table_order):
        if ws not in set(enumerated):
            rep.mismatches.append("enumeration")
        elif enumerated.index(ws) + 1 != rep.n:
            rep.mismatches.append("numbering")
    for ws in enumerated:
        if ws not in in_table:
            rep = ClassificationReport(ws, None, check_quasismooth(ws), mismatches=["registry"])
            rep.notes.append("enumerated but missing from the table")
            reports.append(rep)
    return reports
