"""Enumeration of subcanonical gap sequences and the stored low-genus table.

A gap set of a subcanonical point has ``2g - 1`` as its largest gap, so its
non-gaps form a symmetric numerical semigroup. :func:`enumerate_candidates`
lists all of them by depth-first search over membership decisions, with
closure and symmetry pruning. The stored table of known strata in genus at
most 6 is shipped as ``data/paper_table.tsv``; its codimension column is
taken as given, every other column is recomputed and checked.
"""
from __future__ import annotations

import csv
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterator, Optional, Union

from .covers import CoverSpec, cyclic_cover_vanishing, double_cover_vanishing
from .errors import DataIntegrityError, PreconditionError, ValidationError
from .semigroups import check_ramification_admissible
from .sequences import (
    Component,
    Parity,
    RamificationSequence,
    VanishingSequence,
    classify_component,
    gaps_from_vanishing,
    parity,
    ramification_from_vanishing,
    weight,
)

MAX_GENUS = 25
TABLE_MAX_GENUS = 6

# --------------------------------------------------------------------------
# depth-first enumeration of symmetric semigroups
# --------------------------------------------------------------------------

_State = tuple[int, int]  # (next integer to decide, bitmask of members decided so far)


def _is_sum(x: int, members: int) -> bool:
    """``x`` is a sum of two positive members below it."""
    for y in range(1, x // 2 + 1):
        if (members >> y) & 1 and (members >> (x - y)) & 1:
            return True
    return False


def _children(g: int, state: _State) -> list[_State]:
    x, members = state
    frob = 2 * g - 1
    forced_member = _is_sum(x, members)
    if x >= g:
        # partner frob - x is already decided
        member = not (members >> (frob - x)) & 1
        if forced_member and not member:
            return []
        return [(x + 1, members | (member << x))]
    if x == 1:
        return [(2, members)]
    out = [(x + 1, members | (1 << x))]
    if not forced_member:
        out.append((x + 1, members))
    return out


def _search(g: int, state: _State, stop: int) -> Iterator[_State]:
    stack = [state]
    while stack:
        s = stack.pop()
        if s[0] == stop:
            yield s
            continue
        stack.extend(reversed(_children(g, s)))


def _finish(g: int, members: int) -> Optional[tuple[int, ...]]:
    frob = 2 * g - 1
    if _is_sum(frob, members):
        return None
    return tuple(n for n in range(1, frob + 1) if not (members >> n) & 1)


def _subtree(g: int, state: _State) -> list[tuple[int, ...]]:
    out = []
    for _, members in _search(g, state, 2 * g - 1):
        gaps = _finish(g, members)
        if gaps is not None:
            out.append(gaps)
    return out


def _check_genus(g: int) -> None:
    if not 2 <= g <= MAX_GENUS:
        raise PreconditionError(f"genus must be between 2 and {MAX_GENUS}, got {g}")


def enumerate_gap_sets(g: int, workers: int = 1) -> list[tuple[int, ...]]:
    """Gap sets of all symmetric numerical semigroups of genus ``g``.

    With ``workers > 1`` the search tree is split at a fixed depth and the
    subtrees are searched in separate processes; the merged output is sorted,
    so it does not depend on scheduling.
    """
    _check_genus(g)
    root: _State = (1, 1)
    if workers <= 1:
        found = _subtree(g, root)
    else:
        split = min(g, 8)
        prefixes = list(_search(g, root, split))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_subtree, itertools.repeat(g), prefixes)
            found = [gaps for part in parts for gaps in part]
    found.sort(key=lambda gaps: tuple(n - 1 for n in gaps))
    return found


def enumerate_candidates(g: int, workers: int = 1) -> list[VanishingSequence]:
    """Vanishing sequences whose gap sets satisfy the semigroup condition with ``2g-1`` a gap.

    Sorted lexicographically.
    """
    return [VanishingSequence(g, tuple(n - 1 for n in gaps)) for gaps in enumerate_gap_sets(g, workers)]


# --------------------------------------------------------------------------
# stored table
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class TableRow:
    genus: int
    vanishing: VanishingSequence
    ramification: RamificationSequence
    parity: Parity
    weight: int
    codim: Optional[int]
    realization: str
    provenance: str


def _parse_seq(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(part) for part in text.split(","))


def default_table_path() -> Path:
    return Path(str(resources.files("subcanonical") / "data" / "paper_table.tsv"))


def load_table(path: Union[str, Path, None] = None) -> list[TableRow]:
    """Parse the stored table. Rows whose own columns disagree raise."""
    path = Path(path) if path is not None else default_table_path()
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read table file {path}: {exc.strerror}") from exc
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    rows = []
    for record in csv.DictReader(lines, delimiter="\t"):
        try:
            g = int(record["genus"])
            v = VanishingSequence(g, _parse_seq(record["vanishing"]))
            r = RamificationSequence(g, _parse_seq(record["ramification"]))
            codim = record["codim"].strip()
            row = TableRow(
                genus=g,
                vanishing=v,
                ramification=r,
                parity=record["parity"].strip(),
                weight=int(record["weight"]),
                codim=int(codim) if codim else None,
                realization=(record.get("realization") or "").strip(),
                provenance=(record.get("provenance") or "").strip(),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise DataIntegrityError(f"{path}: malformed row {record}: {exc}") from exc
        if row.parity not in ("odd", "even"):
            raise DataIntegrityError(f"{path}: bad parity {row.parity!r} in row {record}")
        rows.append(row)
    return rows


# --------------------------------------------------------------------------
# atlas rows and reports
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class AtlasRow:
    genus: int
    vanishing: VanishingSequence
    ramification: RamificationSequence
    parity: Parity
    weight: int
    component: Component
    codim_claim: Optional[int] = None
    in_paper_table: bool = False
    realization_note: str = ""

    def as_dict(self) -> dict:
        return {
            "genus": self.genus,
            "vanishing": list(self.vanishing.values),
            "ramification": list(self.ramification.values),
            "gaps": list(gaps_from_vanishing(self.vanishing).gaps),
            "parity": self.parity,
            "weight": self.weight,
            "component": self.component,
            "codim_claim": self.codim_claim,
            "in_paper_table": self.in_paper_table,
            "realization_note": self.realization_note,
        }


def atlas_row(v: VanishingSequence, stored: Optional[TableRow] = None, note: str = "") -> AtlasRow:
    r = ramification_from_vanishing(v)
    return AtlasRow(
        genus=v.genus,
        vanishing=v,
        ramification=r,
        parity=parity(v),
        weight=weight(r),
        component=classify_component(v),
        codim_claim=stored.codim if stored else None,
        in_paper_table=stored is not None,
        realization_note=stored.realization if stored else note,
    )


def check_table_row(row: TableRow) -> None:
    """Recompute the derived columns of a stored row; raise on any disagreement."""
    v = row.vanishing
    problems = []
    if ramification_from_vanishing(v) != row.ramification:
        problems.append(f"ramification {ramification_from_vanishing(v)} != stored {row.ramification}")
    if parity(v) != row.parity:
        problems.append(f"parity {parity(v)} != stored {row.parity}")
    w = weight(ramification_from_vanishing(v))
    if w != row.weight:
        problems.append(f"weight {w} != stored {row.weight}")
    if problems:
        raise DataIntegrityError(f"genus {row.genus} row {v}: " + "; ".join(problems))


@dataclass
class EnumerationReport:
    genus: int
    rows: list[AtlasRow]
    extras: list[AtlasRow] = field(default_factory=list)
    missing: list[TableRow] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "genus": self.genus,
            "rows": [row.as_dict() for row in self.rows],
            "extras": [row.as_dict() for row in self.extras],
            "missing": [list(row.vanishing.values) for row in self.missing],
        }


def verify_paper_table(
    g: int, table: Optional[list[TableRow]] = None, workers: int = 1
) -> EnumerationReport:
    """Join the enumeration against the stored table for genus ``g <= 6``."""
    if not 2 <= g <= TABLE_MAX_GENUS:
        raise PreconditionError(f"the stored table covers genus 2..{TABLE_MAX_GENUS}, got {g}")
    table = load_table() if table is None else table
    stored = {row.vanishing: row for row in table if row.genus == g}
    for row in stored.values():
        check_table_row(row)
    notes = cover_realizations(g)
    rows, extras = [], []
    for v in enumerate_candidates(g, workers):
        row = atlas_row(v, stored.get(v), "; ".join(notes.get(v.values, [])))
        rows.append(row)
        if not row.in_paper_table:
            extras.append(row)
    found = {row.vanishing for row in rows}
    missing = [row for v, row in stored.items() if v not in found]
    return EnumerationReport(g, rows, extras, missing)


def enumeration_report(g: int, workers: int = 1, table: Optional[list[TableRow]] = None) -> EnumerationReport:
    """Like :func:`verify_paper_table` but defined for every supported genus."""
    if g <= TABLE_MAX_GENUS:
        return verify_paper_table(g, table, workers)
    _check_genus(g)
    notes = cover_realizations(g)
    rows = [
        atlas_row(v, None, "; ".join(notes.get(v.values, [])))
        for v in enumerate_candidates(g, workers)
    ]
    return EnumerationReport(g, rows)


def _admissible_base_sequences(h: int) -> list[VanishingSequence]:
    """All genus-``h`` vanishing sequences satisfying the semigroup condition."""
    if h == 0:
        return [VanishingSequence(0, ())]
    out = []
    for rest in itertools.combinations(range(1, 2 * h - 1), h - 1):
        v = VanishingSequence(h, (0,) + rest)
        if check_ramification_admissible(ramification_from_vanishing(v)).admissible:
            out.append(v)
    return out


def cover_realizations(g: int, max_sheets: int = 5) -> dict[tuple[int, ...], list[str]]:
    """Which cyclic-cover constructions produce each vanishing sequence in genus ``g``.

    Double covers range over every admissible base sequence with ``h <= g/3``;
    higher-degree covers over subcanonical admissible bases with ``h <= 3``.
    """
    found: dict[tuple[int, ...], list[str]] = {}

    def add(v: VanishingSequence, note: str) -> None:
        notes = found.setdefault(v.values, [])
        if note not in notes:
            notes.append(note)

    for h in range(g // 3 + 1):
        for base in _admissible_base_sequences(h):
            result = double_cover_vanishing(g, base)
            add(result.vanishing, f"double cover, base genus {h} at ({base})")
    for d in range(3, max_sheets + 1):
        for h in range(4):
            # g = d(d-1)/2 ell + d(h-1) + 1
            num = g - 1 - d * (h - 1)
            step = d * (d - 1) // 2
            if num <= 0 or num % step:
                continue
            ell = num // step
            if d * ell < 2 * h + 1:
                continue
            for base in _admissible_base_sequences(h):
                if h >= 1 and base.values[-1] != 2 * h - 2:
                    continue
                result = cyclic_cover_vanishing(CoverSpec(d, h, ell, base))
                add(result.vanishing, f"{d}-cyclic cover, base genus {h} at ({base}), ell {ell}")
    return found


@dataclass(frozen=True)
class StratumSummary:
    genus: int
    vanishing: VanishingSequence
    ramification: RamificationSequence
    weight: int
    codim_upper_bound: int
    component: Component
    parity: Parity
    component_dimension: Optional[int]
    component_codimension: Optional[int]
    table_codim: Optional[int]

    def as_dict(self) -> dict:
        return {
            "genus": self.genus,
            "vanishing": list(self.vanishing.values),
            "ramification": list(self.ramification.values),
            "weight": self.weight,
            "codim_upper_bound": self.codim_upper_bound,
            "component": self.component,
            "parity": self.parity,
            "component_dimension": self.component_dimension,
            "component_codimension": self.component_codimension,
            "table_codim": self.table_codim,
        }


def stratification_report(
    g: int, table: Optional[list[TableRow]] = None, workers: int = 1
) -> list[StratumSummary]:
    """Weight bounds and ambient dimension facts for every candidate in genus ``g``.

    The stratum of a ramification sequence has codimension at most its weight
    in the moduli of pointed curves. Each component of the subcanonical locus
    (genus >= 4) has dimension ``2g-1``, hence codimension ``g-1``.
    """
    _check_genus(g)
    table = load_table() if table is None else table
    stored = {row.vanishing: row.codim for row in table if row.genus == g}
    out = []
    for v in enumerate_candidates(g, workers):
        r = ramification_from_vanishing(v)
        w = weight(r)
        comp = classify_component(v)
        classified = comp != "unclassified"
        out.append(
            StratumSummary(
                genus=g,
                vanishing=v,
                ramification=r,
                weight=w,
                codim_upper_bound=w,
                component=comp,
                parity=parity(v),
                component_dimension=2 * g - 1 if classified else None,
                component_codimension=(3 * g - 2) - (2 * g - 1) if classified else None,
                table_codim=stored.get(v),
            )
        )
    return out

