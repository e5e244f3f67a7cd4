"""Command-line front end.

Every subcommand writes one document to stdout, as JSON (default), CSV or a
markdown table. Exit status: 0 on success (including negative verdicts such
as a closure violation), 1 on invalid input, 2 on a failed internal check.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Optional, Sequence

from . import atlas, covers, limit_series
from .errors import (
    DataIntegrityError,
    InvariantViolation,
    PreconditionError,
    SubcanonicalError,
    ValidationError,
)
from .semigroups import check_gaps_admissible
from .sequences import (
    GapSet,
    RamificationSequence,
    VanishingSequence,
    gaps_from_vanishing,
    profile,
    vanishing_from_gaps,
    vanishing_from_ramification,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit 1 instead of argparse's 2
        raise _UsageError(f"{self.prog}: {message}")


def parse_int_list(text: str) -> tuple[int, ...]:
    """``"0,1,4"`` -> ``(0, 1, 4)``; ``"none"`` or ``""`` -> ``()``."""
    text = text.strip()
    if text.lower() in ("", "none"):
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValidationError(f"expected comma-separated integers, got {text!r}") from None


# --------------------------------------------------------------------------
# rendering
# --------------------------------------------------------------------------


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ",".join(_cell(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


def dump_json(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def dump_csv(records: list[dict]) -> str:
    if not records:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(records[0]), lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow({k: _cell(v) for k, v in rec.items()})
    return buf.getvalue()


def dump_markdown(records: list[dict]) -> str:
    if not records:
        return ""
    keys = list(records[0])
    lines = [
        "| " + " | ".join(keys) + " |",
        "|" + "|".join("---" for _ in keys) + "|",
    ]
    for rec in records:
        lines.append("| " + " | ".join(_cell(rec[k]).replace(",", ", ") for k in keys) + " |")
    return "\n".join(lines) + "\n"


def render(doc: Any, records: list[dict], fmt: str) -> str:
    if fmt == "json":
        return dump_json(doc)
    if fmt == "csv":
        return dump_csv(records)
    return dump_markdown(records)


# --------------------------------------------------------------------------
# subcommands; each returns (json document, flat records)
# --------------------------------------------------------------------------


def _cmd_check(args) -> tuple[Any, list[dict]]:
    given = [x for x in (args.gaps, args.vanishing, args.ramification) if x is not None]
    if len(given) != 1:
        raise ValidationError("give exactly one of --gaps, --vanishing, --ramification")
    if args.gaps is not None:
        values = parse_int_list(args.gaps)
        g = args.genus if args.genus is not None else len(values)
        v = vanishing_from_gaps(GapSet(g, values))
    elif args.vanishing is not None:
        values = parse_int_list(args.vanishing)
        g = args.genus if args.genus is not None else len(values)
        v = VanishingSequence(g, values)
    else:
        values = parse_int_list(args.ramification)
        g = args.genus if args.genus is not None else len(values)
        v = vanishing_from_ramification(RamificationSequence(g, values))
    doc = profile(v).as_dict()
    verdict = check_gaps_admissible(gaps_from_vanishing(v))
    doc["semigroup"] = verdict.as_dict()
    record = {k: doc[k] for k in (
        "genus", "vanishing", "ramification", "gaps", "weight",
        "theta_h0", "parity", "subcanonical", "component",
    )}
    record["admissible"] = verdict.admissible
    record["violation"] = (
        [verdict.violation.x, verdict.violation.y, verdict.violation.sum]
        if verdict.violation else None
    )
    return doc, [record]


def _cover_record(doc: dict) -> dict:
    rec = {k: v for k, v in doc.items() if k != "cover"}
    rec.update(doc["cover"])
    return rec


def _cmd_cover(args) -> tuple[Any, list[dict]]:
    if args.kind == "double":
        base = VanishingSequence(args.base_genus, parse_int_list(args.base_vanishing))
        result = covers.double_cover_vanishing(args.genus, base)
    elif args.kind == "cyclic":
        base = VanishingSequence(args.base_genus, parse_int_list(args.base_vanishing))
        spec = covers.CoverSpec(args.sheets, args.base_genus, args.ell, base)
        result = covers.cyclic_cover_vanishing(spec)
    else:
        result = covers.named_construction(args.name, args.genus)
    doc = result.as_dict()
    return doc, [_cover_record(doc)]


def _cmd_limit(args) -> tuple[Any, list[dict]]:
    problem = limit_series.LimitSeriesProblem.from_kind(
        args.genus, parse_int_list(args.alpha_q), args.torsion
    )
    report = limit_series.analyse(problem)
    doc = report.as_dict()
    rec = dict(doc)
    rec["crude_limit_passed"] = doc["crude_limit"]["passed"]
    rec.pop("crude_limit")
    rec.update(rec.pop("expected_dimensions"))
    return doc, [rec]


def _cmd_rho(args) -> tuple[Any, list[dict]]:
    alpha = parse_int_list(args.alpha) if args.alpha else (0,) * (args.r + 1)
    doc = {
        "genus": args.genus,
        "r": args.r,
        "degree": args.degree,
        "alpha": list(alpha),
        "rho": limit_series.rho_adjusted(args.genus, args.r, args.degree, alpha),
        "rho_classical": limit_series.rho_adjusted(
            args.genus, args.r, args.degree, (0,) * (args.r + 1)
        ),
    }
    return doc, [doc]


def _table_rows(args) -> list[atlas.TableRow]:
    return atlas.load_table(args.table_file)


def _cmd_table(args) -> tuple[Any, list[dict]]:
    rows = _table_rows(args)
    if args.genus is not None:
        rows = [row for row in rows if row.genus == args.genus]
    out = []
    for row in rows:
        atlas.check_table_row(row)
        out.append(atlas.atlas_row(row.vanishing, row).as_dict())
    return {"rows": out}, out


def _cmd_enumerate(args) -> tuple[Any, list[dict]]:
    if args.strata:
        strata = atlas.stratification_report(args.genus, _table_rows(args), args.workers)
        records = [s.as_dict() for s in strata]
        return {"genus": args.genus, "strata": records}, records
    if args.compare_paper:
        report = atlas.verify_paper_table(args.genus, _table_rows(args), args.workers)
        doc = report.as_dict()
        extras = {tuple(r.vanishing.values) for r in report.extras}
        records = [
            dict(row.as_dict(), status="extra" if tuple(row.vanishing.values) in extras else "table")
            for row in report.rows
        ]
        records += [
            {**atlas.atlas_row(row.vanishing, row).as_dict(), "status": "missing"}
            for row in report.missing
        ]
        return doc, records
    report = atlas.enumeration_report(args.genus, args.workers, _table_rows(args))
    records = [row.as_dict() for row in report.rows]
    return {"genus": args.genus, "rows": records}, records


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "md"), default="json")
    common.add_argument("--table-file", default=None, help="override the stored table data file")

    parser = _Parser(
        prog="subcanonical",
        description="Invariants of subcanonical points on algebraic curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("table", parents=[common], help="stored genus <= 6 table, recomputed")
    p.add_argument("--genus", type=int)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("enumerate", parents=[common], help="all admissible subcanonical sequences")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--compare-paper", action="store_true", help="join against the stored table")
    p.add_argument("--strata", action="store_true", help="weight and dimension summary")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("check", parents=[common], help="profile and semigroup verdict of one point")
    p.add_argument("--gaps")
    p.add_argument("--vanishing")
    p.add_argument("--ramification")
    p.add_argument("--genus", type=int, help="defaults to the sequence length")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("cover", help="ramification points of cyclic covers")
    kinds = p.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    q = kinds.add_parser("double", parents=[common])
    q.add_argument("--genus", type=int, required=True)
    q.add_argument("--base-genus", type=int, required=True)
    q.add_argument("--base-vanishing", required=True, help="comma separated, or 'none'")
    q.set_defaults(func=_cmd_cover)
    q = kinds.add_parser("cyclic", parents=[common])
    q.add_argument("--sheets", type=int, required=True)
    q.add_argument("--ell", type=int, required=True)
    q.add_argument("--base-genus", type=int, required=True)
    q.add_argument("--base-vanishing", required=True, help="comma separated, or 'none'")
    q.set_defaults(func=_cmd_cover)
    q = kinds.add_parser("named", parents=[common])
    q.add_argument("--name", required=True, choices=[n.value for n in covers.NamedConstruction])
    q.add_argument("--genus", type=int, required=True)
    q.set_defaults(func=_cmd_cover)

    p = sub.add_parser("limit", parents=[common], help="limit canonical series on C u E")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--alpha-q", required=True, help="ramification of K_C at the node")
    p.add_argument("--torsion", choices=("full", "half"), required=True,
                   help="order of p-q: full = 2g-2, half = g-1")
    p.set_defaults(func=_cmd_limit)

    p = sub.add_parser("rho", parents=[common], help="adjusted Brill-Noether number")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--alpha", help="imposed ramification, r+1 entries (default none)")
    p.set_defaults(func=_cmd_rho)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        doc, records = args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=stderr)
        return 2
    except (ValidationError, PreconditionError, DataIntegrityError, SubcanonicalError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    stdout.write(render(doc, records, args.format))
    return 0


def main() -> None:
    sys.exit(run())
