"""Golden polynomials and the runner that recomputes them.

The table lives in ``data/golden.tsv``: one tab-separated entry per line with
``id, expr, coefficients, status, printed, locus``.  ``status`` is ``exact``
or ``discrepancy-noted``; for the latter, ``printed`` holds the coefficients
as they appear in the source while ``coefficients`` holds the value the
closed forms produce.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .calculus import eval_expr, materialize, order
from .count import indpoly_enumerate, indpoly_recursive
from .exprlang import parse
from .graph import MAX_VERTICES
from .poly import IntPoly, unimodality

ENUMERATE_MAX_VERTICES = 20
STATUSES = ("exact", "discrepancy-noted")


@dataclass(frozen=True)
class GoldenEntry:
    id: str
    expr: str
    expected_coeffs: tuple[str, ...]
    status: str
    locus: str
    printed: tuple[str, ...] | None = None

    @property
    def expected(self) -> IntPoly:
        return IntPoly(int(c) for c in self.expected_coeffs)


def parse_table(text: str) -> list[GoldenEntry]:
    entries = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 6:
            raise ValueError(f"line {lineno}: expected 6 tab-separated fields, got {len(fields)}")
        ident, expr, coeffs, status, printed, locus = fields
        if status not in STATUSES:
            raise ValueError(f"line {lineno}: unknown status {status!r}")
        parse(expr)
        expected = tuple(coeffs.split(","))
        if not expected or not all(c.lstrip("-").isdigit() for c in expected):
            raise ValueError(f"line {lineno}: bad coefficient list")
        entries.append(GoldenEntry(ident, expr, expected, status, locus,
                                   None if printed == "-" else tuple(printed.split(","))))
    return entries


def load_corpus() -> list[GoldenEntry]:
    text = resources.files("indpoly").joinpath("data/golden.tsv").read_text()
    return parse_table(text)


@dataclass
class EntryResult:
    entry: GoldenEntry
    symbolic: IntPoly
    recursive: IntPoly | None
    enumerated: IntPoly | None
    unimodal: bool
    passed: bool
    note: str = ""

    @property
    def paths(self) -> list[str]:
        out = ["symbolic"]
        if self.recursive is not None:
            out.append("recursive")
        if self.enumerated is not None:
            out.append("enumerate")
        return out


def check_entry(entry: GoldenEntry) -> EntryResult:
    e = parse(entry.expr)
    symbolic = eval_expr(e)
    n = order(e)
    recursive = enumerated = None
    if n <= MAX_VERTICES:
        g = materialize(e)
        recursive = indpoly_recursive(g)
        if n <= ENUMERATE_MAX_VERTICES:
            enumerated = indpoly_enumerate(g)
    expected = entry.expected
    agree = all(p is None or p == symbolic for p in (recursive, enumerated))
    passed = agree and symbolic == expected
    note = ""
    if not agree:
        note = "computation paths disagree"
    if entry.status == "discrepancy-noted":
        printed = IntPoly(int(c) for c in entry.printed or ())
        if printed == expected:
            passed = False
            note = "discrepancy entry has no discrepancy"
        else:
            diffs = [f"x^{k}: printed {printed[k]}, computed {expected[k]}"
                     for k in range(max(len(printed), len(expected))) if printed[k] != expected[k]]
            note = "printed value differs from closed form (" + "; ".join(diffs) + ")"
            printed_uni = unimodality(printed).unimodal if all(c >= 0 for c in printed) else None
            note += f"; unimodal printed={printed_uni} computed={unimodality(symbolic).unimodal}"
    return EntryResult(entry, symbolic, recursive, enumerated,
                       unimodality(symbolic).unimodal, passed, note)


@dataclass
class CorpusReport:
    results: list[EntryResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_text(self) -> str:
        width = max(len(r.entry.id) for r in self.results)
        lines = []
        for r in self.results:
            flag = "PASS" if r.passed else "FAIL"
            uni = "unimodal" if r.unimodal else "NOT unimodal"
            line = f"{flag}  {r.entry.id:<{width}}  {uni:<12}  [{'+'.join(r.paths)}]  {r.symbolic}"
            if r.note:
                line += f"\n      note: {r.note}"
            lines.append(line)
        npass = sum(r.passed for r in self.results)
        nnote = sum(r.entry.status == "discrepancy-noted" for r in self.results)
        lines.append(f"{npass}/{len(self.results)} entries pass ({nnote} discrepancy-noted)")
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps({
            "passed": self.passed,
            "entries": [{
                "id": r.entry.id,
                "expr": r.entry.expr,
                "status": r.entry.status,
                "locus": r.entry.locus,
                "coeffs": r.symbolic.to_json(),
                "expected": list(r.entry.expected_coeffs),
                "printed": list(r.entry.printed) if r.entry.printed else None,
                "paths": r.paths,
                "unimodal": r.unimodal,
                "passed": r.passed,
                "note": r.note,
            } for r in self.results],
        }, indent=2)


def run_corpus(entries: list[GoldenEntry] | None = None) -> CorpusReport:
    entries = load_corpus() if entries is None else entries
    results = [check_entry(e) for e in sorted(entries, key=lambda e: e.id)]
    return CorpusReport(results)
