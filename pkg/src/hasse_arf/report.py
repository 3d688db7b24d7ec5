"""Report documents: tower input files, text and JSON rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

from .errors import InputError
from .parsing import parse_expression
from .ramification import RamificationReport, analyze_tower
from .tower import Tower, format_element, format_monomial
from .witt import MAX_LENGTH, WittTower, build_witt_tower

IG_NOTE = ("i_G(sigma) = v_F((sigma(pi) - pi)/pi), one less than Serre's i_G; "
           "valuations use the pole convention v(x) = -1")


@dataclass
class TowerInputDocument:
    p: int
    witt: Optional[List[str]] = None
    levels: Optional[List[str]] = None
    galois_check: bool = False

    @classmethod
    def from_dict(cls, data) -> "TowerInputDocument":
        if not isinstance(data, dict):
            raise InputError("tower document must be a JSON object")
        p = data.get("p")
        if not isinstance(p, int) or isinstance(p, bool):
            raise InputError("tower document needs an integer 'p'")
        has_witt, has_levels = "witt" in data, "levels" in data
        if has_witt == has_levels:
            raise InputError("tower document needs exactly one of 'witt' or 'levels'")
        exprs = data["witt" if has_witt else "levels"]
        if not isinstance(exprs, list) or not exprs or not all(isinstance(e, str) for e in exprs):
            raise InputError("'witt'/'levels' must be a nonempty list of expression strings")
        if has_witt and len(exprs) > MAX_LENGTH:
            raise InputError(f"Witt vectors are limited to length {MAX_LENGTH}")
        flags = data.get("flags", {})
        if not isinstance(flags, dict):
            raise InputError("'flags' must be an object")
        return cls(p, exprs if has_witt else None, None if has_witt else exprs,
                   bool(flags.get("galois_check", False)))

    @classmethod
    def load(cls, path: str) -> "TowerInputDocument":
        try:
            with open(path) as fh:
                data = json.load(fh)
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise InputError(f"{path} is not valid JSON: {exc}") from exc
        return cls.from_dict(data)

    def build(self):
        """Return ``(tower, witt_tower_or_None)``."""
        if self.witt is not None:
            wt = build_witt_tower(self.p, self.witt)
            return wt.tower, wt
        tower = Tower(self.p)
        for src in self.levels:
            D = parse_expression(src, self.p, tower, original_generators=True)
            tower = tower.add_level(D)
        return tower, None


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass
class ReportDocument:
    p: int
    equations: List[str]
    substitutions: List[str]
    valuation_table: List[List[int]]
    lower_jumps: List[int]
    upper_jumps: List[str]
    hasse_arf: bool
    structural: List[bool]
    galois_crosscheck: Optional[List[int]] = None
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        out = {
            "equations": self.equations,
            "substitutions": self.substitutions,
            "valuation_table": self.valuation_table,
            "lower_jumps": self.lower_jumps,
            "upper_jumps": self.upper_jumps,
            "hasse_arf": self.hasse_arf,
            "structural": self.structural,
            "notes": self.notes,
        }
        if self.galois_crosscheck is not None:
            out["galois_crosscheck"] = self.galois_crosscheck
        return out


def build_report(tower: Tower, rr: RamificationReport) -> ReportDocument:
    p = tower.p
    equations = [f"f{lv.index}^{p} - f{lv.index} = {format_element(lv.D)}" for lv in tower.levels]
    subs, notes = [], [IG_NOTE]
    for lv in tower.levels:
        for s in lv.substitutions:
            subs.append(f"f{s.level} := fbar{s.level} + {format_monomial(s.monomial, s.coefficient, p)}")
        if lv.substitutions:
            c, mono = tower.minimal_term(lv.raw_D, lv.index - 1)
            raw_v = tower.monomial_valuation(mono, lv.index - 1)
            notes.append(
                f"level {lv.index}: unnormalized minimal term {format_monomial(mono, c.value, p)} "
                f"has valuation {raw_v}, divisible by {p}; the generator was normalized "
                f"(its valuation is negative in the pole convention)")
    for w in rr.witnesses:
        notes.append(f"level {w.level}: {w.modulus} {'divides' if w.divides else 'does not divide'} "
                     f"b_{w.level} - b_{w.level - 1} = {w.difference}")
    return ReportDocument(
        p=p,
        equations=equations,
        substitutions=subs,
        valuation_table=tower.valuation_table(),
        lower_jumps=list(rr.lower_jumps),
        upper_jumps=[format_fraction(q) for q in rr.upper_jumps],
        hasse_arf=rr.hasse_arf,
        structural=list(rr.structural),
        galois_crosscheck=None if rr.galois_crosscheck is None else list(rr.galois_crosscheck),
        notes=notes,
    )


def report_for(tower: Tower, witt_tower: Optional[WittTower] = None,
               galois_check: bool = False) -> ReportDocument:
    return build_report(tower, analyze_tower(tower, witt_tower, galois_check))


def _table_text(rows: Sequence[Sequence[int]]) -> List[str]:
    h = len(rows) - 1
    header = ["field", "v(x)"] + [f"v(f{j})" for j in range(1, h + 1)]
    body = []
    for k, row in enumerate(rows):
        name = "k((x))" if k == 0 else "F_%d = k((x))(%s)" % (k, ",".join(f"f{j}" for j in range(1, k + 1)))
        body.append([name] + [str(v) for v in row] + [""] * (h - k))
    widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
    fmt = lambda r: " | ".join(c.rjust(w) if i else c.ljust(w) for i, (c, w) in enumerate(zip(r, widths)))
    return [fmt(header), "-+-".join("-" * w for w in widths)] + [fmt(r) for r in body]


def emit_report(rd: ReportDocument, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(rd.to_dict(), sort_keys=True, indent=2) + "\n"
    if fmt != "text":
        raise InputError(f"unknown report format {fmt!r}")
    lines = [f"Artin-Schreier tower over F_{rd.p}((x))", "", "Equations:"]
    lines += [f"  {e}" for e in rd.equations]
    if rd.substitutions:
        lines += ["", "Substitutions:"] + [f"  {s}" for s in rd.substitutions]
    lines += ["", "Valuations:"] + [f"  {r}" for r in _table_text(rd.valuation_table)]
    lines += [
        "",
        f"Lower jumps: {', '.join(map(str, rd.lower_jumps))}",
        f"Upper jumps: {', '.join(rd.upper_jumps)}",
        f"Hasse-Arf:   {'yes' if rd.hasse_arf else 'no'}",
        "Structural:  " + (", ".join(f"level {i}: {'pass' if ok else 'fail'}"
                                     for i, ok in enumerate(rd.structural, start=2)) or "(single level)"),
    ]
    if rd.galois_crosscheck is not None:
        lines.append(f"Galois jumps: {', '.join(map(str, rd.galois_crosscheck))} (match)")
    lines += ["", "Notes:"] + [f"  - {n}" for n in rd.notes]
    return "\n".join(lines) + "\n"
