"""Fixture files: curve coefficients by label and expected torsion data."""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from gmpy2 import mpq

from ..curves import CurveQ
from ..errors import ParseError
from ..structure import TorsionStructure

ENV_VAR = "SEXTOR_FIXTURES"
CURVES_FILE = "curves.txt"
EXPECTATIONS_FILE = "expectations.tsv"
SOURCES = ("base", "table4", "table6", "derived")


def _rational(text: str, line=None) -> mpq:
    t = text.strip().replace("−", "-")
    try:
        return mpq(t)
    except ValueError:
        raise ParseError(f"not a rational number: {text!r}", line) from None


def _fmt_rational(q) -> str:
    q = mpq(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_ainvs(text: str, line=None) -> tuple:
    parts = [p for p in text.replace(";", ",").split(",")]
    if len(parts) != 5:
        raise ParseError(f"expected 5 coefficients a1,a2,a3,a4,a6, got {len(parts)}", line)
    return tuple(_rational(p, line) for p in parts)


@dataclass(frozen=True)
class CurveRecord:
    label: str
    ainvs: tuple

    def curve(self) -> CurveQ:
        return CurveQ(*self.ainvs, label=self.label)


@dataclass(frozen=True)
class Expectation:
    label: str
    degree: int
    field: tuple  # defining-polynomial coefficients, constant first; empty when absent
    structures: tuple
    source: str

    @property
    def is_configuration(self) -> bool:
        return self.degree > 1 and not self.field


def parse_curves(text: str) -> dict:
    """label -> CurveRecord, in file order."""
    out = {}
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError("expected 'label : a1,a2,a3,a4,a6'", no)
        label, coeffs = (s.strip() for s in line.split(":", 1))
        if not label or any(c.isspace() for c in label):
            raise ParseError(f"bad label {label!r}", no)
        if label in out:
            raise ParseError(f"duplicate label {label}", no)
        out[label] = CurveRecord(label, parse_ainvs(coeffs, no))
    return out


def serialize_curves(records) -> str:
    lines = []
    for r in records:
        lines.append(f"{r.label} : {','.join(_fmt_rational(a) for a in r.ainvs)}")
    return "\n".join(lines) + "\n"


def parse_expectations(text: str) -> list:
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        cols = raw.rstrip("\n").split("\t")
        if len(cols) != 5:
            raise ParseError(f"expected 5 tab-separated columns, got {len(cols)}", no)
        label, degree, field, structs, source = (c.strip() for c in cols)
        try:
            degree = int(degree)
        except ValueError:
            raise ParseError(f"bad degree {degree!r}", no) from None
        if source not in SOURCES:
            raise ParseError(f"unknown source {source!r}", no)
        poly = () if field == "-" else tuple(_rational(c, no) for c in field.split(","))
        try:
            hs = tuple(TorsionStructure.parse(s) for s in structs.split(";")) if structs != "-" else ()
        except ValueError as exc:
            raise ParseError(str(exc), no) from None
        out.append(Expectation(label, degree, poly, hs, source))
    return out


def serialize_expectations(rows) -> str:
    lines = ["# label\tdegree\tfield\tstructures\tsource"]
    for r in rows:
        field = ",".join(_fmt_rational(c) for c in r.field) if r.field else "-"
        structs = ";".join(str(h) for h in r.structures) if r.structures else "-"
        lines.append(f"{r.label}\t{r.degree}\t{field}\t{structs}\t{r.source}")
    return "\n".join(lines) + "\n"


@dataclass
class FixtureSet:
    curves: dict
    expectations: list
    location: str

    def curve(self, label: str) -> CurveQ:
        if label not in self.curves:
            raise KeyError(f"unknown curve label {label!r}")
        return self.curves[label].curve()

    def rows(self, source=None) -> list:
        return [r for r in self.expectations if source is None or r.source == source]


def _read_packaged(name: str) -> str:
    return resources.files("sextor.interface").joinpath("data").joinpath(name).read_text()


def load_fixtures(path=None) -> FixtureSet:
    """Load fixtures from a directory or curves file; defaults to $SEXTOR_FIXTURES, then the bundled data."""
    path = path or os.environ.get(ENV_VAR)
    if not path:
        curves = parse_curves(_read_packaged(CURVES_FILE))
        exps = parse_expectations(_read_packaged(EXPECTATIONS_FILE))
        return FixtureSet(curves, exps, "bundled")
    p = Path(path)
    curves_path = p / CURVES_FILE if p.is_dir() else p
    exp_path = curves_path.parent / EXPECTATIONS_FILE
    curves = parse_curves(curves_path.read_text())
    exps = parse_expectations(exp_path.read_text()) if exp_path.exists() else []
    return FixtureSet(curves, exps, str(curves_path))
