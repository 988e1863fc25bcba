"""Command line entry point: sextor <command> [options]."""

from __future__ import annotations

import argparse
import signal
import sys
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from ..algebra.poly import RatPoly
from ..catalog import (
    CM_ONLY_LEVELS, INFINITE_LEVELS, ISOGENY_LEVELS, PHI1, PHI_INF6, PHI_Q2, PHI_Q3,
    PHI_STAR6, PHI_STAR6_BY_G, cm_phi, sporadic, table5_rows,
)
from ..catalog import two_primary
from ..curves import CurveQ
from ..errors import (
    NonMonic, ParseError, ReduciblePolynomial, RuleViolation, SingularCurve, UnsupportedDegree,
    ZeroPolynomial,
)
from ..galois import is_cm, isogeny_report, modp_signature
from ..growth import h_statistic, torsion_configurations, validate_configuration
from ..numfield import NumberField, field_from_coeffs
from ..torsion import torsion_over_K, torsion_over_Q
from .fixtures import load_fixtures, parse_ainvs
from .report import curve_payload, field_payload, point_payload, rat, render

EXIT_OK = 0
EXIT_TIMEOUT = 1
EXIT_PARSE = 2
EXIT_SINGULAR = 3
EXIT_FIELD = 4
EXIT_MISMATCH = 5

SCOPES = ("base", "table4", "table6", "derived", "all")


class _Timeout(Exception):
    pass


# input resolution

def _resolve_curve(args) -> CurveQ:
    if bool(args.curve) == bool(args.label):
        raise ParseError("give exactly one of --curve or --label")
    if args.curve:
        return CurveQ(*parse_ainvs(args.curve))
    fx = load_fixtures(args.fixtures)
    if args.label not in fx.curves:
        raise ParseError(f"unknown curve label {args.label!r} in {fx.location}")
    return fx.curve(args.label)


def _resolve_field(text: str) -> NumberField:
    try:
        K = field_from_coeffs(text)
    except ValueError as exc:
        if isinstance(exc, (ReduciblePolynomial, NonMonic, ZeroPolynomial)):
            raise
        raise ReduciblePolynomial(f"invalid field polynomial: {exc}") from None
    if 6 % K.degree:
        raise UnsupportedDegree(f"field degree {K.degree} does not divide 6")
    return K


def _torsion_payload(T) -> dict:
    return {
        "structure": str(T.structure),
        "order": T.order,
        "generators": [point_payload(P) for P in T.generators],
    }


# commands

def cmd_torsion(args) -> tuple:
    E = _resolve_curve(args)
    return {"curve": curve_payload(E), "torsion": _torsion_payload(torsion_over_Q(E))}, EXIT_OK


def cmd_torsion_ext(args) -> tuple:
    E = _resolve_curve(args)
    if not args.field:
        raise ParseError("--field is required")
    K = _resolve_field(args.field)
    T = torsion_over_K(E, K)
    out = {"curve": curve_payload(E), "field": field_payload(K), "torsion": _torsion_payload(T)}
    return out, EXIT_OK


def _configs_payload(E, degree):
    cfg = torsion_configurations(E, degree)
    entries = [{"structure": str(e.structure), "field": field_payload(e.field),
                "primitive": e.primitive} for e in cfg.entries]
    out = {"base": str(cfg.base), "degree": degree, "entries": entries,
           "structures": cfg.labels()}
    code = EXIT_OK
    if degree == 6:
        results = validate_configuration(E, cfg, raise_on_failure=False)
        failed = sorted({r.rule_id for r in results if r.passed is False})
        skipped = sorted({r.rule_id for r in results if r.passed is None})
        out["rules"] = {"checked": len(results), "failed": failed, "not_evaluable": skipped}
        if failed:
            code = EXIT_MISMATCH
    return cfg, out, code


def cmd_configs(args) -> tuple:
    E = _resolve_curve(args)
    degree = args.degree or 6
    if degree not in (1, 2, 3, 6):
        raise ParseError(f"degree {degree} does not divide 6")
    _, cfg_out, code = _configs_payload(E, degree)
    return {"curve": curve_payload(E), "configuration": cfg_out}, code


def cmd_analyze(args) -> tuple:
    E = _resolve_curve(args)
    rep = isogeny_report(E)
    sigs = {}
    for p in (2, 3, 5, 7, 13):
        s = modp_signature(E, p)
        sigs[str(p)] = {
            "rational_isogeny": s.has_rational_isogeny,
            "dv": sorted(s.dv_set),
            "full_degree": s.full_degree,
            "candidates": list(s.candidate_labels),
        }
    out = {
        "curve": curve_payload(E),
        "cm": is_cm(E),
        "isogeny_levels": sorted(rep.levels),
        "isogeny_methods": {str(n): rep.methods[n] for n in sorted(rep.levels)},
        "images": sigs,
    }
    return out, EXIT_OK


def _check_row(fixtures_path, row):
    """Evaluate one expectation row; returns a JSON-ready dict."""
    fx = load_fixtures(fixtures_path)
    E = fx.curve(row.label)
    expected = [str(h) for h in row.structures]
    if row.degree == 1:
        got = [str(torsion_over_Q(E).structure)]
        ok = got == expected
    elif row.field:
        K = NumberField(RatPoly(list(row.field)))
        got = [str(torsion_over_K(E, K).structure)]
        ok = got == expected
    else:
        cfg = torsion_configurations(E, row.degree)
        got = cfg.labels()
        ok = Counter(got) == Counter(expected)
    return {
        "label": row.label,
        "source": row.source,
        "degree": row.degree,
        "field": [rat(c) for c in row.field],
        "expected": expected,
        "got": got,
        "pass": ok,
    }


def cmd_verify_corpus(args) -> tuple:
    fx = load_fixtures(args.fixtures)
    scope = args.scope
    rows = fx.rows(None if scope == "all" else scope)
    if args.labels:
        wanted = set(args.labels.split(","))
        rows = [r for r in rows if r.label in wanted]
    for r in rows:
        if r.label not in fx.curves:
            raise ParseError(f"expectation for unknown curve {r.label}")
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_check_row, [args.fixtures] * len(rows), rows))
    else:
        results = [_check_row(args.fixtures, r) for r in rows]
    config_rows = [r for r in results if r["degree"] == 6 and not r["field"]]
    h = h_statistic([r["got"] for r in config_rows])
    h_labels = sorted({r["label"] for r in config_rows if len(r["got"]) == h}) if config_rows else []
    failed = [r for r in results if not r["pass"]]
    out = {
        "scope": scope,
        "rows": results,
        "summary": {"total": len(results), "passed": len(results) - len(failed),
                    "failed": len(failed), "h_statistic": h, "h_attained_by": h_labels},
    }
    return out, EXIT_MISMATCH if failed else EXIT_OK


def _structs(items):
    return sorted((str(h) for h in items), key=lambda s: (len(s.split(",")), [int(v) for v in s.split(",")]))


def _tables_payload():
    return {
        "phi1": _structs(PHI1),
        "phi_q2": _structs(PHI_Q2),
        "phi_q3": _structs(PHI_Q3),
        "phi_inf6": _structs(PHI_INF6),
        "phi_star6": _structs(PHI_STAR6),
        "phi_star6_by_base": {str(G): _structs(row) for G, row in PHI_STAR6_BY_G.items()},
        "two_primary": {f"{g} -> {h}": (sorted(cell) if cell is not None else None)
                        for (g, h), cell in two_primary.TABLE.items()},
        "cm_phi": {str(d): _structs(cm_phi(d)) for d in (1, 2, 3, 6)},
        "images": {str(p): [{"label": r.label, "zywina": r.zywina, "d0": r.d0,
                             "dv": sorted(r.dv), "d": r.d} for r in table5_rows(p)]
                   for p in (2, 3, 5, 7, 13)},
        "isogeny_levels": {"all": sorted(ISOGENY_LEVELS), "infinite": sorted(INFINITE_LEVELS),
                           "cm_only": sorted(CM_ONLY_LEVELS)},
        "sporadic": {
            "j_15": sorted(rat(j) for j in sporadic.J_15),
            "j_21": sorted(rat(j) for j in sporadic.J_21),
            "j_27": sorted(rat(j) for j in sporadic.J_27),
            "labels_15": list(sporadic.LABELS_15),
            "labels_30": list(sporadic.LABELS_30),
            "labels_4_12": list(sporadic.LABELS_4_12),
            "j_4_12": rat(sporadic.J_4_12),
        },
    }


def cmd_tables(args) -> tuple:
    tables = _tables_payload()
    if args.name:
        if args.name not in tables:
            raise ParseError(f"unknown table {args.name!r}; choose from {', '.join(sorted(tables))}")
        tables = {args.name: tables[args.name]}
    return {"tables": tables}, EXIT_OK


COMMANDS = {
    "torsion": cmd_torsion,
    "torsion-ext": cmd_torsion_ext,
    "configs": cmd_configs,
    "analyze": cmd_analyze,
    "verify-corpus": cmd_verify_corpus,
    "tables": cmd_tables,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sextor", description="Torsion growth of rational elliptic curves over fields of degree dividing 6.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--fixtures", help="fixture directory or curves file (default: $SEXTOR_FIXTURES, then bundled data)")
    common.add_argument("--timeout-secs", type=int, default=0, help="abort with exit code 1 after N seconds")
    common.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")
    curve = argparse.ArgumentParser(add_help=False)
    curve.add_argument("--curve", help="a1,a2,a3,a4,a6 (rationals allowed)")
    curve.add_argument("--label", help="curve label resolved through the fixture file")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("torsion", parents=[common, curve], help="E(Q)_tors")
    p = sub.add_parser("torsion-ext", parents=[common, curve], help="E(K)_tors for a field K")
    p.add_argument("--field", help="defining polynomial coefficients, constant term first")
    p = sub.add_parser("configs", parents=[common, curve], help="primitive torsion configurations")
    p.add_argument("--degree", type=int, default=6)
    sub.add_parser("analyze", parents=[common, curve], help="isogenies, CM and mod-p images")
    p = sub.add_parser("verify-corpus", parents=[common], help="check the fixture expectations")
    p.add_argument("--scope", choices=SCOPES, default="all")
    p.add_argument("--labels", help="comma-separated subset of curve labels")
    p.add_argument("--jobs", type=int, default=1)
    p = sub.add_parser("tables", parents=[common], help="dump classification tables")
    p.add_argument("name", nargs="?")
    return parser


def _on_alarm(signum, frame):
    raise _Timeout()


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.timeout_secs and hasattr(signal, "SIGALRM"):
        signal.signal(signal.SIGALRM, _on_alarm)
        signal.alarm(args.timeout_secs)
    start = time.perf_counter()
    try:
        payload, code = COMMANDS[args.command](args)
    except _Timeout:
        print(f"error: timed out after {args.timeout_secs} s", file=sys.stderr)
        return EXIT_TIMEOUT
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SingularCurve as exc:
        print(f"error: singular curve: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except (ReduciblePolynomial, NonMonic, ZeroPolynomial, UnsupportedDegree) as exc:
        print(f"error: bad field: {exc}", file=sys.stderr)
        return EXIT_FIELD
    except RuleViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    finally:
        if args.timeout_secs and hasattr(signal, "SIGALRM"):
            signal.alarm(0)
    payload = {"command": args.command, **payload}
    if args.timing:
        payload["timing_secs"] = round(time.perf_counter() - start, 3)
    sys.stdout.write(render(payload, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
