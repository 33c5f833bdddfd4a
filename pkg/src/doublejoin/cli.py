"""Command-line front end.

Subcommands print a JSON report on stdout and diagnostics on stderr. Exit
codes: 0 ok, 1 usage or precondition failure, 2 numerical mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Optional, Sequence

from .analytics import (
    cospectral_double_join,
    cospectral_mate_search,
    kirchhoff_from_spectrum,
    kirchhoff_index,
    spanning_tree_count,
)
from .closed_form import classical_join_spectrum, double_join_laplacian_spectrum
from .errors import ConsistencyError, PreconditionError
from .graph import Graph, family, format_edge_list, read_edge_list, regularity
from .operations import Variant, double_join, join
from .oracle import SPECTRUM_TOL, laplacian_spectrum, max_abs_difference

EXIT_OK, EXIT_PRECONDITION, EXIT_MISMATCH = 0, 1, 2

SUITES = {
    "default": [("K3", "P2", "P3"), ("C4", "K2", "P3"), ("K4", "P2", "K2"), ("petersen", "P2", "C4")],
    "reduced": [("K3", "P2", "null0"), ("K4", "null0", "P3")],
}
CLASSICAL_JOIN_CASE = ("K2", "P3")

_NUMBER = {"type": "number"}
_SPECTRUM = {"type": ["array", "null"], "items": _NUMBER}
RUN_REPORT_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": [
        "command",
        "inputs",
        "spectrum_closed_form",
        "spectrum_oracle",
        "max_abs_difference",
        "analytics",
        "status",
        "elapsed_ms",
    ],
    "properties": {
        "command": {"type": "string"},
        "inputs": {"type": "object"},
        "spectrum_closed_form": _SPECTRUM,
        "spectrum_oracle": _SPECTRUM,
        "max_abs_difference": {"type": ["number", "null"]},
        "analytics": {
            "type": ["object", "null"],
            "required": ["spanning_trees", "kirchhoff_index"],
            "properties": {
                "spanning_trees": {"type": "integer"},
                "kirchhoff_index": {"type": ["number", "null"]},
            },
        },
        "status": {"enum": ["ok", "mismatch", "precondition_failed"]},
        "elapsed_ms": _NUMBER,
    },
}
COSPECTRAL_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["command", "inputs", "pairs_found", "factor_pair", "certificate", "status", "elapsed_ms"],
    "properties": {
        "command": {"const": "cospectral"},
        "inputs": {"type": "object"},
        "pairs_found": {"type": "integer"},
        "factor_pair": {"type": ["array", "null"]},
        "certificate": {"type": ["object", "null"]},
        "status": {"enum": ["ok", "mismatch", "precondition_failed"]},
        "elapsed_ms": _NUMBER,
    },
}


@dataclass
class RunReport:
    command: str
    inputs: dict[str, Any]
    spectrum_closed_form: Optional[list[float]] = None
    spectrum_oracle: Optional[list[float]] = None
    max_abs_difference: Optional[float] = None
    analytics: Optional[dict[str, Any]] = None
    status: str = "ok"
    elapsed_ms: float = 0.0
    _start: float = field(default_factory=time.perf_counter, repr=False)

    def finish(self) -> "RunReport":
        self.elapsed_ms = round((time.perf_counter() - self._start) * 1000.0, 3)
        return self

    def to_dict(self) -> dict[str, Any]:
        out = asdict(self)
        out.pop("_start")
        return out

    @property
    def exit_code(self) -> int:
        return {"ok": EXIT_OK, "mismatch": EXIT_MISMATCH}.get(self.status, EXIT_PRECONDITION)


def _digits(values) -> list[float]:
    return [float(f"{v:.15g}") for v in values]


def resolve_graph(spec: str) -> Graph:
    """A family name (``K3``, ``petersen``, ``null0``, ...) or an edge-list file path."""
    try:
        return family(spec)
    except ValueError as family_error:
        path = Path(spec)
        if path.is_file():
            return read_edge_list(path)
        raise PreconditionError(f"cannot resolve graph {spec!r}: {family_error}") from None


def _emit(payload: dict[str, Any]) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _warn(msg: str) -> None:
    print(msg, file=sys.stderr)


# ---------------------------------------------------------------------------
# commands


def run_construct(variant: str, g_spec: str, g1_spec: str, g2_spec: str, out: Optional[str]) -> tuple[dict, int]:
    g, g1, g2 = (resolve_graph(s) for s in (g_spec, g1_spec, g2_spec))
    dj = double_join(variant, g, g1, g2)
    text = format_edge_list(dj)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return {"command": "construct", "vertices": dj.n, "edges": dj.m, "out": out}, EXIT_OK


def run_spectrum(
    variant: str, g_spec: str, g1_spec: str, g2_spec: str, method: str = "both", tol: float = SPECTRUM_TOL
) -> RunReport:
    report = RunReport(
        "spectrum",
        {"variant": Variant.parse(variant).value, "G": g_spec, "G1": g1_spec, "G2": g2_spec, "method": method, "tol": tol},
    )
    try:
        g, g1, g2 = (resolve_graph(s) for s in (g_spec, g1_spec, g2_spec))
        closed = oracle = None
        if method in ("closed", "both"):
            closed = double_join_laplacian_spectrum(variant, g, g1, g2)
            report.spectrum_closed_form = _digits(closed)
        if method in ("oracle", "both"):
            oracle = laplacian_spectrum(double_join(variant, g, g1, g2))
            report.spectrum_oracle = _digits(oracle)
    except PreconditionError as exc:
        _warn(f"precondition failed: {exc}")
        report.status = "precondition_failed"
        return report.finish()
    if closed is not None and oracle is not None:
        report.max_abs_difference = max_abs_difference(closed, oracle)
        if report.max_abs_difference > tol:
            report.status = "mismatch"
            _warn(f"closed form and oracle differ by {report.max_abs_difference:.3g} > {tol:g}")
    return report.finish()


def _classical_join_report(tol: float) -> RunReport:
    a, b = CLASSICAL_JOIN_CASE
    report = RunReport("verify", {"join": [a, b], "tol": tol})
    g1, g2 = family(a), family(b)
    closed = classical_join_spectrum(g1, g2)
    oracle = laplacian_spectrum(join(g1, g2))
    report.spectrum_closed_form = _digits(closed)
    report.spectrum_oracle = _digits(oracle)
    report.max_abs_difference = max_abs_difference(closed, oracle)
    report.status = "ok" if report.max_abs_difference <= tol else "mismatch"
    return report.finish()


def run_verify(suite: str = "default", tol: float = SPECTRUM_TOL) -> tuple[list[RunReport], str]:
    names = ["default", "reduced"] if suite == "all" else [suite]
    reports = []
    for name in names:
        for g_spec, g1_spec, g2_spec in SUITES[name]:
            for variant in Variant:
                rep = run_spectrum(variant.value, g_spec, g1_spec, g2_spec, "both", tol)
                rep.command = "verify"
                reports.append(rep)
        if name == "reduced":
            reports.append(_classical_join_report(tol))
    passed = sum(r.status == "ok" for r in reports)
    summary = f"PASS {passed}/{len(reports)}" if passed == len(reports) else f"FAIL {passed}/{len(reports)}"
    return reports, summary


def run_analyze(g_spec: Optional[str] = None, join_spec: Optional[Sequence[str]] = None) -> RunReport:
    inputs: dict[str, Any] = {"join": list(join_spec)} if join_spec else {"G": g_spec}
    report = RunReport("analyze", inputs)
    try:
        if join_spec:
            variant, *specs = join_spec
            factors = [resolve_graph(s) for s in specs]
            g = double_join(variant, *factors)
        else:
            g = resolve_graph(g_spec)
        trees = spanning_tree_count(g)
        kf = kirchhoff_index(g)
        analytics: dict[str, Any] = {
            "spanning_trees": trees.value,
            "kirchhoff_index": kf,
            "spanning_trees_determinant": trees.determinant,
            "spanning_trees_spectral": trees.spectral_rounded,
            "paths_agree": trees.agree,
        }
        if join_spec and regularity(factors[0]) is not None:
            closed = double_join_laplacian_spectrum(variant, *factors)
            report.spectrum_closed_form = _digits(closed)
            analytics["kirchhoff_index_closed_form"] = kirchhoff_from_spectrum(closed)
        report.analytics = analytics
    except PreconditionError as exc:
        _warn(f"precondition failed: {exc}")
        report.status = "precondition_failed"
    except ConsistencyError as exc:
        _warn(f"inconsistent results: {exc}")
        report.status = "mismatch"
    return report.finish()


def run_cospectral(
    max_vertices: int, variant: str = "S", g_spec: str = "K4", g2_spec: str = "P2", tol: float = SPECTRUM_TOL
) -> dict[str, Any]:
    start = time.perf_counter()
    payload: dict[str, Any] = {
        "command": "cospectral",
        "inputs": {"max_vertices": max_vertices, "variant": Variant.parse(variant).value, "G": g_spec, "G2": g2_spec},
        "pairs_found": 0,
        "factor_pair": None,
        "certificate": None,
        "status": "ok",
    }
    try:
        pairs = cospectral_mate_search(max_vertices, tol)
        payload["pairs_found"] = len(pairs)
        if pairs:
            g1, h1 = pairs[0]
            g, g2 = resolve_graph(g_spec), resolve_graph(g2_spec)
            cert = cospectral_double_join(variant, g, g, g1, h1, g2, g2, tol)
            payload["factor_pair"] = [format_edge_list(g1), format_edge_list(h1)]
            payload["certificate"] = {
                "graph_a": format_edge_list(cert.graph_a),
                "graph_b": format_edge_list(cert.graph_b),
                "shared_spectrum": _digits(cert.shared_spectrum),
                "isomorphic": cert.isomorphic,
                "tolerance": cert.tolerance,
                "max_abs_difference": cert.max_abs_difference,
            }
        else:
            _warn("no pairs found")
    except PreconditionError as exc:
        _warn(f"precondition failed: {exc}")
        payload["status"] = "precondition_failed"
    except ConsistencyError as exc:
        _warn(f"not cospectral: {exc}")
        payload["status"] = "mismatch"
    payload["elapsed_ms"] = round((time.perf_counter() - start) * 1000.0, 3)
    return payload


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doublejoin", description="Laplacian spectra of subdivision/Q/R/total double joins."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_join_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("variant", choices=["S", "Q", "R", "T", "s", "q", "r", "t"])
        p.add_argument("g", help="connected base graph G (family name or edge-list file)")
        p.add_argument("g1", help="graph joined to V(G)")
        p.add_argument("g2", help="graph joined to the inserted vertices I(G)")

    p = sub.add_parser("construct", help="write a double join as an edge list")
    add_join_args(p)
    p.add_argument("--out", help="output path (default: stdout)")

    p = sub.add_parser("spectrum", help="closed-form and/or oracle Laplacian spectrum")
    add_join_args(p)
    p.add_argument("--method", choices=["closed", "oracle", "both"], default="both")
    p.add_argument("--tol", type=float, default=SPECTRUM_TOL)

    p = sub.add_parser("verify", help="compare closed form against oracle over a built-in suite")
    p.add_argument("--suite", choices=["default", "reduced", "all"], default="default")
    p.add_argument("--tol", type=float, default=SPECTRUM_TOL)

    p = sub.add_parser("analyze", help="spanning trees and Kirchhoff index")
    p.add_argument("g", nargs="?", help="graph to analyze")
    p.add_argument("--join", nargs=4, metavar=("VARIANT", "G", "G1", "G2"), help="analyze a double join instead")

    p = sub.add_parser("cospectral", help="find a cospectral factor pair and certify the double joins")
    p.add_argument("--max-vertices", type=int, default=6)
    p.add_argument("--variant", choices=["S", "Q", "R", "T"], default="S")
    p.add_argument("--g", default="K4", help="regular base graph shared by both joins")
    p.add_argument("--g2", default="P2", help="graph in the G2 slot of both joins")
    p.add_argument("--tol", type=float, default=SPECTRUM_TOL)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "construct":
            payload, code = run_construct(args.variant, args.g, args.g1, args.g2, args.out)
            if args.out:
                _emit(payload)
            else:
                _warn(f"{payload['vertices']} vertices, {payload['edges']} edges")
            return code
        if args.command == "spectrum":
            report = run_spectrum(args.variant, args.g, args.g1, args.g2, args.method, args.tol)
            _emit(report.to_dict())
            return report.exit_code
        if args.command == "verify":
            reports, summary = run_verify(args.suite, args.tol)
            for i, rep in enumerate(reports):
                diff = "n/a" if rep.max_abs_difference is None else f"{rep.max_abs_difference:.3g}"
                _warn(f"[{i:2d}] {rep.status:<8} {json.dumps(rep.inputs)} diff={diff}")
            _warn(summary)
            _emit({"command": "verify", "suite": args.suite, "cases": [r.to_dict() for r in reports], "summary": summary})
            return EXIT_OK if summary.startswith("PASS") else EXIT_MISMATCH
        if args.command == "analyze":
            if not args.g and not args.join:
                _warn("analyze needs a graph or --join VARIANT G G1 G2")
                return EXIT_PRECONDITION
            report = run_analyze(args.g, args.join)
            _emit(report.to_dict())
            return report.exit_code
        if args.command == "cospectral":
            payload = run_cospectral(args.max_vertices, args.variant, args.g, args.g2, args.tol)
            _emit(payload)
            return {"ok": EXIT_OK, "mismatch": EXIT_MISMATCH}.get(payload["status"], EXIT_PRECONDITION)
    except PreconditionError as exc:
        _warn(f"precondition failed: {exc}")
        return EXIT_PRECONDITION
    return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
