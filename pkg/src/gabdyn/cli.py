"""Command line entry point: ``gabdyn analyze|diagram|verify|selftest``.

Exit codes: 0 success, 1 verification failure, 2 invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .config import DEFAULT_ORDER_BOUND, JobConfig, load_config
from .cusp import build_milnor_lattice
from .diagram import emit_dot, emit_json
from .errors import GabdynError, InputError
from .report import STAGES, analyze, format_analysis, stage_graph
from .verify import CaseReport, perturb_lattice, selftest, verify_case

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


def _print_reports(reports: list[CaseReport], as_json: bool, out) -> bool:
    ok = all(r.ok for r in reports)
    if as_json:
        doc = {
            "ok": ok,
            "cases": [
                {
                    "case": r.name,
                    "ok": r.ok,
                    "failures": [{"check": f.name, "detail": f.detail} for f in r.failures],
                    "checks": len(r.results),
                }
                for r in reports
            ],
        }
        out.write(json.dumps(doc, indent=2) + "\n")
        return ok
    for r in reports:
        out.write(f"{'PASS' if r.ok else 'FAIL'}  {r.name}  ({len(r.results)} checks)\n")
        for f in r.failures:
            out.write(f"      - {f.name}: {f.detail}\n")
    passed = sum(r.ok for r in reports)
    out.write(f"{passed}/{len(reports)} cases passed\n")
    return ok


def cmd_analyze(cfg: JobConfig, as_json: bool, out) -> int:
    doc = analyze(cfg.triple, cfg.group())
    out.write(json.dumps(doc, indent=2) + "\n" if as_json else format_analysis(doc))
    return EXIT_OK


def cmd_diagram(cfg: JobConfig, stage: str, fmt: str, path: str | None, out) -> int:
    graph = stage_graph(cfg.triple, cfg.group(), stage)
    text = emit_dot(graph, name=stage) if fmt == "dot" else emit_json(graph)
    if path is None and cfg.output_dir is not None:
        path = str(cfg.output_dir / f"{stage}.{fmt}")
    if path is None:
        out.write(text)
    else:
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text, encoding="utf-8")
    return EXIT_OK


def cmd_verify(cfg: JobConfig, as_json: bool, out) -> int:
    lat = build_milnor_lattice(cfg.triple)
    if cfg.perturb_gram is not None:
        r, c, d = cfg.perturb_gram
        if not (0 <= r < lat.rank and 0 <= c < lat.rank):
            raise InputError(f"perturb_milnor_gram index out of range for rank {lat.rank}")
        lat = perturb_lattice(lat, r, c, d)
    report = verify_case(cfg.triple, cfg.group(), lattice=lat)
    return EXIT_OK if _print_reports([report], as_json, out) else EXIT_FAILED


def cmd_selftest(order_bound: int, as_json: bool, out) -> int:
    if order_bound < 1:
        raise InputError("--order-bound must be at least 1")
    return EXIT_OK if _print_reports(selftest(order_bound), as_json, out) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gabdyn",
        description="Gabrielov numbers and Coxeter-Dynkin diagrams of cusp singularities "
        "with finite abelian SL(3,C) symmetry.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="group statistics, Gabrielov numbers, dimensions")
    a.add_argument("config")
    a.add_argument("--json", action="store_true")

    d = sub.add_parser("diagram", help="emit a Coxeter-Dynkin diagram")
    d.add_argument("config")
    d.add_argument("--stage", required=True, choices=STAGES)
    d.add_argument("--format", required=True, choices=("dot", "json"))
    d.add_argument("-o", "--output")

    v = sub.add_parser("verify", help="check every identity for one configuration")
    v.add_argument("config")
    v.add_argument("--json", action="store_true")

    s = sub.add_parser("selftest", help="check the built-in catalog and its subgroups")
    s.add_argument("--order-bound", type=int, default=DEFAULT_ORDER_BOUND)
    s.add_argument("--json", action="store_true")
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "selftest":
            return cmd_selftest(args.order_bound, args.json, out)
        cfg = load_config(args.config)
        if args.command == "analyze":
            return cmd_analyze(cfg, args.json, out)
        if args.command == "diagram":
            return cmd_diagram(cfg, args.stage, args.format, args.output, out)
        return cmd_verify(cfg, args.json, out)
    except InputError as exc:
        print(f"gabdyn: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GabdynError as exc:
        print(f"gabdyn: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
