"""Command-line front end.

Two subcommands: ``run`` solves one Hamiltonian file with the selected
heuristic(s) and emits the full grouping report; ``compare`` solves one or
more files and emits a grid of group counts (one row per input, one column
per heuristic).

Exit codes: 0 success, 1 usage error, 2 parse error, 3 budget/capacity
error.  Reports are deterministic; wall-clock timings are emitted only
with ``--timings`` so that repeated runs stay byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .cover import (
    CliqueCover,
    CoverStats,
    Heuristic,
    MeasurementBasis,
    basis_of_group,
    compute_stats,
    validate_cover,
    validate_cover_words,
)
from .graph import CapacityError, TermGraph, build_qwc_graph
from .pauli import Hamiltonian, ParseError, parse_hamiltonian
from .removal import DEFAULT_NODE_BUDGET, BudgetExceededError
from .solvers import HEURISTIC_ORDER, solve_mcc

__all__ = ["console_main", "main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_RESOURCE = 3

# `--algorithm all` skips the only super-polynomial solver on graphs
# larger than this unless overridden.
DEFAULT_BKT_SKIP_ABOVE = 5000


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; this CLI reserves 2
    for parse errors, so remap usage problems to 1."""

    def error(self, message: str):  # noqa: D102 - argparse hook
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class _HeuristicResult:
    heuristic: Heuristic
    cover: CliqueCover | None = None
    stats: CoverStats | None = None
    bases: list[MeasurementBasis] | None = None
    wall_ms: float = 0.0
    error: str | None = None
    skipped: str | None = None


def _build_parser() -> _Parser:
    parser = _Parser(prog="qwcover", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    algorithm_names = [h.value for h in HEURISTIC_ORDER] + ["all"]

    def add_common(p: _Parser) -> None:
        p.add_argument("--input", action="append", required=True,
                       help="Hamiltonian file; repeatable for 'compare'")
        p.add_argument("--algorithm", choices=algorithm_names, default="all")
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--output", help="write the report here instead of stdout")
        p.add_argument("--validate", action="store_true",
                       help="re-check every group pairwise from the words")
        p.add_argument("--bkt-budget", type=int, default=DEFAULT_NODE_BUDGET,
                       help="node budget for the exact clique search")
        p.add_argument("--bkt-skip-above", type=int, default=DEFAULT_BKT_SKIP_ABOVE,
                       help="with --algorithm all, skip bkt on graphs larger than this")
        p.add_argument("--timings", action="store_true",
                       help="include wall-clock milliseconds (breaks byte-identical reruns)")
        p.add_argument("--seedless", action="store_true",
                       help="reserved; the solvers use no randomness")

    add_common(sub.add_parser("run", help="solve one file and print the full report"))
    add_common(sub.add_parser("compare", help="tabulate group counts over one or more files"))
    return parser


def _selected_heuristics(name: str) -> list[Heuristic]:
    if name == "all":
        return list(HEURISTIC_ORDER)
    return [Heuristic(name)]


def _load(path: str) -> Hamiltonian:
    file = Path(path)
    if not file.is_file():
        raise FileNotFoundError(path)
    return parse_hamiltonian(file.read_text())


def _solve_one(
    h: Hamiltonian,
    g: TermGraph,
    complement: TermGraph,
    heuristic: Heuristic,
    args: argparse.Namespace,
    explicit: bool,
) -> _HeuristicResult:
    result = _HeuristicResult(heuristic)
    if heuristic is Heuristic.BKT and not explicit and g.n > args.bkt_skip_above:
        result.skipped = (
            f"graph has {g.n} vertices, above --bkt-skip-above={args.bkt_skip_above}"
        )
        return result
    started = time.perf_counter()
    try:
        cover = solve_mcc(
            g, heuristic, complement_graph=complement, node_budget=args.bkt_budget
        )
    except BudgetExceededError as exc:
        result.error = str(exc)
        return result
    result.wall_ms = (time.perf_counter() - started) * 1000.0
    validate_cover(g, cover)
    if args.validate:
        validate_cover_words(h, cover)
    result.cover = cover
    result.stats = compute_stats(cover)
    result.bases = [basis_of_group(h, group) for group in cover.groups]
    return result


def _solve_file(path: str, args: argparse.Namespace) -> tuple[Hamiltonian, list[_HeuristicResult]]:
    h = _load(path)
    g = build_qwc_graph(h)
    complement = g.complement()
    heuristics = _selected_heuristics(args.algorithm)
    explicit = args.algorithm != "all"
    return h, [_solve_one(h, g, complement, hx, args, explicit) for hx in heuristics]


def _result_record(result: _HeuristicResult, total_terms: int, with_timings: bool) -> dict:
    record: dict = {"heuristic": result.heuristic.value}
    if result.skipped is not None:
        record["skipped"] = result.skipped
        return record
    if result.error is not None:
        record["error"] = result.error
        return record
    assert result.cover is not None and result.stats is not None and result.bases is not None
    record.update(
        total_terms=total_terms,
        n_groups=result.stats.n_groups,
        max_size=result.stats.max_size,
        size_std=result.stats.size_std,
    )
    if with_timings:
        record["wall_ms"] = round(result.wall_ms, 3)
    record["groups"] = [
        {
            "terms": sorted(group),
            "basis": {str(q): str(axis) for q, axis in basis.assignment.items()},
        }
        for group, basis in zip(result.cover.groups, result.bases)
    ]
    return record


def _render_run_json(path: str, h: Hamiltonian, results: list[_HeuristicResult], args) -> str:
    report = {
        "input": path,
        "n_qubits": h.n_qubits,
        "total_terms": h.n_terms,
        "results": [_result_record(r, h.n_terms, args.timings) for r in results],
    }
    return json.dumps(report, indent=2) + "\n"


def _render_run_text(path: str, h: Hamiltonian, results: list[_HeuristicResult], args) -> str:
    lines = [f"input: {path}", f"qubits: {h.n_qubits}", f"terms: {h.n_terms}"]
    for r in results:
        if r.skipped is not None:
            lines.append(f"== {r.heuristic.value}: skipped ({r.skipped})")
            continue
        if r.error is not None:
            lines.append(f"== {r.heuristic.value}: error ({r.error})")
            continue
        assert r.stats is not None and r.cover is not None and r.bases is not None
        timing = f", {r.wall_ms:.3f} ms" if args.timings else ""
        lines.append(
            f"== {r.heuristic.value}: {r.stats.n_groups} groups, "
            f"max size {r.stats.max_size}, size std {r.stats.size_std:g}{timing}"
        )
        for index, (group, basis) in enumerate(zip(r.cover.groups, r.bases)):
            basis_text = str(basis) if basis.assignment else "(none)"
            lines.append(f"group {index} | basis: {basis_text}")
            for term_index in sorted(group):
                term = h.terms[term_index]
                lines.append(f"  [{term_index}] {term.coefficient!r} [{term.word}]")
    return "\n".join(lines) + "\n"


def _render_compare_text(rows: list[tuple[str, int, list[_HeuristicResult]]], args) -> str:
    names = [h.value for h in _selected_heuristics(args.algorithm)]
    lines = ["input total | " + " ".join(names)]
    for path, total, results in rows:
        cells = []
        for r in results:
            if r.stats is not None:
                cells.append(str(r.stats.n_groups))
            elif r.skipped is not None:
                cells.append("skip")
            else:
                cells.append("err")
        lines.append(f"{path} {total} | " + " ".join(cells))
    return "\n".join(lines) + "\n"


def _render_compare_json(rows: list[tuple[str, int, list[_HeuristicResult]]], args) -> str:
    report = []
    for path, total, results in rows:
        entry: dict = {"input": path, "total_terms": total, "groups": {}}
        for r in results:
            if r.stats is not None:
                entry["groups"][r.heuristic.value] = r.stats.n_groups
            elif r.skipped is not None:
                entry["groups"][r.heuristic.value] = None
            else:
                entry["groups"][r.heuristic.value] = None
        report.append(entry)
    return json.dumps({"inputs": report}, indent=2) + "\n"


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def _exit_code(results: list[_HeuristicResult], explicit: bool) -> int:
    failures = [r for r in results if r.error is not None]
    successes = [r for r in results if r.cover is not None]
    if failures and (explicit or not successes):
        return EXIT_RESOURCE
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "run":
            if len(args.input) != 1:
                parser.error("'run' takes exactly one --input; use 'compare' for several")
            path = args.input[0]
            h, results = _solve_file(path, args)
            render = _render_run_json if args.format == "json" else _render_run_text
            _emit(render(path, h, results, args), args.output)
            return _exit_code(results, args.algorithm != "all")
        rows = []
        all_results: list[_HeuristicResult] = []
        for path in args.input:
            h, results = _solve_file(path, args)
            rows.append((path, h.n_terms, results))
            all_results.extend(results)
        render = _render_compare_json if args.format == "json" else _render_compare_text
        _emit(render(rows, args), args.output)
        return _exit_code(all_results, args.algorithm != "all")
    except FileNotFoundError as exc:
        print(f"qwcover: error: no such input file: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"qwcover: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (CapacityError, BudgetExceededError) as exc:
        print(f"qwcover: error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
