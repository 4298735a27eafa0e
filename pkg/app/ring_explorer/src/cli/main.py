from __future__ import annotations

import argparse
import logging
import shlex
import sys
import time
from collections.abc import Sequence
from pathlib import Path
from typing import Any, Optional

from ..algorithms.catalog import color_swapped, load_algorithm
from ..algorithms.cycle_analysis import find_progressing_rule_cycles
from ..core.algorithm import Algorithm
from ..core.color import DEFAULT_PALETTE
from ..core.configuration import Configuration
from ..exceptions import RingExplorerError, StateLimitExceeded
from ..semantics.choice import parse_script
from ..semantics.scheduler import SchedulerModel, SymmetryMode
from ..semantics.simulation import FairPolicy, FirstPolicy, Policy, RandomPolicy, ScriptedPolicy, simulate
from ..semantics.step import is_quiescent
from ..semantics.system_state import SystemState
from ..semantics.trace import Trace
from ..settings import DEFAULT_MAX_STEPS, DEFAULT_STATE_LIMIT
from ..verifier.audit import AuditStatus, universality_audit
from ..verifier.certificates import classify_configuration
from ..verifier.exploration import check_perpetual_exploration, check_terminating_exploration
from ..verifier.verdict import Lasso, Objective, TerminalTrace, Verdict
from .report import FORMATS, Report, emit_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=FORMATS, default="text", help="report format (default: text)")
    parser.add_argument("--timing", action="store_true", help="include wall time in the report")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG on stderr")


def _add_algorithm(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--alg", required=True, help="built-in name (FP2, FT3, AP3, AT4) or rule file path")
    parser.add_argument("--swap-colors", action="store_true", help="exchange the two colors of the algorithm")


def _add_model(parser: argparse.ArgumentParser, objective: bool = True) -> None:
    parser.add_argument("--model", choices=[m.value for m in SchedulerModel], default="fsync")
    parser.add_argument("--sym-mode", choices=[m.value for m in SymmetryMode], default="independent")
    if objective:
        parser.add_argument("--objective", choices=[o.value for o in Objective], default="perpetual")


def _add_config(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", required=True, help="configuration, e.g. 'G,W' or 'W,GW,.^3'")
    parser.add_argument("--n", type=int, help="ring size; trailing nodes are empty")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ring-explorer",
        description="Simulate and exhaustively check luminous robots exploring a ring.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    s = commands.add_parser("simulate", help="run one execution under a chosen adversary")
    _add_algorithm(s)
    _add_config(s)
    _add_model(s, objective=False)
    s.add_argument("--policy", default="first", help="first, fair, random or scripted:FILE (default: first)")
    s.add_argument("--script", help="file of adversary choices, one per line")
    s.add_argument("--seed", type=int, help="seed of the random policy")
    s.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    _add_output(s)

    s = commands.add_parser("verify", help="decide an exploration objective from one configuration")
    _add_algorithm(s)
    _add_config(s)
    _add_model(s)
    s.add_argument("--state-limit", type=int, default=DEFAULT_STATE_LIMIT)
    _add_output(s)

    s = commands.add_parser("classify", help="look for an unsolvability certificate")
    _add_config(s)
    _add_model(s)
    _add_output(s)

    s = commands.add_parser("audit", help="check an algorithm from every initial configuration")
    _add_algorithm(s)
    _add_model(s)
    s.add_argument("--n", type=int, required=True, help="smallest ring size")
    s.add_argument("--n-max", type=int, help="largest ring size (default: --n)")
    s.add_argument("--k", type=int, required=True, help="number of robots")
    s.add_argument("--no-towers", action="store_true", help="leave out configurations with towers")
    s.add_argument("--state-limit", type=int, default=DEFAULT_STATE_LIMIT)
    _add_output(s)

    s = commands.add_parser("cycles", help="rule cycles among the exploring sub-configurations")
    s.add_argument("--exclude", help="comma-separated rule labels to leave out (default: R15,R16)")
    _add_output(s)

    s = commands.add_parser("validate", help="report issues of a rule table")
    _add_algorithm(s)
    _add_output(s)

    s = commands.add_parser("export", help="print a built-in algorithm as a rule file")
    _add_algorithm(s)
    _add_output(s)
    return parser


def _algorithm(args: argparse.Namespace) -> Algorithm:
    algorithm = load_algorithm(args.alg)
    return color_swapped(algorithm) if args.swap_colors else algorithm


def _configuration(args: argparse.Namespace, algorithm: Optional[Algorithm] = None) -> Configuration:
    palette = algorithm.palette if algorithm is not None else DEFAULT_PALETTE
    return Configuration.parse(args.config, n=args.n, palette=palette)


def _policy(args: argparse.Namespace) -> Policy:
    if args.script:
        return ScriptedPolicy(parse_script(Path(args.script).read_text(encoding="utf-8")))
    name, _, path = args.policy.partition(":")
    if name == "scripted":
        if not path:
            raise RingExplorerError("the scripted policy needs a file: scripted:FILE")
        return ScriptedPolicy(parse_script(Path(path).read_text(encoding="utf-8")))
    if name == "random":
        return RandomPolicy(args.seed)
    if name == "fair":
        return FairPolicy()
    if name == "first":
        return FirstPolicy()
    raise RingExplorerError(f"unknown policy {args.policy!r}")


def _frames(trace: Trace) -> list[str]:
    lines = []
    for number, state in enumerate(trace.states()):
        choice = "start" if number == 0 else str(trace.steps[number - 1].choice)
        pending = " ".join(f"{r.id}{r.pending:+d}" for r in state.robots if r.pending is not None)
        frame = state.configuration.render() + (f"   [{pending}]" if pending else "")
        lines.append(f"{number:>4}  {choice:<24} {frame}")
    return lines


def _witness(verdict: Verdict, algorithm: Algorithm) -> tuple[dict[str, Any], list[str]]:
    witness = verdict.witness
    if isinstance(witness, Lasso):
        payload = {
            "kind": "lasso",
            "stem": witness.stem.to_records(algorithm),
            "cycle": witness.cycle.to_records(algorithm),
        }
        lines = ["stem:", *_frames(witness.stem), "cycle:", *_frames(witness.cycle)]
        return payload, lines
    if isinstance(witness, TerminalTrace):
        payload = {
            "kind": "terminal",
            "trace": witness.trace.to_records(algorithm),
            "uncovered": sorted(witness.uncovered),
        }
        lines = ["trace:", *_frames(witness.trace), f"uncovered: {', '.join(f'v{v}' for v in sorted(witness.uncovered))}"]
        return payload, lines
    return {}, []


def _simulate(args: argparse.Namespace, command: str) -> tuple[Report, int]:
    algorithm = _algorithm(args)
    config = _configuration(args, algorithm)
    state = SystemState.initial(config, SchedulerModel(args.model))
    trace = simulate(state, algorithm, _policy(args), args.max_steps, SymmetryMode(args.sym_mode))
    quiescent = is_quiescent(trace.final, algorithm)
    visited = trace.visited()
    report = Report(
        command,
        f"simulation of {algorithm.name} under {args.model}",
        payload={"steps": len(trace), "quiescent": quiescent, "visited": sorted(visited), "trace": trace.to_records(algorithm)},
        lines=[*_frames(trace), f"steps: {len(trace)}, quiescent: {quiescent}, visited {len(visited)}/{config.n} nodes"],
    )
    return report, EXIT_OK


def _verify(args: argparse.Namespace, command: str) -> tuple[Report, int]:
    algorithm = _algorithm(args)
    config = _configuration(args, algorithm)
    objective = Objective(args.objective)
    check = check_perpetual_exploration if objective is Objective.PERPETUAL else check_terminating_exploration
    verdict = check(
        config, algorithm, SchedulerModel(args.model), state_limit=args.state_limit, sym_mode=SymmetryMode(args.sym_mode)
    )
    payload: dict[str, Any] = {"outcome": verdict.outcome.value, "reason": verdict.reason, "edges": verdict.edges}
    lines = [f"{algorithm.name} from {config}: {verdict}", f"edges: {verdict.edges}"]
    if not verdict.holds:
        witness_payload, witness_lines = _witness(verdict, algorithm)
        payload["witness"] = witness_payload
        lines.extend(witness_lines)
    report = Report(command, f"{objective.value} exploration", payload, lines, states=verdict.states)
    return report, EXIT_OK if verdict.holds else EXIT_FAILS


def _classify(args: argparse.Namespace, command: str) -> tuple[Report, int]:
    config = _configuration(args)
    certificate = classify_configuration(config, SchedulerModel(args.model), Objective(args.objective))
    payload = {
        "config": config.format(),
        "certificate": certificate.kind.value if certificate else None,
        "detail": certificate.detail if certificate else None,
    }
    line = f"{config}: {certificate}" if certificate else f"{config}: no certificate"
    return Report(command, f"certificates under {args.model}", payload, [line]), EXIT_OK


def _audit(args: argparse.Namespace, command: str) -> tuple[Report, int]:
    algorithm = _algorithm(args)
    n_max = args.n if args.n_max is None else args.n_max
    report = universality_audit(
        algorithm,
        SchedulerModel(args.model),
        Objective(args.objective),
        range(args.n, n_max + 1),
        args.k,
        allow_towers=not args.no_towers,
        state_limit=args.state_limit,
        sym_mode=SymmetryMode(args.sym_mode),
    )
    lines = [f"{'n':>3}  {'configuration':<28} {'status':<15} {'certificate':<18} reason"]
    for entry in report.entries:
        certificate = entry.certificate.kind.value if entry.certificate else "-"
        lines.append(f"{entry.n:>3}  {entry.config.format():<28} {entry.status.value:<15} {certificate:<18} {entry.reason}")
    counts = report.counts()
    lines.append(", ".join(f"{status}: {count}" for status, count in counts.items()))
    payload = {
        "algorithm": report.algorithm,
        "model": report.model.value,
        "objective": report.objective.value,
        "k": report.k,
        "expected_classes": {str(n): count for n, count in report.expected_classes.items()},
        "counts": counts,
        "entries": [entry.to_record(timing=args.timing) for entry in report.entries],
    }
    document = Report(
        command,
        f"universality of {algorithm.name} under {args.model}",
        payload,
        lines,
        states=sum(entry.states for entry in report.entries),
    )
    if report.discrepancies:
        return document, EXIT_FAILS
    return document, EXIT_LIMIT if report.with_status(AuditStatus.LIMIT_EXCEEDED) else EXIT_OK


def _cycles(args: argparse.Namespace, command: str) -> tuple[Report, int]:
    exclusions = None if args.exclude is None else [label.strip() for label in args.exclude.split(",") if label.strip()]
    analyses = find_progressing_rule_cycles(exclusions=exclusions)
    progressing = [analysis for analysis in analyses if analysis.progressing]
    lines = ["progressing:", *(f"  {analysis}" for analysis in progressing), "stationary:"]
    lines.extend(f"  {analysis}" for analysis in analyses if not analysis.progressing)
    payload = {
        "cycles": [
            {
                "rules": analysis.rule_set(),
                "sequence": [list(step) for step in analysis.transition_sequence],
                "displacement": analysis.displacement,
                "progressing": analysis.progressing,
            }
            for analysis in analyses
        ],
        "progressing": [analysis.rule_set() for analysis in progressing],
    }
    return Report(command, "rule cycles among C_exp", payload, lines), EXIT_OK


def _validate(args: argparse.Namespace, command: str) -> tuple[Report, int]:
    algorithm = _algorithm(args)
    issues = algorithm.validate()
    lines = [str(issue) for issue in issues] or [f"{algorithm.name}: {len(algorithm.rules)} rules, no issues"]
    payload = {"algorithm": algorithm.name, "rules": len(algorithm.rules), "issues": [str(issue) for issue in issues]}
    return Report(command, f"validation of {algorithm.name}", payload, lines), EXIT_FAILS if issues else EXIT_OK


def _export(args: argparse.Namespace, command: str) -> tuple[Report, int]:
    text = _algorithm(args).to_text()
    return Report(command, f"rule file of {args.alg}", {"text": text}, text.rstrip("\n").splitlines()), EXIT_OK


COMMANDS = {
    "simulate": _simulate,
    "verify": _verify,
    "classify": _classify,
    "audit": _audit,
    "cycles": _cycles,
    "validate": _validate,
    "export": _export,
}


def _check_arguments(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if getattr(args, "state_limit", 1) < 1:
        parser.error("--state-limit must be positive")
    if getattr(args, "max_steps", 0) < 0:
        parser.error("--max-steps must not be negative")
    if getattr(args, "n_max", None) is not None and args.n_max < args.n:
        parser.error("--n-max must not be smaller than --n")


def run(argv: Sequence[str]) -> int:
    """Runs one command and writes its report to stdout. Returns the exit code:
    0 success, 1 a failing verdict or reported issues, 2 usage or input errors,
    3 state limit exceeded.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        _check_arguments(parser, args)
    except SystemExit as stop:
        return EXIT_OK if stop.code == 0 else EXIT_USAGE

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")
    command = " ".join(["ring-explorer", *(shlex.quote(arg) for arg in argv)])

    started = time.perf_counter()
    try:
        report, code = COMMANDS[args.command](args, command)
    except StateLimitExceeded as error:
        logger.error("%s", error)
        return EXIT_LIMIT
    except (RingExplorerError, ValueError, OSError) as error:
        logger.error("%s", error)
        return EXIT_USAGE
    if args.timing:
        report.wall_time = time.perf_counter() - started
    sys.stdout.write(emit_report(report, args.format))
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))
