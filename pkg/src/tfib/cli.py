"""Command-line front end.

Every subcommand reads JSON (``--in``, or stdin where input is needed),
writes JSON, DOT, CSV or a plain table (``--out``, default stdout) and exits
0 on pass, 1 on a failed check and 2 on usage errors or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO, Tuple

from tfib.chern import chain_from_json, chain_to_json, fibration_from_chain, validate_chain
from tfib.errors import TfibError
from tfib.fibration import (
    LEG,
    FibrationGraph,
    census,
    critical_surface_stats,
    dualize,
    euler_characteristic,
    from_json,
    is_simply_connected,
    to_dot,
    to_json,
    validate,
)
from tfib.intersection import (
    c2_dot_h,
    cubic_form_global,
    edge_chain_identities,
    flop,
    form_to_csv,
    grouped_table,
    index_consistency,
    rank_and_radical,
    saturation_quotient,
    z5_cochain_check,
)
from tfib.lattice import IntMatrix
from tfib.models import polytope
from tfib.monodromy import NOT_WELL_BEHAVED, MonodromyRep, classify_edge_2d, classify_edge_3d, fiber_type, vertex_profile
from tfib.quintic import build_mirror_fibration, build_quintic_fibration, quintic_invariants
from tfib.report import Report
from tfib.toric import (
    chern_chain_from_triangulation,
    dual_graph,
    dual_to_json,
    local_fibration,
    mirror_curve_stats,
    place_and_flip,
    triangulation_from_json,
    triangulation_to_json,
)
from tfib.utils import make_rng
from tfib_experiments.logging import configure_logging, get_logger, level_from_env

logger = get_logger(__name__)

FORMATS = ("json", "dot", "table", "csv")
USAGE_CODES = {"MALFORMED", "UNKNOWN_FACE", "UNKNOWN_DIVISOR", "UNKNOWN_MODEL", "USAGE"}

RANDOM_MODEL = "random"

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: Optional[Path] = None
    output: Optional[Path] = None
    format: str = "json"
    seed: int = 0
    mirror: bool = False
    invariants: bool = False
    saturation: bool = False
    model: Optional[str] = None
    face: Optional[Tuple[int, ...]] = None
    edge: Optional[Tuple[str, ...]] = None


@dataclass(frozen=True)
class Outcome:
    """What a subcommand produced: a JSON payload and optional DOT/CSV/table renderings."""

    payload: Any
    passed: bool = True
    dot: Optional[Callable[[], str]] = None
    csv: Optional[Callable[[], str]] = None
    table: Optional[str] = None
    failure: Optional[str] = None


class UsageError(TfibError):
    default_code = "USAGE"


def _comma_ints(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from exc


def _comma_names(text: str) -> Tuple[str, ...]:
    parts = tuple(part.strip() for part in text.split(","))
    if len(parts) != 2 or not all(parts):
        raise argparse.ArgumentTypeError(f"expected two comma separated points, got {text!r}")
    return parts


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input", type=Path, help="Input JSON file (default: stdin)")
    common.add_argument("--out", dest="output", type=Path, help="Write output to file (default: stdout)")
    common.add_argument("--format", choices=FORMATS, default="json", help="Output format")
    common.add_argument("--seed", type=int, default=0, help="Seed for randomized checks")

    parser = argparse.ArgumentParser(prog="tfib", description="T^3-fibrations, their SYZ duals and the quintic.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("classify", parents=[common], help="Classify a monodromy matrix, group or vertex loop")
    sub.add_parser("validate", parents=[common], help="Validate a fibration graph")
    sub.add_parser("dualize", parents=[common], help="SYZ dual of a fibration graph")
    sub.add_parser("invariants", parents=[common], help="Census, Euler characteristic and critical surfaces")
    sub.add_parser("chern", parents=[common], help="Validate a Chern chain and synthesize its fibration")
    toric = sub.add_parser("toric", parents=[common], help="Dual graph, chain and local fibration of a polygon")
    toric.add_argument("--model", help="Named polygon instead of --in (unit, c3z3, face5, or random with --seed)")
    quintic = sub.add_parser("quintic", parents=[common], help="The quintic fibration graph")
    quintic.add_argument("--mirror", action="store_true", help="Report the SYZ dual instead")
    quintic.add_argument("--invariants", action="store_true", help="Only report invariants")
    cubic = sub.add_parser("cubic", parents=[common], help="Cubic intersection form of the mirror quintic")
    cubic.add_argument("--saturation", action="store_true", help="Report the saturation quotient")
    flop = sub.add_parser("flop", parents=[common], help="Flip a trapezoid diagonal in one face")
    flop.add_argument("--face", type=_comma_ints, required=True, help="Face as i,j,k")
    flop.add_argument("--edge", type=_comma_names, required=True, help="Diagonal as two point indices or divisor names")
    return parser


def parse_config(argv: Sequence[str]) -> RunConfig:
    args = build_parser().parse_args(list(argv))
    return RunConfig(
        command=args.command,
        input=args.input,
        output=args.output,
        format=args.format,
        seed=args.seed,
        mirror=getattr(args, "mirror", False),
        invariants=getattr(args, "invariants", False),
        saturation=getattr(args, "saturation", False),
        model=getattr(args, "model", None),
        face=getattr(args, "face", None),
        edge=getattr(args, "edge", None),
    )


def _read_json(config: RunConfig, stdin: TextIO) -> Any:
    if config.input is not None:
        try:
            text = config.input.read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {config.input}: {exc.strerror}", "MALFORMED") from exc
        where = str(config.input)
    else:
        text = stdin.read()
        where = "<stdin>"
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{where}: line {exc.lineno} column {exc.colno}: {exc.msg}", "MALFORMED") from exc


def _matrix(value: Any, where: str) -> IntMatrix:
    if not isinstance(value, list) or not value or not all(isinstance(row, list) for row in value):
        raise UsageError(f"{where}: expected a square integer matrix", "MALFORMED")
    if not all(isinstance(entry, int) and not isinstance(entry, bool) for row in value for entry in row):
        raise UsageError(f"{where}: matrix entries must be integers", "MALFORMED")
    if any(len(row) != len(value) for row in value):
        raise UsageError(f"{where}: matrix must be square", "MALFORMED")
    return IntMatrix.from_rows(value)


def _violations(report: Report) -> List[Dict[str, str]]:
    return [{"code": item.code, "subject": item.subject, "reason": item.reason} for item in report.violations]


def _first_failure(report: Report) -> Optional[str]:
    first = report.first()
    return None if first is None else f"{first.subject}: {first.code} {first.reason}"


def _table(payload: Any, prefix: str = "") -> List[str]:
    lines: List[str] = []
    if isinstance(payload, dict):
        for name, value in payload.items():
            label = f"{prefix}{name}"
            if isinstance(value, (dict, list)) and value and not _flat(value):
                lines.extend(_table(value, label + "."))
            else:
                lines.append(f"{label}: {_cell(value)}")
    elif isinstance(payload, list):
        for index, value in enumerate(payload):
            lines.extend(_table(value, f"{prefix}{index}."))
    else:
        lines.append(f"{prefix.rstrip('.')}: {_cell(payload)}")
    return lines


def _flat(value: Any) -> bool:
    if isinstance(value, dict):
        return all(not isinstance(item, (dict, list)) for item in value.values())
    return all(not isinstance(item, dict) for item in value)


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def cmd_classify(config: RunConfig, stdin: TextIO) -> Outcome:
    data = _read_json(config, stdin)
    if not isinstance(data, dict):
        raise UsageError("classify input must be an object", "MALFORMED")
    if "matrix" in data:
        matrix = _matrix(data["matrix"], "matrix")
        found = classify_edge_2d(matrix) if matrix.nrows == 2 else classify_edge_3d(matrix)
        payload: Dict[str, Any] = {"kind": found.kind, "b1": found.b1, "b2": found.b2}
    elif "loop" in data:
        loop = [_matrix(item, f"loop[{index}]") for index, item in enumerate(data["loop"])]
        profile = vertex_profile(loop)
        payload = {
            "kind": profile.kind,
            "valency": profile.valency,
            "parameter": profile.parameter,
            "offset": profile.offset,
            "basis_change": profile.basis_change.to_lists(),
        }
    elif "generators" in data:
        rep = MonodromyRep(tuple(_matrix(item, f"generators[{index}]") for index, item in enumerate(data["generators"])))
        found = fiber_type(rep)
        payload = {"kind": found.kind, "b1": found.b1, "b2": found.b2}
    else:
        raise UsageError("classify input needs one of 'matrix', 'generators', 'loop'", "MALFORMED")
    passed = payload["kind"] != NOT_WELL_BEHAVED
    return Outcome(payload, passed, failure=None if passed else "input is not well behaved")


def _graph(config: RunConfig, stdin: TextIO) -> FibrationGraph:
    return from_json(_read_json(config, stdin))


def cmd_validate(config: RunConfig, stdin: TextIO) -> Outcome:
    graph = _graph(config, stdin)
    report = validate(graph)
    profiles = report.details["profiles"]
    payload = {
        "passed": report.passed,
        "violations": _violations(report),
        "profiles": {vertex_id: profile.kind for vertex_id, profile in sorted(profiles.items())},
    }
    labels = {vertex_id: profile.kind for vertex_id, profile in profiles.items()}
    return Outcome(payload, report.passed, dot=lambda: to_dot(graph, labels), failure=_first_failure(report))


def cmd_dualize(config: RunConfig, stdin: TextIO) -> Outcome:
    dual = dualize(_graph(config, stdin))
    return Outcome(to_json(dual), dot=lambda: to_dot(dual))


def _invariants_payload(graph: FibrationGraph) -> Dict[str, Any]:
    return {
        "census": census(graph).counts,
        "euler": euler_characteristic(graph),
        "simply_connected": is_simply_connected(graph),
        "critical_surfaces": [
            {"kind": surface.kind, "genus": surface.genus, "punctures": surface.punctures, "vertices": list(surface.vertices)}
            for surface in critical_surface_stats(graph)
        ],
    }


def cmd_invariants(config: RunConfig, stdin: TextIO) -> Outcome:
    return Outcome(_invariants_payload(_graph(config, stdin)))


def cmd_chern(config: RunConfig, stdin: TextIO) -> Outcome:
    chain = chain_from_json(_read_json(config, stdin))
    report = validate_chain(chain)
    payload: Dict[str, Any] = {"valid": report.passed, "violations": _violations(report)}
    if not report.passed:
        return Outcome(payload, False, failure=_first_failure(report))
    graph = fibration_from_chain(chain, base="ball3" if any(LEG in edge.ends for edge in chain.edges) else "sphere3")
    payload["fibration"] = to_json(graph)
    return Outcome(payload, dot=lambda: to_dot(graph))


def cmd_toric(config: RunConfig, stdin: TextIO) -> Outcome:
    if config.model == RANDOM_MODEL:
        triangulation = place_and_flip(make_rng(config.seed), 3, 2)
    elif config.model:
        triangulation = polytope(config.model)
    else:
        triangulation = triangulation_from_json(_read_json(config, stdin))
    graph = local_fibration(triangulation)
    report = validate(graph)
    genus, punctures = mirror_curve_stats(triangulation)
    payload = {
        "triangulation": triangulation_to_json(triangulation),
        "dual_graph": dual_to_json(dual_graph(triangulation)),
        "chain": chain_to_json(chern_chain_from_triangulation(triangulation)),
        "mirror_curve": {"genus": genus, "punctures": punctures},
        "fibration": to_json(graph),
        "census": census(graph).counts if report.passed else None,
    }
    return Outcome(payload, report.passed, dot=lambda: to_dot(graph), failure=_first_failure(report))


def cmd_quintic(config: RunConfig, stdin: TextIO) -> Outcome:
    if config.mirror:
        graph, record = build_mirror_fibration()
    else:
        graph, record = build_quintic_fibration(), quintic_invariants()
    invariants = record.as_dict()
    payload = invariants if config.invariants else {"invariants": invariants, "fibration": to_json(graph)}
    return Outcome(payload, dot=lambda: to_dot(graph))


def cmd_cubic(config: RunConfig, stdin: TextIO) -> Outcome:
    form = cubic_form_global()
    if config.saturation:
        result = saturation_quotient(form)
        cochains = z5_cochain_check()
        passed = result.divisors == (5, 5, 5, 5) and result.generated_by_lines and cochains.passed
        payload: Dict[str, Any] = {
            "quotient": result.describe(),
            "elementary_divisors": list(result.divisors),
            "generated_by_lines": result.generated_by_lines,
            "line_sum_in_lattice": result.line_sum_in_lattice,
            "cochains": cochains.as_dict(),
        }
        return Outcome(payload, passed, table=result.describe() + "\n", failure=None if passed else "saturation check failed")
    rank, radical = rank_and_radical(form)
    checks = [index_consistency(name, form) for name in form.divisors.names]
    failing = [check.name for check in checks if not check.holds]
    chains = edge_chain_identities(form)
    groups = grouped_table(form)
    payload = {
        "rank": rank,
        "radical": radical,
        "c2_dot_h": c2_dot_h(form),
        "index_failures": failing,
        "chain_violations": _violations(chains),
        "products": {group: [[label, value] for label, value in rows] for group, rows in groups.items()},
    }
    lines = [f"rank {rank}, radical {radical}, H.c2 {c2_dot_h(form)}"]
    for group, rows in groups.items():
        lines.append(f"[{group}]")
        lines.extend(f"  {label} = {value}" for label, value in rows)
    passed = not failing and chains.passed and (rank, radical) == (101, 4)
    failure = None
    if failing:
        failure = f"index consistency fails for {failing[0]}"
    elif not chains.passed:
        failure = _first_failure(chains)
    return Outcome(payload, passed, csv=lambda: form_to_csv(form), table="\n".join(lines) + "\n", failure=failure)


def cmd_flop(config: RunConfig, stdin: TextIO) -> Outcome:
    if config.face is None or config.edge is None:
        raise UsageError("flop needs --face and --edge", "USAGE")
    edge = [int(item) if item.lstrip("-").isdigit() else item for item in config.edge]
    report = flop(config.face, edge)
    passed = report.passed and bool(report.changes)
    failure = None if passed else _first_failure(report.fibration) or "flop left the form invalid"
    return Outcome(report.as_dict(), passed, failure=failure)


COMMANDS: Dict[str, Callable[[RunConfig, TextIO], Outcome]] = {
    "classify": cmd_classify,
    "validate": cmd_validate,
    "dualize": cmd_dualize,
    "invariants": cmd_invariants,
    "chern": cmd_chern,
    "toric": cmd_toric,
    "quintic": cmd_quintic,
    "cubic": cmd_cubic,
    "flop": cmd_flop,
}


def render(outcome: Outcome, fmt: str) -> str:
    if fmt == "dot":
        if outcome.dot is None:
            raise UsageError("this command has no DOT rendering", "USAGE")
        return outcome.dot()
    if fmt == "csv":
        if outcome.csv is None:
            raise UsageError("this command has no CSV rendering", "USAGE")
        return outcome.csv()
    if fmt == "table":
        return outcome.table if outcome.table is not None else "\n".join(_table(outcome.payload)) + "\n"
    return json.dumps(outcome.payload, indent=1, sort_keys=True) + "\n"


def execute(config: RunConfig, stdin: TextIO, stdout: TextIO, stderr: TextIO) -> int:
    try:
        outcome = COMMANDS[config.command](config, stdin)
        text = render(outcome, config.format)
    except TfibError as exc:
        stderr.write(f"tfib {config.command}: {exc}\n")
        return EXIT_USAGE if exc.code in USAGE_CODES else EXIT_FAILED
    if config.output is not None:
        config.output.write_text(text, encoding="utf-8")
    else:
        stdout.write(text)
    if not outcome.passed:
        stderr.write(f"tfib {config.command}: {outcome.failure or 'check failed'}\n")
        return EXIT_FAILED
    logger.info("%s finished", config.command)
    return EXIT_OK


def run(
    argv: Sequence[str],
    stdin: Optional[TextIO] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        config = parse_config(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return execute(config, stdin, stdout, stderr)


def main() -> None:
    configure_logging(level_from_env())
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
