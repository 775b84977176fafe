"""Command-line front end.

Commands:
    entropy    Shannon and Deng entropy of a belief-assignment file.
    infer      classical or quantum-like posterior for one query.
    predict    evaluate scenarios from a file.
    compare    scenarios plus published model columns and mean fit errors.
    reproduce  run the built-in dataset and verify every published value.

Exit codes: 0 success, 1 validation error, 2 inference error, 3 a
reproduction check missed its published value.

A belief-assignment file is JSON like
    {"frame": ["a", "b", "c"], "masses": {"a": 0.5, "b,c": 0.5}}
where each mass key joins the focal set's labels with commas and values may
be numbers or decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .bayesnet import infer, load_network
from .belief import Frame, shannon_entropy, deng_entropy, validate_bba
from .errors import (
    GoldenMismatchError,
    InferenceError,
    QlbnError,
    UnsupportedStructureError,
    ValidationError,
)
from .heuristic import belief_distance, degree_for_query, extract_outcome_vectors
from .quantum import amplitudes_from_network, quantum_infer
from .scenarios import (
    load_builtin_scenarios,
    load_comparison_rows,
    load_scenarios,
    render_model_comparison_csv,
    render_observed_vs_predicted_csv,
    render_report_csv,
    render_report_table,
    render_table3,
    render_table3_csv,
    report_to_dict,
    run_comparison,
    run_reproduction,
)


@dataclass
class CliConfig:
    command: str
    network: str | None = None
    scenario: str | None = None
    bba: str | None = None
    query: str | None = None
    evidence: dict[str, str] | None = None
    mode: str = "classical"
    degree: str = "auto"
    format: str = "table"
    verbose: bool = False
    out: str | None = None


class _Parser(argparse.ArgumentParser):
    # Usage problems are validation errors: keep exit code 1 for them.
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="qlbn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_entropy = sub.add_parser("entropy", help="entropies of a belief-assignment file")
    p_entropy.add_argument("--bba", required=True, help="belief-assignment JSON file")

    p_infer = sub.add_parser("infer", help="posterior for one query variable")
    p_infer.add_argument("--network", required=True, help="network JSON file")
    p_infer.add_argument("--query", required=True, help="query variable name")
    p_infer.add_argument(
        "--evidence", action="append", default=[], metavar="VAR=OUTCOME",
        help="observed variable (repeatable)",
    )
    p_infer.add_argument("--mode", choices=("classical", "quantum"), default="classical")
    p_infer.add_argument(
        "--degree", default="auto",
        help="interference degree policy: auto, zero, or fixed:<value>",
    )
    p_infer.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p_infer.add_argument("--verbose", action="store_true",
                         help="show the interference trace in quantum mode")

    p_predict = sub.add_parser("predict", help="evaluate scenarios from a file")
    p_predict.add_argument("--scenario", required=True, help="scenario JSON file")
    p_predict.add_argument("--format", choices=("table", "csv", "json"), default="table")

    p_compare = sub.add_parser(
        "compare", help="scenarios beside published model columns"
    )
    p_compare.add_argument(
        "--scenario", help="scenario JSON file (default: built-in dataset)"
    )
    p_compare.add_argument("--format", choices=("table", "csv", "json"), default="table")

    p_repro = sub.add_parser(
        "reproduce", help="run the built-in dataset and verify published values"
    )
    p_repro.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p_repro.add_argument("--out", help="directory for the report and CSV series")
    return parser


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    evidence: dict[str, str] = {}
    for item in getattr(args, "evidence", []) or []:
        name, sep, outcome = item.partition("=")
        if not sep or not name or not outcome:
            raise ValidationError(f"evidence {item!r} is not of the form VAR=OUTCOME")
        if name in evidence:
            raise ValidationError(f"evidence names {name!r} twice")
        evidence[name] = outcome
    config = CliConfig(
        command=args.command,
        network=getattr(args, "network", None),
        scenario=getattr(args, "scenario", None),
        bba=getattr(args, "bba", None),
        query=getattr(args, "query", None),
        evidence=evidence,
        mode=getattr(args, "mode", "classical"),
        degree=getattr(args, "degree", "auto"),
        format=getattr(args, "format", "table"),
        verbose=getattr(args, "verbose", False),
        out=getattr(args, "out", None),
    )
    _parse_degree(config.degree)  # validate eagerly
    return config


def _parse_degree(spec: str) -> float | None:
    """None means the entropy heuristic decides; a float is used as given."""
    if spec == "auto":
        return None
    if spec == "zero":
        return 0.0
    if spec.startswith("fixed:"):
        try:
            value = float(spec[len("fixed:"):])
        except ValueError:
            raise ValidationError(f"cannot parse degree {spec!r}") from None
        if not -1.0 <= value <= 1.0:
            raise ValidationError(f"fixed degree {value!r} is outside [-1, 1]")
        return value
    raise ValidationError(
        f"degree policy {spec!r} is not auto, zero, or fixed:<value>"
    )


def _read_json(path: str) -> object:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: line {exc.lineno}: {exc.msg}") from None


def _load_bba(path: str):
    doc = _read_json(path)
    if not isinstance(doc, dict) or "frame" not in doc or "masses" not in doc:
        raise ValidationError(f"{path}: expected an object with 'frame' and 'masses'")
    frame = Frame(tuple(str(e) for e in doc["frame"]))
    raw = {}
    for key, value in doc["masses"].items():
        labels = tuple(part.strip() for part in str(key).split(",") if part.strip())
        try:
            mass = float(value)
        except (TypeError, ValueError):
            raise ValidationError(f"{path}: mass {value!r} for {key!r} is not a number") from None
        raw[labels] = raw.get(labels, 0.0) + mass
    try:
        return validate_bba(raw, frame)
    except ValidationError as exc:
        raise ValidationError(f"{path}: {exc}") from None


def cmd_entropy(config: CliConfig) -> int:
    bba = _load_bba(config.bba)
    parts = []
    if bba.is_bayesian():
        parts.append(f"shannon={shannon_entropy(bba.singleton_distribution()):.5f}")
    parts.append(f"deng={deng_entropy(bba):.5f}")
    print(" ".join(parts))
    return 0


def _print_distribution(labels, probabilities, fmt: str, query: str) -> None:
    if fmt == "table":
        width = max(len(lb) for lb in labels)
        for lb, p in zip(labels, probabilities):
            print(f"{lb.ljust(width)}  {p:.5f}")
    elif fmt == "csv":
        print("outcome,probability")
        for lb, p in zip(labels, probabilities):
            print(f"{lb},{p!r}")
    else:
        print(json.dumps(
            {"query": query, "distribution": dict(zip(labels, probabilities))},
            indent=2,
        ))


def cmd_infer(config: CliConfig) -> int:
    net = load_network(config.network)
    if config.mode == "classical":
        dist = infer(net, config.query, config.evidence)
        _print_distribution(dist.labels, dist.probabilities, config.format, config.query)
        return 0

    anet = amplitudes_from_network(net)
    fixed = _parse_degree(config.degree)
    unobserved = [n for n in net.names()
                  if n != config.query and n not in config.evidence]
    if fixed is not None:
        degree_value = degree_raw = fixed
    elif not unobserved:
        # no completions to interfere, so the heuristic has nothing to weigh
        degree_value = degree_raw = 0.0
    else:
        degree = degree_for_query(anet, config.query, config.evidence)
        degree_value, degree_raw = degree.value, degree.raw
    if config.verbose:
        try:
            for pair in extract_outcome_vectors(anet, config.query, config.evidence):
                distance = belief_distance(pair.alpha, pair.beta)
                print(f"vector {pair.outcome}: alpha={pair.alpha:.5f} "
                      f"beta={pair.beta:.5f} distance={distance:.5f}")
        except UnsupportedStructureError:
            print("vectors: unavailable for this structure")
        print(f"degree: raw={degree_raw:.5f} value={degree_value:.5f} ({config.degree})")
    result = quantum_infer(anet, config.query, config.evidence, degree_value)
    if config.verbose:
        for om in result.outcomes:
            clamp = " (clamped to 0)" if om.clamped else ""
            print(f"mass {om.outcome}: classical={om.classical_part:.5f} "
                  f"interference={om.interference_part:.5f} "
                  f"unnormalized={om.unnormalized:.5f}{clamp}")
        print(f"normalizer={result.normalizer:.5f}")
    if config.format == "json":
        print(json.dumps(result.to_dict(), indent=2))
    elif config.format == "csv":
        print("outcome,classical_part,interference_part,unnormalized,clamped,probability")
        for om in result.outcomes:
            print(f"{om.outcome},{om.classical_part!r},{om.interference_part!r},"
                  f"{om.unnormalized!r},{om.clamped},{om.probability!r}")
    else:
        _print_distribution(
            [om.outcome for om in result.outcomes],
            [om.probability for om in result.outcomes],
            "table",
            config.query,
        )
    return 0


def _emit_report(report, fmt: str) -> None:
    if fmt == "table":
        print(render_report_table(report))
    elif fmt == "csv":
        print(render_report_csv(report), end="")
    else:
        print(json.dumps(report_to_dict(report), indent=2))


def cmd_predict(config: CliConfig) -> int:
    scenarios = load_scenarios(config.scenario)
    if not scenarios:
        raise ValidationError(f"{config.scenario}: no scenarios to evaluate")
    _emit_report(run_comparison(scenarios), config.format)
    return 0


def cmd_compare(config: CliConfig) -> int:
    if config.scenario:
        scenarios = load_scenarios(config.scenario)
        if not scenarios:
            raise ValidationError(f"{config.scenario}: no scenarios to evaluate")
    else:
        scenarios = load_builtin_scenarios()
    literature = {
        row.scenario_name: row.models
        for row in load_comparison_rows()
        if row.scenario_name
    }
    _emit_report(run_comparison(scenarios, literature), config.format)
    return 0


def cmd_reproduce(config: CliConfig) -> int:
    result = run_reproduction()
    golden_lines = [
        f"{'PASS' if g.passed else 'FAIL'}  {g.label}: expected {g.expected} "
        f"+- {g.tolerance}, got {g.actual:.6f}"
        for g in result.goldens
    ]
    if config.format == "json":
        print(json.dumps(
            {
                "comparison": report_to_dict(result.comparison),
                "published_models": [
                    {
                        "condition": row.name,
                        "observed": row.observed,
                        "models": {m: {"prediction": p, "fit": e}
                                   for m, (p, e) in row.models.items()},
                        "prediction": row.prediction,
                        "prediction_fit": row.prediction_fit,
                        "basis": row.basis,
                    }
                    for row in result.table3
                ],
                "goldens": [
                    {
                        "label": g.label,
                        "expected": g.expected,
                        "actual": g.actual,
                        "tolerance": g.tolerance,
                        "passed": g.passed,
                    }
                    for g in result.goldens
                ],
            },
            indent=2,
        ))
    elif config.format == "csv":
        print(render_report_csv(result.comparison), end="")
        print()
        print(render_table3_csv(result), end="")
    else:
        print("benchmark predictions")
        print(render_report_table(result.comparison))
        print()
        print("published-model comparison")
        print(render_table3(result))
        print()
        print("golden checks")
        for line in golden_lines:
            print(line)
    if config.out:
        out = Path(config.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "table2.csv").write_text(render_report_csv(result.comparison))
        (out / "table3.csv").write_text(render_table3_csv(result))
        (out / "observed_vs_predicted.csv").write_text(
            render_observed_vs_predicted_csv(result.comparison)
        )
        (out / "model_comparison.csv").write_text(render_model_comparison_csv(result))
        (out / "report.txt").write_text(
            "benchmark predictions\n" + render_report_table(result.comparison)
            + "\n\npublished-model comparison\n" + render_table3(result)
            + "\n\ngolden checks\n" + "\n".join(golden_lines) + "\n"
        )
    if not result.all_passed():
        raise GoldenMismatchError(result.failures())
    return 0


_COMMANDS = {
    "entropy": cmd_entropy,
    "infer": cmd_infer,
    "predict": cmd_predict,
    "compare": cmd_compare,
    "reproduce": cmd_reproduce,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        config = _config_from_args(args)
        return _COMMANDS[config.command](config)
    except GoldenMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InferenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QlbnError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
