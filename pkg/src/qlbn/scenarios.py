"""Two-player game scenarios: build networks, predict the unobserved round, compare fits.

A scenario fixes the second player's defection probability conditional on each
first-player move plus the observed defection rate when the first move stays
unknown. The classical prediction averages the conditionals over the prior;
the quantum-like prediction runs the interference pipeline with the
entropy-based degree. Fit errors are relative: |predicted - observed| / observed.

The built-in dataset bundles the published benchmark rows (conditions,
observed rates, and two earlier models' printed predictions). Three rows of
the published comparison table came from per-experiment conditionals that
were never published; those appear as constants-only rows and are never
recomputed.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Mapping, Sequence

from .bayesnet import Network, Variable, infer
from .belief import DiscreteDistribution
from .errors import ValidationError, ZeroObservedError
from .heuristic import BeliefDegree, degree_for_query
from .quantum import amplitudes_from_network, quantum_infer

PLAYER_ONE = "P1"
PLAYER_TWO = "P2"
DEFECT = "Defect"
COOPERATE = "Cooperate"

# Golden tolerances for the reproduction checks.
TOL_CLASSICAL = 1e-4
TOL_PREDICTION = 5e-4
TOL_FIT = 1e-3
TOL_COMPARISON = 5e-3

_MODEL_TITLES = {
    "qpdt": "QPDT",
    "dynamic_heuristic": "dynamic heuristic",
    "belief_degree": "belief degree",
}


@dataclass(frozen=True)
class Scenario:
    """One game condition: conditionals, prior, and the observed unknown-move rate."""

    name: str
    p_defect_given_defect: float
    p_defect_given_cooperate: float
    observed_unknown: float
    prior_defect: float = 0.5
    payoff_note: str | None = None

    def __post_init__(self) -> None:
        for label, value in [
            ("p_defect_given_defect", self.p_defect_given_defect),
            ("p_defect_given_cooperate", self.p_defect_given_cooperate),
            ("observed_unknown", self.observed_unknown),
            ("prior_defect", self.prior_defect),
        ]:
            if not math.isfinite(value) or value < 0.0 or value > 1.0:
                raise ValidationError(f"{self.name!r}: {label} = {value!r} is outside [0, 1]")


def scenario_to_network(scenario: Scenario) -> Network:
    """Two-node network P1 -> P2 for one scenario.

    P1 declares Cooperate first, so downstream outcome-vector pairs read as
    (cooperating opponent, defecting opponent); P2 declares Defect first, the
    outcome every report leads with.
    """
    p1 = Variable(PLAYER_ONE, (COOPERATE, DEFECT))
    p2 = Variable(PLAYER_TWO, (DEFECT, COOPERATE))
    prior = DiscreteDistribution(
        p1.outcomes, (1.0 - scenario.prior_defect, scenario.prior_defect)
    )
    given_c = DiscreteDistribution(
        p2.outcomes,
        (scenario.p_defect_given_cooperate, 1.0 - scenario.p_defect_given_cooperate),
    )
    given_d = DiscreteDistribution(
        p2.outcomes,
        (scenario.p_defect_given_defect, 1.0 - scenario.p_defect_given_defect),
    )
    return Network(
        variables=(p1, p2),
        parents={PLAYER_ONE: (), PLAYER_TWO: (PLAYER_ONE,)},
        cpts={
            PLAYER_ONE: {(): prior},
            PLAYER_TWO: {(COOPERATE,): given_c, (DEFECT,): given_d},
        },
    )


def fit_error(predicted: float, observed: float) -> float:
    """Relative error |predicted - observed| / observed; observed must be positive."""
    if observed <= 0.0:
        raise ZeroObservedError(f"relative fit error undefined for observed {observed!r}")
    return abs(predicted - observed) / observed


@dataclass(frozen=True)
class PredictionRecord:
    """Everything one scenario produced, plus optional published model columns."""

    scenario: Scenario
    classical_prediction: float
    quantum_prediction: float
    degree: BeliefDegree
    fit_error_classical: float
    fit_error_quantum: float
    literature_comparisons: dict[str, tuple[float, float]] | None = None


def predict_unknown(
    scenario: Scenario,
    literature: Mapping[str, tuple[float, float]] | None = None,
) -> PredictionRecord:
    """Classical and quantum-like defection predictions for the unknown-move round."""
    net = scenario_to_network(scenario)
    classical = infer(net, PLAYER_TWO, {}).prob(DEFECT)
    anet = amplitudes_from_network(net)
    degree = degree_for_query(anet, PLAYER_TWO, {})
    quantum = quantum_infer(anet, PLAYER_TWO, {}, degree.value).probability(DEFECT)
    return PredictionRecord(
        scenario=scenario,
        classical_prediction=classical,
        quantum_prediction=quantum,
        degree=degree,
        fit_error_classical=fit_error(classical, scenario.observed_unknown),
        fit_error_quantum=fit_error(quantum, scenario.observed_unknown),
        literature_comparisons=dict(literature) if literature else None,
    )


@dataclass(frozen=True)
class ComparisonReport:
    """Per-scenario records plus arithmetic-mean fit errors per model column."""

    records: tuple[PredictionRecord, ...]
    average_fit_classical: float
    average_fit_quantum: float
    average_fit_literature: dict[str, float] = field(default_factory=dict)


def run_comparison(
    scenarios: Sequence[Scenario],
    literature: Mapping[str, Mapping[str, tuple[float, float]]] | None = None,
) -> ComparisonReport:
    """Evaluate every scenario and average the fit-error columns.

    Args:
        scenarios: conditions to evaluate, reported in input order.
        literature: scenario name -> {model -> (predicted, fit_error)} published
            columns to carry alongside, averaged over the rows that have them.
    """
    if not scenarios:
        raise ValidationError("need at least one scenario to compare")
    literature = literature or {}
    records = tuple(
        predict_unknown(s, literature.get(s.name)) for s in scenarios
    )
    model_errors: dict[str, list[float]] = {}
    for record in records:
        for model, (_, err) in (record.literature_comparisons or {}).items():
            model_errors.setdefault(model, []).append(err)
    return ComparisonReport(
        records=records,
        average_fit_classical=math.fsum(r.fit_error_classical for r in records)
        / len(records),
        average_fit_quantum=math.fsum(r.fit_error_quantum for r in records)
        / len(records),
        average_fit_literature={
            m: math.fsum(errs) / len(errs) for m, errs in model_errors.items()
        },
    )


# --- built-in dataset --------------------------------------------------------


@dataclass(frozen=True)
class ComparisonRow:
    """A published benchmark row: observed rate, earlier models' printed columns,
    and this model's printed prediction. scenario_name links the rows whose
    conditionals are known; the rest stay constants-only."""

    name: str
    observed: float
    models: dict[str, tuple[float, float]]
    reported_prediction: float
    reported_fit_error: float
    scenario_name: str | None


def _builtin_doc() -> dict:
    text = resources.files("qlbn").joinpath("data/literature.json").read_text()
    return json.loads(text)


def load_builtin_scenarios() -> list[Scenario]:
    """The five benchmark conditions, payoff note attached to each."""
    doc = _builtin_doc()
    note = doc.get("payoff_note")
    return [
        Scenario(
            name=row["name"],
            p_defect_given_defect=row["p_defect_given_defect"],
            p_defect_given_cooperate=row["p_defect_given_cooperate"],
            observed_unknown=row["observed_unknown"],
            payoff_note=note,
        )
        for row in doc["scenarios"]
    ]


def load_builtin_reported_classical() -> dict[str, float]:
    doc = _builtin_doc()
    return {
        row["name"]: row["reported_classical"]
        for row in doc["scenarios"]
        if "reported_classical" in row
    }


def load_builtin_reported_predictions() -> dict[str, tuple[float, float]]:
    """Scenario name -> (reported prediction, reported fit error), where published."""
    doc = _builtin_doc()
    return {
        row["name"]: (row["reported_prediction"], row["reported_fit_error"])
        for row in doc["scenarios"]
        if "reported_prediction" in row
    }


def load_comparison_rows() -> list[ComparisonRow]:
    doc = _builtin_doc()
    return [
        ComparisonRow(
            name=row["name"],
            observed=row["observed"],
            models={m: (v[0], v[1]) for m, v in row["models"].items()},
            reported_prediction=row["reported_prediction"],
            reported_fit_error=row["reported_fit_error"],
            scenario_name=row["scenario"],
        )
        for row in doc["comparison_rows"]
    ]


def load_reported_average_fit_errors() -> dict[str, float]:
    return dict(_builtin_doc()["reported_average_fit_errors"])


# --- scenario files -----------------------------------------------------------
#
# A scenario file is a JSON list of objects with keys name,
# p_defect_given_defect, p_defect_given_cooperate, observed_unknown and the
# optional prior_defect and payoff_note. Probabilities may be numbers or
# decimal strings.

_REQUIRED_KEYS = {
    "name",
    "p_defect_given_defect",
    "p_defect_given_cooperate",
    "observed_unknown",
}
_OPTIONAL_KEYS = {"prior_defect", "payoff_note"}


def _to_float(value: object, context: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float, str)):
        raise ValidationError(f"{context}: expected a number, got {value!r}")
    try:
        return float(value)
    except ValueError:
        raise ValidationError(f"{context}: cannot parse number {value!r}") from None


def scenarios_from_json(doc: object) -> list[Scenario]:
    if not isinstance(doc, list):
        raise ValidationError("a scenario file must contain a JSON list")
    out: list[Scenario] = []
    for i, row in enumerate(doc):
        if not isinstance(row, dict):
            raise ValidationError(f"scenario {i}: expected an object, got {row!r}")
        keys = set(row)
        missing = _REQUIRED_KEYS - keys
        unknown = keys - _REQUIRED_KEYS - _OPTIONAL_KEYS
        if missing or unknown:
            raise ValidationError(
                f"scenario {i}: missing keys {sorted(missing)}, unknown keys {sorted(unknown)}"
            )
        out.append(
            Scenario(
                name=str(row["name"]),
                p_defect_given_defect=_to_float(
                    row["p_defect_given_defect"], f"scenario {i}"
                ),
                p_defect_given_cooperate=_to_float(
                    row["p_defect_given_cooperate"], f"scenario {i}"
                ),
                observed_unknown=_to_float(row["observed_unknown"], f"scenario {i}"),
                prior_defect=_to_float(row.get("prior_defect", 0.5), f"scenario {i}"),
                payoff_note=row.get("payoff_note"),
            )
        )
    return out


def load_scenarios(path: str | Path) -> list[Scenario]:
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: line {exc.lineno}: {exc.msg}") from None
    try:
        return scenarios_from_json(doc)
    except ValidationError as exc:
        raise ValidationError(f"{path}: {exc}") from None


# --- reproduction -------------------------------------------------------------


@dataclass(frozen=True)
class GoldenCheck:
    """One published value the pipeline must land on within tolerance."""

    label: str
    expected: float
    actual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return abs(self.actual - self.expected) <= self.tolerance


@dataclass(frozen=True)
class Table3Row:
    """One comparison-table row as rendered: published model columns plus this
    model's prediction, which is computed where conditionals exist and copied
    from the published table otherwise (basis 'published')."""

    name: str
    observed: float
    models: dict[str, tuple[float, float]]
    prediction: float
    prediction_fit: float
    basis: str


@dataclass(frozen=True)
class ReproductionResult:
    comparison: ComparisonReport
    table3: tuple[Table3Row, ...]
    goldens: tuple[GoldenCheck, ...]

    def all_passed(self) -> bool:
        return all(g.passed for g in self.goldens)

    def failures(self) -> list[str]:
        return [
            f"{g.label}: expected {g.expected} +- {g.tolerance}, got {g.actual!r}"
            for g in self.goldens
            if not g.passed
        ]


def run_reproduction() -> ReproductionResult:
    """Evaluate the built-in dataset and check every published golden value."""
    scenarios = load_builtin_scenarios()
    rows = load_comparison_rows()
    literature = {r.scenario_name: r.models for r in rows if r.scenario_name}
    comparison = run_comparison(scenarios, literature)
    by_name = {rec.scenario.name: rec for rec in comparison.records}

    table3: list[Table3Row] = []
    for row in rows:
        record = by_name.get(row.scenario_name) if row.scenario_name else None
        if record is not None:
            table3.append(
                Table3Row(
                    row.name,
                    row.observed,
                    dict(row.models),
                    record.quantum_prediction,
                    record.fit_error_quantum,
                    "computed",
                )
            )
        else:
            table3.append(
                Table3Row(
                    row.name,
                    row.observed,
                    dict(row.models),
                    row.reported_prediction,
                    row.reported_fit_error,
                    "published",
                )
            )

    goldens: list[GoldenCheck] = []
    for name, expected in load_builtin_reported_classical().items():
        goldens.append(
            GoldenCheck(
                f"classical prediction ({name})",
                expected,
                by_name[name].classical_prediction,
                TOL_CLASSICAL,
            )
        )
    for name, (pred, err) in load_builtin_reported_predictions().items():
        goldens.append(
            GoldenCheck(
                f"quantum prediction ({name})", pred, by_name[name].quantum_prediction,
                TOL_PREDICTION,
            )
        )
        goldens.append(
            GoldenCheck(
                f"fit error ({name})", err, by_name[name].fit_error_quantum, TOL_FIT
            )
        )
    for row in rows:
        if row.scenario_name:
            goldens.append(
                GoldenCheck(
                    f"comparison prediction ({row.name})",
                    row.reported_prediction,
                    by_name[row.scenario_name].quantum_prediction,
                    TOL_COMPARISON,
                )
            )
    return ReproductionResult(comparison, tuple(table3), tuple(goldens))


# --- rendering ----------------------------------------------------------------


def _fmt(value: float) -> str:
    return f"{value:.5f}"


def _model_title(model: str) -> str:
    return _MODEL_TITLES.get(model, model)


def _literature_models(report: ComparisonReport) -> list[str]:
    seen: list[str] = []
    for record in report.records:
        for model in record.literature_comparisons or {}:
            if model not in seen:
                seen.append(model)
    return seen


def render_report_table(report: ComparisonReport) -> str:
    """Aligned text table of a comparison report, 5 decimals per number."""
    models = _literature_models(report)
    header = ["scenario", "observed", "classical", "quantum", "degree",
              "fit_classical", "fit_quantum"]
    for model in models:
        header += [_model_title(model), f"{_model_title(model)} fit"]
    rows = [header]
    for r in report.records:
        row = [
            r.scenario.name,
            _fmt(r.scenario.observed_unknown),
            _fmt(r.classical_prediction),
            _fmt(r.quantum_prediction),
            _fmt(r.degree.value),
            _fmt(r.fit_error_classical),
            _fmt(r.fit_error_quantum),
        ]
        for model in models:
            pair = (r.literature_comparisons or {}).get(model)
            row += ["-", "-"] if pair is None else [_fmt(pair[0]), _fmt(pair[1])]
        rows.append(row)
    mean = ["(mean fit error)", "", "", "", "",
            _fmt(report.average_fit_classical), _fmt(report.average_fit_quantum)]
    for model in models:
        avg = report.average_fit_literature.get(model)
        mean += ["", "-" if avg is None else _fmt(avg)]
    rows.append(mean)
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
             for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def render_report_csv(report: ComparisonReport) -> str:
    """CSV of a comparison report; floats keep full round-trip precision."""
    models = _literature_models(report)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["scenario", "observed", "classical", "quantum", "degree",
              "fit_classical", "fit_quantum"]
    for model in models:
        header += [f"{model}_prediction", f"{model}_fit"]
    writer.writerow(header)
    for r in report.records:
        row = [
            r.scenario.name,
            repr(r.scenario.observed_unknown),
            repr(r.classical_prediction),
            repr(r.quantum_prediction),
            repr(r.degree.value),
            repr(r.fit_error_classical),
            repr(r.fit_error_quantum),
        ]
        for model in models:
            pair = (r.literature_comparisons or {}).get(model)
            row += ["", ""] if pair is None else [repr(pair[0]), repr(pair[1])]
        writer.writerow(row)
    mean = ["mean_fit_error", "", "", "", "",
            repr(report.average_fit_classical), repr(report.average_fit_quantum)]
    for model in models:
        avg = report.average_fit_literature.get(model)
        mean += ["", "" if avg is None else repr(avg)]
    writer.writerow(mean)
    return buf.getvalue()


def report_to_dict(report: ComparisonReport) -> dict:
    return {
        "records": [
            {
                "scenario": r.scenario.name,
                "observed": r.scenario.observed_unknown,
                "classical": r.classical_prediction,
                "quantum": r.quantum_prediction,
                "degree": r.degree.value,
                "degree_raw": r.degree.raw,
                "fit_classical": r.fit_error_classical,
                "fit_quantum": r.fit_error_quantum,
                "literature": {
                    m: {"prediction": p, "fit": e}
                    for m, (p, e) in (r.literature_comparisons or {}).items()
                },
            }
            for r in report.records
        ],
        "mean_fit_classical": report.average_fit_classical,
        "mean_fit_quantum": report.average_fit_quantum,
        "mean_fit_literature": dict(report.average_fit_literature),
    }


def render_table3(result: ReproductionResult) -> str:
    """Aligned text table of the published-models comparison."""
    models = list(result.table3[0].models) if result.table3 else []
    header = ["condition", "observed"]
    for model in models:
        header += [_model_title(model), f"{_model_title(model)} fit"]
    header += ["this model", "fit", "basis"]
    rows = [header]
    for row in result.table3:
        cells = [row.name, _fmt(row.observed)]
        for model in models:
            pred, err = row.models[model]
            cells += [_fmt(pred), _fmt(err)]
        cells += [_fmt(row.prediction), _fmt(row.prediction_fit), row.basis]
        rows.append(cells)
    mean = ["(mean fit error)", ""]
    for model in models:
        errs = [row.models[model][1] for row in result.table3]
        mean += ["", _fmt(math.fsum(errs) / len(errs))]
    fits = [row.prediction_fit for row in result.table3]
    mean += ["", _fmt(math.fsum(fits) / len(fits)), ""]
    rows.append(mean)
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
             for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def render_table3_csv(result: ReproductionResult) -> str:
    models = list(result.table3[0].models) if result.table3 else []
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["condition", "observed"]
    for model in models:
        header += [f"{model}_prediction", f"{model}_fit"]
    header += ["prediction", "prediction_fit", "basis"]
    writer.writerow(header)
    for row in result.table3:
        cells = [row.name, repr(row.observed)]
        for model in models:
            pred, err = row.models[model]
            cells += [repr(pred), repr(err)]
        cells += [repr(row.prediction), repr(row.prediction_fit), row.basis]
        writer.writerow(cells)
    return buf.getvalue()


def render_observed_vs_predicted_csv(report: ComparisonReport) -> str:
    """Bar-chart-shaped series: one row per scenario, observed next to both models."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["scenario", "observed", "classical", "quantum"])
    for r in report.records:
        writer.writerow([
            r.scenario.name,
            repr(r.scenario.observed_unknown),
            repr(r.classical_prediction),
            repr(r.quantum_prediction),
        ])
    return buf.getvalue()


def render_model_comparison_csv(result: ReproductionResult) -> str:
    """Bar-chart-shaped series over the comparison rows, all models side by side."""
    models = list(result.table3[0].models) if result.table3 else []
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["condition", "observed"] + models + ["belief_degree"])
    for row in result.table3:
        writer.writerow(
            [row.name, repr(row.observed)]
            + [repr(row.models[m][0]) for m in models]
            + [repr(row.prediction)]
        )
    return buf.getvalue()
