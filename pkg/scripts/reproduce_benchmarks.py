"""Run the built-in benchmark dataset end to end and save the result tables.

Writes the prediction table, the published-models comparison, the two
chart-shaped CSV series, and a plain-text report into --out, then prints every
golden check. Exits 1 if any check misses its published value.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from qlbn.scenarios import (
    render_model_comparison_csv,
    render_observed_vs_predicted_csv,
    render_report_csv,
    render_report_table,
    render_table3,
    render_table3_csv,
    run_reproduction,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--out", default="results", help="output directory (default: results/)"
    )
    args = parser.parse_args()

    result = run_reproduction()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "table2.csv").write_text(render_report_csv(result.comparison))
    (out / "table3.csv").write_text(render_table3_csv(result))
    (out / "observed_vs_predicted.csv").write_text(
        render_observed_vs_predicted_csv(result.comparison)
    )
    (out / "model_comparison.csv").write_text(render_model_comparison_csv(result))

    golden_lines = [
        f"{'PASS' if g.passed else 'FAIL'}  {g.label}: expected {g.expected} "
        f"+- {g.tolerance}, got {g.actual:.6f}"
        for g in result.goldens
    ]
    report = (
        "benchmark predictions\n" + render_report_table(result.comparison)
        + "\n\npublished-model comparison\n" + render_table3(result)
        + "\n\ngolden checks\n" + "\n".join(golden_lines) + "\n"
    )
    (out / "report.txt").write_text(report)

    print(report, end="")
    print(f"\nwrote {out}/table2.csv, table3.csv, observed_vs_predicted.csv, "
          "model_comparison.csv, report.txt")
    return 0 if result.all_passed() else 1


if __name__ == "__main__":
    raise SystemExit(main())
