#!/usr/bin/env python3
"""
SetColour Lab - Set-Ramsey Search Benchmark
===========================================

Replays the small known values in ``datasets/known_values.json``: for each
entry marked searchable, K_{value-1} must be Avoidable and K_value
Unavoidable. Nodes and wall time are recorded with and without symmetry
breaking.
"""

import argparse
import json
import os
import sys

import pandas as pd
from rich.console import Console
from rich.table import Table

# Add src to path
sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'src'))

from ramsey.search import Outcome, ramsey_search
from ramsey.target import TargetGraph

console = Console()

DATASET = os.path.join(os.path.dirname(__file__), "datasets", "known_values.json")


def load_cases(path: str = DATASET) -> list:
    with open(path, encoding="utf-8") as f:
        return [case for case in json.load(f) if case["search"]]


def run(cases: list, budget: int, threads: int) -> pd.DataFrame:
    rows = []
    for case in cases:
        target = TargetGraph.parse(case["target"])
        for n, expected in ((case["value"] - 1, Outcome.AVOIDABLE), (case["value"], Outcome.UNAVOIDABLE)):
            if n < target.num_vertices:
                continue
            for symmetry in (True, False):
                report = ramsey_search(case["r"], case["k"], target, n, budget, symmetry=symmetry, threads=threads)
                rows.append({
                    "r": case["r"],
                    "k": case["k"],
                    "target": case["target"],
                    "n": n,
                    "symmetry": symmetry,
                    "expected": expected.value,
                    "outcome": report.outcome.value,
                    "nodes": report.nodes,
                    "seconds": report.wall_time,
                })
                console.print(f"  ({case['r']},{case['k']}) {case['target']} n={n} symmetry={symmetry}: "
                              f"{report.outcome.value} in {report.nodes} nodes")
    return pd.DataFrame(rows)


def print_results(df: pd.DataFrame):
    table = Table(title="Set-Ramsey searches")
    for column in ("(r,k)", "target", "n", "expected", "nodes (sym)", "nodes (plain)", "speedup"):
        table.add_column(column, justify="right")
    pivot = df.pivot_table(index=["r", "k", "target", "n", "expected"], columns="symmetry", values="nodes").reset_index()
    for row in pivot.itertuples(index=False):
        r, k, target, n, expected, plain, pruned = row
        table.add_row(f"({r},{k})", target, str(n), expected, str(int(pruned)), str(int(plain)), f"{plain / max(pruned, 1):.1f}x")
    console.print(table)

    wrong = df[(df["outcome"] != df["expected"]) & (df["outcome"] != Outcome.BUDGET_EXCEEDED.value)]
    if wrong.empty:
        console.print("[green]PASSED[/green]: every decided search matches the known value")
    else:
        console.print(f"[red]FAILED[/red]: {len(wrong)} searches disagree with the known values")


def main():
    parser = argparse.ArgumentParser(description="Set-Ramsey search benchmark")
    parser.add_argument("--budget", type=int, default=50_000_000)
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--output", default="benchmarks/results/ramsey_report.json")
    args = parser.parse_args()

    console.rule("[bold cyan]Set-Ramsey Benchmark[/bold cyan]")
    df = run(load_cases(), args.budget, args.threads)
    print_results(df)

    os.makedirs(os.path.dirname(args.output), exist_ok=True)
    with open(args.output, "w", encoding="utf-8") as f:
        f.write(df.to_json(orient="records", indent=2))
    console.print(f"Results saved to [underline]{args.output}[/underline]")


if __name__ == "__main__":
    main()
