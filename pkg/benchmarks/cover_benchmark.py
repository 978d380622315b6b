#!/usr/bin/env python3
"""
SetColour Lab - Tree Cover Benchmark
====================================

Compares the constructive cover against the exact branch-and-bound value on
random (r,k)-colourings:
1. Gap between constructive size, exact value and the proven bound
2. Wall time of both methods
3. Regime reached by the constructive dispatcher
"""

import argparse
import json
import os
import sys
import time

import pandas as pd
from rich.console import Console
from rich.table import Table
from tqdm import tqdm

# Add src to path
sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'src'))

from colouring.errors import BudgetExceeded
from colouring.model import HostGraph
from colouring.sampling import make_rng, random_colouring_from
from solver.constructive import (
    bipartite_regime,
    complete_regime,
    constructive_bound,
    constructive_cover,
)
from solver.exact import exact_tree_cover

console = Console()

PAIRS = [(r, k) for r in range(2, 8) for k in range(1, r)]


def run(host: HostGraph, samples: int, seed: int, budget: int) -> pd.DataFrame:
    rng = make_rng(seed)
    rows = []
    for r, k in tqdm(PAIRS, desc=host.describe()):
        regime = bipartite_regime(r, k) if host.is_bipartite else complete_regime(r, k, host.num_vertices)
        for _ in range(samples):
            colouring = random_colouring_from(host, r, k, rng)
            start = time.perf_counter()
            built = constructive_cover(colouring).size
            constructive_ms = (time.perf_counter() - start) * 1000
            start = time.perf_counter()
            try:
                exact = exact_tree_cover(colouring, budget)[0]
            except BudgetExceeded:
                exact = None
            exact_ms = (time.perf_counter() - start) * 1000
            rows.append({
                "r": r,
                "k": k,
                "regime": regime,
                "bound": constructive_bound(colouring),
                "constructive": built,
                "exact": exact,
                "constructive_ms": constructive_ms,
                "exact_ms": exact_ms,
            })
    return pd.DataFrame(rows)


def summarize(df: pd.DataFrame) -> pd.DataFrame:
    df = df.assign(gap=df["constructive"] - df["exact"], slack=df["bound"] - df["constructive"])
    return df.groupby(["r", "k", "regime"]).agg(
        bound=("bound", "first"),
        exact_max=("exact", "max"),
        constructive_max=("constructive", "max"),
        mean_gap=("gap", "mean"),
        min_slack=("slack", "min"),
        exact_ms=("exact_ms", "median"),
        constructive_ms=("constructive_ms", "median"),
        timeouts=("exact", lambda s: int(s.isna().sum())),
    ).reset_index()


def print_results(summary: pd.DataFrame, title: str):
    table = Table(title=title)
    for column in ("r", "k", "regime", "bound", "exact max", "built max", "mean gap", "exact ms", "built ms"):
        table.add_column(column, justify="left" if column == "regime" else "right")
    for row in summary.itertuples():
        table.add_row(
            str(row.r), str(row.k), row.regime, str(row.bound),
            "-" if pd.isna(row.exact_max) else str(int(row.exact_max)),
            str(row.constructive_max),
            "-" if pd.isna(row.mean_gap) else f"{row.mean_gap:.2f}",
            f"{row.exact_ms:.1f}", f"{row.constructive_ms:.2f}",
        )
    console.print(table)
    broken = summary[summary["min_slack"] < 0]
    if broken.empty:
        console.print("[green]PASSED[/green]: every constructive cover is within its bound")
    else:
        console.print(f"[red]FAILED[/red]: {len(broken)} (r,k) pairs exceed the bound")


def main():
    parser = argparse.ArgumentParser(description="Constructive vs exact tree covers")
    parser.add_argument("--n", type=int, default=10, help="Complete host size")
    parser.add_argument("--side", type=int, default=8, help="Side of the complete bipartite host")
    parser.add_argument("--samples", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--budget", type=int, default=2_000_000)
    parser.add_argument("--output", default="benchmarks/results/cover_report.json")
    args = parser.parse_args()

    console.rule("[bold cyan]Tree Cover Benchmark[/bold cyan]")
    report = {}
    for host in (HostGraph.complete(args.n), HostGraph.bipartite(args.side, args.side)):
        summary = summarize(run(host, args.samples, args.seed, args.budget))
        print_results(summary, host.describe())
        report[host.describe()] = json.loads(summary.to_json(orient="records"))

    os.makedirs(os.path.dirname(args.output), exist_ok=True)
    with open(args.output, "w", encoding="utf-8") as f:
        json.dump({"samples": args.samples, "seed": args.seed, "hosts": report}, f, indent=2)
    console.print(f"Results saved to [underline]{args.output}[/underline]")


if __name__ == "__main__":
    main()
