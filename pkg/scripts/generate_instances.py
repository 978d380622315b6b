#!/usr/bin/env python3
"""
Instance generator for SetColour Lab.

Writes seeded random (r,k)-colourings of complete and complete bipartite
hosts, plus random intersecting hypergraphs, together with a manifest that
records how each file was drawn.

Usage:
    python scripts/generate_instances.py --count 20 --n 10 --r 5 --k 2 --output data/instances
    python scripts/generate_instances.py --count 5 --hypergraphs --r 4 --k 2 --edges 8
"""

import argparse
import os
import sys
from typing import List, Optional

from pydantic import BaseModel, Field
from rich.console import Console
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn

sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'src'))

from colouring.io import serialize
from colouring.model import HostGraph
from colouring.sampling import random_colouring
from config import DEFAULT_SEED
from ryser.hypergraph import random_intersecting_hypergraph, serialize_hypergraph

console = Console()


class Instance(BaseModel):
    """One generated file."""
    path: str
    kind: str = Field(..., description="colouring or hypergraph")
    seed: int
    description: str


class Manifest(BaseModel):
    r: int
    k: int
    instances: List[Instance] = Field(default_factory=list)


def colouring_instance(out_dir: str, index: int, n: int, m: Optional[int], r: int, k: int, seed: int, as_json: bool) -> Instance:
    host = HostGraph.bipartite(n, m) if m else HostGraph.complete(n)
    colouring = random_colouring(host, r, k, seed)
    path = os.path.join(out_dir, f"colouring_{index:03d}.{'json' if as_json else 'txt'}")
    with open(path, "w", encoding="utf-8") as f:
        f.write(serialize(colouring, as_json))
    return Instance(path=path, kind="colouring", seed=seed, description=colouring.describe())


def hypergraph_instance(out_dir: str, index: int, r: int, k: int, edges: int, part_size: int, seed: int) -> Instance:
    h = random_intersecting_hypergraph(r, k, edges, part_size, seed=seed)
    path = os.path.join(out_dir, f"hypergraph_{index:03d}.txt")
    with open(path, "w", encoding="utf-8") as f:
        f.write(serialize_hypergraph(h))
    return Instance(path=path, kind="hypergraph", seed=seed, description=f"{r}-partite, {h.num_edges} edges")


def main():
    parser = argparse.ArgumentParser(description="Random instance generator")
    parser.add_argument("--count", type=int, default=10, help="Number of instances")
    parser.add_argument("--r", type=int, default=4, help="Number of colours (parts for hypergraphs)")
    parser.add_argument("--k", type=int, default=2, help="Colour set size (intersection level for hypergraphs)")
    parser.add_argument("--n", type=int, default=8, help="Host vertices (first side for bipartite)")
    parser.add_argument("--m", type=int, default=None, help="Second side; gives a complete bipartite host")
    parser.add_argument("--hypergraphs", action="store_true", help="Generate intersecting hypergraphs instead")
    parser.add_argument("--edges", type=int, default=8, help="Hypergraph edges")
    parser.add_argument("--part_size", type=int, default=3, help="Vertices per hypergraph part")
    parser.add_argument("--json", action="store_true", help="Write colourings as JSON")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed of the first instance")
    parser.add_argument("--output", type=str, default="data/instances", help="Output directory")
    args = parser.parse_args()

    console.rule("[bold cyan]Instance Generator[/bold cyan]")
    os.makedirs(args.output, exist_ok=True)
    manifest = Manifest(r=args.r, k=args.k)

    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        transient=True,
    ) as progress:
        task = progress.add_task(f"Generating {args.count} instances...", total=args.count)
        for i in range(args.count):
            seed = args.seed + i
            if args.hypergraphs:
                instance = hypergraph_instance(args.output, i, args.r, args.k, args.edges, args.part_size, seed)
            else:
                instance = colouring_instance(args.output, i, args.n, args.m, args.r, args.k, seed, args.json)
            manifest.instances.append(instance)
            progress.advance(task)

    manifest_path = os.path.join(args.output, "manifest.json")
    with open(manifest_path, "w", encoding="utf-8") as f:
        f.write(manifest.model_dump_json(indent=2))
    console.print(f"Generated [bold green]{len(manifest.instances)}[/bold green] instances.")
    console.print(f"Manifest saved to [underline]{manifest_path}[/underline]")


if __name__ == "__main__":
    main()
