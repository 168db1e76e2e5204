"""Empirical approximation ratios of the c=1 and c=2 heuristics against brute force.

Prints one row per (n, method): mean and worst ratio ALG/OPT over random
isolate-free graphs small enough for the exact solver.
"""

import argparse
import random
from dataclasses import dataclass
from statistics import mean

from edgepack.approx import approx_p1b, approx_p2b_derandomized, approx_p2b_randomized
from edgepack.exact import opt_pcb
from edgepack.generators import random_isolate_free


@dataclass
class RatioConfig:
    n_min: int = 4
    n_max: int = 10
    graphs_per_n: int = 40
    edge_cap: int = 22
    seed: int = 0


def run(cfg: RatioConfig) -> list[dict]:
    rng = random.Random(cfg.seed)
    rows = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        ratios: dict[str, list[float]] = {"p1b": [], "p2b-rand": [], "p2b-det": []}
        for _ in range(cfg.graphs_per_n):
            g = random_isolate_free(n, rng, p=rng.uniform(0.2, 0.9), max_edges=cfg.edge_cap)
            opt1, opt2 = opt_pcb(g, 1), opt_pcb(g, 2)
            ratios["p1b"].append(approx_p1b(g).value / opt1)
            ratios["p2b-rand"].append(len(approx_p2b_randomized(g, rng.getrandbits(32)).selected) / opt2)
            ratios["p2b-det"].append(len(approx_p2b_derandomized(g).selected) / opt2)
        for method, xs in ratios.items():
            rows.append({"n": n, "method": method, "mean": mean(xs), "worst": min(xs)})
    return rows


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=RatioConfig.n_max)
    ap.add_argument("--graphs-per-n", type=int, default=RatioConfig.graphs_per_n)
    ap.add_argument("--seed", type=int, default=RatioConfig.seed)
    a = ap.parse_args()
    print(f"{'n':>3} {'method':<9} {'mean':>6} {'worst':>6}")
    for r in run(RatioConfig(n_max=a.n_max, graphs_per_n=a.graphs_per_n, seed=a.seed)):
        print(f"{r['n']:>3} {r['method']:<9} {r['mean']:6.3f} {r['worst']:6.3f}")
