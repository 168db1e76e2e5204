"""Compare the three-function tree recurrence with the A/B/C tree DP.

Lists the smallest trees (by n, then Pruefer code) where the two disagree,
in both directions, for each c.
"""

import argparse
from dataclasses import dataclass
from itertools import product

from edgepack.audit import literal_tree_recurrence
from edgepack.exact import tree_dp_edges
from edgepack.generators import prufer_decode
from edgepack.graph import Graph


@dataclass
class RecurrenceConfig:
    max_n: int = 7
    cs: tuple[int, ...] = (1, 2, 3)
    show: int = 3


def run(cfg: RecurrenceConfig) -> None:
    for c in cfg.cs:
        under, over, total = [], [], 0
        for n in range(2, cfg.max_n + 1):
            for code in product(range(n), repeat=n - 2):
                t = Graph.from_edges(n, prufer_decode(list(code), n))
                total += 1
                lit, dp = literal_tree_recurrence(t, c), tree_dp_edges(t, c)[0]
                if lit < dp:
                    under.append((t, lit, dp))
                elif lit > dp:
                    over.append((t, lit, dp))
        print(f"c={c}: {total} labeled trees, {len(under)} undercounts, {len(over)} overcounts")
        for label, rows in (("under", under), ("over", over)):
            for t, lit, dp in rows[: cfg.show]:
                print(f"  {label} n={t.n} edges={list(t.edges)} recurrence={lit} optimum={dp}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=RecurrenceConfig.max_n)
    ap.add_argument("--show", type=int, default=RecurrenceConfig.show)
    a = ap.parse_args()
    run(RecurrenceConfig(max_n=a.max_n, show=a.show))
