"""Run the claim auditor and write its JSON report.

    python3 scripts/run_audit.py --max-n 7 --out audit.json
"""

import argparse
import time
from dataclasses import dataclass
from typing import Optional

from edgepack.audit import DEFAULT_CLAIMS, audit_claims


@dataclass
class AuditConfig:
    max_n: int = 7
    samples: int = 30
    seed: int = 0
    out: Optional[str] = None


def main(cfg: AuditConfig) -> None:
    start = time.perf_counter()
    report = audit_claims(cfg.max_n, DEFAULT_CLAIMS, samples=cfg.samples, seed=cfg.seed)
    print(report.to_text())
    print(f"# {time.perf_counter() - start:.1f}s")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(report.to_json() + "\n")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=AuditConfig.max_n)
    ap.add_argument("--samples", type=int, default=AuditConfig.samples)
    ap.add_argument("--seed", type=int, default=AuditConfig.seed)
    ap.add_argument("--out")
    a = ap.parse_args()
    main(AuditConfig(a.max_n, a.samples, a.seed, a.out))
