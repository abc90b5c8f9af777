"""Compare the recursion with the layer-stacking oracle on random vertices.

Every one of the 2^d assignments of every vertex is decided both ways.  Any
disagreement is printed in full (folded profile, constraints, reduction
steps) and makes the script exit non-zero.

    python scripts/oracle_sweep.py --trials 300 --max-half-degree 4 --seed 0
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from itertools import product

from flatfold.counting import count_assignments
from flatfold.enumeration import is_valid_assignment
from flatfold.oracle import discrepancy_report, oracle_is_valid
from flatfold.vertex import Label, MVAssignment, random_kawasaki_vertex


@dataclass
class SweepConfig:
    trials: int = 300
    max_half_degree: int = 4
    seed: int = 0


def sweep(cfg: SweepConfig):
    checked, reports = 0, []
    for t in range(cfg.trials):
        v = random_kawasaki_vertex(1 + t % cfg.max_half_degree, cfg.seed + t)
        valid = 0
        for labels in product((Label.M, Label.V), repeat=v.degree):
            a = MVAssignment(labels)
            ours, theirs = is_valid_assignment(v, a), oracle_is_valid(v, a)
            checked += 1
            valid += theirs
            if ours != theirs:
                reports.append(discrepancy_report(v, a))
        if valid != count_assignments(v).count:
            reports.append(f"count mismatch on {v.angles}: oracle {valid}")
    return checked, reports


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--trials", type=int, default=SweepConfig.trials)
    ap.add_argument("--max-half-degree", type=int, default=SweepConfig.max_half_degree)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    args = ap.parse_args(argv)
    cfg = SweepConfig(args.trials, args.max_half_degree, args.seed)
    t0 = time.perf_counter()
    checked, reports = sweep(cfg)
    for r in reports:
        print(r, end="\n\n")
    print(f"{cfg.trials} vertices, {checked} assignments, {len(reports)} disagreements, "
          f"{time.perf_counter() - t0:.1f}s")
    return 1 if reports else 0


if __name__ == "__main__":
    sys.exit(main())
