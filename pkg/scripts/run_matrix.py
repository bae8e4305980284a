#!/usr/bin/env python3
"""Build the semantics-by-property matrix and dump every violation witness.

Usage: python3 scripts/run_matrix.py [--seed N] [--count N] [--json PATH]
"""

import argparse
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from elps.harness import build_property_matrix


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=2025)
    parser.add_argument("--count", type=int, default=30, help="random programs per cell")
    parser.add_argument("--json", default=None, help="also write the full JSON report here")
    args = parser.parse_args()

    matrix = build_property_matrix(seed=args.seed, count=args.count)
    print(matrix.render())
    total_violations = 0
    for (prop, semantics), cell in sorted(matrix.cells.items()):
        for report in cell.violations:
            total_violations += 1
            print(f"\nwitness [{prop} / {semantics}]:")
            for line in report.program.splitlines():
                print(f"    {line}")
            if report.U:
                print(f"    U = {report.U}")
            print(f"    lhs = {report.lhs}")
            print(f"    rhs = {report.rhs}")
    print(f"\n{total_violations} violation witnesses collected "
          f"(seed={args.seed}, count={args.count})")
    if args.json:
        Path(args.json).write_text(json.dumps(matrix.to_json(), indent=2, sort_keys=True))
        print(f"JSON report written to {args.json}")


if __name__ == "__main__":
    main()
