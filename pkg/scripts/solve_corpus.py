#!/usr/bin/env python3
"""Solve every bundled fixture under every semantics and tabulate the results.

Capacity skips (e.g. F15 beyond its atom cap) are shown as "-".
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from elps.engine import compute_world_views
from elps.errors import CapacityError, UnsupportedMLiteral
from elps.harness import SEMANTICS_COLUMNS, fixtures_dir
from elps.modal import world_views_to_json
from elps.syntax import load_program


def main():
    for path in sorted(fixtures_dir().glob("*.elp")):
        program = load_program(path.read_text(encoding="utf-8"))
        print(f"== {path.stem} ({len(program.rules)} rules, "
              f"{len(program.atom_universe)} atoms)")
        for semantics in SEMANTICS_COLUMNS:
            try:
                views = world_views_to_json(compute_world_views(program, semantics))
                rendered = " ".join(
                    "[" + ",".join("{" + ",".join(i) + "}" for i in wv) + "]" for wv in views
                ) or "(none)"
            except (CapacityError, UnsupportedMLiteral) as exc:
                rendered = f"- ({exc})"
            print(f"  {semantics.value:>4}: {rendered}")
        print()


if __name__ == "__main__":
    main()
