#!/usr/bin/env python3
"""Randomized cross-semantics stress sweep.

Checks, over seeded random programs:
  - C19 ⊆ G91 and S17 ⊆ K15; supra-S5 for every returned world view,
  - epistemic splitting and subjective constraint monotonicity hold for
    G91 and C19 on every valid splitting set / random constraint,
  - F15 selection stays inside the equilibrium models (both comparison
    domains),
  - guess-based world views match the brute-force oracle, and foundedness
    matches its brute-force search,
  - stratified programs have at most one world view and the layered
    evaluator agrees with the direct computation.

Any violation raises with the offending program attached.
"""

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from elps.eht import equilibrium_eht_models, f15_world_views
from elps.engine import compute_world_views
from elps.errors import UnsupportedMLiteral
from elps.foundedness import is_founded, is_founded_brute
from elps.generators import (
    GeneratorShape,
    random_epistemic_program,
    random_stratified_program,
    random_subjective_constraint,
)
from elps.modal import is_s5_model
from elps.semantics import (
    SemanticsId,
    brute_force_world_views,
    s17_world_views,
    world_views,
)
from elps.splitting import (
    check_constraint_monotonicity,
    check_epistemic_splitting,
    enumerate_epistemic_splitting_sets,
    layered_world_view,
    stratify,
)
from elps.syntax import eliminate_m


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=987654)
    parser.add_argument("--trials", type=int, default=200, help="programs per phase")
    args = parser.parse_args()

    rng = random.Random(args.seed)
    t0 = time.time()
    stats = {"mixed": 0, "splitting": 0, "scm": 0, "f15": 0, "oracle": 0, "stratified": 0}

    shape4 = GeneratorShape(n_atoms=4, max_rules=5, subjective_prob=0.5, m_prob=0.25)
    for _ in range(args.trials):
        program = random_epistemic_program(rng, shape4)
        stats["mixed"] += 1
        g91 = world_views(program, SemanticsId.G91)
        assert compute_world_views(program, SemanticsId.C19) <= g91
        for wv in g91:
            assert is_s5_model(wv, program), str(program)
        try:
            assert s17_world_views(program) <= world_views(program, SemanticsId.K15)
        except UnsupportedMLiteral:
            rewritten = eliminate_m(program)
            assert s17_world_views(rewritten) <= world_views(rewritten, SemanticsId.K15)
        for u in enumerate_epistemic_splitting_sets(program):
            for semantics in (SemanticsId.G91, SemanticsId.C19):
                report = check_epistemic_splitting(program, u, semantics)
                assert report.verdict == "holds", (str(program), report.U, semantics)
                stats["splitting"] += 1
        constraint = random_subjective_constraint(rng, program, shape4)
        for semantics in (SemanticsId.G91, SemanticsId.C19):
            report = check_constraint_monotonicity(program, constraint, semantics)
            assert report.verdict == "holds", (str(program), str(constraint), semantics)
            stats["scm"] += 1

    shape3 = GeneratorShape(n_atoms=3, max_rules=4, subjective_prob=0.5, m_prob=0.3)
    for _ in range(args.trials):
        program = random_epistemic_program(rng, shape3)
        stats["f15"] += 1
        equilibria = equilibrium_eht_models(program)
        assert f15_world_views(program) <= equilibria, str(program)
        assert f15_world_views(program, comparison_domain="pair") <= equilibria, str(program)
        for wv in equilibria:
            assert is_s5_model(wv, program), str(program)

    shape_k = GeneratorShape(n_atoms=3, max_rules=4, subjective_prob=0.5)
    for _ in range(args.trials):
        program = random_epistemic_program(rng, shape_k)
        stats["oracle"] += 1
        for semantics in (SemanticsId.G91, SemanticsId.G11, SemanticsId.K15):
            assert world_views(program, semantics) == brute_force_world_views(
                program, semantics
            ), str(program)
        for wv in world_views(program, SemanticsId.G91):
            assert is_founded(program, wv) == is_founded_brute(program, wv), str(program)

    shape_s = GeneratorShape(n_atoms=6, max_rules=6, subjective_prob=0.5, m_prob=0.25)
    for _ in range(args.trials):
        program = random_stratified_program(rng, shape_s, n_layers=3)
        stats["stratified"] += 1
        stratify(program)
        for semantics in (SemanticsId.G91, SemanticsId.C19):
            assert len(compute_world_views(program, semantics)) <= 1, str(program)
            layered_world_view(program, semantics)  # asserts agreement internally

    print(f"stress sweep clean: {stats} in {time.time() - t0:.1f}s (seed={args.seed})")


if __name__ == "__main__":
    main()
