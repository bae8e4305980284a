import random

import pytest

from elps.config import SolverLimits
from elps.errors import CapacityError, NotASplittingSet, NotObjectiveError
from elps.generators import GeneratorShape, random_objective_program
from elps.objective import (
    classical_satisfies,
    objective_reduct,
    objective_solutions,
    objective_split,
    simplify_top,
    stable_models,
    stable_models_ref,
)
from elps.syntax import Atom, Program, load_program, parse_atom, parse_program, parse_rule

PI1 = parse_program(
    """
    a :- not b.
    b :- not a.
    c | d :- not a.
    d :- a, not b.
    """
)

A, B, C, D = (Atom(x) for x in "abcd")


def sm(program, **kw):
    return {frozenset(i) for i in stable_models(program, **kw)}


def interps(*texts):
    return {frozenset(parse_atom(t) for t in text.split()) for text in texts}


def test_classical_satisfies_examples():
    rule = parse_rule("a :- not b.")
    assert classical_satisfies(frozenset([A]), rule)
    assert classical_satisfies(frozenset([B]), rule)  # body false
    assert not classical_satisfies(frozenset(), parse_rule("a | b."))


def test_classical_satisfies_rejects_subjective():
    with pytest.raises(NotObjectiveError):
        classical_satisfies(frozenset(), parse_rule("a :- K b."))


def test_classical_double_negation():
    lit = parse_rule(":- not not a.").body[0]
    assert classical_satisfies(frozenset([A]), lit)
    assert not classical_satisfies(frozenset(), lit)


def test_objective_reduct_pi1():
    reduct = objective_reduct(PI1, frozenset([A]))
    assert parse_rule("a :- ⊤.") in reduct.rules
    assert parse_rule("b :- ⊥.") in reduct.rules
    assert parse_rule("c | d :- ⊥.") in reduct.rules
    assert parse_rule("d :- a, ⊤.") in reduct.rules


def test_objective_reduct_identity_on_positive_programs():
    program = parse_program("a :- b. c | d :- a.")
    assert objective_reduct(program, frozenset([A])) == program


def test_simplify_top_matches_worked_example():
    split = objective_split(PI1, {A, B})
    top_a = simplify_top(split.top, split.U, frozenset([A]))
    assert top_a.rules == (parse_rule("c | d :- not ⊤."), parse_rule("d :- ⊤, not ⊥."))
    top_b = simplify_top(split.top, split.U, frozenset([B]))
    assert top_b.rules == (parse_rule("c | d :- not ⊥."), parse_rule("d :- ⊥, not ⊤."))


def test_stable_models_pi1():
    assert sm(PI1) == interps("a d", "b c", "b d")


def test_stable_models_college_bottom():
    bottom = load_program(
        """
        eligible(mike) :- high(mike).
        eligible(mike) :- minority(mike), fair(mike).
        -eligible(mike) :- -fair(mike), -high(mike).
        fair(mike) | high(mike).
        """
    )
    assert sm(bottom) == interps("high(mike) eligible(mike)", "fair(mike)")


def test_stable_models_empty_program():
    assert sm(Program.of([])) == {frozenset()}


def test_stable_models_capacity():
    program = parse_program("a :- b, c, d, e.")
    with pytest.raises(CapacityError):
        stable_models(program, SolverLimits(max_atoms=3))


def test_objective_split_pi1():
    split = objective_split(PI1, {A, B})
    assert set(split.bottom.rules) == {parse_rule("a :- not b."), parse_rule("b :- not a.")}
    assert set(split.top.rules) == {parse_rule("c | d :- not a."), parse_rule("d :- a, not b.")}


def test_objective_split_whole_universe():
    split = objective_split(PI1, PI1.atom_universe)
    assert split.bottom == PI1
    assert split.top.rules == ()


def test_objective_split_invalid_sets():
    with pytest.raises(NotASplittingSet) as exc:
        objective_split(PI1, {A})
    assert parse_rule("a :- not b.") in exc.value.violators
    # b :- not a. satisfies the head condition, so it is not a violator
    assert parse_rule("b :- not a.") not in exc.value.violators

    with pytest.raises(NotASplittingSet) as exc:
        objective_split(PI1, {D})
    assert parse_rule("d :- a, not b.") in exc.value.violators
    assert parse_rule("c | d :- not a.") in exc.value.violators


def test_objective_solutions_pi1():
    sols = objective_solutions(PI1, {A, B})
    assert sols == {
        (frozenset([A]), frozenset([D])),
        (frozenset([B]), frozenset([C])),
        (frozenset([B]), frozenset([D])),
    }
    assert {ib | it for ib, it in sols} == sm(PI1)


def test_objective_solutions_empty_bottom():
    program = parse_program("a :- not a. b :- a.")
    assert objective_solutions(program, {A}) == frozenset()


def test_constraint_placement_indifference():
    program = parse_program("a :- not b. b :- not a. :- b. c :- not a.")
    u = {A, B}
    bottom_sols = objective_solutions(program, u, placement="bottom")
    top_sols = objective_solutions(program, u, placement="top")
    assert bottom_sols == top_sols
    split_top = objective_split(program, u, placement="top")
    assert parse_rule(":- b.") in split_top.top.rules


def _every_subset(atoms):
    atoms = sorted(atoms)
    for mask in range(1 << len(atoms)):
        yield frozenset(a for i, a in enumerate(atoms) if mask & (1 << i))


def test_splitting_theorem_randomized():
    rng = random.Random(20)
    shape = GeneratorShape(n_atoms=5, max_rules=6)
    for _ in range(120):
        program = random_objective_program(rng, shape)
        expected = sm(program)
        for U in _every_subset(program.atom_universe):
            try:
                sols = objective_solutions(program, U)
            except NotASplittingSet:
                continue
            assert {ib | it for ib, it in sols} == expected, (str(program), sorted(map(str, U)))
            # each stable model yields the unique solution (I∩U, I\U)
            for model in expected:
                assert (model & U, model - U) in sols


def test_supraclassicality_randomized():
    rng = random.Random(21)
    shape = GeneratorShape(n_atoms=5, max_rules=6)
    for _ in range(150):
        program = random_objective_program(rng, shape)
        for model in stable_models(program):
            assert classical_satisfies(model, program)


def test_two_oracle_paths_agree():
    rng = random.Random(22)
    shape = GeneratorShape(n_atoms=4, max_rules=5)
    for _ in range(60):
        program = random_objective_program(rng, shape)
        assert stable_models(program) == stable_models_ref(program), str(program)
