import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from elps.errors import GroundingError, ParseError
from elps.modal import WorldView, modal_satisfies
from elps.syntax import (
    BOT,
    TOP,
    Atom,
    ObjLit,
    Program,
    Rule,
    SubjLit,
    add_strong_negation_constraints,
    canonicalize_program,
    default_negate,
    eliminate_m,
    ground,
    load_program,
    parse_atom,
    parse_program,
    parse_rule,
)


def test_parse_simple_rule():
    rule = parse_rule("a :- not b.")
    assert rule.head == frozenset([Atom("a")])
    assert rule.body == (ObjLit(Atom("b"), 1),)


def test_parse_subjective_body():
    rule = parse_rule("interview(mike) :- not K eligible(mike), not K -eligible(mike).")
    assert rule.head == frozenset([parse_atom("interview(mike)")])
    assert rule.body == (
        SubjLit("K", ObjLit(parse_atom("eligible(mike)")), neg=True),
        SubjLit("K", ObjLit(parse_atom("-eligible(mike)")), neg=True),
    )


def test_parse_disjunction_both_spellings():
    assert parse_rule("a | b.") == parse_rule("a v b.")


def test_parse_fact_and_constraint():
    assert parse_rule("a.").is_fact
    constraint = parse_rule(":- a, not b.")
    assert constraint.is_constraint and not constraint.is_subjective_constraint
    assert parse_rule(":- K a, not M b.").is_subjective_constraint


def test_parse_modality_needs_argument():
    with pytest.raises(ParseError):
        parse_program("a :- K.")


def test_parse_modality_on_truth_constant_rejected():
    with pytest.raises(ParseError, match="truth constant"):
        parse_program("a :- K #true.")


def test_parse_negation_depth_capped():
    with pytest.raises(ParseError, match="depth"):
        parse_program("a :- not not not b.")


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as exc:
        parse_program("a :- b.\nc :- K.\n")
    assert exc.value.line == 2
    assert exc.value.col >= 6


def test_parse_truth_constants_ascii_and_unicode():
    assert parse_rule("a :- #true, not #false.") == parse_rule("a :- ⊤, not ⊥.")


def test_strong_negation_atom_is_distinct():
    assert parse_atom("-p(c)") != parse_atom("p(c)")
    assert parse_atom("-p(c)").positive() == parse_atom("p(c)")


def test_roundtrip_on_fixture_corpus(corpus_dir):
    for path in sorted(corpus_dir.glob("*.elp")):
        program = parse_program(path.read_text(encoding="utf-8"))
        assert parse_program(str(program)) == program


_names = st.sampled_from(["p", "q", "r"])
_atoms = st.builds(
    Atom,
    name=_names,
    args=st.sampled_from([(), ("c1",), ("c1", "c2")]),
    strong_neg=st.booleans(),
)
_objlits = st.builds(ObjLit, base=st.one_of(_atoms, st.sampled_from([TOP, BOT])), negs=st.integers(0, 2))
_subjlits = st.builds(
    SubjLit,
    modality=st.sampled_from(["K", "M"]),
    inner=st.builds(ObjLit, base=_atoms, negs=st.integers(0, 2)),
    neg=st.booleans(),
)
_rules = st.builds(
    Rule,
    head=st.frozensets(_atoms, max_size=2),
    body=st.lists(st.one_of(_objlits, _subjlits), max_size=3).map(tuple),
).filter(lambda r: r.head or r.body)


@settings(max_examples=200, deadline=None)
@given(st.lists(_rules, min_size=1, max_size=5))
def test_roundtrip_pretty_print_parse(rules):
    program = Program.of(rules)
    assert parse_program(str(program)) == program


def test_ground_college_instantiates_to_five_rules(corpus_dir):
    parsed = parse_program((corpus_dir / "college.elp").read_text(encoding="utf-8"))
    grounded = ground(parsed)
    assert len(grounded.rules) == 5
    assert all(a.is_ground for a in grounded.atom_universe)
    assert parse_rule("eligible(mike) :- high(mike).") in grounded.rules
    assert parse_rule(
        "interview(mike) :- not K eligible(mike), not K -eligible(mike)."
    ) in grounded.rules


def test_ground_identity_on_ground_programs():
    program = parse_program("a :- b. c(d).")
    assert ground(program) == program


def test_ground_idempotent(corpus_dir):
    for path in sorted(corpus_dir.glob("*.elp")):
        grounded = ground(parse_program(path.read_text(encoding="utf-8")))
        assert ground(grounded) == grounded


def test_ground_two_constants():
    program = parse_program("p(X) :- q(X). q(c1). q(c2).")
    grounded = ground(program)
    assert parse_rule("p(c1) :- q(c1).") in grounded.rules
    assert parse_rule("p(c2) :- q(c2).") in grounded.rules
    assert len(grounded.rules) == 4


def test_ground_requires_constants():
    with pytest.raises(GroundingError):
        ground(parse_program("p(X) :- q(X)."))


def test_eliminate_m_rewrites():
    assert eliminate_m(Program.of([parse_rule("a :- M b.")])).rules[0] == parse_rule(
        "a :- not K not b."
    )
    assert eliminate_m(Program.of([parse_rule("a :- not M b.")])).rules[0] == parse_rule(
        "a :- K not b."
    )
    # triple negation collapses
    assert eliminate_m(Program.of([parse_rule("a :- M not not b.")])).rules[0] == parse_rule(
        "a :- not K not b."
    )
    unchanged = parse_program("a :- K b. c :- not d.")
    assert eliminate_m(unchanged) == unchanged


def test_default_negate_collapses_triple():
    lit = ObjLit(Atom("a"), 2)
    assert default_negate(lit).negs == 1


def _all_world_views(atoms):
    interps = []
    for mask in range(1 << len(atoms)):
        interps.append(frozenset(a for i, a in enumerate(atoms) if mask & (1 << i)))
    for mask in range(1, 1 << len(interps)):
        yield WorldView.of(interps[i] for i in range(len(interps)) if mask & (1 << i))


def test_eliminate_m_preserves_modal_satisfaction():
    # exhaustive over two atoms (all world views and points); spot checks on a
    # third atom keep the three-atom case covered without the full blow-up
    atoms = [Atom("a"), Atom("b")]
    rules = [
        parse_rule("a :- M b."),
        parse_rule("a :- not M b."),
        parse_rule(":- M not a, K b."),
        parse_rule("b :- M not not a, not b."),
        parse_rule("a | b :- M a, not K not b."),
    ]
    points = [frozenset(), frozenset([atoms[0]]), frozenset(atoms)]
    for rule in rules:
        rewritten = eliminate_m(Program.of([rule])).rules[0]
        for wv in _all_world_views(atoms):
            for point in points:
                assert modal_satisfies(wv, point, rule) == modal_satisfies(wv, point, rewritten)


def test_eliminate_m_preserves_modal_satisfaction_three_atoms():
    import random

    atoms = [Atom("a"), Atom("b"), Atom("c")]
    rule = parse_rule("a | c :- M not b, not M c, K a.")
    rewritten = eliminate_m(Program.of([rule])).rules[0]
    interps = [frozenset(a for i, a in enumerate(atoms) if m & (1 << i)) for m in range(8)]
    rng = random.Random(9)
    for wv in _all_world_views(atoms):
        point = rng.choice(interps)
        assert modal_satisfies(wv, point, rule) == modal_satisfies(wv, point, rewritten)


def test_strong_negation_constraints_added():
    program = load_program("-p. q :- not -p.")
    assert parse_rule(":- p, -p.") in program.rules
    # idempotent
    assert add_strong_negation_constraints(program) == program


def test_canonicalize_program():
    program = parse_program("a :- ⊤, b. c :- ⊥. d :- not ⊥. e :- not ⊤, a.")
    canonical = canonicalize_program(program)
    assert parse_rule("a :- b.") in canonical.rules
    assert parse_rule("d.") in canonical.rules
    assert len(canonical.rules) == 2


def test_program_dedup_and_universe():
    program = Program.of([parse_rule("a :- b."), parse_rule("a :- b.")], extra_atoms=[Atom("z")])
    assert len(program.rules) == 1
    assert Atom("z") in program.atom_universe
    assert Atom("a") in program.atom_universe
