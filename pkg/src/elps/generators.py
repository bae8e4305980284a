"""Seeded random program generators for the differential test suites."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .syntax import Atom, ObjLit, Program, Rule, SubjLit


@dataclass(frozen=True)
class GeneratorShape:
    n_atoms: int = 4
    max_rules: int = 5
    max_head: int = 2
    max_body: int = 3
    neg2_prob: float = 0.1       # doubled default negation on an objective literal
    neg_prob: float = 0.45       # single default negation
    subjective_prob: float = 0.4  # body literal is subjective
    m_prob: float = 0.0           # modality is M instead of K
    constraint_prob: float = 0.15


_POOL = tuple(Atom(name) for name in "abcdefgh")


def _atoms(shape: GeneratorShape) -> tuple[Atom, ...]:
    return _POOL[: shape.n_atoms]


def _objective_literal(rng: random.Random, atoms, shape: GeneratorShape) -> ObjLit:
    roll = rng.random()
    if roll < shape.neg2_prob:
        negs = 2
    elif roll < shape.neg2_prob + shape.neg_prob:
        negs = 1
    else:
        negs = 0
    return ObjLit(rng.choice(atoms), negs)


def _subjective_literal(rng: random.Random, atoms, shape: GeneratorShape) -> SubjLit:
    modality = "M" if rng.random() < shape.m_prob else "K"
    inner_negs = rng.choice((0, 0, 0, 1))
    return SubjLit(modality, ObjLit(rng.choice(atoms), inner_negs), neg=rng.random() < 0.5)


def _rule(rng: random.Random, atoms, shape: GeneratorShape, subjective: bool) -> Rule:
    if rng.random() < shape.constraint_prob:
        head = frozenset()
        n_body = rng.randint(1, shape.max_body)
    else:
        head = frozenset(rng.sample(atoms, rng.randint(1, shape.max_head)))
        n_body = rng.randint(0, shape.max_body)
    body = []
    for _ in range(n_body):
        if subjective and rng.random() < shape.subjective_prob:
            body.append(_subjective_literal(rng, atoms, shape))
        else:
            body.append(_objective_literal(rng, atoms, shape))
    if not head and not body:
        body.append(_objective_literal(rng, atoms, shape))
    return Rule(head, tuple(body))


def random_objective_program(rng: random.Random, shape: GeneratorShape) -> Program:
    atoms = _atoms(shape)
    n = rng.randint(1, shape.max_rules)
    return Program.of(_rule(rng, atoms, shape, subjective=False) for _ in range(n))


def random_epistemic_program(rng: random.Random, shape: GeneratorShape) -> Program:
    atoms = _atoms(shape)
    n = rng.randint(1, shape.max_rules)
    return Program.of(_rule(rng, atoms, shape, subjective=True) for _ in range(n))


def random_subjective_constraint(rng: random.Random, program: Program, shape: GeneratorShape) -> Rule:
    atoms = sorted(program.atom_universe) or list(_atoms(shape))
    body = tuple(
        _subjective_literal(rng, atoms, shape) for _ in range(rng.randint(1, 2))
    )
    return Rule(frozenset(), body)


def random_stratified_program(
    rng: random.Random,
    shape: GeneratorShape,
    n_layers: int = 3,
) -> Program:
    """Head and objective body stay inside one layer, subjective literals only
    query strictly lower layers, so the result is epistemically stratified by
    construction."""
    atoms = list(_atoms(shape))
    rng.shuffle(atoms)
    n_layers = min(n_layers, len(atoms))
    layers: list[list[Atom]] = [[] for _ in range(n_layers)]
    for i, atom in enumerate(atoms):
        layers[i % n_layers].append(atom)

    rules = []
    n = rng.randint(1, shape.max_rules)
    for _ in range(n):
        layer = rng.randint(0, n_layers - 1)
        local = layers[layer]
        below = [a for l in layers[:layer] for a in l]
        if below and rng.random() < 0.2:
            # purely subjective constraint over settled layers
            body = tuple(
                _subjective_literal(rng, below, shape) for _ in range(rng.randint(1, 2))
            )
            rules.append(Rule(frozenset(), body))
            continue
        head = frozenset(rng.sample(local, min(len(local), rng.randint(1, shape.max_head))))
        body = []
        for _ in range(rng.randint(0, shape.max_body)):
            if below and rng.random() < shape.subjective_prob:
                body.append(_subjective_literal(rng, below, shape))
            else:
                body.append(_objective_literal(rng, local, shape))
        rules.append(Rule(head, tuple(body)))
    return Program.of(rules)
