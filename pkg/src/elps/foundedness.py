"""Unfounded sets and founded world views; C19 = founded G91.

A pair ⟨X, I⟩ is *justified* by a rule r with Head(r) ∩ X ≠ ∅ when
  (1) the body of r holds at the modal interpretation (wv, I),
  (2) no positive objective body atom of r lies in X,
  (3) r derives no head atom outside X that is already in I, and
  (4) no atom under a positive subjective body literal of r lies in Y,
      the union of all X-components of the candidate set.

The greatest unfounded set is computed as a fixpoint: start from every pair
with I in the world view and X ∩ I ≠ ∅, repeatedly delete pairs that have a
justifying rule w.r.t. the current Y.  Deleting pairs only shrinks Y, which
only enables more justifications, so the deletion cascade is monotone and the
fixpoint is the unique ⊆-greatest unfounded set among the eligible pairs.
Two independent brute-force searches validate it on small instances.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import DEFAULT_LIMITS, SolverLimits
from .errors import CapacityError
from .modal import WorldView, modal_satisfies
from .objective import Interpretation
from .semantics import SemanticsId, world_views
from .syntax import Atom, Program, Rule, atom_key


@dataclass(frozen=True)
class UnfoundedPair:
    X: frozenset[Atom]
    interp: Interpretation


def positive_objective_atoms(rule: Rule) -> frozenset[Atom]:
    return frozenset(l.base for l in rule.body_obj if l.negs == 0 and l.atom is not None)


def positive_subjective_atoms(rule: Rule) -> frozenset[Atom]:
    # fully positive K-occurrences only: neither inner nor outer negation.
    # K not a (and M-forms, which rewrite to outer-negated K) provide no
    # positive modal support, so they cannot block a justification.
    return frozenset(
        l.atom
        for l in rule.body_sub
        if not l.neg and l.modality == "K" and l.inner.negs == 0
    )


def has_justifying_rule(program: Program, wv: WorldView, pair: UnfoundedPair, Y) -> bool:
    Y = frozenset(Y)
    for rule in program.rules:
        if not (rule.head & pair.X):
            continue
        if not all(modal_satisfies(wv, pair.interp, l) for l in rule.body):
            continue
        if positive_objective_atoms(rule) & pair.X:
            continue
        if (rule.head - pair.X) & pair.interp:
            continue
        if positive_subjective_atoms(rule) & Y:
            continue
        return True
    return False


def _masks(program: Program, limits: SolverLimits):
    atoms = sorted(program.atom_universe, key=atom_key)
    if len(atoms) > limits.founded_max_atoms:
        raise CapacityError(
            f"{len(atoms)} atoms exceed the foundedness cap of {limits.founded_max_atoms}"
        )
    index = {a: i for i, a in enumerate(atoms)}

    def mask(atom_set) -> int:
        m = 0
        for a in atom_set:
            m |= 1 << index[a]
        return m

    return atoms, index, mask


def _rule_masks(program: Program, wv: WorldView, mask):
    """Per rule: (head, posobj, possub) masks plus per-interpretation body truth.

    Conditions (1)-(3) do not involve Y, so they are precomputed once; only
    condition (4) participates in the fixpoint iteration.
    """
    compiled = []
    for rule in program.rules:
        if not rule.head:
            continue
        truths = {}
        for i in wv.interps:
            truths[i] = all(modal_satisfies(wv, i, l) for l in rule.body)
        compiled.append(
            (
                mask(rule.head),
                mask(positive_objective_atoms(rule)),
                mask(positive_subjective_atoms(rule)),
                truths,
            )
        )
    return compiled


def greatest_unfounded_set(
    program: Program,
    wv: WorldView,
    limits: SolverLimits = DEFAULT_LIMITS,
) -> frozenset[UnfoundedPair]:
    """Fixpoint of justified-pair deletion; empty iff wv is founded."""
    atoms, index, mask = _masks(program, limits)
    rules = _rule_masks(program, wv, mask)
    n = len(atoms)

    # survivors: (x_mask, interp, justifier possub masks valid for conditions 1-3)
    survivors = []
    for interp in wv.sorted_interps:
        i_mask = mask(interp)
        for x in range(1, 1 << n):
            if not (x & i_mask):
                continue
            justifiers = [
                possub
                for head, posobj, possub, truths in rules
                if head & x and truths[interp] and not (posobj & x) and not ((head & ~x) & i_mask)
            ]
            if any(p == 0 for p in justifiers):
                continue  # justified regardless of Y
            survivors.append((x, interp, tuple(justifiers)))

    while True:
        y = 0
        for x, _, _ in survivors:
            y |= x
        remaining = [
            entry for entry in survivors if not any((p & y) == 0 for p in entry[2])
        ]
        if len(remaining) == len(survivors):
            break
        survivors = remaining

    bits = {1 << i: a for a, i in index.items()}
    return frozenset(
        UnfoundedPair(frozenset(bits[1 << i] for i in range(n) if x & (1 << i)), interp)
        for x, interp, _ in survivors
    )


def is_founded(program: Program, wv: WorldView, limits: SolverLimits = DEFAULT_LIMITS) -> bool:
    return not greatest_unfounded_set(program, wv, limits)


def is_founded_brute(
    program: Program,
    wv: WorldView,
    limits: SolverLimits = DEFAULT_LIMITS,
    method: str = "union",
) -> bool:
    """Brute-force foundedness, independent of the fixpoint computation.

    "union": guess the union Y directly; the pairs that survive w.r.t. Y form
    an unfounded set iff their X-components cover Y exactly.
    "subsets": literal enumeration of candidate pair sets (tiny inputs only).
    """
    atoms = sorted(program.atom_universe, key=atom_key)
    if len(atoms) > limits.founded_max_atoms:
        raise CapacityError(
            f"{len(atoms)} atoms exceed the foundedness cap of {limits.founded_max_atoms}"
        )
    eligible = [
        UnfoundedPair(x, interp)
        for interp in wv.sorted_interps
        for x in _subsets(atoms)
        if x and (x & interp)
    ]
    if method == "union":
        for y in _subsets(atoms):
            if not y:
                continue
            surviving = [
                p for p in eligible if p.X <= y and not has_justifying_rule(program, wv, p, y)
            ]
            if surviving and frozenset().union(*(p.X for p in surviving)) == y:
                return False
        return True
    if method == "subsets":
        if len(eligible) > 16:
            raise CapacityError(f"{len(eligible)} candidate pairs exceed the subset-search cap")
        for mask in range(1, 1 << len(eligible)):
            chosen = [eligible[i] for i in range(len(eligible)) if mask & (1 << i)]
            y = frozenset().union(*(p.X for p in chosen))
            if all(not has_justifying_rule(program, wv, p, y) for p in chosen):
                return False
        return True
    raise ValueError(f"unknown method {method!r}")


def _subsets(atoms):
    for m in range(1 << len(atoms)):
        yield frozenset(a for i, a in enumerate(atoms) if m & (1 << i))


def c19_world_views(program: Program, limits: SolverLimits = DEFAULT_LIMITS) -> frozenset[WorldView]:
    """Founded G91 world views."""
    return frozenset(
        wv for wv in world_views(program, SemanticsId.G91, limits) if is_founded(program, wv, limits)
    )


def unfounded_certificate(program: Program, wv: WorldView, limits: SolverLimits = DEFAULT_LIMITS):
    """JSON-friendly dump of the greatest unfounded set (the rejection witness)."""
    pairs = greatest_unfounded_set(program, wv, limits)
    return [
        {
            "X": sorted(str(a) for a in p.X),
            "I": sorted(str(a) for a in p.interp),
        }
        for p in sorted(pairs, key=lambda p: (tuple(sorted(map(str, p.X))), interp_sort(p.interp)))
    ]


def interp_sort(interp):
    return tuple(sorted(str(a) for a in interp))
