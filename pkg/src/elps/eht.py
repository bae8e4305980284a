"""Epistemic here-and-there machinery: EHT models, equilibrium selection and
the F15 world views.

An EHT interpretation pairs a world view ("there") with a function h mapping
each interpretation to a subset of itself ("here").  Atoms are read from
h(I); a default-negated literal is always evaluated in the total variant.
Equilibrium models are total models admitting no smaller "here" model; F15
world views are the equilibrium models that survive the ⊂ / ≤ comparison.

The ordering ≤ quantifies over interpretations that belong to *some*
equilibrium model; the comparison_domain flag switches to quantifying only
over the two compared views (for experimentation, no fidelity claim either
way).
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Mapping

from .config import DEFAULT_LIMITS, SolverLimits
from .errors import CapacityError
from .modal import WorldView
from .objective import Interpretation
from .syntax import Atom, ObjLit, Program, Rule, SubjLit, atom_key, const_truth, interp_key


class EHTInterpretation:
    """A world view plus a "here" map h with h(I) ⊆ I for every I."""

    def __init__(self, wv: WorldView, h: Mapping[Interpretation, Iterable[Atom]]):
        self.wv = wv
        self.h = {i: frozenset(h[i]) for i in wv.interps}
        for i, here in self.h.items():
            if not here <= i:
                raise ValueError(f"h({set(i)}) = {set(here)} is not a subset")

    @classmethod
    def total(cls, wv: WorldView) -> "EHTInterpretation":
        return cls(wv, {i: i for i in wv.interps})

    def total_on(self, interps) -> bool:
        return all(self.h[i] == i for i in interps)

    def is_total(self) -> bool:
        return self.total_on(self.wv.interps)


def _truth(base, atom_set) -> bool:
    return base in atom_set


def _lit_truth(wv: WorldView, h, point: Interpretation, lit, total: bool) -> bool:
    """h is ignored when total=True (the id variant)."""
    if isinstance(lit, ObjLit):
        value = const_truth(lit)
        if value is not None:
            return value
        if lit.negs == 0:
            return lit.base in (point if total else h[point])
        # a default-negated literal reads the total ("there") valuation
        value = lit.base in point
        return value if lit.negs == 2 else not value
    # subjective literal
    if lit.neg:
        return not _lit_truth(wv, h, point, lit.core(), total=True)
    inner = lit.inner
    if lit.modality == "K":
        return all(_lit_truth(wv, h, i, inner, total) for i in wv.interps)
    return any(_lit_truth(wv, h, i, inner, total) for i in wv.interps)


def eht_satisfies(eht: EHTInterpretation, point: Interpretation, construct) -> bool:
    point = frozenset(point)
    if point not in eht.wv.interps:
        raise ValueError(f"point {set(point)} is not in the world view")
    if isinstance(construct, (ObjLit, SubjLit)):
        return _lit_truth(eht.wv, eht.h, point, construct, total=False)
    if isinstance(construct, Rule):
        return _rule_at_point(eht.wv, eht.h, point, construct, total=False)
    raise TypeError(f"unsupported construct {construct!r}")


def _rule_at_point(wv, h, point, rule: Rule, total: bool) -> bool:
    if all(_lit_truth(wv, h, point, l, total) for l in rule.body):
        here = point if total else h[point]
        return any(a in here for a in rule.head)
    return True


def _model_at_point(wv, h, point, program: Program, total: bool) -> bool:
    return all(_rule_at_point(wv, h, point, r, total) for r in program.rules)


def is_eht_model(eht: EHTInterpretation, program: Program) -> bool:
    return all(_model_at_point(eht.wv, eht.h, i, program, total=False) for i in eht.wv.interps)


def _h_maps(wv: WorldView, free: Iterable[Interpretation]):
    """All h maps that are total outside `free`; yields plain dicts.

    Enumeration order is canonical so that the first countermodel found is
    identical across runs.
    """
    free = sorted(free, key=interp_key)
    fixed = {i: i for i in wv.interps if i not in free}
    choice_lists = []
    for i in free:
        members = sorted(i, key=atom_key)
        subsets = []
        for m in range(1 << len(members)):
            subsets.append(frozenset(a for k, a in enumerate(members) if m & (1 << k)))
        choice_lists.append(subsets)
    for choices in product(*choice_lists):
        h = dict(fixed)
        h.update(zip(free, choices))
        yield h


def _check_cap(program: Program, limits: SolverLimits):
    n = len(program.atom_universe)
    if n > limits.f15_max_atoms:
        raise CapacityError(f"{n} atoms exceed the EHT cap of {limits.f15_max_atoms}")


def _candidate_views(program: Program):
    atoms = sorted(program.atom_universe, key=atom_key)
    interps = [
        frozenset(a for i, a in enumerate(atoms) if m & (1 << i)) for m in range(1 << len(atoms))
    ]
    for mask in range(1, 1 << len(interps)):
        yield WorldView.of(interps[i] for i in range(len(interps)) if mask & (1 << i))


def equilibrium_countermodel(program: Program, wv: WorldView):
    """A non-total h that models the program at all points, or None."""
    for h in _h_maps(wv, wv.interps):
        if all(h[i] == i for i in wv.interps):
            continue
        if all(_model_at_point(wv, h, i, program, total=False) for i in wv.interps):
            return h
    return None


def equilibrium_eht_models(
    program: Program,
    limits: SolverLimits = DEFAULT_LIMITS,
) -> frozenset[WorldView]:
    """Total EHT models with no strictly smaller "here" model."""
    _check_cap(program, limits)
    found = []
    for wv in _candidate_views(program):
        if not all(_model_at_point(wv, None, i, program, total=True) for i in wv.interps):
            continue
        if equilibrium_countermodel(program, wv) is None:
            found.append(wv)
    return frozenset(found)


def models_star(wv: WorldView, X, program: Program) -> bool:
    """The auxiliary satisfaction relation behind the F15 ordering.

    (1) the program holds at every point of X in the total variant;
    (2) any EHT-model (all points) that is total outside X must be total.

    With X = wv this is exactly the equilibrium condition.
    """
    X = frozenset(frozenset(i) for i in X)
    if not X <= wv.interps:
        raise ValueError("X must be a subset of the world view")
    if not all(_model_at_point(wv, None, i, program, total=True) for i in X):
        return False
    for h in _h_maps(wv, X):
        if all(h[i] == i for i in wv.interps):
            continue
        if all(_model_at_point(wv, h, i, program, total=False) for i in wv.interps):
            return False
    return True


def f15_world_views(
    program: Program,
    limits: SolverLimits = DEFAULT_LIMITS,
    comparison_domain: str = "global",
) -> frozenset[WorldView]:
    """Equilibrium models not dominated by a ⊃-larger or ≤-greater one."""
    if comparison_domain not in ("global", "pair"):
        raise ValueError(f"comparison_domain must be 'global' or 'pair', got {comparison_domain!r}")
    equilibria = sorted(equilibrium_eht_models(program, limits), key=str)
    if not equilibria:
        return frozenset()
    global_domain = sorted(
        {i for wv in equilibria for i in wv.interps}, key=interp_key
    )
    star_cache: dict[tuple, bool] = {}

    def star(interps: frozenset, X: frozenset) -> bool:
        key = (interps, X)
        if key not in star_cache:
            star_cache[key] = models_star(WorldView(interps), X, program)
        return star_cache[key]

    def less_equal(w1: WorldView, w2: WorldView, domain) -> bool:
        for i in domain:
            if star(w1.interps | {i}, w1.interps) and not star(w2.interps | {i}, w2.interps):
                return False
        return True

    surviving = []
    for wv in equilibria:
        dominated = False
        for other in equilibria:
            if other == wv:
                continue
            if wv.interps < other.interps:
                dominated = True
                break
            if comparison_domain == "global":
                domain = global_domain
            else:
                domain = sorted(wv.interps | other.interps, key=interp_key)
            if less_equal(wv, other, domain) and not less_equal(other, wv, domain):
                dominated = True
                break
        if not dominated:
            surviving.append(wv)
    return frozenset(surviving)
