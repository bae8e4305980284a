"""Single entry point mapping a semantics id to its world-view computation."""

from __future__ import annotations

from .config import DEFAULT_LIMITS, SolverLimits
from .eht import f15_world_views
from .foundedness import c19_world_views
from .modal import WorldView
from .semantics import SemanticsId, s17_world_views, world_views
from .syntax import Program


def compute_world_views(
    program: Program,
    semantics: SemanticsId,
    limits: SolverLimits = DEFAULT_LIMITS,
) -> frozenset[WorldView]:
    if semantics in (SemanticsId.G91, SemanticsId.G11, SemanticsId.K15):
        return world_views(program, semantics, limits)
    if semantics is SemanticsId.S17:
        return s17_world_views(program, limits)
    if semantics is SemanticsId.F15:
        return f15_world_views(program, limits)
    if semantics is SemanticsId.C19:
        return c19_world_views(program, limits)
    raise ValueError(f"unknown semantics {semantics!r}")
