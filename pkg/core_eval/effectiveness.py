"""
Effectiveness analysis: which axioms a normal form is stuck on.

A trusted constant left in a normal form contributes the axioms its proof
relies on; an axiom contributes itself.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from core_kernel.env import Origin
from core_kernel.terms import Term, constants

from .nbe import normalize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AxiomReport:
    effective: bool
    stuck_axioms: tuple[str, ...] = ()
    steps: int = 0
    inconclusive: bool = False
    normal_form: Term | None = field(default=None, compare=False, repr=False)


def stuck_axioms(env, t: Term) -> tuple[str, ...]:
    found: set[str] = set()
    for name, levels in constants(t):
        entry = env.lookup(name, levels)
        if entry.origin == Origin.AXIOM:
            found.add(name)
        elif entry.origin == Origin.TRUSTED:
            found.update(entry.relies_on)
    return tuple(sorted(found))


def effectiveness(env, t: Term, budget: int | None = None) -> AxiomReport:
    result = normalize(env, t, budget)
    if result.budget_hit:
        logger.warning(f"⚠️ effectiveness inconclusive after {result.steps} steps")
        return AxiomReport(False, (), result.steps, inconclusive=True)
    axioms = stuck_axioms(env, result.normal_form)
    return AxiomReport(not axioms, axioms, result.steps, normal_form=result.normal_form)
