"""
Transport à la carte.

* black box: push a term through the forward map of the derived equivalence,
  without looking at its body;
* white box: rewrite the term itself, constant by constant;
* goal replacement: resolve a goal, prove the related goal, and map the proof
  back with the inverse of the equivalence.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from core_eval.nbe import normalize
from core_kernel.builder import app, c
from core_kernel.terms import App, Lam, Pi, Term, Var, alpha_eq, apply, spine
from core_kernel.typechecker import check, infer
from core_stdlib.canonical import canonical_for
from core_stdlib.prelude.common import refl
from core_stdlib.prelude.logic import e_fun, e_inv, ur_equiv, ur_refl_rel
from core_translate.trace import ResolutionTrace

from .registry import Registry

logger = logging.getLogger(__name__)

BLACKBOX = 'blackbox'
WHITEBOX = 'whitebox'


@dataclass(frozen=True)
class Transported:
    source: Term
    source_type: Term
    term: Term
    type: Term
    relatedness: Term
    mode: str
    trace: ResolutionTrace | None = None


def transport_black_box(registry: Registry, t: Term, ty: Term, *, check_result: bool = True,
                        budget: int | None = None) -> Transported:
    resolution = registry.resolve(ty, budget=budget)
    i, target, witness = resolution.level, resolution.target, resolution.witness
    moved = app(e_fun(i, ty, target, ur_equiv(i, ty, target, witness)), t)
    related = ur_refl_rel(i, ty, target, witness, t)
    if check_result:
        check(registry.env, (), moved, target, budget)
    logger.debug(f"black-box transport via {resolution.trace.rule.value}")
    return Transported(t, ty, moved, target, related, BLACKBOX, resolution.trace)


def transport_white_box(registry: Registry, t: Term, ty: Term | None = None, *, unfold: bool = True,
                        check_result: bool = True, budget: int | None = None) -> Transported:
    """Raises ``UnrelatedConstant`` or the kernel error of the failing check."""
    env = registry.env
    if ty is None:
        ty = infer(env, (), t, budget)
    translator = registry.translator(unfold=unfold, budget=budget)
    moved, target = translator.prime(t), translator.prime(ty)
    trace = translator.trace(t)
    related = trace.assemble()
    if check_result:
        check(env, (), moved, target, budget)
        check(env, (), related, apply(translator.relation(ty), t, moved), budget)
    return Transported(t, ty, moved, target, related, WHITEBOX, trace)


@dataclass(frozen=True)
class Goal:
    source: Term
    target: Term
    backward: Term
    level: int
    trace: ResolutionTrace

    def proof_of_source(self, proof: Term) -> Term:
        return app(self.backward, proof)


def replace_goal(registry: Registry, goal: Term, *, budget: int | None = None) -> Goal:
    resolution = registry.resolve(goal, budget=budget)
    i, target, witness = resolution.level, resolution.target, resolution.witness
    backward = e_inv(i, goal, target, ur_equiv(i, goal, target, witness))
    return Goal(goal, target, backward, i, resolution.trace)


@dataclass(frozen=True)
class ComputedProof:
    proof: Term | None
    steps: int
    budget_hit: bool = False


def prove_by_computation(env, goal: Term, budget: int | None = None) -> ComputedProof:
    """``eq_refl`` when both sides of an equation goal normalize to the same value."""
    result = normalize(env, goal, budget)
    if result.budget_hit:
        return ComputedProof(None, result.steps, True)
    head, args = spine(result.normal_form)
    if getattr(head, 'name', None) == 'eq' and len(args) == 3 and alpha_eq(args[1], args[2]):
        return ComputedProof(refl(head.levels[0], args[0], args[1]), result.steps)
    return ComputedProof(None, result.steps)


# transport along equalities

def _ignores_argument(predicate: Term) -> bool:
    return isinstance(predicate, Lam) and not _mentions(predicate.body, 0)


def _mentions(t: Term, index: int) -> bool:
    if t.fv <= index:
        return False
    match t:
        case Var(index=k):
            return k == index
        case App(fn=f, arg=a):
            return _mentions(f, index) or _mentions(a, index)
        case Lam(domain=d, body=b) | Pi(domain=d, codomain=b):
            return _mentions(d, index) or _mentions(b, index + 1)
    return False


@dataclass(frozen=True)
class Transportable:
    """How to move ``P x`` to ``P y`` given ``x = y``."""

    carrier: Term
    predicate: Term
    constant: bool

    @classmethod
    def instance(cls, carrier: Term, predicate: Term) -> Transportable:
        return cls(carrier, predicate, _ignores_argument(predicate))

    def transport(self, x: Term, y: Term, e: Term, t: Term, *, level: int = 0,
                  motive_level: int = 0) -> Term:
        if self.constant:
            return t
        canonical = canonical_for(self.carrier)
        if canonical is not None:
            e = canonical.apply(x, y, e)
        return app(c('eq_rect', level, motive_level), self.carrier, x, self.predicate, t, y, e)


def transport_along(carrier: Term, predicate: Term, x: Term, y: Term, e: Term, t: Term, *,
                    level: int = 0, motive_level: int = 0) -> Term:
    return Transportable.instance(carrier, predicate).transport(
        x, y, e, t, level=level, motive_level=motive_level)
