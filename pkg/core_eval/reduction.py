"""
Call-by-name weak-head reduction on terms.

Used by the typechecker to expose the head of inferred types (a ``Pi`` or a
``Sort``) without evaluating arguments that are never needed.
"""
from __future__ import annotations

import logging

from django.conf import settings

from core_kernel.errors import BudgetExceeded
from core_kernel.terms import Const, Lam, Term, apply, instantiate, spine

from .iota import ARG, CONSTRUCTORS, IOTA_RULES
from .primitives import PRIM_ARITY, fold

logger = logging.getLogger(__name__)


def default_budget() -> int:
    return getattr(settings, 'UPTRANS_BUDGET', 10_000_000)


class StepMeter:
    """Shared step counter; raises once ``budget`` is exceeded."""

    def __init__(self, budget: int | None = None):
        self.budget = budget
        self.steps = 0

    def tick(self) -> None:
        self.steps += 1
        if self.budget is not None and self.steps > self.budget:
            raise BudgetExceeded(self.steps, self.budget)


class Reducer:
    def __init__(self, env, meter: StepMeter | None = None):
        self.env = env
        self.meter = meter or StepMeter(default_budget())

    def whnf(self, t: Term) -> Term:
        while True:
            head, args = spine(t)
            if isinstance(head, Lam) and args:
                self.meter.tick()
                t = apply(instantiate(head.body, args[0]), *args[1:])
                continue
            if not isinstance(head, Const):
                return t
            reduced = self._step_const(head, args)
            if reduced is None:
                return t
            t = reduced

    def _step_const(self, head: Const, args: list[Term]) -> Term | None:
        rule = IOTA_RULES.get(head.name)
        if rule is not None:
            if len(args) <= rule.major:
                return None
            scrutinee = self.whnf(args[rule.major])
            shead, sargs = spine(scrutinee)
            ctor = rule.ctors.get(shead.name) if isinstance(shead, Const) else None
            if ctor is None:
                return None
            fields = sargs[ctor.params:]
            self.meter.tick()
            leading = args[:rule.major]
            items = [
                fields[k] if kind == ARG else apply(head, *leading, fields[k])
                for kind, k in ctor.items
            ]
            return apply(args[ctor.branch], *items, *args[rule.major + 1:])
        arity = PRIM_ARITY.get(head.name)
        if arity is not None:
            if len(args) < arity:
                return None
            folded = fold(head.name, [self.data(a) for a in args[:arity]])
            if folded is None:
                return None
            self.meter.tick()
            return apply(folded, *args[arity:])
        entry = self.env.lookup(head.name, head.levels)
        if entry.reducible and entry.body is not None:
            self.meter.tick()
            return apply(entry.body, *args)
        return None

    def data(self, t: Term) -> Term:
        """Reduce a first-order value to constructors all the way down."""
        t = self.whnf(t)
        head, args = spine(t)
        if isinstance(head, Const) and head.name in CONSTRUCTORS:
            return apply(head, *(self.data(a) for a in args))
        return t

    def unfold_head(self, t: Term) -> Term | None:
        """One δ-step at the head constant, or ``None`` if it is not reducible."""
        head, args = spine(t)
        if not isinstance(head, Const):
            return None
        entry = self.env.lookup(head.name, head.levels)
        if not entry.reducible or entry.body is None:
            return None
        self.meter.tick()
        return apply(entry.body, *args)

    def beta_head(self, t: Term) -> Term:
        head, args = spine(t)
        while isinstance(head, Lam) and args:
            self.meter.tick()
            t = apply(instantiate(head.body, args[0]), *args[1:])
            head, args = spine(t)
        return t


def whnf(env, t: Term, budget: int | None = None) -> Term:
    """Weak-head normal form; raises ``BudgetExceeded`` past ``budget`` steps."""
    return Reducer(env, StepMeter(default_budget() if budget is None else budget)).whnf(t)
