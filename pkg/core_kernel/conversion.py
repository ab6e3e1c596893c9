"""
Definitional equality.

Conversion first compares terms lazily: syntactic equality, equal rigid heads
with pairwise convertible arguments, head beta, and delta-unfolding of the side
whose head constant is defined later (greater definitional height), then
weak-head reduction of eliminator heads. Only when none of these applies are
both sides evaluated and compared as values. This keeps conversion of types
that merely mention an expensive computation from running it.
"""
from __future__ import annotations

import logging

from core_eval.iota import IOTA_RULES
from core_eval.nbe import Evaluator, neutral_env
from core_eval.primitives import PRIM_ARITY
from core_eval.reduction import Reducer, StepMeter, default_budget

from .errors import BudgetExceeded
from .terms import Const, Lam, Pi, Sort, Term, Var, alpha_eq, constants, spine

logger = logging.getLogger(__name__)


def definitional_height(env, name: str, levels: tuple[int, ...]) -> int | None:
    """Unfolding depth of a defined constant; ``None`` when ``name`` does not unfold."""
    key = ('height', name, levels)
    if key in env.memo:
        return env.memo[key]
    entry = env.lookup(name, levels)
    if not entry.reducible or entry.body is None:
        env.memo[key] = None
        return None
    height = 1
    for sub_name, sub_levels in constants(entry.body):
        sub = definitional_height(env, sub_name, sub_levels)
        if sub is not None:
            height = max(height, sub + 1)
    env.memo[key] = height
    return height


def _rigid(env, head: Const) -> bool:
    if head.name in IOTA_RULES or head.name in PRIM_ARITY:
        return False
    return definitional_height(env, head.name, head.levels) is None


class Converter:
    def __init__(self, env, meter: StepMeter):
        self.env = env
        self.meter = meter
        self.reducer = Reducer(env, meter)

    def terms(self, t: Term, u: Term) -> bool:
        while True:
            if alpha_eq(t, u):
                return True
            if isinstance(t, Sort) and isinstance(u, Sort):
                return t.level == u.level
            if (isinstance(t, Pi) and isinstance(u, Pi)) or (isinstance(t, Lam) and isinstance(u, Lam)):
                other_body = u.codomain if isinstance(u, Pi) else u.body
                body = t.codomain if isinstance(t, Pi) else t.body
                return self.terms(t.domain, u.domain) and self.terms(body, other_body)
            ht, at = spine(t)
            hu, au = spine(u)
            if isinstance(ht, Lam) and at:
                t = self.reducer.beta_head(t)
                continue
            if isinstance(hu, Lam) and au:
                u = self.reducer.beta_head(u)
                continue
            if isinstance(ht, Var) and ht == hu and len(at) == len(au):
                return all(self.terms(a, b) for a, b in zip(at, au))
            if isinstance(ht, Const) and isinstance(hu, Const):
                if ht == hu and len(at) == len(au):
                    if all(self.terms(a, b) for a, b in zip(at, au)):
                        return True
                    if _rigid(self.env, ht):
                        return False
            dt = definitional_height(self.env, ht.name, ht.levels) if isinstance(ht, Const) else None
            du = definitional_height(self.env, hu.name, hu.levels) if isinstance(hu, Const) else None
            if dt is None and du is None:
                # fire head iota/prim redexes on terms before comparing values
                t2, u2 = self.reducer.whnf(t), self.reducer.whnf(u)
                if t2 is not t or u2 is not u:
                    t, u = t2, u2
                    continue
                return self.values(t, u)
            if du is None or (dt is not None and dt >= du):
                t = self.reducer.unfold_head(t)
            else:
                u = self.reducer.unfold_head(u)

    def values(self, t: Term, u: Term) -> bool:
        depth = max(t.fv, u.fv)
        evaluator = Evaluator(self.env, self.meter)
        env = neutral_env(depth)
        return evaluator.conv(evaluator.eval(t, env), evaluator.eval(u, env), depth)


def conv(env, t: Term, u: Term, budget: int | None = None) -> bool:
    """Convertibility of two terms living in the same context."""
    meter = StepMeter(default_budget() if budget is None else budget)
    try:
        return Converter(env, meter).terms(t, u)
    except RecursionError:
        logger.warning(f"⚠️ conversion exhausted the host stack after {meter.steps} steps")
        raise BudgetExceeded(meter.steps, meter.budget) from None
