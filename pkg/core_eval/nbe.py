"""
Call-by-need normalization by evaluation.

Terms are evaluated into values with closures; arguments are delayed in
memoizing thunks so a subterm is evaluated at most once and only when needed.
``quote`` reads a value back into a beta/iota/delta normal term. Free variables
are neutral values identified by de Bruijn *levels*.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

from core_kernel.errors import BudgetExceeded, NotAFunction, UnboundVariable
from core_kernel.terms import (
    App, Const, Free, Lam, Pi, PrimInt16, Sort, Term, Var, alpha_eq, spine,
)

from .iota import ARG, CONSTRUCTORS, IOTA_RULES
from .primitives import PRIM_ARITY, fold
from .reduction import StepMeter, default_budget

logger = logging.getLogger(__name__)


class Thunk:
    __slots__ = ('term', 'env', 'fn', 'value')

    def __init__(self, term: Term | None = None, env=None, fn: Callable | None = None, value=None):
        self.term = term
        self.env = env
        self.fn = fn
        self.value = value


@dataclass(frozen=True, slots=True)
class HVar:
    level: int


@dataclass(frozen=True, slots=True)
class HConst:
    name: str
    levels: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class VSort:
    level: int


@dataclass(frozen=True, slots=True)
class VPrim:
    value: int


@dataclass(frozen=True, slots=True)
class VLam:
    name: str
    domain: Thunk
    body: Term
    env: tuple | None


@dataclass(frozen=True, slots=True)
class VPi:
    name: str
    domain: Thunk
    body: Term
    env: tuple | None


@dataclass(frozen=True, slots=True)
class VNeutral:
    head: HVar | HConst
    spine: tuple[Thunk, ...] = ()


Value = VSort | VPrim | VLam | VPi | VNeutral


def _lookup(env, index: int) -> Thunk:
    node = env
    for _ in range(index):
        if node is None:
            break
        node = node[1]
    if node is None:
        raise UnboundVariable(f"unbound variable #{index}", term=Var(index))
    return node[0]


def neutral_env(n: int):
    """Environment binding indices ``0..n-1`` to neutral variables at levels ``n-1..0``."""
    env = None
    for level in range(n):
        env = (Thunk(value=VNeutral(HVar(level))), env)
    return env


class Evaluator:
    def __init__(self, genv, meter: StepMeter | None = None):
        self.genv = genv
        self.meter = meter or StepMeter(default_budget())
        self._deltas: dict[tuple[str, tuple[int, ...]], Value] = {}

    @property
    def steps(self) -> int:
        return self.meter.steps

    # evaluation

    def force(self, th: Thunk) -> Value:
        if th.value is None:
            th.value = th.fn() if th.fn is not None else self.eval(th.term, th.env)
        return th.value

    def delay(self, t: Term, env) -> Thunk:
        if isinstance(t, Var):
            return _lookup(env, t.index)
        return Thunk(t, env if t.fv else None)

    def eval(self, t: Term, env) -> Value:
        match t:
            case Var(index=k):
                return self.force(_lookup(env, k))
            case Sort(level=lv):
                return VSort(lv)
            case PrimInt16(value=v):
                return VPrim(v)
            case Const(name=n, levels=ls):
                return self.const(n, ls)
            case Lam(domain=d, body=b, name=n):
                return VLam(n, self.delay(d, env), b, env)
            case Pi(domain=d, codomain=b, name=n):
                return VPi(n, self.delay(d, env), b, env)
            case App():
                head, args = spine(t)
                value = self.eval(head, env)
                for a in args:
                    value = self.apply(value, self.delay(a, env))
                return value
            case Free(name=n):
                raise UnboundVariable(f"placeholder {n} escaped its binder", term=t)
        raise TypeError(f"not a term: {t!r}")

    def const(self, name: str, levels: tuple[int, ...]) -> Value:
        key = (name, levels)
        cached = self._deltas.get(key)
        if cached is not None:
            self.meter.tick()
            return cached
        entry = self.genv.lookup(name, levels)
        if entry.reducible and entry.body is not None:
            self.meter.tick()
            value = self.eval(entry.body, None)
            self._deltas[key] = value
            return value
        return VNeutral(HConst(name, levels))

    def instantiate(self, closure: VLam | VPi, arg: Thunk) -> Value:
        return self.eval(closure.body, (arg, closure.env))

    def apply(self, fn: Value, arg: Thunk) -> Value:
        if isinstance(fn, VLam):
            self.meter.tick()
            return self.instantiate(fn, arg)
        if not isinstance(fn, VNeutral):
            raise NotAFunction(f"cannot apply {type(fn).__name__}")
        spine_ = fn.spine + (arg,)
        head = fn.head
        if isinstance(head, HConst):
            rule = IOTA_RULES.get(head.name)
            if rule is not None and len(spine_) == rule.major + 1:
                return self._iota(head, rule, spine_)
            if PRIM_ARITY.get(head.name) == len(spine_):
                return self._prim(head, spine_)
        return VNeutral(head, spine_)

    def _iota(self, head: HConst, rule, spine_: tuple[Thunk, ...]) -> Value:
        scrutinee = self.force(spine_[rule.major])
        ctor = None
        if isinstance(scrutinee, VNeutral) and isinstance(scrutinee.head, HConst):
            ctor = rule.ctors.get(scrutinee.head.name)
        if ctor is None:
            return VNeutral(head, spine_)
        self.meter.tick()
        fields = scrutinee.spine[ctor.params:]
        leading = VNeutral(head, spine_[:rule.major])
        value = self.force(spine_[ctor.branch])
        for kind, k in ctor.items:
            if kind == ARG:
                item = fields[k]
            else:
                item = Thunk(fn=lambda field=fields[k]: self.apply(leading, field))
            value = self.apply(value, item)
        return value

    def _prim(self, head: HConst, spine_: tuple[Thunk, ...]) -> Value:
        args = [self.literal(self.force(th)) for th in spine_]
        if any(a is None for a in args):
            return VNeutral(head, spine_)
        folded = fold(head.name, args)
        if folded is None:
            return VNeutral(head, spine_)
        self.meter.tick()
        return self.eval(folded, None)

    def literal(self, value: Value) -> Term | None:
        """Read back a closed first-order value, or ``None``."""
        if isinstance(value, VPrim):
            return PrimInt16(value.value)
        if not isinstance(value, VNeutral) or not isinstance(value.head, HConst):
            return None
        if value.head.name not in CONSTRUCTORS:
            return None
        t: Term = Const(value.head.name, value.head.levels)
        for th in value.spine:
            arg = self.literal(self.force(th))
            if arg is None:
                return None
            t = App(t, arg)
        return t

    # read-back

    def quote(self, value: Value, depth: int) -> Term:
        match value:
            case VSort(level=lv):
                return Sort(lv)
            case VPrim(value=v):
                return PrimInt16(v)
            case VLam(name=n):
                fresh = Thunk(value=VNeutral(HVar(depth)))
                return Lam(self.quote(self.force(value.domain), depth),
                           self.quote(self.instantiate(value, fresh), depth + 1), n)
            case VPi(name=n):
                fresh = Thunk(value=VNeutral(HVar(depth)))
                return Pi(self.quote(self.force(value.domain), depth),
                          self.quote(self.instantiate(value, fresh), depth + 1), n)
            case VNeutral(head=h, spine=sp):
                t: Term = Var(depth - 1 - h.level) if isinstance(h, HVar) else Const(h.name, h.levels)
                for th in sp:
                    t = App(t, self.quote(self.force(th), depth))
                return t
        raise TypeError(f"not a value: {value!r}")

    # conversion

    def conv_thunks(self, a: Thunk, b: Thunk, depth: int) -> bool:
        if a is b or (a.value is not None and a.value is b.value):
            return True
        if a.term is not None and b.term is not None and a.fn is None and b.fn is None:
            shared = a.env is b.env or (a.term.fv == 0 and b.term.fv == 0)
            if shared and alpha_eq(a.term, b.term):
                return True
        return self.conv(self.force(a), self.force(b), depth)

    def conv(self, v: Value, w: Value, depth: int) -> bool:
        """Compare two values; no eta."""
        match v, w:
            case VSort(), VSort():
                return v.level == w.level
            case VPrim(), VPrim():
                return v.value == w.value
            case (VPi(), VPi()) | (VLam(), VLam()):
                if type(v) is not type(w):
                    return False
                if not self.conv_thunks(v.domain, w.domain, depth):
                    return False
                if v.body is w.body and v.env is w.env:
                    return True
                fresh = Thunk(value=VNeutral(HVar(depth)))
                return self.conv(self.instantiate(v, fresh), self.instantiate(w, fresh), depth + 1)
            case VNeutral(), VNeutral():
                if v.head != w.head or len(v.spine) != len(w.spine):
                    return False
                return all(self.conv_thunks(a, b, depth) for a, b in zip(v.spine, w.spine))
        return False


@dataclass(frozen=True)
class NormResult:
    normal_form: Term
    steps: int
    budget_hit: bool = False


def normalize(genv, t: Term, budget: int | None = None) -> NormResult:
    """Full normal form. Budget exhaustion (or host stack exhaustion) sets ``budget_hit``."""
    meter = StepMeter(default_budget() if budget is None else budget)
    evaluator = Evaluator(genv, meter)
    depth = t.fv
    try:
        value = evaluator.eval(t, neutral_env(depth))
        normal_form = evaluator.quote(value, depth)
    except (BudgetExceeded, RecursionError) as exc:
        logger.debug(f"normalization stopped after {meter.steps} steps: {exc!r}")
        return NormResult(t, meter.steps, True)
    return NormResult(normal_form, meter.steps, False)
