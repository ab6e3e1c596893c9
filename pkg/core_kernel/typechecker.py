"""
Type inference and checking.

Local contexts are tuples of binder types, innermost last; ``Var(k)`` has type
``ctx[-1 - k]`` lifted over the ``k + 1`` binders between it and its use.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from core_eval.reduction import Reducer, StepMeter, default_budget

from .conversion import conv
from .env import Entry, GlobalContext, GlobalEnv, LocalCtx
from .errors import (
    BudgetExceeded, ConversionFailure, IllFormedTelescope, NotAFunction, NotASort, TypeMismatch,
    UnboundVariable, UptransError,
)
from .terms import App, Const, Free, Lam, Pi, PrimInt16, Sort, Term, Var, instantiate, shift

logger = logging.getLogger(__name__)

INT16 = Const('int16')


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    error: UptransError | None = None

    def __bool__(self) -> bool:
        return self.ok

    @property
    def message(self) -> str:
        return 'ok' if self.ok else str(self.error)


def _whnf(env: GlobalEnv, t: Term, budget: int | None) -> Term:
    return Reducer(env, StepMeter(default_budget() if budget is None else budget)).whnf(t)


def _infer(env: GlobalEnv, ctx: LocalCtx, t: Term, budget: int | None) -> Term:
    match t:
        case Sort(level=lv):
            return Sort(lv + 1)
        case Var(index=k):
            if k >= len(ctx):
                raise UnboundVariable(f"variable #{k} is unbound in a context of length {len(ctx)}",
                                      term=t)
            return shift(ctx[-1 - k], k + 1)
        case Const(name=n, levels=ls):
            return env.lookup(n, ls).type
        case PrimInt16():
            return INT16
        case Pi(domain=a, codomain=b):
            i = infer_sort(env, ctx, a, budget)
            j = infer_sort(env, ctx + (a,), b, budget)
            return Sort(max(i, j))
        case Lam(domain=a, body=b, name=n):
            infer_sort(env, ctx, a, budget)
            return Pi(a, _infer(env, ctx + (a,), b, budget), n)
        case App():
            return _infer_app(env, ctx, t, budget)
        case Free(name=n):
            raise UnboundVariable(f"placeholder {n} escaped its binder", term=t)
    raise TypeError(f"not a term: {t!r}")


def _infer_app(env: GlobalEnv, ctx: LocalCtx, t: App, budget: int | None) -> Term:
    args = []
    head = t
    while isinstance(head, App):
        args.append(head.arg)
        head = head.fn
    args.reverse()
    fn_type = _infer(env, ctx, head, budget)
    for arg in args:
        pi = fn_type if isinstance(fn_type, Pi) else _whnf(env, fn_type, budget)
        if not isinstance(pi, Pi):
            raise NotAFunction("application of a term whose type is not a product",
                               term=head, actual=fn_type)
        arg_type = _infer(env, ctx, arg, budget)
        if not conv(env, arg_type, pi.domain, budget):
            raise TypeMismatch("argument type does not match the expected domain",
                               term=arg, expected=pi.domain, actual=arg_type)
        fn_type = instantiate(pi.codomain, arg)
        head = App(head, arg)
    return fn_type


def infer(env: GlobalEnv, ctx: LocalCtx, t: Term, budget: int | None = None) -> Term:
    """Type of ``t`` in weak-head normal form."""
    return _whnf(env, _infer(env, ctx, t, budget), budget)


def infer_sort(env: GlobalEnv, ctx: LocalCtx, ty: Term, budget: int | None = None) -> int:
    """Universe level of the type ``ty``."""
    sort = infer(env, ctx, ty, budget)
    if not isinstance(sort, Sort):
        raise NotASort("expected a type", term=ty, actual=sort)
    return sort.level


def check(env: GlobalEnv, ctx: LocalCtx, t: Term, ty: Term, budget: int | None = None) -> CheckResult:
    actual = _infer(env, ctx, t, budget)
    if not conv(env, actual, ty, budget):
        raise ConversionFailure("inferred type is not convertible with the expected type",
                                term=t, expected=ty, actual=actual)
    return CheckResult(True)


def try_check(env: GlobalEnv, ctx: LocalCtx, t: Term, ty: Term, budget: int | None = None) -> CheckResult:
    try:
        return check(env, ctx, t, ty, budget)
    except UptransError as exc:
        return CheckResult(False, exc)
    except RecursionError:
        return CheckResult(False, BudgetExceeded(0, budget))


def check_entry(env: GlobalEnv, entry: Entry) -> None:
    infer_sort(env, (), entry.type)
    if entry.body is not None:
        check(env, (), entry.body, entry.type)


def check_declaration(env: GlobalEnv, name: str, levels: tuple[int, ...] | None = None) -> CheckResult:
    """Kernel-check one declaration at ``levels`` (all zeros by default)."""
    decl = env.declaration(name)
    levels = levels if levels is not None else (0,) * decl.univ_params
    try:
        check_entry(env, env.lookup(name, levels))
    except UptransError as exc:
        return CheckResult(False, exc)
    return CheckResult(True)


def wf_global_context(env: GlobalEnv, delta: GlobalContext) -> CheckResult:
    """Each witness must inhabit the relation of its left constant's type under the prefix."""
    from core_translate.translator import Translator

    for position, triple in enumerate(delta.triples):
        try:
            left_type = env.lookup(triple.left, triple.left_levels).type
            translator = Translator(env, delta.prefix(position))
            expected = App(App(translator.relation(left_type), triple.left_const), triple.right_const)
            check(env, (), triple.witness, expected)
        except UptransError as exc:
            logger.warning(f"❌ telescope entry {position} ({triple.left}) is ill-formed: {exc}")
            raise IllFormedTelescope(position, exc) from exc
    return CheckResult(True)
