"""Closed-term entry points of the translations."""
from __future__ import annotations

from core_kernel.env import GlobalContext, GlobalEnv, LocalCtx
from core_kernel.terms import Term

from .translator import PARAM, UPARAM, Translator


def _env(env: GlobalEnv | None) -> GlobalEnv:
    if env is not None:
        return env
    from core_stdlib.loader import load_prelude

    return load_prelude()


def param_translate(delta: GlobalContext, t: Term, *, env: GlobalEnv | None = None,
                    ctx: LocalCtx = ()) -> Term:
    return Translator(_env(env), delta, mode=PARAM, ctx=ctx).translate(t)


def prime_translate(delta: GlobalContext, t: Term, *, env: GlobalEnv | None = None,
                    unfold: bool = False) -> Term:
    return Translator(_env(env), delta, unfold=unfold).prime(t)


def uparam_translate(delta: GlobalContext, t: Term, *, env: GlobalEnv | None = None,
                     ctx: LocalCtx = (), unfold: bool = False) -> Term:
    return Translator(_env(env), delta, mode=UPARAM, ctx=ctx, unfold=unfold).translate(t)


def uparam_rel(delta: GlobalContext, ty: Term, *, env: GlobalEnv | None = None,
               ctx: LocalCtx = ()) -> Term:
    """``[A]``, a term of type ``A -> A' -> Type``."""
    return Translator(_env(env), delta, ctx=ctx).relation(ty)


def translate_local_ctx(delta: GlobalContext, ctx: LocalCtx, *, env: GlobalEnv | None = None,
                        mode: str = UPARAM) -> LocalCtx:
    env = _env(env)
    out: list[Term] = []
    for position, domain in enumerate(ctx):
        out.extend(Translator(env, delta, mode=mode, ctx=ctx[:position]).binder_types(domain))
    return tuple(out)
