"""
Named construction of de Bruijn terms.

Prelude and corpus code writes binders as Python functions::

    lam('A', Type(0), lambda A: lam('x', A, lambda x: x))

Each binder hands its body function a fresh ``Free`` placeholder and closes it
into an index once the body is built.
"""
from __future__ import annotations

import itertools
from typing import Callable

from .terms import App, Const, Free, Lam, Pi, Sort, Term, Var, shift

_uids = itertools.count()


def abstract(t: Term, x: Free, depth: int = 0) -> Term:
    """Turn occurrences of placeholder ``x`` into ``Var(depth)`` (lifted under binders)."""
    match t:
        case Free():
            return Var(depth) if t == x else t
        case App(fn=f, arg=a):
            f2, a2 = abstract(f, x, depth), abstract(a, x, depth)
            return t if (f2 is f and a2 is a) else App(f2, a2)
        case Lam(domain=d, body=b, name=n):
            d2, b2 = abstract(d, x, depth), abstract(b, x, depth + 1)
            return t if (d2 is d and b2 is b) else Lam(d2, b2, n)
        case Pi(domain=d, codomain=b, name=n):
            d2, b2 = abstract(d, x, depth), abstract(b, x, depth + 1)
            return t if (d2 is d and b2 is b) else Pi(d2, b2, n)
    return t


def fresh(name: str) -> Free:
    return Free(name, next(_uids))


def lam(name: str, ty: Term, fn: Callable[[Free], Term]) -> Lam:
    x = fresh(name)
    return Lam(ty, abstract(fn(x), x), name)


def pi(name: str, ty: Term, fn: Callable[[Free], Term]) -> Pi:
    x = fresh(name)
    return Pi(ty, abstract(fn(x), x), name)


def arrow(a: Term, b: Term) -> Pi:
    return Pi(a, shift(b, 1, 0), '_')


def arrows(*tys: Term) -> Term:
    result = tys[-1]
    for ty in reversed(tys[:-1]):
        result = arrow(ty, result)
    return result


def app(fn: Term, *args: Term) -> Term:
    for a in args:
        fn = App(fn, a)
    return fn


def c(name: str, *levels: int) -> Const:
    return Const(name, tuple(levels))


def Type(level: int = 0) -> Sort:  # noqa: N802
    return Sort(level)


def _bind(binder, binders, body, bound=()):
    if not binders:
        return body(*bound)
    name, ty = binders[0]
    if callable(ty):
        ty = ty(*bound)
    return binder(name, ty, lambda x: _bind(binder, binders[1:], body, bound + (x,)))


def lams(binders: list[tuple[str, Term | Callable]], body: Callable[..., Term]) -> Term:
    """Nested ``lam``; a binder type may be a function of the variables bound before it."""
    return _bind(lam, binders, body)


def pis(binders: list[tuple[str, Term | Callable]], body: Callable[..., Term]) -> Term:
    return _bind(pi, binders, body)
